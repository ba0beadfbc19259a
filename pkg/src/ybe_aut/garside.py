"""Garside data of the structure group: complements, Delta, Div(Delta).

Monoid elements are exactly the group elements with a non-negative
pi-image; divisibility is decided by that test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .cocycle import GroupElement, StructureGroup

Side = Literal["left", "right"]


def complement_atom(G: StructureGroup, i: int, j: int) -> int:
    """``x_i \\ x_j = x_{f_i^{-1}(j)}``, so ``x_i v_R x_j = (x_i \\ x_j) x_i``."""
    if i == j:
        raise ValueError("complement of an atom on itself is trivial")
    return G.s.f_inv[i](j)


def lcm_atoms(G: StructureGroup, i: int, j: int) -> GroupElement:
    """Left lcm (w.r.t. right divisibility) of two distinct atoms."""
    return G.multiply(G.gen(complement_atom(G, i, j)), G.gen(i))


def is_in_monoid(a: GroupElement) -> bool:
    return all(c >= 0 for c in a.vec)


def divides(G: StructureGroup, a: GroupElement, b: GroupElement, side: Side = "right") -> bool:
    """Right: ``b = h a`` for a monoid element h. Left: ``b = a h``."""
    if side == "right":
        return is_in_monoid(G.multiply(b, G.invert(a)))
    if side == "left":
        return is_in_monoid(G.multiply(G.invert(a), b))
    raise ValueError(f"unknown side {side!r}")


def delta(G: StructureGroup) -> GroupElement:
    """The Garside element, ``pi^{-1}(1, .., 1)``.

    Falls back to a direct search for the least common multiple of the
    atoms if that candidate is not divisible by every atom on both sides.
    """
    d = G.pi_inverse((1,) * G.n)
    atoms = [G.gen(i) for i in range(G.n)]
    if all(divides(G, x, d, side) for x in atoms for side in ("left", "right")):
        return d
    return lcm_of_atoms_by_search(G)


def lcm_of_atoms_by_search(G: StructureGroup) -> GroupElement:
    """Shortest monoid element divisible by every atom on both sides."""
    n = G.n
    atoms = [G.gen(i) for i in range(n)]
    for k in itertools.count(1):
        for w in _compositions(k, n):
            a = G.pi_inverse(w)
            if all(divides(G, x, a, side) for x in atoms for side in ("left", "right")):
                return a


def _compositions(total: int, parts: int):
    """Non-negative integer vectors of the given length and sum."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def monoid_vectors(n: int, length: int):
    """pi-images of monoid elements of a given length."""
    return _compositions(length, n)


@dataclass
class DivisorLattice:
    """Div(Delta) ordered by right divisibility (with left divisibility kept too)."""

    G: StructureGroup
    elements: list[GroupElement]
    right_leq: list[list[bool]]  # right_leq[a][b]: element a right-divides b
    left_leq: list[list[bool]]
    join: list[list[int]]
    meet: list[list[int]]
    x_left: list[frozenset[int]]  # atoms left-dividing each element
    x_right: list[frozenset[int]]
    top: int
    bottom: int

    def index(self, a: GroupElement) -> int:
        return self._index[a.vec]

    def __post_init__(self):
        self._index = {e.vec: k for k, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a: GroupElement) -> bool:
        return a.vec in self._index and self.elements[self._index[a.vec]] == a

    def length_counts(self) -> list[int]:
        counts = [0] * (self.G.n + 1)
        for e in self.elements:
            counts[e.length] += 1
        return counts


def divisor_lattice(G: StructureGroup) -> DivisorLattice:
    """Build Div(Delta) from the 2^n 0/1 vectors and verify its structure."""
    n = G.n
    if n > 16:
        raise ValueError("divisor lattice limited to n <= 16")
    d = delta(G)
    elems = [G.pi_inverse(w) for w in itertools.product((0, 1), repeat=n)]
    for e in elems:
        if not (divides(G, e, d, "left") and divides(G, e, d, "right")):
            raise AssertionError(f"{e.vec} does not divide Delta on both sides")
    size = len(elems)
    right = [[divides(G, a, b, "right") for b in elems] for a in elems]
    left = [[divides(G, a, b, "left") for b in elems] for a in elems]

    def extremum(a, b, upper):
        if upper:
            cands = [c for c in range(size) if right[a][c] and right[b][c]]
            best = [c for c in cands if all(right[c][o] for o in cands)]
        else:
            cands = [c for c in range(size) if right[c][a] and right[c][b]]
            best = [c for c in cands if all(right[o][c] for o in cands)]
        if len(best) != 1:
            raise AssertionError(f"no unique {'join' if upper else 'meet'} for {a}, {b}")
        return best[0]

    join = [[extremum(a, b, True) for b in range(size)] for a in range(size)]
    meet = [[extremum(a, b, False) for b in range(size)] for a in range(size)]
    atoms = [G.gen(i) for i in range(n)]
    xl = [frozenset(i for i, x in enumerate(atoms) if divides(G, x, e, "left")) for e in elems]
    xr = [frozenset(i for i, x in enumerate(atoms) if divides(G, x, e, "right")) for e in elems]
    for e, l, r in zip(elems, xl, xr):
        if not len(l) == len(r) == e.length:
            raise AssertionError(f"atom divisor sets of {e.vec} have sizes {len(l)}, {len(r)}")
    top = elems.index(d)
    return DivisorLattice(G, elems, right, left, join, meet, xl, xr, top, 0)


def divisors_of_power(G: StructureGroup, k: int) -> list[GroupElement]:
    """All monoid elements dividing ``Delta^k`` on both sides."""
    dk = G.power(delta(G), k)
    out = []
    for length in range(G.n * k + 1):
        for w in monoid_vectors(G.n, length):
            a = G.pi_inverse(w)
            if divides(G, a, dk, "left") and divides(G, a, dk, "right"):
                out.append(a)
    return out


# -- extended structure on X and X^- ----------------------------------------

# A signed atom is (index, sign) with sign in {+1, -1}.
SignedAtom = tuple[int, int]


@dataclass
class ExtendedAtomTable:
    """Partial lcm and complement tables on ``X u X^-``.

    ``lcm_R[(a, b)]`` has a and b as right divisors, ``lcm_L[(a, b)]`` has
    them as left divisors, and ``complement[(a, b)]`` is the signed atom c
    with ``a v_R b = c a``.
    """

    G: StructureGroup
    lcm_R: dict[tuple[SignedAtom, SignedAtom], GroupElement]
    lcm_L: dict[tuple[SignedAtom, SignedAtom], GroupElement]
    complement: dict[tuple[SignedAtom, SignedAtom], SignedAtom]

    def lookup(self, op: str, a: SignedAtom, b: SignedAtom):
        """Table entry, or None when the pair is undefined."""
        return getattr(self, op).get((a, b))


def extended_tables(G: StructureGroup) -> ExtendedAtomTable:
    from .solution import to_presentation

    lcm_R: dict = {}
    lcm_L: dict = {}
    comp: dict = {}

    def put(table, a, b, value):
        for key in ((a, b), (b, a)):
            if key in table and table[key] != value:
                raise AssertionError(f"inconsistent table entry {key}")
            table[key] = value

    def letter(i, e):
        return G.gen(i, e)

    for i, j, k, l in to_presentation(G.s).relations:
        # x_i x_j = x_k x_l
        whole = G.multiply(letter(i, 1), letter(j, 1))
        put(lcm_L, (i, 1), (k, 1), whole)
        put(lcm_R, (j, 1), (l, 1), whole)
        comp[((j, 1), (l, 1))] = (i, 1)
        comp[((l, 1), (j, 1))] = (k, 1)
        # x_j^-1 x_i^-1 = x_l^-1 x_k^-1
        neg = G.invert(whole)
        put(lcm_R, (i, -1), (k, -1), neg)
        put(lcm_L, (j, -1), (l, -1), neg)
        comp[((i, -1), (k, -1))] = (j, -1)
        comp[((k, -1), (i, -1))] = (l, -1)
        # x_i^-1 x_k = x_j x_l^-1  and  x_k^-1 x_i = x_l x_j^-1
        mixed1 = G.multiply(letter(i, -1), letter(k, 1))
        mixed2 = G.multiply(letter(k, -1), letter(i, 1))
        put(lcm_L, (i, -1), (j, 1), mixed1)
        put(lcm_R, (l, -1), (k, 1), mixed1)
        put(lcm_L, (k, -1), (l, 1), mixed2)
        put(lcm_R, (j, -1), (i, 1), mixed2)
    return ExtendedAtomTable(G, lcm_R, lcm_L, comp)


def least_positive_word(G: StructureGroup, a: GroupElement) -> tuple[int, ...]:
    """Lexicographically least positive word of a monoid element.

    Greedy: the first letter is the least atom left-dividing ``a``.
    """
    if not is_in_monoid(a):
        raise ValueError(f"{a.vec} is not in the monoid")
    word = []
    while a.length:
        i = next(i for i in range(G.n) if divides(G, G.gen(i), a, "left"))
        word.append(i)
        a = G.multiply(G.gen(i, -1), a)
    return tuple(word)


def display_word(G: StructureGroup, a: GroupElement) -> str:
    """Least positive word for monoid elements, the peeling normal word otherwise."""
    from .cocycle import format_word
    if is_in_monoid(a):
        return format_word(tuple((i, 1) for i in least_positive_word(G, a)))
    return format_word(G.word_of(a))
