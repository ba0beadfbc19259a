"""Exact permutation and integer-matrix arithmetic.

Permutations are stored 0-based internally and shown 1-based. Composition
follows ``(a * b)(x) = a(b(x))``: the right factor is applied first.

Vectors are plain tuples of ints. Matrices are tuples of row tuples; column
``j`` of a matrix ``sigma`` is the image ``sigma(t_j)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, .., n-1}``; ``images[i]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_images(cls, images: Iterable[int]) -> Permutation:
        """Build from 1-based images."""
        return cls(tuple(i - 1 for i in images))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        """Build from 1-based cycles, e.g. ``from_cycles(4, (1, 4, 3, 2))``."""
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
                images[a - 1] = b - 1
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return perm_compose(self, other)

    def inverse(self) -> Permutation:
        return perm_inverse(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 0-based, each starting at its least element."""
        seen = set()
        out = []
        for i in range(self.n):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def fixed_points(self) -> int:
        return sum(1 for i, x in enumerate(self.images) if i == x)

    def one_based(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.images)

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def perm_compose(a: Permutation, b: Permutation) -> Permutation:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    return Permutation(tuple(a.images[x] for x in b.images))


def perm_inverse(a: Permutation) -> Permutation:
    inv = [0] * a.n
    for i, x in enumerate(a.images):
        inv[x] = i
    return Permutation(tuple(inv))


def perm_power(a: Permutation, k: int) -> Permutation:
    if k < 0:
        return perm_power(a.inverse(), -k)
    out = Permutation.identity(a.n)
    for _ in range(k):
        out = out * a
    return out


def generated_group(gens: Iterable[Permutation], n: int) -> frozenset[Permutation]:
    """All elements of the group generated by ``gens`` (closure by BFS)."""
    gens = list(gens)
    ident = Permutation.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g * p
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(seen)


def orbits(gens: Iterable[Permutation], n: int) -> list[tuple[int, ...]]:
    """Orbits of ``{0..n-1}`` under the generated group, sorted by least element."""
    gens = list(gens)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i in range(n):
            ri, rj = find(i), find(g(i))
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(tuple(v) for v in groups.values())


# -- vectors ---------------------------------------------------------------

def transport(v: Sequence[int], p: Permutation) -> Vector:
    """Move coordinates along ``p``: the result has ``out[p(x)] = v[x]``.

    This is the action ``t_x -> t_{p(x)}`` extended to exponent vectors, and
    equals ``perm_matrix(p) @ v``.
    """
    out = [0] * len(v)
    for x, c in enumerate(v):
        out[p.images[x]] = c
    return tuple(out)


def unit(n: int, i: int, c: int = 1) -> Vector:
    v = [0] * n
    v[i] = c
    return tuple(v)


def vec_add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def format_vector(v: Sequence[int]) -> str:
    """``t1^a1 ... tn^an`` with zero exponents omitted; ``1`` for zero."""
    parts = []
    for i, c in enumerate(v):
        if c == 1:
            parts.append(f"t{i + 1}")
        elif c:
            parts.append(f"t{i + 1}^{c}")
    return " ".join(parts) if parts else "1"


# -- matrices --------------------------------------------------------------

def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in r) for r in rows)
    if any(len(r) != len(m) for r in m):
        raise ValueError("matrix must be square")
    return m


def identity_matrix(n: int) -> Matrix:
    return tuple(unit(n, i) for i in range(n))


def columns(m: Matrix) -> list[Vector]:
    return [tuple(r[j] for r in m) for j in range(len(m))]


def from_columns(cols: Sequence[Sequence[int]]) -> Matrix:
    n = len(cols)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = columns(b)
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in bt) for r in a)


def mat_vec(a: Matrix, v: Sequence[int]) -> Vector:
    return tuple(sum(x * y for x, y in zip(r, v)) for r in a)


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in r) for r in a)


def perm_matrix(p: Permutation) -> Matrix:
    """The 0/1 matrix ``P`` with ``P e_i = e_{p(i)}``."""
    return from_columns([unit(p.n, p(i)) for i in range(p.n)])


def det_bareiss(m: Matrix) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def mat_is_unimodular(m: Matrix) -> bool:
    return abs(det_bareiss(m)) == 1


def mat_inverse(m: Matrix) -> Matrix:
    """Inverse of a unimodular matrix (Gauss-Jordan over the rationals)."""
    n = len(m)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = [row[n:] for row in a]
    if any(x.denominator != 1 for r in inv for x in r):
        raise ValueError("matrix is not unimodular; inverse is not integral")
    return tuple(tuple(int(x) for x in r) for r in inv)


@dataclass(frozen=True)
class GeneralizedPermutation:
    """Decomposition ``column j = signs[j] * e_{perm(j)}``."""

    perm: Permutation
    signs: tuple[int, ...]


def mat_is_generalized_permutation(m: Matrix) -> GeneralizedPermutation | None:
    """Return the (perm, signs) decomposition, or None if ``m`` is not one."""
    n = len(m)
    images = []
    signs = []
    for col in columns(m):
        nz = [(i, c) for i, c in enumerate(col) if c]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            return None
        images.append(nz[0][0])
        signs.append(nz[0][1])
    if len(set(images)) != n:
        return None
    return GeneralizedPermutation(Permutation(tuple(images)), tuple(signs))


def format_matrix(m: Matrix) -> str:
    width = max((len(str(x)) for r in m for x in r), default=1)
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in m)


def parse_matrix(text: str) -> Matrix:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([int(tok) for tok in line.split()])
    return as_matrix(rows)


def parse_permutation(text: str) -> Permutation:
    return Permutation.from_images(int(tok) for tok in text.split())


def random_unimodular(n: int, rng, steps: int = 12, spread: int = 2) -> Matrix:
    """Product of random elementary row operations, a row permutation and signs."""
    rows = [list(r) for r in identity_matrix(n)]
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-spread, spread)
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    rng.shuffle(rows)
    for r in rows:
        if rng.random() < 0.5:
            r[:] = [-a for a in r]
    return as_matrix(rows)
