"""Arithmetic in the structure group through its embedding into Sym(X) x| Z^X.

An element is a pair ``(perm, vec)``: ``perm`` is the permutation through
which it acts on X (generator ``x_i`` acts by ``f_i^{-1}``) and ``vec`` is its
image under the bijective 1-cocycle ``pi``. The group law is

    pi(a b) = b^{-1} . pi(a) + pi(b),    perm(a b) = perm(a) o perm(b)

so ``vec`` alone determines the element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Permutation, Vector, format_vector, transport, unit, vec_add
from .solution import Solution

# A word is a sequence of (generator index, exponent +-1), 0-based indices.
Word = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GroupElement:
    perm: Permutation
    vec: Vector

    @property
    def length(self) -> int:
        """Sum of the pi-coordinates (the monoid length for monoid elements)."""
        return sum(self.vec)


class StructureGroup:
    """The structure group G(X,S) of a solution, realised through ``pi``."""

    def __init__(self, s: Solution):
        self.s = s
        self.n = s.n
        self.m = s.class_m
        self.identity = GroupElement(Permutation.identity(self.n), (0,) * self.n)
        self._gens = tuple(GroupElement(s.f_inv[i], unit(self.n, i)) for i in range(self.n))
        self._inv_gens = tuple(self.invert(x) for x in self._gens)

    def gen(self, i: int, e: int = 1) -> GroupElement:
        if not 0 <= i < self.n:
            raise IndexError(f"generator index {i + 1} out of range 1..{self.n}")
        return self._gens[i] if e == 1 else self._inv_gens[i]

    # -- group law --------------------------------------------------------

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        vec = vec_add(transport(a.vec, b.perm.inverse()), b.vec)
        return GroupElement(a.perm * b.perm, vec)

    def invert(self, a: GroupElement) -> GroupElement:
        return GroupElement(a.perm.inverse(), tuple(-c for c in transport(a.vec, a.perm)))

    def power(self, a: GroupElement, k: int) -> GroupElement:
        if k < 0:
            a, k = self.invert(a), -k
        out = self.identity
        for _ in range(k):
            out = self.multiply(out, a)
        return out

    def product(self, elems: Iterable[GroupElement]) -> GroupElement:
        out = self.identity
        for e in elems:
            out = self.multiply(out, e)
        return out

    def conjugate(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """``a b a^{-1}``."""
        return self.product((a, b, self.invert(a)))

    def act(self, a: GroupElement, w: Sequence[int]) -> Vector:
        """The left action ``a . w``: ``out[a.perm(x)] = w[x]``."""
        return transport(w, a.perm)

    def pi(self, a: GroupElement) -> Vector:
        return a.vec

    # -- inverse cocycle --------------------------------------------------

    def _peel(self, w: Sequence[int]) -> tuple[Permutation, Word]:
        """Peel one generator at a time off the right end of ``pi^{-1}(w)``.

        Positive coordinates go first, least index first. Each step removes
        one from the l1 norm, so the word has length ``|w|_1``.
        """
        s = self.s
        w = list(w)
        perm = Permutation.identity(self.n)
        word: list[tuple[int, int]] = []
        while True:
            j = next((i for i, c in enumerate(w) if c > 0), None)
            if j is not None:
                w[j] -= 1
                w = list(transport(w, s.f_inv[j]))
                perm = s.f_inv[j] * perm
                word.append((j, 1))
                continue
            j = next((i for i, c in enumerate(w) if c < 0), None)
            if j is None:
                break
            k = s.g_inv[j](j)
            w[j] += 1
            w = list(transport(w, s.f[k]))
            perm = s.f[k] * perm
            word.append((k, -1))
        word.reverse()
        return perm, tuple(word)

    def pi_inverse(self, w: Sequence[int]) -> GroupElement:
        perm, _ = self._peel(w)
        return GroupElement(perm, tuple(w))

    def action_perm(self, w: Sequence[int]) -> Permutation:
        """Permutation by which ``pi^{-1}(w)`` acts, computed from ``w mod m``."""
        return self._peel([c % self.m for c in w])[0]

    def normal_word(self, w: Sequence[int]) -> Word:
        return self._peel(w)[1]

    def element_from_word(self, word: Iterable[tuple[int, int]]) -> GroupElement:
        return self.product(self.gen(i, e) for i, e in word)

    def word_of(self, a: GroupElement) -> Word:
        return self.normal_word(a.vec)

    # -- frozen elements --------------------------------------------------

    def frozen(self, i: int) -> GroupElement:
        """``theta_i = pi^{-1}(m e_i)``."""
        return self.pi_inverse(unit(self.n, i, self.m))

    def frozen_product(self, exps: Sequence[int]) -> GroupElement:
        """``theta_1^{e_1} ... theta_n^{e_n}``."""
        return self.product(self.power(self.frozen(i), e) for i, e in enumerate(exps))


# -- word syntax -----------------------------------------------------------

_TOKEN = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str, n: int | None = None) -> Word:
    """Parse ``x1 x2^-1 x3^2`` (``x3^2`` expands to two letters)."""
    out = []
    for tok in text.replace("*", " ").split():
        mt = _TOKEN.match(tok)
        if not mt:
            raise ValueError(f"bad word token {tok!r}")
        i = int(mt.group(1)) - 1
        k = int(mt.group(2)) if mt.group(2) else 1
        if i < 0 or (n is not None and i >= n):
            raise ValueError(f"generator {tok!r} out of range")
        out.extend([(i, 1 if k > 0 else -1)] * abs(k))
    return tuple(out)


def format_word(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(f"x{i + 1}" if e == 1 else f"x{i + 1}^-1" for i, e in word)


__all__ = ["GroupElement", "StructureGroup", "Word", "parse_word", "format_word",
           "format_vector"]
