"""Brute-force word classes of the structure monoid.

Positive words of each length are grouped under the congruence generated by
the quadratic relations. Every relation preserves length, so the closure is
computed level by level with a union-find over single-position rewrites.
This module only uses the solution table, never the cocycle, so it serves as
an independent check on ``pi`` and on divisibility.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Literal, Sequence

from .solution import Solution

PositiveWord = tuple[int, ...]


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass
class WordClassTable:
    n: int
    max_length: int
    # classes[k]: sorted list of classes (each a sorted tuple of words) of length k
    classes: list[list[tuple[PositiveWord, ...]]]
    # class id of each word: (length, index into classes[length])
    class_of: dict[PositiveWord, int]

    def representative(self, w: Sequence[int]) -> PositiveWord:
        return self.members(w)[0]

    def members(self, w: Sequence[int]) -> tuple[PositiveWord, ...]:
        w = tuple(w)
        if len(w) > self.max_length:
            raise ValueError(f"word length {len(w)} exceeds table length {self.max_length}")
        return self.classes[len(w)][self.class_of[w]]

    def same_class(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return len(u) == len(v) and self.class_of[tuple(u)] == self.class_of[tuple(v)]


def build_table(s: Solution, max_length: int, cap: int = 10**6) -> WordClassTable:
    n = s.n
    if n ** max_length > cap:
        raise ValueError(f"{n}^{max_length} words exceeds cap {cap}")
    rewrite = {(i, j): s(i, j) for i in range(n) for j in range(n) if s(i, j) != (i, j)}
    classes: list[list[tuple[PositiveWord, ...]]] = []
    class_of: dict[PositiveWord, int] = {}
    for k in range(max_length + 1):
        words = list(itertools.product(range(n), repeat=k))
        index = {w: a for a, w in enumerate(words)}
        uf = _UnionFind(len(words))
        for a, w in enumerate(words):
            for p in range(k - 1):
                r = rewrite.get((w[p], w[p + 1]))
                if r is not None:
                    uf.union(a, index[w[:p] + r + w[p + 2:]])
        groups: dict[int, list[PositiveWord]] = {}
        for a, w in enumerate(words):
            groups.setdefault(uf.find(a), []).append(w)
        level = sorted(tuple(sorted(g)) for g in groups.values())
        for c, members in enumerate(level):
            for w in members:
                class_of[w] = c
        classes.append(level)
    return WordClassTable(n, max_length, classes, class_of)


def oracle_counts(table: WordClassTable) -> list[int]:
    return [len(level) for level in table.classes]


def expected_counts(n: int, max_length: int) -> list[int]:
    """Number of non-negative integer vectors of each total degree."""
    return [comb(n + k - 1, k) for k in range(max_length + 1)]


def oracle_divides(table: WordClassTable, u: Sequence[int], v: Sequence[int],
                   side: Literal["left", "right"] = "right") -> bool:
    """Right: some member of [v] ends with a member of [u]. Left: starts with."""
    u, v = tuple(u), tuple(v)
    if len(u) > len(v):
        return False
    k = len(u)
    cu = table.class_of[u]
    for w in table.members(v):
        part = w[len(w) - k:] if side == "right" else w[:k]
        if table.class_of[part] == cu:
            return True
    return False


def oracle_delta(table: WordClassTable) -> PositiveWord | None:
    """Least representative of the shortest class divisible by all atoms on both sides."""
    for k in range(1, table.max_length + 1):
        for level in table.classes[k]:
            w = level[0]
            if all(oracle_divides(table, (i,), w, side)
                   for i in range(table.n) for side in ("left", "right")):
                return w
    return None
