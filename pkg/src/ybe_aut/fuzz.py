"""Randomised consistency checks of the cocycle arithmetic.

Products of random words are recomputed with an independent model: the right
affine action ``v . a = P(perm(a)^{-1}) v + pi(a)`` written as integer
``(n+1) x (n+1)`` matrices, for which ``M_{ab} = M_b M_a``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import Matrix, mat_inverse, mat_mul, perm_matrix
from .cocycle import StructureGroup, Word
from .solution import Solution, to_presentation

CHECKS = ("cocycle", "pi_roundtrip", "relations", "frozen", "mod_m_action")


def affine_generator(G: StructureGroup, i: int) -> Matrix:
    n = G.n
    lin = perm_matrix(G.s.f[i])
    rows = [list(lin[r]) + [1 if r == i else 0] for r in range(n)]
    rows.append([0] * n + [1])
    return tuple(tuple(r) for r in rows)


class AffineModel:
    def __init__(self, G: StructureGroup):
        self.n = G.n
        self.gens = {}
        for i in range(G.n):
            m = affine_generator(G, i)
            self.gens[(i, 1)] = m
            self.gens[(i, -1)] = mat_inverse(m)

    def pi(self, word: Word) -> tuple[int, ...]:
        n = self.n
        m = tuple(tuple(int(r == c) for c in range(n + 1)) for r in range(n + 1))
        for letter in word:
            m = mat_mul(self.gens[letter], m)
        return tuple(m[r][n] for r in range(n))


@dataclass
class FuzzReport:
    cases: int
    failures: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CHECKS})
    examples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def fail(self, check: str, detail: str) -> None:
        self.failures[check] += 1
        if len(self.examples) < 10:
            self.examples.append(f"{check}: {detail}")

    def __str__(self) -> str:
        body = " ".join(f"{k}={v}" for k, v in self.failures.items())
        return f"{self.cases} cases, failures: {body}"


def random_word(rng: random.Random, n: int, max_len: int = 8) -> Word:
    return tuple((rng.randrange(n), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len)))


def fuzz_solution(s: Solution, cases: int = 1000, seed: int = 0) -> FuzzReport:
    G = StructureGroup(s)
    model = AffineModel(G)
    rels = to_presentation(s).relations
    rng = random.Random(seed)
    rep = FuzzReport(cases)
    n, m = G.n, G.m
    for _ in range(cases):
        u, v = random_word(rng, n), random_word(rng, n)
        a, b = G.element_from_word(u), G.element_from_word(v)
        ab = G.multiply(a, b)
        if ab.vec != model.pi(u + v) or a.vec != model.pi(u):
            rep.fail("cocycle", f"{u} {v}")
        w = tuple(rng.randint(-4, 4) for _ in range(n))
        x = G.pi_inverse(w)
        word = G.normal_word(w)
        if x.vec != w or G.element_from_word(word) != x or len(word) != sum(map(abs, w)):
            rep.fail("pi_roundtrip", str(w))
        if rels:
            i, j, k, l = rng.choice(rels)
            lhs = G.element_from_word(u + ((i, 1), (j, 1)) + v)
            rhs = G.element_from_word(u + ((k, 1), (l, 1)) + v)
            if lhs != rhs:
                rep.fail("relations", f"{u} x{i + 1}x{j + 1}=x{k + 1}x{l + 1} {v}")
        t = rng.randrange(n)
        theta = G.frozen(t)
        # theta acts trivially, so right multiplication by it is a translation
        if not theta.perm.is_identity() or G.multiply(a, theta).vec != (
                tuple(p + q for p, q in zip(a.vec, theta.vec))):
            rep.fail("frozen", f"theta_{t + 1}")
        shift = tuple(c + m * rng.randint(-3, 3) for c in w)
        if G.pi_inverse(shift).perm != x.perm or G.action_perm(w) != x.perm:
            rep.fail("mod_m_action", str(w))
    return rep
