"""Automorphisms of the structure group induced by integer matrices.

A matrix ``sigma`` in GL_n(Z) defines the bijection ``phi = pi^{-1} o sigma o pi``.
It is an automorphism exactly when, for all i, j,

    (pi^{-1}(w_j))^{-1} . w_i = w_{f_j(i)}

where ``w_j`` is column j. That action form is the source of truth here.
Under our permutation-matrix convention (``P e_i = e_{p(i)}``) it reads
``A_j sigma = sigma P(f_j)`` with ``A_j = P(f'_j)``.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import (
    Matrix,
    Permutation,
    Vector,
    columns,
    from_columns,
    identity_matrix,
    mat_inverse,
    mat_is_generalized_permutation,
    mat_is_unimodular,
    mat_mul,
    mat_vec,
    perm_matrix,
    transport,
)
from .cocycle import GroupElement, StructureGroup
from .garside import DivisorLattice, delta, divisor_lattice, extended_tables


@dataclass
class MembershipVerdict:
    accepted: bool
    # permutation through which pi^{-1}(w_j) acts
    action_perms: tuple[Permutation, ...]
    # f'_j: permutation of (pi^{-1}(w_j))^{-1}
    column_perms: tuple[Permutation, ...]
    # every failing (i, j, transported w_i), 0-based
    failures: list[tuple[int, int, Vector]] = field(default_factory=list)

    @property
    def witness(self) -> tuple[int, int, Vector] | None:
        return self.failures[0] if self.failures else None

    @property
    def A(self) -> list[Matrix]:
        return [perm_matrix(p) for p in self.column_perms]


def check_membership(G: StructureGroup, sigma: Matrix) -> MembershipVerdict:
    if len(sigma) != G.n:
        raise ValueError(f"matrix size {len(sigma)} does not match n={G.n}")
    if not mat_is_unimodular(sigma):
        raise ValueError("matrix is not in GL_n(Z)")
    cols = columns(sigma)
    act = tuple(G.action_perm(w) for w in cols)
    fprime = tuple(p.inverse() for p in act)
    failures = []
    for j in range(G.n):
        fj = G.s.f[j]
        for i in range(G.n):
            moved = transport(cols[i], fprime[j])
            if moved != cols[fj(i)]:
                failures.append((i, j, moved))
    return MembershipVerdict(not failures, act, fprime, failures)


def matrix_form_holds(G: StructureGroup, sigma: Matrix, verdict: MembershipVerdict) -> bool:
    """``A_j sigma = sigma P(f_j)`` for every j."""
    return all(mat_mul(a, sigma) == mat_mul(sigma, perm_matrix(G.s.f[j]))
               for j, a in enumerate(verdict.A))


def is_member(G: StructureGroup, sigma: Matrix) -> bool:
    return check_membership(G, sigma).accepted


def image_of(G: StructureGroup, sigma: Matrix, a: GroupElement) -> GroupElement:
    """``pi^{-1}(sigma pi(a))`` with no membership check."""
    return G.pi_inverse(mat_vec(sigma, a.vec))


def apply_automorphism(G: StructureGroup, sigma: Matrix, a: GroupElement,
                       check: bool = True) -> GroupElement:
    if check and not is_member(G, sigma):
        raise ValueError("matrix is not in Im_pi; the induced map is not a homomorphism")
    return image_of(G, sigma, a)


def frozen_image_coordinates(G: StructureGroup, sigma: Matrix) -> Matrix:
    """Coordinates of ``phi(theta_i)`` in the frozen basis; equal to ``sigma``.

    Verified against direct computation of ``phi(theta_i)``.
    """
    for i, col in enumerate(columns(sigma)):
        direct = image_of(G, sigma, G.frozen(i))
        if direct != G.frozen_product(col):
            raise AssertionError(f"phi(theta_{i + 1}) is not theta^{col}")
    return sigma


# -- pruning ---------------------------------------------------------------

def prune_column(G: StructureGroup, j: int, w: Sequence[int]) -> str | None:
    """Necessary conditions on column j; returns a reason on failure."""
    fj = G.s.f[j]
    fp = G.action_perm(w).inverse()
    if fp.sign() != fj.sign():
        return f"column {j + 1}: f'_{j + 1}={fp} and f_{j + 1}={fj} differ in parity"
    if fp.fixed_points() != fj.fixed_points():
        return f"column {j + 1}: f'_{j + 1}={fp} and f_{j + 1}={fj} differ in fixed points"
    if fp not in G.s.f_group:
        return f"column {j + 1}: f'_{j + 1}={fp} is not in <f_1..f_n>"
    return None


def prune_candidate(G: StructureGroup, sigma: Matrix) -> str | None:
    """Cheap filter. ``None`` means the candidate survives (not a verdict)."""
    for j, w in enumerate(columns(sigma)):
        reason = prune_column(G, j, w)
        if reason:
            return reason
    return None


# -- searches --------------------------------------------------------------

def sort_matrices(mats: Iterable[Matrix]) -> list[Matrix]:
    return sorted(set(mats), key=lambda m: tuple(x for r in m for x in r))


def signed_conjugation_allowed(G: StructureGroup, perm: Permutation, j: int) -> set[int]:
    """Signs e for which column ``e * e_{perm(j)}`` passes the conjugation test."""
    s = G.s
    conj = perm * s.f[j] * perm.inverse()
    k = perm(j)
    allowed = set()
    if conj == s.f[k]:
        allowed.add(1)
    if conj == s.f_inv[s.g_inv[k](k)]:
        allowed.add(-1)
    return allowed


def enumerate_generalized_permutation(G: StructureGroup) -> list[Matrix]:
    """All signed permutation matrices in Im_pi (n <= 8)."""
    n = G.n
    if n > 8:
        raise ValueError("generalized permutation enumeration limited to n <= 8")
    comps = G.s.f_orbits
    found = []
    for images in itertools.permutations(range(n)):
        perm = Permutation(images)
        allowed = [signed_conjugation_allowed(G, perm, j) for j in range(n)]
        per_comp = [set.intersection(*(allowed[j] for j in c)) for c in comps]
        if any(not a for a in per_comp):
            continue
        for choice in itertools.product(*(sorted(a) for a in per_comp)):
            signs = [0] * n
            for c, e in zip(comps, choice):
                for j in c:
                    signs[j] = e
            cols = [tuple(signs[j] if i == perm(j) else 0 for i in range(n)) for j in range(n)]
            sigma = from_columns(cols)
            if is_member(G, sigma):
                found.append(sigma)
    return sort_matrices(found)


def _box(n: int, bound: int):
    return itertools.product(range(-bound, bound + 1), repeat=n)


def _distinct_perms(v: Vector):
    return sorted(set(itertools.permutations(v)))


class _Search:
    """Column-propagation search over matrices with entries in [-B, B]."""

    def __init__(self, G: StructureGroup, bound: int, component_wise: bool):
        self.G = G
        self.n = G.n
        self.bound = bound
        self.comps = G.s.f_orbits
        self.comp_of = {i: c for c in self.comps for i in c}
        self.sum_rule = len(self.comps) == 1 and not component_wise
        self._prune_cache: dict[tuple[int, Vector], bool] = {}
        self._fp_cache: dict[Vector, Permutation] = {}

    def fprime(self, w: Vector) -> Permutation:
        key = tuple(c % self.G.m for c in w)
        p = self._fp_cache.get(key)
        if p is None:
            p = self._fp_cache[key] = self.G.action_perm(w).inverse()
        return p

    def column_ok(self, j: int, w: Vector) -> bool:
        key = (j, w)
        ok = self._prune_cache.get(key)
        if ok is None:
            ok = self._prune_cache[key] = any(w) and prune_column(self.G, j, w) is None
        return ok

    def first_columns(self) -> list[Vector]:
        out = []
        for w in _box(self.n, self.bound):
            if self.sum_rule and abs(sum(w)) != 1:
                continue
            if self.column_ok(0, w):
                out.append(w)
        return out

    def propagate(self, cols: dict[int, Vector]) -> dict[int, Vector] | None:
        f = self.G.s.f
        cols = dict(cols)
        changed = True
        while changed:
            changed = False
            for j in list(cols):
                fp = self.fprime(cols[j])
                for i in list(cols):
                    target = f[j](i)
                    v = transport(cols[i], fp)
                    if target in cols:
                        if cols[target] != v:
                            return None
                    else:
                        if not self.column_ok(target, v):
                            return None
                        cols[target] = v
                        changed = True
        return cols

    def run(self, cols: dict[int, Vector]):
        cols = self.propagate(cols)
        if cols is None:
            return
        if len(cols) == self.n:
            sigma = from_columns([cols[j] for j in range(self.n)])
            if mat_is_unimodular(sigma) and is_member(self.G, sigma):
                yield sigma
            return
        u = min(set(range(self.n)) - cols.keys())
        seeds = [cols[j] for j in self.comp_of[u] if j in cols]
        if seeds:
            cands = _distinct_perms(seeds[0])
        elif self.sum_rule:
            cands = _distinct_perms(cols[0])
        else:
            cands = list(_box(self.n, self.bound))
        for w in cands:
            if self.column_ok(u, w):
                yield from self.run({**cols, u: w})


def _search_from(args):
    G, bound, component_wise, first = args
    return list(_Search(G, bound, component_wise).run({0: first}))


def search_bounded(G: StructureGroup, bound: int, component_wise: bool = False,
                   workers: int | None = None) -> list[Matrix]:
    """All matrices in Im_pi with entries in ``[-bound, bound]``.

    For indecomposable solutions every column is a row permutation of the
    first and the first column sums to +-1; otherwise columns are enumerated
    per f-orbit. Missing columns are filled by ``w_{f_j(i)} = f'_j . w_i``.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    search = _Search(G, bound, component_wise)
    firsts = search.first_columns()
    workers = workers or int(os.environ.get("YBE_AUT_WORKERS", "1"))
    if workers > 1 and len(firsts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = ex.map(_search_from, [(G, bound, component_wise, w) for w in firsts])
            found = [m for part in parts for m in part]
    else:
        found = [m for w in firsts for m in search.run({0: w})]
    return sort_matrices(found)


def circulant(first_column: Sequence[int]) -> Matrix:
    """``C[i][j] = c[(i - j) mod n]``: column j is column 0 shifted down by j."""
    n = len(first_column)
    return tuple(tuple(first_column[(i - j) % n] for j in range(n)) for i in range(n))


# -- group structure -------------------------------------------------------

@dataclass
class GroupReport:
    closed: bool
    order: int
    abelian: bool
    # order -> count; key 0 collects elements of infinite (or very large) order
    element_orders: dict[int, int]
    # products or inverses that are accepted but missing from the set
    escapes: list[Matrix] = field(default_factory=list)

    def __str__(self) -> str:
        orders = ", ".join(f"{k or 'inf'}:{v}" for k, v in sorted(self.element_orders.items()))
        return (f"closed={self.closed} order={self.order} abelian={self.abelian} "
                f"element orders {{{orders}}}")


def matrix_order(m: Matrix, cap: int = 1000) -> int | None:
    ident = identity_matrix(len(m))
    p = m
    for k in range(1, cap + 1):
        if p == ident:
            return k
        p = mat_mul(p, m)
    return None


def closure_check(G: StructureGroup, mats: Sequence[Matrix]) -> GroupReport:
    """Check products and inverses stay in Im_pi; describe the finite group."""
    pool = set(mats)
    escapes = []
    for a in mats:
        candidates = [mat_inverse(a)] + [mat_mul(a, b) for b in mats]
        for c in candidates:
            if not is_member(G, c):
                raise AssertionError(f"Im_pi not closed: {c} rejected")
            if c not in pool:
                escapes.append(c)
    abelian = all(mat_mul(a, b) == mat_mul(b, a) for a in mats for b in mats)
    orders: dict[int, int] = {}
    for a in mats:
        k = matrix_order(a)
        orders[k or 0] = orders.get(k or 0, 0) + 1
    return GroupReport(not escapes, len(pool), abelian, orders, sort_matrices(escapes))


# -- Garside preservation --------------------------------------------------

@dataclass
class PreservationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    details: list[str] = field(default_factory=list)
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = self.checks.get(name, True) and ok
        if not ok and detail:
            self.details.append(f"{name}: {detail}")

    def __str__(self) -> str:
        return "\n".join(f"{'pass' if v else 'FAIL'} {k}" for k, v in self.checks.items())


def verify_garside_preservation(G: StructureGroup, sigma: Matrix,
                                lattice: DivisorLattice | None = None,
                                strict: bool = True) -> PreservationReport:
    gp = mat_is_generalized_permutation(sigma)
    if gp is None or any(e != 1 for e in gp.signs):
        raise ValueError("expected a permutation matrix")
    if not is_member(G, sigma):
        raise ValueError("matrix is not in Im_pi")
    L = lattice or divisor_lattice(G)
    rep = PreservationReport()
    images = []
    for e in L.elements:
        img = image_of(G, sigma, e)
        inside = img in L
        rep.record("maps Div(Delta) into itself", inside, str(e.vec))
        rep.record("length preserving", img.length == e.length, str(e.vec))
        images.append(L.index(img) if inside else None)
    if all(i is not None for i in images):
        size = len(L)
        for a, b in itertools.product(range(size), repeat=2):
            rep.record("join commutes", images[L.join[a][b]] == L.join[images[a]][images[b]],
                       f"{a},{b}")
            rep.record("meet commutes", images[L.meet[a][b]] == L.meet[images[a]][images[b]],
                       f"{a},{b}")
    rep.record("fixes Delta", image_of(G, sigma, delta(G)) == delta(G))
    rep.record("fixes 1", image_of(G, sigma, G.identity) == G.identity)
    frozen_ok = True
    try:
        frozen_image_coordinates(G, sigma)
    except AssertionError:
        frozen_ok = False
    rep.record("phi(N) = N", frozen_ok and mat_is_generalized_permutation(sigma) is not None)
    perm = gp.perm
    s = G.s
    for j, k in itertools.permutations(range(G.n), 2):
        lhs = perm(s.f_inv[j](k))
        rhs = s.f_inv[perm(j)](perm(k))
        rep.record("complement preserved", lhs == rhs, f"{j + 1}\\{k + 1}")
    rep.record("commutes with T", perm * s.T == s.T * perm)
    if strict and not rep.ok:
        raise AssertionError("Garside preservation failed:\n" + "\n".join(rep.details))
    return rep


def _signed_atom_of(G: StructureGroup, a: GroupElement) -> tuple[int, int] | None:
    for i in range(G.n):
        for e in (1, -1):
            if G.gen(i, e) == a:
                return (i, e)
    return None


def verify_extended_preservation(G: StructureGroup, sigma: Matrix,
                                 strict: bool = True) -> PreservationReport:
    gp = mat_is_generalized_permutation(sigma)
    if gp is None:
        raise ValueError("expected a generalized permutation matrix")
    if not is_member(G, sigma):
        raise ValueError("matrix is not in Im_pi")
    table = extended_tables(G)
    rep = PreservationReport()
    phi_atom = {}
    for i in range(G.n):
        for e in (1, -1):
            img = _signed_atom_of(G, image_of(G, sigma, G.gen(i, e)))
            rep.record("atoms map into X u X^-", img is not None, f"x{i + 1}^{e}")
            phi_atom[(i, e)] = img
    if rep.ok:
        # pairs whose image pair has no table entry carry no constraint
        for op in ("lcm_R", "lcm_L"):
            for (a, b), value in getattr(table, op).items():
                target = table.lookup(op, phi_atom[a], phi_atom[b])
                if target is None:
                    rep.skipped += 1
                    continue
                rep.record(f"{op} preserved", target == image_of(G, sigma, value), f"{a} {b}")
        for (a, b), c in table.complement.items():
            target = table.lookup("complement", phi_atom[a], phi_atom[b])
            if target is None:
                rep.skipped += 1
                continue
            rep.record("complement preserved", target == phi_atom[c], f"{a} {b}")
    for i in range(G.n):
        k, e = gp.perm(i), gp.signs[i]
        expect = G.power(G.frozen(k), e)
        rep.record("phi(theta_i) = theta_{perm(i)}^{+-1}",
                   image_of(G, sigma, G.frozen(i)) == expect, f"theta_{i + 1}")
    if strict and not rep.ok:
        raise AssertionError("extended preservation failed:\n" + "\n".join(rep.details))
    return rep


# -- quotient W = G/N ------------------------------------------------------

class QuotientGroup:
    """W = G/N with elements represented by pi-coordinates mod m."""

    def __init__(self, G: StructureGroup, cap: int = 10**6):
        self.G = G
        self.m = G.m
        self.n = G.n
        if self.m ** self.n > cap:
            raise ValueError(f"|W| = {self.m}^{self.n} exceeds cap {cap}")
        self.identity = (0,) * self.n

    @property
    def order(self) -> int:
        return self.m ** self.n

    def elements(self):
        return itertools.product(range(self.m), repeat=self.n)

    def reduce(self, v: Sequence[int]) -> Vector:
        return tuple(c % self.m for c in v)

    def lift(self, u: Sequence[int]) -> GroupElement:
        return self.G.pi_inverse(u)

    def multiply(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        return self.reduce(self.G.multiply(self.lift(u), self.lift(v)).vec)

    def inverse(self, u: Sequence[int]) -> Vector:
        return self.reduce(self.G.invert(self.lift(u)).vec)

    def spot_check(self, samples: int = 200, seed: int = 0) -> bool:
        """Associativity, identity, inverses and lift independence on samples."""
        rng = random.Random(seed)

        def rand():
            return tuple(rng.randrange(self.m) for _ in range(self.n))

        for _ in range(samples):
            a, b, c = rand(), rand(), rand()
            if self.multiply(self.multiply(a, b), c) != self.multiply(a, self.multiply(b, c)):
                return False
            if self.multiply(a, self.identity) != a or self.multiply(self.identity, a) != a:
                return False
            if self.multiply(a, self.inverse(a)) != self.identity:
                return False
            shift = tuple(c + self.m * rng.randint(-2, 2) for c in a)
            shifted = self.reduce(self.G.multiply(self.G.pi_inverse(shift), self.lift(b)).vec)
            if shifted != self.multiply(a, b):
                return False
        return True


def quotient_group(G: StructureGroup) -> QuotientGroup:
    return QuotientGroup(G)


@dataclass
class InducedAutomorphism:
    W: QuotientGroup
    sigma: Matrix

    def __call__(self, u: Sequence[int]) -> Vector:
        return self.W.reduce(mat_vec(self.sigma, u))


def induced_quotient_automorphism(G: StructureGroup, sigma: Matrix, W: QuotientGroup,
                                  exhaustive_cap: int = 4096, seed: int = 0) -> InducedAutomorphism:
    """``[a] -> [phi(a)]`` on W, audited for well-definedness and multiplicativity."""
    if not is_member(G, sigma):
        raise ValueError("matrix is not in Im_pi")
    phi_hat = InducedAutomorphism(W, sigma)
    rng = random.Random(seed)
    if W.order <= exhaustive_cap:
        cosets = list(W.elements())
    else:
        cosets = [tuple(rng.randrange(W.m) for _ in range(W.n)) for _ in range(exhaustive_cap)]
    for u in cosets:
        for _ in range(2):
            lifted = tuple(c + W.m * rng.randint(-3, 3) for c in u)
            img = W.reduce(image_of(G, sigma, G.pi_inverse(lifted)).vec)
            if img != phi_hat(u):
                raise AssertionError(f"induced map not well defined at {u}")
    pairs = ([(u, v) for u in cosets for v in cosets] if len(cosets) <= 64
             else [(rng.choice(cosets), rng.choice(cosets)) for _ in range(2000)])
    for u, v in pairs:
        if phi_hat(W.multiply(u, v)) != W.multiply(phi_hat(u), phi_hat(v)):
            raise AssertionError(f"induced map not multiplicative at {u}, {v}")
    images = {phi_hat(u) for u in cosets}
    if W.order <= exhaustive_cap and len(images) != W.order:
        raise AssertionError("induced map is not a bijection")
    return phi_hat
