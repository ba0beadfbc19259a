"""Ten end-to-end acceptance criteria, each reporting one PASS/FAIL line."""

import random
import time
from math import comb

import pytest

from ybe_aut import catalog
from ybe_aut.algebra import (
    identity_matrix,
    mat_is_generalized_permutation,
    mat_neg,
    random_unimodular,
)
from ybe_aut.automorphisms import (
    check_membership,
    circulant,
    closure_check,
    enumerate_generalized_permutation,
    image_of,
    induced_quotient_automorphism,
    is_member,
    quotient_group,
    search_bounded,
    verify_garside_preservation,
)
from ybe_aut.cocycle import StructureGroup, parse_word
from ybe_aut.fuzz import fuzz_solution
from ybe_aut.garside import divides, divisor_lattice, divisors_of_power
from ybe_aut.oracle import build_table, oracle_counts, oracle_divides

FOUR = StructureGroup(catalog.four_class2())
G2 = StructureGroup(catalog.g2())
G3 = StructureGroup(catalog.g3())
ZG2 = StructureGroup(catalog.z_g2())

SWAP = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0))
ANTI = ((0, 1), (1, 0))
G3_SET = [
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    ((-1, 0, 0), (0, 0, -1), (0, -1, 0)),
    ((0, 0, -1), (0, -1, 0), (-1, 0, 0)),
    ((0, -1, 0), (-1, 0, 0), (0, 0, -1)),
]


def flat(m):
    return tuple(x for r in m for x in r)


GOLDEN = {
    "four": (FOUR, sorted([identity_matrix(4), mat_neg(identity_matrix(4)), SWAP, mat_neg(SWAP)], key=flat)),
    "g2": (G2, sorted([identity_matrix(2), mat_neg(identity_matrix(2)), ANTI, mat_neg(ANTI)], key=flat)),
    "g3": (G3, sorted(G3_SET, key=flat)),
}


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail
    return emit


def word(G, text):
    return G.element_from_word(parse_word(text, G.n))


def test_criterion_01_golden_sets(report):
    details, ok = [], True
    for name, (G, expected) in GOLDEN.items():
        t = time.perf_counter()
        found = enumerate_generalized_permutation(G)
        dt = time.perf_counter() - t
        ok &= found == expected and dt < 5
        details.append(f"{name}: {len(found)} in {dt:.2f}s")
    report(1, ok, "; ".join(details))


def test_criterion_02_rejection(report):
    sigma = ((-4, -3, -4, 0), (1, 1, 2, 0), (2, 1, 1, 0), (0, 0, 0, -1))
    v = check_membership(FOUR, sigma)
    s = FOUR.s
    ok = (not v.accepted
          and (2, 0, (1, 2, -4, 0)) in v.failures
          and image_of(FOUR, sigma, FOUR.gen(0)) == word(FOUR, "x2 x4 x3 x1^-4")
          and image_of(FOUR, sigma, FOUR.gen(3)) == word(FOUR, "x3^-1")
          and list(v.action_perms) == [s.f_inv[1], s.f[2], s.f_inv[2], s.f[2]])
    report(2, ok, f"{len(v.failures)} failing pairs, (3,1) transports w_3 to t1 t2^2 t3^-4")


def test_criterion_03_decomposable_example(report):
    sigma = ((1, 2, 2), (1, 3, 2), (1, 2, 3))
    th = [ZG2.frozen(i) for i in range(3)]

    def theta(*e):
        return ZG2.product(ZG2.power(t, k) for t, k in zip(th, e))

    ok = is_member(ZG2, sigma)
    ok &= image_of(ZG2, sigma, ZG2.gen(0)) == word(ZG2, "x1 x2 x2")
    # the frozen element written x2 x3 (pi-image 2 e_3)
    ok &= image_of(ZG2, sigma, word(ZG2, "x2 x3")) == theta(2, 2, 3)
    ok &= image_of(ZG2, sigma, word(ZG2, "x3 x2")) == theta(2, 3, 2)
    family = 0
    for a in range(-3, 4):
        for c in range(-3, 4):
            for d in range(-3, 4):
                for b in range(-6, 7, 2):
                    for e in (d - 1, d + 1):
                        if abs(a * (d + e) - 2 * b * c) == 1:
                            ok &= is_member(ZG2, ((a, b, b), (c, d, e), (c, e, d)))
                            family += 1
    report(3, ok and family > 0, f"phi(x1)=x1 x2 x2, frozen images match, {family} family members accepted")


def test_criterion_04_circulant(report):
    C = StructureGroup(catalog.cyclic(5))
    t = time.perf_counter()
    found = search_bounded(C, 1)
    dt = time.perf_counter() - t
    target = circulant((1, -1, 1, 0, 0))
    report(4, target in found and dt < 60, f"{len(found)} matrices with entries in [-1,1] in {dt:.2f}s")


def test_criterion_05_closure(report):
    expected = {"four": (4, True), "g2": (4, True), "g3": (6, False)}
    ok, details = True, []
    for name, (G, mats) in GOLDEN.items():
        r = closure_check(G, mats)
        ok &= r.closed and (r.order, r.abelian) == expected[name]
        details.append(f"{name}: order {r.order} abelian={r.abelian}")
    four = closure_check(FOUR, GOLDEN["four"][1])
    ok &= four.element_orders == {1: 1, 2: 3}
    report(5, ok, "; ".join(details))


def test_criterion_06_garside_preservation(report):
    ok, details = True, []
    for name, (G, mats) in GOLDEN.items():
        lattice = divisor_lattice(G)
        checked = 0
        for m in mats:
            gp = mat_is_generalized_permutation(m)
            if all(e == 1 for e in gp.signs):
                rep = verify_garside_preservation(G, m, lattice, strict=False)
                ok &= rep.ok
                checked += 1
        details.append(f"{name}: {checked} permutation matrices over {len(lattice)} divisors")
        ok &= len(lattice) == {"four": 16, "g2": 4, "g3": 8}[name]
    report(6, ok, "; ".join(details))


def test_criterion_07_cocycle_fuzz(report):
    names = ["four", "g2", "g3", "zg2", "cyclic5", "trivial2", "trivial3", "trivial4"]
    total, ok = 0, True
    for name in names:
        rep = fuzz_solution(catalog.NAMED[name](), cases=1000, seed=20241015)
        ok &= rep.ok
        total += rep.cases
    report(7, ok, f"{total} cases over {len(names)} solutions, zero failures" if ok else "failures found")


def test_criterion_08_oracle(report):
    ok, details = True, []
    for name in ["four", "g2", "g3", "trivial2", "trivial3", "trivial4"]:
        s = catalog.NAMED[name]()
        G = StructureGroup(s)
        table = build_table(s, 4)
        ok &= oracle_counts(table) == [comb(s.n + k - 1, k) for k in range(5)]
        rng = random.Random(name)
        for _ in range(200):
            v = tuple(rng.randrange(s.n) for _ in range(rng.randint(1, 4)))
            u = tuple(rng.randrange(s.n) for _ in range(rng.randint(0, len(v))))
            side = rng.choice(["left", "right"])
            mine = divides(G, G.element_from_word((i, 1) for i in u),
                           G.element_from_word((i, 1) for i in v), side)
            ok &= mine == oracle_divides(table, u, v, side)
        details.append(name)
    report(8, ok, "counts and 200 divisibility pairs agree for " + ", ".join(details))


def test_criterion_09_quotients(report):
    ok = True
    W4, W3 = quotient_group(FOUR), quotient_group(G3)
    ok &= W4.order == 16 and W3.order == 27
    ok &= W4.spot_check() and W3.spot_check()
    for name, (G, mats) in GOLDEN.items():
        W = quotient_group(G)
        for m in mats:
            induced_quotient_automorphism(G, m, W)
    div = len(divisors_of_power(G3, G3.m - 1))
    ok &= div == 27
    report(9, ok, f"|W|=16 and 27, induced maps well defined, |Div(Delta^2)|={div} for G3")


def test_criterion_10_trivial_solution(report):
    rng = random.Random(10)
    accepted = 0
    for k in range(100):
        n = 1 + k % 4
        if is_member(StructureGroup(catalog.trivial(n)), random_unimodular(n, rng)):
            accepted += 1
    report(10, accepted == 100, f"{accepted}/100 random unimodular matrices accepted")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
