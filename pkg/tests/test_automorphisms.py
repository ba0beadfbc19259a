import random

import pytest
from hypothesis import given, settings, strategies as st

from ybe_aut import catalog
from ybe_aut.algebra import (
    Permutation,
    identity_matrix,
    mat_inverse,
    mat_mul,
    mat_neg,
    random_unimodular,
)
from ybe_aut.automorphisms import (
    apply_automorphism,
    check_membership,
    circulant,
    closure_check,
    enumerate_generalized_permutation,
    frozen_image_coordinates,
    image_of,
    induced_quotient_automorphism,
    is_member,
    matrix_form_holds,
    prune_candidate,
    quotient_group,
    search_bounded,
    signed_conjugation_allowed,
    verify_extended_preservation,
    verify_garside_preservation,
)
from ybe_aut.cocycle import StructureGroup, parse_word
from ybe_aut.garside import delta

FOUR = StructureGroup(catalog.four_class2())
G2 = StructureGroup(catalog.g2())
G3 = StructureGroup(catalog.g3())
ZG2 = StructureGroup(catalog.z_g2())
REJECTED = ((-4, -3, -4, 0), (1, 1, 2, 0), (2, 1, 1, 0), (0, 0, 0, -1))
ZG2_MEMBER = ((1, 2, 2), (1, 3, 2), (1, 2, 3))
SWAP_PAIRS = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0))
G3_SET = [
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    ((-1, 0, 0), (0, 0, -1), (0, -1, 0)),
    ((0, 0, -1), (0, -1, 0), (-1, 0, 0)),
    ((0, -1, 0), (-1, 0, 0), (0, 0, -1)),
]
GOLDEN = {
    "four": (FOUR, [identity_matrix(4), mat_neg(identity_matrix(4)), SWAP_PAIRS, mat_neg(SWAP_PAIRS)]),
    "g2": (G2, [identity_matrix(2), mat_neg(identity_matrix(2)), ((0, 1), (1, 0)), ((0, -1), (-1, 0))]),
    "g3": (G3, G3_SET),
}


def word(G, text):
    return G.element_from_word(parse_word(text, G.n))


def test_identity_and_minus_identity_accepted():
    for G in (FOUR, G2, G3, ZG2):
        assert is_member(G, identity_matrix(G.n))
    assert is_member(FOUR, mat_neg(identity_matrix(4)))


def test_rejected_example_witness():
    v = check_membership(FOUR, REJECTED)
    assert not v.accepted
    assert (2, 0, (1, 2, -4, 0)) in v.failures
    s = FOUR.s
    assert list(v.action_perms) == [s.f_inv[1], s.f[2], s.f_inv[2], s.f[2]]
    assert image_of(FOUR, REJECTED, FOUR.gen(0)) == word(FOUR, "x2 x4 x3 x1^-4")
    assert image_of(FOUR, REJECTED, FOUR.gen(3)) == word(FOUR, "x3^-1")
    with pytest.raises(ValueError):
        apply_automorphism(FOUR, REJECTED, FOUR.gen(0))


def test_non_unimodular_input_raises():
    with pytest.raises(ValueError):
        check_membership(G3, ((2, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_minus_identity_images():
    neg = mat_neg(identity_matrix(4))
    assert apply_automorphism(FOUR, neg, FOUR.gen(0)) == FOUR.gen(0, -1)
    assert apply_automorphism(FOUR, neg, FOUR.gen(2)) == FOUR.gen(3, -1)


def test_decomposable_example():
    assert is_member(ZG2, ZG2_MEMBER)
    assert apply_automorphism(ZG2, ZG2_MEMBER, ZG2.gen(0)) == word(ZG2, "x1 x2 x2")
    frozen_image_coordinates(ZG2, ZG2_MEMBER)
    th = [ZG2.frozen(i) for i in range(3)]
    phi = [image_of(ZG2, ZG2_MEMBER, t) for t in th]
    P = ZG2.product
    p2 = ZG2.power
    assert phi[0] == P([th[0], th[1], th[2]])
    # theta-coordinates of phi(theta_i) are the columns of sigma
    assert phi[1] == P([p2(th[0], 2), p2(th[1], 3), p2(th[2], 2)])
    assert phi[2] == P([p2(th[0], 2), p2(th[1], 2), p2(th[2], 3)])
    # the frozen words starting with x2 and x3
    assert image_of(ZG2, ZG2_MEMBER, word(ZG2, "x2 x3")) == phi[2]
    assert image_of(ZG2, ZG2_MEMBER, word(ZG2, "x3 x2")) == phi[1]
    t = P(th)
    assert image_of(ZG2, ZG2_MEMBER, ZG2.gen(1)) == ZG2.multiply(ZG2.gen(1), t)
    assert image_of(ZG2, ZG2_MEMBER, ZG2.gen(2)) == ZG2.multiply(ZG2.gen(2), t)


def test_inner_automorphism_witness():
    sigma = ((1, 0, 0), (0, 0, 1), (0, 1, 0))
    assert is_member(ZG2, sigma)
    x1 = ZG2.gen(0)
    for i in range(3):
        for e in (1, -1):
            a = ZG2.gen(i, e)
            assert apply_automorphism(ZG2, sigma, a) == ZG2.conjugate(x1, a)


def test_zg2_parametrized_family():
    tested = 0
    for a in range(-3, 4):
        for c in range(-3, 4):
            for d in range(-3, 4):
                for b in range(-6, 7, 2):
                    for e in (d - 1, d + 1):
                        if abs(a * (d + e) - 2 * b * c) == 1:
                            m = ((a, b, b), (c, d, e), (c, e, d))
                            assert is_member(ZG2, m), m
                            tested += 1
    assert tested > 50


def test_zg2_bounded_search_stays_in_family():
    for m in search_bounded(ZG2, 2):
        (a, b, b2), (c, d, e), (c2, e2, d2) = m
        assert b == b2 and c == c2 and d == d2 and e == e2
        assert abs(d - e) == 1 and b % 2 == 0 and abs(a * (d + e) - 2 * b * c) == 1


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_sets(name):
    G, expected = GOLDEN[name]
    assert enumerate_generalized_permutation(G) == sorted(
        expected, key=lambda m: tuple(x for r in m for x in r))
    assert search_bounded(G, 1) == enumerate_generalized_permutation(G)


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_members_pass_filters_and_matrix_form(name):
    G, mats = GOLDEN[name]
    for m in mats:
        v = check_membership(G, m)
        assert v.accepted and matrix_form_holds(G, m, v)
        assert prune_candidate(G, m) is None


def test_prune_rejects_parity_mismatch():
    m = ((-4, 1, 0, 0), (2, 0, 0, 0), (8, 0, 1, 0), (6, 0, 0, 1))
    reason = prune_candidate(FOUR, m)
    assert reason is not None and "parity" in reason


def test_prune_never_rejects_members():
    rng = random.Random(11)
    for G, mats in GOLDEN.values():
        for _ in range(300):
            m = random_unimodular(G.n, rng)
            if is_member(G, m):
                assert prune_candidate(G, m) is None


def test_closure():
    four = closure_check(FOUR, GOLDEN["four"][1])
    assert four.closed and four.order == 4 and four.abelian
    assert four.element_orders == {1: 1, 2: 3}
    g3 = closure_check(G3, G3_SET)
    assert g3.closed and g3.order == 6 and not g3.abelian
    assert closure_check(G3, [identity_matrix(3)]).closed


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_garside_and_extended_preservation(name):
    G, mats = GOLDEN[name]
    for m in mats:
        verify_extended_preservation(G, m)
        if all(x >= 0 for r in m for x in r):
            rep = verify_garside_preservation(G, m)
            assert rep.ok and rep.checks["commutes with T"]


def test_minus_identity_inverts_frozen():
    neg = mat_neg(identity_matrix(4))
    for i in range(4):
        assert image_of(FOUR, neg, FOUR.frozen(i)) == FOUR.invert(FOUR.frozen(i))


def test_indecomposable_uniform_row_sums_fix_delta_up_to_sign():
    for G, mats in GOLDEN.values():
        d = delta(G)
        for m in mats:
            sums = {sum(r) for r in m}
            if len(sums) == 1:
                img = image_of(G, m, d)
                assert img in (d, G.invert(d))


def test_circulant_search():
    C = StructureGroup(catalog.cyclic(5))
    found = search_bounded(C, 1)
    assert circulant((1, -1, 1, 0, 0)) in found
    # products leave the entry bound, but must stay in Im_pi
    report = closure_check(C, found)
    assert not report.closed and report.escapes


def test_trivial_solution_accepts_everything():
    rng = random.Random(3)
    for n in (1, 2, 3, 4):
        T = StructureGroup(catalog.trivial(n))
        for _ in range(25):
            assert is_member(T, random_unimodular(n, rng))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["four", "g2", "g3"]), st.data())
def test_homomorphism_and_functoriality(name, data):
    G, mats = GOLDEN[name]
    s1 = data.draw(st.sampled_from(mats))
    s2 = data.draw(st.sampled_from(mats))
    letters = st.tuples(st.integers(0, G.n - 1), st.sampled_from([1, -1]))
    a = G.element_from_word(data.draw(st.lists(letters, max_size=6)))
    b = G.element_from_word(data.draw(st.lists(letters, max_size=6)))
    phi = lambda s, x: apply_automorphism(G, s, x)  # noqa: E731
    assert phi(s1, G.multiply(a, b)) == G.multiply(phi(s1, a), phi(s1, b))
    prod = mat_mul(s1, s2)
    assert is_member(G, prod) and is_member(G, mat_inverse(s1))
    assert phi(prod, a) == phi(s1, phi(s2, a))


def test_quotient_groups():
    W4 = quotient_group(FOUR)
    assert W4.order == 16 and W4.spot_check()
    W3 = quotient_group(G3)
    assert W3.order == 27 and W3.spot_check()
    assert quotient_group(StructureGroup(catalog.trivial(2))).order == 1


def test_induced_automorphisms():
    W4 = quotient_group(FOUR)
    neg = induced_quotient_automorphism(FOUR, mat_neg(identity_matrix(4)), W4)
    assert all(neg(u) == u for u in W4.elements())
    ident = induced_quotient_automorphism(G3, identity_matrix(3), quotient_group(G3))
    W3 = quotient_group(G3)
    assert all(ident(u) == u for u in W3.elements())
    rot = induced_quotient_automorphism(G3, G3_SET[1], W3)
    moved = [u for u in W3.elements() if rot(u) != u]
    assert moved
    assert all(rot(rot(rot(u))) == u for u in W3.elements())


def test_sign_reversing_member_inverts_f_under_conjugation():
    # sigma_4 of the G3 set: underlying permutation (2,3), all signs negative
    swap = Permutation.from_cycles(3, (2, 3))
    for i in range(3):
        assert swap * G3.s.f[i] * swap.inverse() == G3.s.f_inv[i]
        assert signed_conjugation_allowed(G3, swap, i) == {-1}


def test_parallel_search_matches_serial():
    C = StructureGroup(catalog.cyclic(5))
    assert search_bounded(C, 1, workers=2) == search_bounded(C, 1, workers=1)
