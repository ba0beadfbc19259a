from hypothesis import given, settings, strategies as st

from ybe_aut import catalog
from ybe_aut.algebra import unit
from ybe_aut.cocycle import StructureGroup, format_word, parse_word
from ybe_aut.solution import frozen_word, to_presentation
from conftest import SMALL, solution_names, vectors, words

GROUPS = {name: StructureGroup(catalog.NAMED[name]()) for name in SMALL}


def word(G, text):
    return G.element_from_word(parse_word(text, G.n))


def test_products_and_inverses_in_four_element_group():
    G = GROUPS["four"]
    x1x2 = word(G, "x1 x2")
    assert x1x2.vec == (0, 1, 1, 0)
    assert x1x2 == word(G, "x3 x3")
    assert G.multiply(G.gen(0), G.identity) == G.gen(0)
    assert G.multiply(G.gen(0), G.gen(0, -1)) == G.identity
    assert G.gen(3, -1).vec == (0, 0, -1, 0)
    assert G.invert(x1x2) == word(G, "x2^-1 x1^-1")


def test_actions():
    G = GROUPS["four"]
    assert G.act(G.gen(0), unit(4, 1)) == unit(4, 3)
    assert G.act(G.identity, (1, 2, 3, 4)) == (1, 2, 3, 4)
    for i in range(4):
        assert G.act(G.frozen(i), (5, -1, 2, 7)) == (5, -1, 2, 7)


def test_pi_inverse_examples():
    G = GROUPS["four"]
    for j in range(4):
        assert G.pi_inverse(unit(4, j)) == G.gen(j)
    assert G.pi(G.identity) == (0, 0, 0, 0)
    a = G.pi_inverse((-4, 1, 2, 0))
    assert a == word(G, "x2 x4 x3 x1^-4")
    assert a.perm == G.s.f_inv[1]
    assert format_word(G.normal_word((0, 0, 0, -1))) == "x3^-1"
    s = G.s
    for i in range(4):
        for j in range(4):
            if i != j:
                expect = G.multiply(G.gen(s.f_inv[j](i)), G.gen(j))
                assert G.pi_inverse(tuple(a + b for a, b in zip(unit(4, i), unit(4, j)))) == expect


def test_positive_multiples_follow_T_orbit():
    for name in ("four", "g3", "cyclic5"):
        G = GROUPS[name]
        T = G.s.T
        for x in range(G.n):
            for ell in range(1, 5):
                pts = [x]
                for _ in range(ell - 1):
                    pts.append(T(pts[-1]))
                expect = G.element_from_word((p, 1) for p in reversed(pts))
                assert G.pi_inverse(unit(G.n, x, ell)) == expect


def test_frozen_elements():
    for name, G in GROUPS.items():
        for i in range(G.n):
            theta = G.frozen(i)
            assert theta.vec == unit(G.n, i, G.m)
            assert theta.perm.is_identity()
            assert theta == G.element_from_word((k, 1) for k in frozen_word(G.s, i))


def test_word_parsing():
    G = GROUPS["four"]
    assert word(G, "") == G.identity
    assert word(G, "x1 x1^-1") == G.identity
    assert parse_word("x3^2 x1^-1") == ((2, 1), (2, 1), (0, -1))
    assert format_word(()) == "1"


@settings(max_examples=200)
@given(st.data())
def test_cocycle_law(data):
    G = GROUPS[data.draw(solution_names)]
    a = G.element_from_word(data.draw(words(G.n)))
    b = G.element_from_word(data.draw(words(G.n)))
    lhs = G.pi(G.multiply(a, b))
    rhs = tuple(p + q for p, q in zip(G.act(G.invert(b), G.pi(a)), G.pi(b)))
    assert lhs == rhs


@settings(max_examples=200)
@given(st.data())
def test_pi_is_bijective(data):
    G = GROUPS[data.draw(solution_names)]
    w = data.draw(vectors(G.n))
    a = G.pi_inverse(w)
    assert G.pi(a) == w
    assert G.element_from_word(G.normal_word(w)) == a
    assert len(G.normal_word(w)) == sum(map(abs, w))
    b = G.element_from_word(data.draw(words(G.n)))
    assert G.pi_inverse(G.pi(b)) == b


@given(solution_names)
def test_relations_hold(name):
    G = GROUPS[name]
    for i, j, k, l in to_presentation(G.s).relations:
        assert G.element_from_word([(i, 1), (j, 1)]) == G.element_from_word([(k, 1), (l, 1)])


@settings(max_examples=100)
@given(st.data())
def test_frozen_and_mod_m_action(data):
    G = GROUPS[data.draw(solution_names)]
    w = data.draw(vectors(G.n))
    for i in range(G.n):
        assert G.act(G.invert(G.frozen(i)), w) == w
    shift = tuple(c + G.m * k for c, k in zip(w, data.draw(vectors(G.n, -3, 3))))
    assert G.pi_inverse(shift).perm == G.pi_inverse(w).perm == G.action_perm(w)


@settings(max_examples=100)
@given(st.data())
def test_group_axioms(data):
    G = GROUPS[data.draw(solution_names)]
    a, b, c = (G.element_from_word(data.draw(words(G.n))) for _ in range(3))
    assert G.multiply(G.multiply(a, b), c) == G.multiply(a, G.multiply(b, c))
    assert G.multiply(a, G.invert(a)) == G.identity
    assert G.conjugate(a, b) == G.product([a, b, G.invert(a)])
