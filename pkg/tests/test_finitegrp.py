from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qinduce import finitegrp as fg
from qinduce.finitegrp import GQ, ONE, ZERO

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
gq = st.builds(GQ, rationals, rationals)


@given(gq, gq, gq)
def test_gaussian_field_laws(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert (x * y).conj() == x.conj() * y.conj()
    if y:
        assert (x / y) * y == x


def test_gq_text():
    assert str(GQ(1, -1)) == "1-i" and str(GQ(0, 1)) == "i" and str(GQ(Fraction(1, 2))) == "1/2"


def S3_parts():
    S3 = fg.symmetric3()
    A3 = [g for g in S3.elements() if S3.element_order(g) != 2]
    t = min(g for g in S3.elements() if S3.element_order(g) == 2)
    return S3, A3, t


def test_table_validation():
    with pytest.raises(fg.GroupError):
        fg.FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(fg.GroupError):
        fg.FiniteGroup([[0, 1], [1]])
    with pytest.raises(fg.GroupError):
        fg.cyclic(13)
    with pytest.raises(fg.GroupError):
        fg.builtin_group("A5")


@pytest.mark.parametrize("name, order, nsub", [("Z4", 4, 3), ("S3", 6, 6), ("D4", 8, 10), ("Q8", 8, 6), ("Z12", 12, 6)])
def test_builtins(name, order, nsub):
    G = fg.builtin_group(name)
    assert G.order == order and len(G.subgroups()) == nsub


def test_group_file_round_trip(tmp_path):
    G = fg.dihedral4()
    text = fg.dump_group_file(G)
    again = fg.load_group_file(text)
    assert again.table == G.table
    with pytest.raises(fg.GroupError):
        fg.load_group_file("3\n1 2 3\n2 3 1\n")
    with pytest.raises(fg.GroupError):
        fg.load_group_file("x\n")


def test_induce_examples():
    S3, A3, t = S3_parts()
    chi = fg.induce_rep(S3, A3, fg.trivial_rep(S3, A3)).character()
    for g in S3.elements():
        want = {"e": 2, "transposition": 0, "3-cycle": 2}[fg.classify(S3, g)]
        assert chi[g] == want
    whole = list(S3.elements())
    std = S3.realization
    assert fg.induce_rep(S3, whole, std).character() == std.character()
    reg = fg.induce_rep(S3, [S3.identity], fg.trivial_rep(S3, [S3.identity])).character()
    assert reg == {g: GQ(6 if g == S3.identity else 0) for g in S3.elements()}
    sign = {S3.identity: ONE, t: -ONE}
    chi = fg.induce_rep(S3, [S3.identity, t], fg.character_rep(S3, sign)).character()
    for g in S3.elements():
        assert chi[g] == {"e": 3, "transposition": -1, "3-cycle": 0}[fg.classify(S3, g)]


def test_induce_rejects_non_subgroup():
    S3, _, t = S3_parts()
    with pytest.raises(fg.GroupError):
        fg.induce_rep(S3, [S3.identity, t, t + 1 if t + 1 < 6 else 1], fg.trivial_rep(S3))


@pytest.mark.parametrize("name", ["Z4", "S3", "D4"])
def test_frobenius_reciprocity(name):
    G = fg.builtin_group(name)
    irr = fg.irreducible_characters(G)
    assert sum(int(c[G.identity].re) ** 2 for c in irr) == G.order
    for K in G.subgroups():
        chars = fg.one_dim_characters(G, K)
        assert chars
        for chi in chars:
            ind = fg.induce_rep(G, K, fg.character_rep(G, chi))
            assert ind.dim == G.order // len(K)
            assert fg.frobenius_check(G, K, chi, irr).passed


@given(st.sampled_from(["Z4", "Z6", "S3", "D4", "Q8", "Z8"]), st.data())
def test_dimension_formula(name, data):
    G = fg.builtin_group(name)
    K = data.draw(st.sampled_from(G.subgroups()))
    rho = fg.trivial_rep(G, K)
    assert fg.induce_rep(G, K, rho).dim == G.order // len(K)


def test_irreducible_characters_are_orthonormal():
    for name in ("Z4", "S3", "D4", "Q8"):
        G = fg.builtin_group(name)
        irr = fg.irreducible_characters(G)
        for i, a in enumerate(irr):
            for j, b in enumerate(irr):
                assert fg.inner_product(G, a, b) == (ONE if i == j else ZERO)


def test_invariant_integral():
    Z4 = fg.cyclic(4)
    X = fg.regular_space(Z4)
    I = fg.invariant_integral(X)
    assert I.weights == [GQ(Fraction(1, 4))] * 4
    assert I([ONE] * 4) == ONE
    for g in Z4.elements():
        for x in range(4):
            f = [ONE if y == x else ZERO for y in range(4)]
            assert I(X.act_function(g, f)) == I(f)
    S3 = fg.symmetric3()
    with pytest.raises(fg.NotTransitive):
        fg.invariant_integral(fg.GSpace(S3, [[0] * 6, [1] * 6]))


@pytest.mark.parametrize("name", ["Z4", "S3", "D4", "Q8"])
def test_invariant_functionals_are_a_line(name):
    G = fg.builtin_group(name)
    for K in G.subgroups():
        assert len(fg.invariant_functionals(fg.coset_space(G, K))) == 1


def test_gspace_validation():
    S3 = fg.symmetric3()
    with pytest.raises(fg.GroupError):
        fg.GSpace(S3, [[1, 0, 0, 0, 0, 0], [0] * 6])


def test_unitarity():
    S3, A3, _ = S3_parts()
    assert fg.check_unitarity(fg.coset_space(S3, A3)).passed
    assert fg.check_unitarity(fg.regular_space(S3)).passed
    bad = fg.check_unitarity(fg.regular_space(S3), involutive_star=False)
    assert not bad.passed
    for c in bad.failures:
        g = int(c.subject.split(",")[0].split("=")[1].split("+")[0].lstrip("i*g"))
        assert S3.element_order(g) > 2


def test_constant_functions_pair_to_one():
    Z4 = fg.cyclic(4)
    X = fg.regular_space(Z4)
    I = fg.invariant_integral(X)
    ones = [ONE] * 4
    for g in Z4.elements():
        assert I([a.conj() * b for a, b in zip(X.act_function(Z4.inverse[g], ones), ones)]) == ONE


def test_prop2_examples():
    S3, A3, t = S3_parts()
    assert fg.check_prop2(S3, A3, {k: ONE for k in A3}).passed
    assert len(fg.induced_carrier(S3, A3, {k: ONE for k in A3})) == 2
    assert len(fg.induced_carrier(S3, [S3.identity], {S3.identity: ONE})) == 6
    sign = {S3.identity: ONE, t: -ONE}
    assert len(fg.induced_carrier(S3, [S3.identity, t], sign)) == 3
    assert fg.check_prop2(S3, [S3.identity, t], sign).passed


@pytest.mark.parametrize("name", ["Z4", "S3", "D4", "Q8"])
def test_prop2_matches_induce_everywhere(name):
    G = fg.builtin_group(name)
    for K in G.subgroups():
        for chi in fg.one_dim_characters(G, K):
            assert fg.check_prop2(G, K, chi).passed


def test_comodule_induction():
    Z4 = fg.cyclic(4)
    assert fg.check_comodule_induction(Z4, [0, 2], {0: ONE, 2: ONE}).passed
    S3, A3, _ = S3_parts()
    rep = fg.check_comodule_induction(S3, A3, {k: ONE for k in A3})
    assert rep.passed
    assert "dual of coaction = induced action" in rep.identities()


def test_dualize():
    Z3 = fg.cyclic(3)
    triv = fg.trivial_rep(Z3)
    assert fg.dualize_action(triv).matrices == triv.matrices
    reg = fg.FiniteRep(Z3, 3, {g: [[ONE if Z3.mul(j, g) == i else ZERO for j in range(3)] for i in range(3)]
                               for g in range(3)})
    dual = fg.dualize_action(reg)
    assert dual.character() == {g: c.conj() for g, c in reg.character().items()}
    Z4 = fg.cyclic(4)
    for chi in fg.one_dim_characters(Z4):
        rho = fg.character_rep(Z4, chi)
        d = fg.dualize_action(rho)
        assert d.character() == {g: c.conj() for g, c in chi.items()}
        assert fg.dualize_action(d).character() == rho.character()
