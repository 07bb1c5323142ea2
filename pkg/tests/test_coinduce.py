from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qinduce.coeff import ONE, ZERO, CoeffPoly
from qinduce.coinduce import (
    Character,
    OrderTooSmall,
    VSeries,
    build_coinduced,
    character_action,
    character_consistency,
    check_classical_limit,
    check_rep_relations,
    check_truncation_coherence,
    equivariance_check,
    format_vseries,
)
from qinduce.ncpoly import monomials_up_to
from qinduce.parser import parse, parse_coeff

SYM = Character()


def test_operator_examples():
    rep = build_coinduced(SYM, 3)
    v = VSeries.monomial(1, 3)
    assert rep.act("N", v) == VSeries.const(ONE, 3)
    one = VSeries.const(ONE, 3)
    assert rep.act("I", one) == VSeries([parse_coeff("alpha"), parse_coeff("a*alpha^2*E")], 3)
    assert format_vseries(rep.act("P", one)) == (
        "beta + alpha*E*v - 1/2*a*alpha^2*E^2*v^2 + 1/3*a^2*alpha^3*E^3*v^3")


def test_h_series_keeps_single_laurent_term():
    rep = build_coinduced(SYM, 6)
    h = rep.h_series
    assert h[1] == parse_coeff("(1 - E)/2*a^-1")
    assert all(c.is_zero() or c.a_valuation() >= 0 for k, c in enumerate(h.coeffs) if k != 1)


@pytest.mark.parametrize("order", range(2, 13))
def test_relations_every_order(order):
    rep = build_coinduced(SYM, order)
    assert check_rep_relations(rep).passed
    assert character_consistency(rep).passed
    assert check_classical_limit(rep).passed


def test_commutator_examples():
    rep = build_coinduced(SYM, 4)
    one = VSeries.const(ONE, 4)
    comm = rep.act("N", rep.act("I", one)) - rep.act("I", rep.act("N", one))
    assert comm == VSeries.const(parse_coeff("a*alpha^2*E"), 4)
    comm_h = rep.act("N", rep.act("H", one)) - rep.act("H", rep.act("N", one))
    assert comm_h[0] == parse_coeff("(1 - E)/2*a^-1")
    assert comm_h[1] == parse_coeff("alpha*E^2")


def test_numeric_characters():
    zero_beta = build_coinduced(Character(Fraction(2), Fraction(0), Fraction(-1)), 5)
    assert all(c.degree_in("E") == 0 for c in zero_beta.h_series.coeffs)
    assert zero_beta.h_series[1].is_zero()
    assert check_rep_relations(zero_beta).passed
    symbolic_e = build_coinduced(Character(Fraction(1), Fraction(1, 3), Fraction(0)), 5)
    assert symbolic_e.p_series[1] == CoeffPoly.var("E")
    assert check_rep_relations(symbolic_e).passed


def test_order_too_small():
    with pytest.raises(OrderTooSmall):
        build_coinduced(SYM, 1)


@pytest.mark.parametrize("n, m", [(8, 3), (12, 7), (5, 2)])
def test_truncation_coherence(n, m):
    assert check_truncation_coherence(SYM, n, m).passed


coeffs = st.lists(st.integers(-3, 3).map(CoeffPoly.const), max_size=6)


@given(coeffs, coeffs, coeffs)
def test_vseries_ring_laws(p, q, r):
    P, Q, R = (VSeries(c, 5) for c in (p, q, r))
    assert P * Q == Q * P
    assert (P * Q) * R == P * (Q * R)
    assert P * (Q + R) == P * Q + P * R
    # the derivative loses the top order
    assert (P * Q).derivative().truncate(4) == (P.derivative() * Q + P * Q.derivative()).truncate(4)


@given(coeffs)
def test_inverse_and_log(p):
    s = VSeries([ZERO] + p, 6)
    one = VSeries.const(ONE, 6)
    assert (one + s) * s.inv1p() == one
    # d/dv ln(1 + s) = s' / (1 + s), through v^5
    lhs = s.log1p().derivative().truncate(5)
    rhs = (s.derivative() * s.inv1p()).truncate(5)
    assert lhs == rhs


def test_equivariance_examples(fq, uq_bare):
    zero_chi = Character(Fraction(0), Fraction(0), Fraction(0))
    K = [uq_bare.gen(g) for g in "IPH"]
    probes = [uq_bare.monomial(m) for m in monomials_up_to(4, 2)]
    assert equivariance_check([(fq.one(), [ONE])], K, character_action(zero_chi), probes, 4).passed
    assert equivariance_check([(fq.one(), [ONE])], K, character_action(zero_chi), []).passed
    chi = Character(Fraction(3), Fraction(0), Fraction(0))
    rep = equivariance_check([(parse("mu", fq), [ONE])], [uq_bare.gen("I")], character_action(chi),
                             [uq_bare.one()])
    assert not rep.passed


def test_equivariance_dimension_mismatch(fq, uq_bare):
    with pytest.raises(ValueError):
        equivariance_check([(fq.one(), [ONE, ONE])], [uq_bare.gen("I")], character_action(SYM), [uq_bare.one()])
