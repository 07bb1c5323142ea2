from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from qinduce.coeff import CoeffPoly
from qinduce.duality import (
    GradingError,
    PairingContext,
    act_dual,
    check_module_laws,
    check_product_agreement,
    check_uq_relations,
    exp_P,
    monomials_of_weight,
    pair,
    product_via_pairing,
    reconcile_mk,
    reconciliation_verdict,
    verify_pairing_axioms,
)
from qinduce.galilei import fq_presentation, uq_algebra, uq_presentation
from qinduce.hopfcore import antipode, coproduct, counit
from qinduce.ncpoly import TensorElement, monomials_up_to, normalize
from qinduce.parser import parse


@pytest.fixture(scope="module")
def ctx(fq, uq):
    return _shared_ctx()


def P2(uq, a, b):
    return TensorElement.pure(a, b)


def test_pair_examples(fq, uq):
    assert pair(parse("I*P", uq), parse("mu*x", fq)) == CoeffPoly.const(1)
    assert pair(uq.one(), fq.one()) == CoeffPoly.const(1)
    assert pair(parse("N^2", uq), parse("v^2", fq)) == CoeffPoly.const(2)
    assert pair(parse("I", uq), fq.one()).is_zero()
    assert pair(parse("a*N", uq), parse("3*v + x", fq)) == CoeffPoly.a_power(1, 3)


def test_weight_enumeration_is_complete():
    for w in range(7):
        want = sorted(m for m in monomials_up_to(4, w) if 3 * m[0] + 2 * m[1] + m[2] + m[3] == w)
        assert sorted(monomials_of_weight(w)) == want


def test_inhomogeneous_rules_abort(fq):
    bad = fq.replace(coproduct={"x": TensorElement.pure(fq.gen("x"), fq.one())
                                + TensorElement.pure(fq.one(), fq.gen("x"))
                                + TensorElement.pure(fq.gen("mu"), fq.gen("t"))})
    with pytest.raises(GradingError):
        PairingContext(bad, uq_algebra(4))


def test_derived_primitive_and_exponential_coproducts(uq):
    I, P, H, N = (uq.gen(g) for g in "IPHN")
    one = uq.one()
    assert coproduct(P) == P2(uq, P, one) + P2(uq, one, P)
    assert coproduct(H) == P2(uq, H, one) + P2(uq, one, H)
    assert coproduct(I) == P2(uq, I, one) + P2(uq, exp_P(uq, 2), I)
    assert coproduct(N) == P2(uq, N, exp_P(uq, -2)) + P2(uq, one, N)
    for g in (I, P, H, N):
        assert counit(g).is_zero()
    assert antipode(P) == -P and antipode(H) == -H
    assert antipode(I) == -(exp_P(uq, -2) * I)
    assert antipode(N) == -(N * exp_P(uq, 2))


def test_delta_N_mod_a2():
    uq1 = uq_presentation(1)
    N, P, one = uq1.gen("N"), uq1.gen("P"), uq1.one()
    want = TensorElement.pure(N, one - P.scale(CoeffPoly.a_power(1, 2))) + TensorElement.pure(one, N)
    assert coproduct(N) == want


def test_pairing_oracle_for_delta_N(fq, uq):
    # <Delta N, v (x) x^n> = <N, v x^n> = (-2a)^n
    DN = coproduct(uq.gen("N"))
    for n in range(5):
        coeff = DN.coefficient(((0, 0, 0, 1), (0, n, 0, 0))) * factorial(n)
        assert coeff == pair(uq.gen("N"), parse(f"v*x^{n}", fq))
        assert coeff == CoeffPoly.a_power(n, (-2) ** n)


def test_product_via_pairing_examples():
    fq, uq1 = fq_presentation(), uq_presentation(1)
    ctx1 = PairingContext(fq, uq1)
    got = product_via_pairing(uq1.gen("N"), uq1.gen("P"), ctx1, 1)
    assert got == parse("P*N + I - 2*a*I*P", uq1)
    assert product_via_pairing(uq1.one(), uq1.gen("H"), ctx1, 1) == uq1.gen("H")
    assert product_via_pairing(uq1.gen("N"), uq1.gen("N"), ctx1, 1) == parse("N^2", uq1)


def test_product_agreement_on_generator_pairs(ctx, uq):
    gens = [uq.gen(g) for g in uq.generators]
    assert check_product_agreement(ctx, 4, [(h, k) for h in gens for k in gens]).passed


_CTX = []


def _shared_ctx():
    if not _CTX:
        _CTX.append(PairingContext(fq_presentation(), uq_presentation(4)))
    return _CTX[0]


@settings(max_examples=50)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3), st.lists(st.integers(0, 3), max_size=3))
def test_product_agreement_random(u, w):
    uq = uq_presentation(4)
    ctx = _shared_ctx()
    if len(u) + len(w) > 3:
        w = w[: 3 - len(u)]
    h, k = normalize([(1, tuple(u))], uq), normalize([(1, tuple(w))], uq)
    assert check_product_agreement(ctx, 4, [(h, k)]).passed


def test_uq_relations(ctx):
    rep = check_uq_relations(ctx, 4)
    assert rep.passed and len(rep.checks) == 6


def test_pairing_axioms(ctx):
    assert verify_pairing_axioms(ctx, 2, 4).passed


def test_dropped_factorial_is_caught(ctx):
    def norm(m):
        return factorial(m[0]) * factorial(m[1]) * factorial(m[2])

    rep = verify_pairing_axioms(ctx.with_norm(norm), 2, 4)
    fail = [c for c in rep.failures if c.subject == "h=N, k=N, f=v^2"]
    assert fail and fail[0].identity == "<hk, f> = <h(x)k, Delta f>"


def test_act_dual_examples(fq, uq):
    mu, x = parse("mu", fq), parse("x", fq)
    assert act_dual(uq.gen("I"), mu, "left") == fq.one()
    assert act_dual(uq.gen("N"), x, "right") == parse("t", fq)
    for g in uq.generators:
        h = uq.gen(g)
        assert act_dual(h, fq.one(), "left") == fq.one().scale(counit(h))
    assert act_dual(parse("3 + a*N", uq), fq.one(), "right") == parse("3", fq)
    with pytest.raises(ValueError):
        act_dual(uq.gen("I"), mu, "middle")


def test_module_laws(ctx):
    rep = check_module_laws(ctx, 2, 4)
    assert rep.passed, rep.to_text()


def test_exp_series(uq):
    e = exp_P(uq_presentation(3), -2)
    assert e == parse("1 - 2*a*P + 2*a^2*P^2 - 4/3*a^3*P^3", uq_presentation(3))
    assert (exp_P(uq, 1) * exp_P(uq, -1)).truncate_a(4) == uq.one()


def test_reconciliation(uq):
    rep = reconcile_mk(uq)
    verdict = reconciliation_verdict(rep)
    dm = "Delta M = M(x)exp(-aP) + exp(aP)(x)M"
    assert verdict["M = exp(-aP)"][dm] is False
    assert verdict["M = exp(-aP)*I"][dm] is True
    assert verdict["M = exp(-aP)*I"]["S(M) = -M"] is True
    assert verdict["K = exp(aP)*N"]["Delta K = K(x)exp(-aP) + exp(aP)(x)K"] is True
    assert verdict["K = exp(aP)*N, M = exp(-aP)*I"]["S(K) = -K - aM"] is True
    assert any("INCONSISTENT" in n for n in rep.notes)
