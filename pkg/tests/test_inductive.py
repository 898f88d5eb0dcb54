import random
from fractions import Fraction

import pytest

from maclane.basedvr import BaseDVR
from maclane.errors import InputError, PreconditionError, UnsupportedOperationError
from maclane.finitefield import PrimeField, factor
from maclane.inductive import (Comparison, InductiveValuation, equiv_divides_witness,
                               first_stage, preceq, same_up_to_scalar)
from maclane.poly import QPoly
from maclane.propcheck import GenConfig, random_rational_poly, random_valuation
from maclane.scalar import INF, sqrt_value

from oracles import definitional_value

x = QPoly.x()
B2 = BaseDVR(2)
PHI = x ** 2 + 2 * x + 4


def v1(mu, p=2):
    return first_stage(BaseDVR(p), mu)


def test_first_stage_examples():
    V = v1(1)
    assert [V.value(f) for f in (x, QPoly(2), x + 2)] == [B2.ev(1)] * 3
    assert v1(Fraction(1, 2)).value(x ** 2 + 2) == B2.ev(1)
    R = first_stage(BaseDVR(2, d=2), sqrt_value(2))
    assert R.value(x ** 2) == sqrt_value(2, 2)
    assert not R.is_commensurable
    with pytest.raises(PreconditionError):
        v1(-1)


def test_strict_mode_rejects_zero():
    v1(0)
    with pytest.raises(PreconditionError):
        first_stage(B2, 0, strict=True)


def test_value_examples():
    assert v1(Fraction(1, 2)).value(x ** 3 + 2 * x + 4) == B2.ev(Fraction(3, 2))
    W = v1(1).augment(PHI, 3)
    assert W.value(PHI) == B2.ev(3)
    assert W.value(PHI ** 2 + 8) == B2.ev(3)
    assert W.value(QPoly(1)) == B2.ev(0)


def test_values_match_definition_on_random_valuations():
    rng = random.Random(11)
    cfg = GenConfig(seed=11, max_stages=3, max_degree=8)
    for _ in range(60):
        V = random_valuation(rng, cfg)
        stages = [(list(s.phi.coeffs), s.mu.rational()) for s in V.stages]
        for _ in range(5):
            f = random_rational_poly(rng, rng.randint(0, 10), 30, V.p)
            assert V.value(f).rational() == definitional_value(stages, V.p, f.coeffs)


def test_constants_keep_base_values():
    rng = random.Random(3)
    cfg = GenConfig(seed=3)
    for _ in range(30):
        V = random_valuation(rng, cfg)
        for a in (Fraction(3), Fraction(V.p ** 3, 7), Fraction(5, V.p ** 2)):
            assert V.value(QPoly(a)) == V.base.value(a)


def test_residual_examples():
    V = v1(1)
    r = V.residual(PHI)
    assert r.coeffs == (1, 1, 1) and r.order == 0
    assert V.residual(QPoly(Fraction(7, 3))).coeffs == (1,)
    assert v1(1, p=5).residual(QPoly(Fraction(7, 3))).coeffs == (4,)
    W = V.augment(PHI, 3)
    rk = W.residual(PHI)
    assert rk.order == 1 and rk.degree == 0
    assert rk.full().degree == 1


def test_residual_is_multiplicative():
    rng = random.Random(5)
    cfg = GenConfig(seed=5, max_stages=3)
    from maclane.finitefield import poly_mul
    for _ in range(60):
        V = random_valuation(rng, cfg)
        f = random_rational_poly(rng, rng.randint(0, 7), 20, V.p)
        g = random_rational_poly(rng, rng.randint(0, 7), 20, V.p)
        rf, rg, rfg = V.residual(f), V.residual(g), V.residual(f * g)
        assert rfg.order == rf.order + rg.order
        assert same_up_to_scalar(V.field, poly_mul(V.field, list(rf.coeffs), list(rg.coeffs)),
                                 rfg.coeffs)


def test_residual_errors():
    with pytest.raises(InputError):
        v1(1).residual(QPoly())
    R = first_stage(BaseDVR(2, d=2), sqrt_value(2))
    with pytest.raises(UnsupportedOperationError):
        R.residual(x)
    P = v1(1).augment(PHI, INF)
    with pytest.raises(UnsupportedOperationError):
        P.residual(x)


def test_equiv_divisibility_examples():
    V = v1(1)
    assert V.is_equiv_divisible(PHI, PHI)
    assert V.is_equiv_divisible(x ** 2, x)
    assert not V.is_equiv_divisible(x + 2, x)
    with pytest.raises(InputError):
        V.is_equiv_divisible(QPoly(), x)


@pytest.mark.parametrize("f,g", [
    (x ** 2, x), (x + 2, x), (x ** 2 + 2 * x, x + 2), (x ** 2 + 4, x + 2),
    (x ** 3 + 2, x + 2), (PHI, x), (2 * x ** 2 + 4, x ** 2), (x ** 2 + 6 * x + 8, x + 4),
])
def test_equiv_divisibility_agrees_with_witness_search(f, g):
    # residual divisibility versus a direct search for c with v(f - g c) > v(f)
    V = v1(1)
    found = equiv_divides_witness(V, f, g, exponents=range(-2, 4))
    assert V.is_equiv_divisible(f, g) == (found is not None)


def test_is_key_examples():
    V = v1(1)
    assert V.is_key(PHI)
    assert not V.is_key(x ** 2 + 2)
    assert not V.is_key(x)
    with pytest.raises(PreconditionError):
        V.is_key(2 * x)


def test_key_lift_examples():
    V = v1(1)
    phi = V.key_lift([1, 1, 1])
    assert same_up_to_scalar(V.field, V.residual(phi).coeffs, [1, 1, 1]) and V.is_key(phi)
    assert phi == PHI
    V3 = v1(1, p=3)
    phi3 = V3.key_lift([1, 1])
    assert phi3.degree == 1 and same_up_to_scalar(V3.field, V3.residual(phi3).coeffs, [1, 1])
    Vh = v1(Fraction(1, 2))
    phih = Vh.key_lift([1, 1])
    assert phih.degree == 2 and same_up_to_scalar(Vh.field, Vh.residual(phih).coeffs, [1, 1])
    with pytest.raises(PreconditionError):
        V.key_lift([1, 0, 1])
    with pytest.raises(PreconditionError):
        V.key_lift([0, 1])


def test_key_lift_round_trip_random():
    rng = random.Random(8)
    cfg = GenConfig(seed=8, max_stages=3, max_degree=9)
    checked = 0
    for _ in range(80):
        V = random_valuation(rng, cfg)
        F = V.field
        for r in (1, 2, 3):
            if F.size ** r > 5000:
                continue
            psi = next((f for f, m in factor(F, [F.random(rng) for _ in range(r)] + [F.one])
                        if len(f) == r + 1 and f[0] != F.zero), None)
            if psi is None:
                continue
            phi = V.key_lift(psi)
            assert phi.degree == V.e[V.k] * r * V.last_key.degree
            assert same_up_to_scalar(F, V.residual(phi).coeffs, psi) and V.is_key(phi)
            checked += 1
    assert checked > 50


def test_augment_examples():
    V = v1(1)
    W = V.augment(PHI, 3)
    assert W.k == 2 and W.value(PHI) == B2.ev(3)
    with pytest.raises(PreconditionError):
        V.augment(PHI, 2)
    with pytest.raises(PreconditionError):
        V.augment(x ** 2 + 2, 5)
    P = V.augment(PHI, INF)
    assert P.is_pseudo
    h = x ** 3 - 5 * x + Fraction(1, 3)
    assert P.value(PHI * h) is INF and P.value(h) is not INF


def test_equal_degree_key_replaces_last_stage():
    V = first_stage(BaseDVR(5), 0)
    W = V.augment(x - 2, 1)
    assert W.k == 1 and W.last_key == x - 2


def test_pseudo_valuation_support():
    rng = random.Random(4)
    cfg = GenConfig(seed=4, max_stages=2)
    for _ in range(20):
        V = random_valuation(rng, cfg)
        phi = V.key_lift([V.field.one, V.field.one])
        P = V.augment(phi, INF)
        for j in (1, 2):
            u = random_rational_poly(rng, rng.randint(0, 4), 9, V.p)
            assert P.value(phi ** j * u) is INF
        u = random_rational_poly(rng, phi.degree - 1, 9, V.p)
        assert P.value(u) is not INF


def test_preceq_examples():
    a, b = v1(Fraction(1, 2)), v1(1)
    assert preceq(a, b) is Comparison.PROVEN
    assert preceq(a, a) is Comparison.PROVEN
    assert preceq(b, a) is Comparison.UNKNOWN
    with pytest.raises(PreconditionError):
        preceq(a, v1(1, p=3))


def test_value_group_data_examples():
    assert v1(Fraction(1, 2)).value_group_data()[0] == 2
    assert v1(1).value_group_data()[0] == 1
    assert v1(1).augment(PHI, Fraction(7, 3)).value_group_data()[0] == 3


def test_construction_rejects_bad_stage_lists():
    with pytest.raises(PreconditionError):
        InductiveValuation(B2, [(x, 1), (x ** 2 + 2, 5)])
    with pytest.raises(PreconditionError):
        InductiveValuation(B2, [(x, 1), (PHI, 2)])
    with pytest.raises(PreconditionError):
        InductiveValuation(B2, [(x ** 2, 1)])
    with pytest.raises(InputError):
        InductiveValuation(B2, [])
    with pytest.raises(PreconditionError):
        InductiveValuation(BaseDVR(2, 2), [(x, sqrt_value(2)), (PHI, 9)])
