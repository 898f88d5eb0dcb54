import random
from fractions import Fraction

import pytest

from maclane.basedvr import BaseDVR
from maclane.errors import InputError, PreconditionError
from maclane.inductive import first_stage
from maclane.poly import QPoly
from maclane.propcheck import GenConfig, extend_randomly, random_valuation
from maclane.scalar import sqrt_value
from maclane.separate import IdenticalValuationsError, pairwise_report, separate

x = QPoly.x()
B2 = BaseDVR(2)
PHI = x ** 2 + 2 * x + 4


def test_first_stage_pair():
    W1, W2 = first_stage(B2, Fraction(1, 2)), first_stage(B2, 1)
    cert = separate(W1, W2)
    assert cert.floor.k == 1 and cert.floor.mus[1] == B2.ev(Fraction(1, 2))
    assert (cert.power, cert.p_exponent) == (2, 1)
    assert cert.witness_text() == "x^2 / 2"
    assert (cert.w1_value, cert.w2_value) == (B2.ev(0), B2.ev(1))
    assert cert.verify(W1, W2) == []


def test_second_stage_pair():
    V = first_stage(B2, 1)
    W1, W2 = V.augment(PHI, 3), V.augment(PHI, 4)
    cert = separate(W1, W2)
    assert cert.floor.k == 2 and cert.floor.mus[2] == B2.ev(3)
    assert cert.w1_value == B2.ev(0) and cert.w2_value > B2.ev(0)
    assert cert.witness_text() == "(x^2 + 2x + 4) / 2^3"
    # recompute the witness values without the certificate helpers
    num = cert.numerator
    assert W1.value(num) - B2.ev(cert.p_exponent) == B2.ev(0)
    assert W2.value(num) - B2.ev(cert.p_exponent) == B2.ev(1)


def test_identical_error():
    W = first_stage(B2, 1).augment(PHI, 3)
    with pytest.raises(IdenticalValuationsError) as exc:
        separate(W, first_stage(B2, 1).augment(PHI, 3))
    assert exc.value.code == "IDENTICAL_VALUATIONS"


def test_base_mismatch_and_incommensurable():
    with pytest.raises(PreconditionError) as exc:
        separate(first_stage(B2, 1), first_stage(BaseDVR(3), 1))
    assert exc.value.code == "BASE_MISMATCH"
    B = BaseDVR(2, d=2)
    with pytest.raises(PreconditionError) as exc:
        separate(first_stage(B, sqrt_value(2)), first_stage(B, 1))
    assert exc.value.code == "NOT_COMMENSURABLE"


def test_pairwise_report():
    vals = [first_stage(B2, m) for m in (Fraction(1, 3), Fraction(1, 2), 1)]
    report = pairwise_report(vals)
    assert sorted(report) == [(0, 1), (0, 2), (1, 2)]
    for (i, j), cert in report.items():
        assert cert.verify(vals[i], vals[j]) == []
    assert pairwise_report(vals[:1]) == {}
    with pytest.raises(InputError) as exc:
        pairwise_report(vals + [first_stage(B2, 1)])
    assert exc.value.code == "DUPLICATE"


def _independent_check(cert, W1, W2):
    num = cert.numerator
    v1 = W1.value(num) - W1.base.ev(cert.p_exponent)
    v2 = W2.value(num) - W2.base.ev(cert.p_exponent)
    zero = W1.base.ev(0)
    assert cert.floor.value(num) - W1.base.ev(cert.p_exponent) == zero
    assert (v1 == zero and v2 > zero) or (v2 == zero and v1 > zero)
    assert cert.floor.k <= max(W1.k, W2.k) + 1


def test_random_pairs_and_swapped_roles():
    rng = random.Random(17)
    cfg = GenConfig(seed=17, max_stages=4, max_degree=8)
    done = 0
    while done < 60:
        p = rng.choice((2, 3, 5))
        W1 = random_valuation(rng, cfg, p=p)
        # half the time share a prefix so the disagreement sits deeper
        if rng.random() < .5 and W1.k > 1:
            W2 = random_valuation(rng, cfg, p=p) if rng.random() < .3 else \
                W1.truncate(rng.randint(1, W1.k - 1))
            if W2.k < W1.k and rng.random() < .7:
                W2 = extend_randomly(W2, rng, cfg)
        else:
            W2 = random_valuation(rng, cfg, p=p)
        try:
            cert = separate(W1, W2)
        except IdenticalValuationsError:
            continue
        _independent_check(cert, W1, W2)
        back = separate(W2, W1)
        _independent_check(back, W2, W1)
        done += 1
