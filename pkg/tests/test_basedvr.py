from fractions import Fraction

import pytest

from maclane.basedvr import BaseDVR, base_reduce, base_value
from maclane.errors import InputError, PreconditionError
from maclane.scalar import INF


def test_value_examples():
    B = BaseDVR(2)
    assert base_value(B, 8) == B.ev(3)
    assert base_value(B, Fraction(3, 2)) == B.ev(-1)
    assert base_value(B, 0) is INF


def test_reduce_examples():
    assert base_reduce(BaseDVR(2), 3) == 1
    assert base_reduce(BaseDVR(5), Fraction(7, 3)) == 4
    assert base_reduce(BaseDVR(3), 1) == 1
    with pytest.raises(PreconditionError):
        base_reduce(BaseDVR(3), 6)


def test_bad_bases():
    with pytest.raises(InputError):
        BaseDVR(9)
    with pytest.raises(InputError):
        BaseDVR(2, d=4)


def test_json_round_trip():
    B = BaseDVR(7, 3)
    assert BaseDVR.from_json(B.to_json()) == B
