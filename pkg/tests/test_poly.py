from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from maclane.errors import InputError, PreconditionError
from maclane.poly import QPoly, phi_expand, phi_unexpand, poly_gcd

from oracles import X, sym_poly

x = QPoly.x()
coef = st.fractions(max_denominator=12).filter(lambda c: abs(c) < 200)
polys = st.lists(coef, max_size=9).map(QPoly)
monic = st.lists(st.integers(-9, 9), min_size=1, max_size=4).map(lambda c: QPoly(c + [1]))


def to_sym(f):
    return sym_poly(f.coeffs) if f.coeffs else sympy.Poly(0, X, domain="QQ")


def test_expand_examples():
    assert phi_expand(x ** 3, x ** 2 + 1) == [-x, x]
    phi = x ** 2 + 1
    assert phi_expand(phi, phi) == [QPoly(), QPoly(1)]
    assert phi_expand(x + 3, phi) == [x + 3]
    with pytest.raises(PreconditionError):
        phi_expand(x, 2 * x)
    with pytest.raises(InputError):
        phi_expand(x, QPoly(1))


def test_ring_examples():
    assert divmod(x ** 2 + 1, x) == (x, QPoly(1))
    assert poly_gcd(x ** 2 - 1, x - 1) == x - 1
    assert (x + 1) * (x - 1) == x ** 2 - 1
    with pytest.raises(InputError):
        divmod(x, QPoly())


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_arithmetic_matches_sympy(f, g):
    assert to_sym(f * g) == to_sym(f) * to_sym(g)
    assert to_sym(f + g) == to_sym(f) + to_sym(g)
    if not g.is_zero():
        q, r = divmod(f, g)
        sq, sr = to_sym(f).div(to_sym(g))
        assert (to_sym(q), to_sym(r)) == (sq, sr)


@settings(max_examples=200, deadline=None)
@given(polys, monic)
def test_expansion_round_trip(f, phi):
    digits = phi_expand(f, phi)
    assert phi_unexpand(digits, phi) == f
    assert all(d.degree < phi.degree for d in digits)


@given(polys, st.integers(-7, 7))
def test_shift_matches_composition(f, c):
    assert f.shift(c) == f.compose(x + c)
    assert f.shift(Fraction(c, 3)) == f.compose(x + Fraction(c, 3))


@given(polys)
def test_content_normalize(f):
    c, prim = f.content_normalize()
    assert prim * c == f
    if not f.is_zero():
        assert all(a.denominator == 1 for a in prim.coeffs) and prim.leading() > 0


@given(polys, polys)
def test_gcd_divides_both(f, g):
    d = poly_gcd(f, g)
    if d.is_zero():
        assert f.is_zero() and g.is_zero()
        return
    assert (f % d).is_zero() and (g % d).is_zero()
    assert to_sym(d) == sympy.gcd(to_sym(f), to_sym(g)).monic()
