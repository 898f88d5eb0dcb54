"""Dense univariate polynomials over the rationals.

A polynomial ``c_0 + c_1 X + ... + c_n X^n`` is stored as the tuple
``(c_0, ..., c_n)`` of Fractions with ``c_n != 0``; the zero polynomial is
the empty tuple.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import InputError, PreconditionError
from .scalar import as_fraction


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _int_form(coeffs):
    """``(ints, D)`` with ``coeffs[i] == ints[i] / D``."""
    D = 1
    for c in coeffs:
        if c.denominator != 1:
            D = lcm(D, c.denominator)
    if D == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (D // c.denominator) for c in coeffs], D


def _from_ints(ints, D):
    if D == 1:
        return [Fraction(n) for n in ints]
    return [Fraction(n, D) for n in ints]


def _int_divmod(r, g):
    """Division of an int list by a monic int list; ``r`` is consumed."""
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], r
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if not c:
            continue
        q[k - dg] = c
        base = k - dg
        for j in range(dg):
            if g[j]:
                r[base + j] -= c * g[j]
        r[k] = 0
    return q, r[:dg]


class QPoly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        self.coeffs = _trim([as_fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        p = cls.__new__(cls)
        p.coeffs = _trim(coeffs)
        p._hash = None
        return p

    @classmethod
    def x(cls):
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, n, c=1):
        return cls._raw((Fraction(0),) * n + (as_fraction(c),))

    # -- basic queries -------------------------------------------------------
    @property
    def degree(self):
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations -----------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly._raw((Fraction(other),))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly._raw(())
        if len(b) == 1:
            c = b[0]
            return QPoly._raw([x * c for x in a])
        if len(a) == 1:
            c = a[0]
            return QPoly._raw([x * c for x in b])
        ia, da = _int_form(a)
        ib, db = _int_form(b)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        return QPoly._raw(_from_ints(out, da * db))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = QPoly._raw((Fraction(1),)), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise InputError("polynomial division by zero", code="DIVISION_BY_ZERO")
        g = other.coeffs
        if g[-1] == 1 and all(c.denominator == 1 for c in g):
            # monic integral divisor: exact integer long division
            ints, D = _int_form(self.coeffs)
            q, r = _int_divmod(ints, [c.numerator for c in g])
            return QPoly._raw(_from_ints(q, D)), QPoly._raw(_from_ints(r, D))
        r = list(self.coeffs)
        dg = len(g) - 1
        lc = g[-1]
        if len(r) - 1 < dg:
            return QPoly._raw(()), self
        q = [Fraction(0)] * (len(r) - dg)
        monic = lc == 1
        for k in range(len(r) - 1, dg - 1, -1):
            c = r[k]
            if not c:
                continue
            if not monic:
                c = c / lc
            q[k - dg] = c
            base = k - dg
            for j in range(dg):
                if g[j]:
                    r[base + j] -= c * g[j]
            r[k] = Fraction(0)
        return QPoly._raw(q), QPoly._raw(r[:dg])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return QPoly._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            raise InputError("zero polynomial has no monic associate", code="ZERO_POLY")
        lc = self.coeffs[-1]
        return QPoly._raw([c / lc for c in self.coeffs])

    def compose(self, other):
        """``self(other(X))``."""
        acc = QPoly._raw(())
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def shift(self, c):
        """``self(X + c)``."""
        c = as_fraction(c)
        ints, D = _int_form(self.coeffs)
        n, m = c.numerator, c.denominator
        if m == 1:
            # Taylor shift by repeated synthetic division
            a = list(ints)
            for i in range(len(a) - 1):
                for j in range(len(a) - 2, i - 1, -1):
                    a[j] += n * a[j + 1]
            return QPoly._raw(_from_ints(a, D))
        return self.compose(QPoly._raw((c, Fraction(1))))

    def content_normalize(self):
        """Return ``(content, primitive)`` with integer primitive part and
        positive leading coefficient, so that ``self == content * primitive``."""
        if self.is_zero():
            return Fraction(0), self
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        prim = QPoly._raw([Fraction(v // g) for v in ints])
        return Fraction(g, den), prim

    def __repr__(self):
        return f"QPoly({to_text(self)!r})"

    def __str__(self):
        return to_text(self)


def poly_gcd(f, g):
    """Monic gcd over Q (zero if both are zero)."""
    while not g.is_zero():
        f, g = g, f % g
        if not g.is_zero():
            # keep coefficient growth in check
            g = g.content_normalize()[1]
    return f.monic() if not f.is_zero() else f


def phi_expand(f, phi):
    """Digits ``[a_0, ..., a_n]`` of ``f = sum a_i phi^i`` with ``deg a_i < deg phi``."""
    if phi.degree < 1:
        raise InputError("expansion base must have degree >= 1", code="DEGREE_ZERO")
    if not phi.is_monic():
        raise PreconditionError("expansion base must be monic", code="NOT_MONIC")
    if f.is_zero():
        return [QPoly._raw(())]
    if phi.degree == 1:
        # Taylor shift is cheaper than repeated division for linear keys
        c = -phi.coeffs[0]
        g = f.shift(c) if c else f
        return [QPoly._raw((x,)) for x in g.coeffs]
    g = phi.coeffs
    if all(c.denominator == 1 for c in g):
        ints, D = _int_form(f.coeffs)
        g = [c.numerator for c in g]
        digits = []
        while ints:
            ints, r = _int_divmod(ints, g)
            digits.append(QPoly._raw(_from_ints(r, D)))
            while ints and not ints[-1]:
                ints.pop()
        return digits
    digits = []
    while not f.is_zero():
        f, r = divmod(f, phi)
        digits.append(r)
    return digits


def phi_unexpand(digits, phi):
    acc = QPoly._raw(())
    for a in reversed(digits):
        acc = acc * phi + a
    return acc


def to_text(f, var="x"):
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if i == 0:
            body = str(a)
        else:
            mon = var if i == 1 else f"{var}^{i}"
            if a == 1:
                body = mon
            elif a.denominator == 1:
                body = f"{a}{mon}"
            else:
                body = f"{a}*{mon}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
