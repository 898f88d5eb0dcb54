"""Exact values ``a + b*sqrt(d)`` with rational ``a, b``, plus ``+infinity``.

``d`` is a squarefree integer ``>= 1`` fixed per computation; with ``d == 1``
only rationals occur.  All sign decisions are made with integer arithmetic.
"""

from fractions import Fraction
from functools import total_ordering
from math import isqrt

from .errors import ContextMismatchError, InputError


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {x!r}", code="BAD_RATIONAL") from exc
    raise TypeError(f"cannot convert {type(x).__name__} to Fraction")


def is_squarefree(d):
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def _sign_surd(a, b, d):
    """Sign of a + b*sqrt(d) for rationals a, b."""
    if b == 0 or d == 1:
        s = a + b if d == 1 else a
        return (s > 0) - (s < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if (a > 0) == (b > 0):
        return 1 if a > 0 else -1
    # opposite signs: compare a^2 with b^2 d
    lhs, rhs = a * a, b * b * d
    if lhs == rhs:  # impossible for squarefree d > 1, kept for safety
        return 0
    if a > 0:
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1


@total_ordering
class ExtValue:
    """An element of ``Q + Q*sqrt(d)`` or ``+infinity``.

    >>> ExtValue(1, 0, 2) < ExtValue(0, 1, 2)
    True
    """

    __slots__ = ("a", "b", "d", "_inf")

    def __init__(self, a=0, b=0, d=1, _inf=False):
        self._inf = _inf
        self.d = d
        if _inf:
            self.a = self.b = None
            return
        a = as_fraction(a)
        b = as_fraction(b)
        if d == 1:
            a, b = a + b, Fraction(0)
        self.a = a
        self.b = b

    # -- constructors -------------------------------------------------------
    @classmethod
    def coerce(cls, x, d=1):
        if isinstance(x, ExtValue):
            return x
        if x == "inf" or x == float("inf"):
            return INF
        return cls(as_fraction(x), 0, d)

    # -- predicates ---------------------------------------------------------
    @property
    def is_infinite(self):
        return self._inf

    @property
    def is_rational(self):
        return not self._inf and self.b == 0

    def rational(self):
        if not self.is_rational:
            raise ValueError(f"{self} is not a finite rational value")
        return self.a

    def _ctx(self, other):
        other = ExtValue.coerce(other, self.d)
        if not (self._inf or other._inf) and self.d != other.d:
            raise ContextMismatchError(
                f"values from different quadratic contexts d={self.d} and d={other.d}")
        return other

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._ctx(other)
        if self._inf or other._inf:
            return INF
        return ExtValue(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        if self._inf:
            raise ValueError("cannot negate infinity")
        return ExtValue(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._ctx(other)
        if other._inf:
            raise ValueError("cannot subtract infinity")
        return self + (-other)

    def __rsub__(self, other):
        return ExtValue.coerce(other, self.d) - self

    def scale(self, n):
        n = as_fraction(n)
        if self._inf:
            if n <= 0:
                raise ValueError("infinity scaled by a non-positive number")
            return INF
        return ExtValue(self.a * n, self.b * n, self.d)

    def __mul__(self, n):
        if isinstance(n, ExtValue):
            return NotImplemented
        return self.scale(n)

    __rmul__ = __mul__

    # -- order --------------------------------------------------------------
    def cmp(self, other):
        other = self._ctx(other)
        if self._inf or other._inf:
            return (self._inf and 1 or 0) - (other._inf and 1 or 0)
        return _sign_surd(self.a - other.a, self.b - other.b, self.d)

    def __eq__(self, other):
        if not isinstance(other, (ExtValue, int, Fraction)) and other != "inf":
            return NotImplemented
        try:
            return self.cmp(other) == 0
        except ContextMismatchError:
            return False

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __hash__(self):
        if self._inf:
            return hash("inf")
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def floor(self):
        """Largest integer ``<= self`` (finite values only)."""
        if self._inf:
            raise ValueError("floor of infinity")
        if self.b == 0:
            return self.a.numerator // self.a.denominator
        # s*sqrt(d) = sign(s) * sqrt(s^2 d); seed from integer square roots
        q = self.b * self.b * self.d
        root = isqrt(q.numerator // q.denominator)
        guess = (self.a.numerator // self.a.denominator) + (root if self.b > 0 else -root - 1)
        m = guess - 2
        while ExtValue(m + 1, 0, self.d) <= self:
            m += 1
        while ExtValue(m, 0, self.d) > self:
            m -= 1
        return m

    def __float__(self):
        if self._inf:
            return float("inf")
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return f"ExtValue({self})"

    def __str__(self):
        if self._inf:
            return "inf"
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        return f"{self.a} + {self.b}*sqrt({self.d})"

    # -- JSON ---------------------------------------------------------------
    def to_json(self):
        if self._inf:
            return "inf"
        if self.b == 0:
            return str(self.a)
        return {"a": str(self.a), "b": str(self.b), "d": self.d}

    @classmethod
    def from_json(cls, obj, d=1):
        if obj == "inf":
            return INF
        if isinstance(obj, dict):
            try:
                dd = int(obj.get("d", d))
                a, b = obj.get("a", "0"), obj.get("b", "0")
            except (TypeError, ValueError) as exc:
                raise InputError(f"bad value object {obj!r}", code="BAD_VALUE") from exc
            if not is_squarefree(dd):
                raise InputError(f"d={dd} is not a squarefree integer >= 1", code="BAD_D")
            return cls(as_fraction(str(a)), as_fraction(str(b)), dd)
        if isinstance(obj, (int, str)):
            return cls(as_fraction(obj if isinstance(obj, int) else str(obj)), 0, d)
        raise InputError(f"bad value {obj!r}", code="BAD_VALUE")


INF = ExtValue(_inf=True)


def ev_add(x, y):
    return ExtValue.coerce(x) + y


def ev_cmp(x, y):
    return ExtValue.coerce(x).cmp(y)


def ev_scale(x, n):
    return ExtValue.coerce(x).scale(n)


def ev_min(values):
    values = list(values)
    if not values:
        raise InputError("ev_min of an empty list", code="EMPTY")
    best = ExtValue.coerce(values[0])
    for v in values[1:]:
        if v < best:
            best = ExtValue.coerce(v)
    return best


def sqrt_value(d, coeff=1):
    """``coeff * sqrt(d)`` as an ExtValue."""
    return ExtValue(0, coeff, d)
