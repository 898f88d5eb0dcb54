"""The base valued field: the rationals with the p-adic valuation."""

from fractions import Fraction

from .errors import InputError, PreconditionError
from .finitefield import PrimeField, is_prime
from .scalar import INF, ExtValue, as_fraction, is_squarefree


def _ord(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


class BaseDVR:
    """``(Q, v_p)`` with uniformizer ``p`` and residue field ``GF(p)``.

    ``d`` fixes the quadratic context of every value computed over this base.
    A function-field base would provide the same four members:
    ``value``, ``reduce``, ``uniformizer`` and ``residue_field``.
    """

    __slots__ = ("p", "d", "residue_field")

    def __init__(self, p, d=1):
        if not isinstance(p, int) or not is_prime(p):
            raise InputError(f"{p!r} is not prime", code="NON_PRIME", field="p")
        if not isinstance(d, int) or not is_squarefree(d):
            raise InputError(f"d={d!r} must be a squarefree integer >= 1", code="BAD_D", field="d")
        self.p = p
        self.d = d
        self.residue_field = PrimeField(p)

    @property
    def uniformizer(self):
        return Fraction(self.p)

    def ev(self, x):
        """A rational ``x`` as a value in this base's context."""
        return ExtValue(x, 0, self.d)

    def order(self, a):
        """Integer p-adic order of a nonzero rational."""
        a = as_fraction(a)
        if a == 0:
            raise InputError("order of zero", code="ZERO")
        return _ord(a.numerator, self.p) - _ord(a.denominator, self.p)

    def value(self, a):
        a = as_fraction(a)
        if a == 0:
            return INF
        return ExtValue(self.order(a), 0, self.d)

    def reduce(self, a):
        """Residue class in GF(p) of a rational with value 0."""
        a = as_fraction(a)
        if a == 0 or self.order(a) != 0:
            raise PreconditionError(f"{a} is not a p-adic unit", code="NOT_UNIT")
        return a.numerator * pow(a.denominator, -1, self.p) % self.p

    def __eq__(self, other):
        return isinstance(other, BaseDVR) and (self.p, self.d) == (other.p, other.d)

    def __hash__(self):
        return hash((self.p, self.d))

    def __repr__(self):
        return f"BaseDVR(p={self.p}, d={self.d})"

    def to_json(self):
        return {"p": self.p, "d": self.d}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "p" not in obj:
            raise InputError("base must be an object with key 'p'", code="BAD_BASE", field="base")
        p, d = obj["p"], obj.get("d", 1)
        if not isinstance(p, int) or not isinstance(d, int):
            raise InputError("base p and d must be integers", code="BAD_BASE", field="base")
        return cls(p, d)


def base_value(B, a):
    return B.value(a)


def base_reduce(B, a):
    return B.reduce(a)
