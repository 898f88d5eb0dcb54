"""MacLane inductive valuations on Q[X] over the p-adic base.

A valuation is a list of stages ``(phi_1, mu_1), ..., (phi_k, mu_k)``.
Stage 1 is ``v_1(sum a_i (X - c)^i) = min v(a_i) + i*mu_1``; stage ``i``
expands in ``phi_i`` and takes ``min v_{i-1}(a_j) + j*mu_i``.

Residual polynomials
--------------------
For a commensurable stage ``i`` write ``e_i`` for the index of the value group
``Gamma_{i-1}`` in ``Gamma_i`` and ``kappa_i`` for the residue field of the
stage (``kappa_1 = GF(p)``, ``kappa_{i+1} = kappa_i[y]/(psi_i)`` where
``psi_i`` is the residual of ``phi_{i+1}``).  Every ``gamma`` in ``Gamma_i``
has a canonical monomial ``pi^b0 phi_1^b1 ... phi_i^bi`` with
``0 <= b_j < e_j``.  A polynomial of value ``gamma`` is divided by that
monomial and read in ``kappa_i[Y]``, where ``Y`` is the class of
``phi_i^e_i`` over the canonical monomial of ``e_i mu_i``.  Powers of ``Y``
are split off: :class:`ResiduePoly` keeps the ``Y``-free part together with
the ``phi_i``-adic order of the leading form, which makes the residual
multiplicative up to a nonzero scalar.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product

from .basedvr import BaseDVR
from .errors import InputError, PreconditionError, UnsupportedOperationError
from .finitefield import (FFPoly, FieldTower, factor, is_irreducible, poly_divmod,
                          poly_monic, poly_mul, poly_trim)
from .poly import QPoly, phi_expand, phi_unexpand, to_text
from .scalar import INF, ExtValue


class Comparison(str, Enum):
    PROVEN = "Proven"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Stage:
    phi: QPoly
    mu: ExtValue


@dataclass(frozen=True)
class ResiduePoly:
    """Residual of a polynomial under a commensurable valuation.

    ``coeffs`` is the ``Y``-free part over ``field`` (tower level ``level``);
    ``order`` is the ``phi_k``-adic order of the leading form and ``value``
    the valuation of the input.
    """

    level: int
    field: object
    coeffs: tuple
    order: int
    value: ExtValue

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def poly(self):
        return FFPoly(self.field, self.coeffs)

    def full(self):
        """``Y^order`` times the ``Y``-free part."""
        return FFPoly(self.field, [self.field.zero] * self.order + list(self.coeffs))

    def monic(self):
        return tuple(poly_monic(self.field, list(self.coeffs)))


def same_up_to_scalar(F, f, g):
    f = poly_trim(F, list(f))
    g = poly_trim(F, list(g))
    return bool(f) and bool(g) and poly_monic(F, f) == poly_monic(F, g)


def _as_poly(f):
    if isinstance(f, QPoly):
        return f
    return QPoly(f)


class InductiveValuation:
    """A k-th stage inductive valuation, possibly with an irrational or
    infinite last value.  Immutable; all derived data is built at
    construction."""

    def __init__(self, base, stages, strict=False):
        if not isinstance(base, BaseDVR):
            raise InputError("base must be a BaseDVR", code="BAD_BASE", field="base")
        stages = [s if isinstance(s, Stage) else
                  Stage(_as_poly(s[0]), ExtValue.coerce(s[1], base.d)) for s in stages]
        if not stages:
            raise InputError("an inductive valuation needs at least one stage",
                             code="NO_STAGES", field="stages")
        self.base = base
        self.p = base.p
        self.strict = strict
        self.stages = tuple(stages)
        self.k = len(stages)
        for s in stages:
            if not s.mu.is_infinite and s.mu.d != base.d:
                raise PreconditionError("stage value in a different quadratic context",
                                        code="CONTEXT_MISMATCH", field="stages")
        self.phis = [None] + [s.phi for s in stages]
        self.mus = [None] + [s.mu for s in stages]
        self.e = [1]
        self.E = [1]
        self.psis = [None]
        self._canon = {}
        tower = FieldTower(base.p)
        self._fields = [None, tower.top]
        self._check_first_stage()
        for i in range(1, self.k + 1):
            mu = self.mus[i]
            if i < self.k and not mu.is_rational:
                raise PreconditionError(
                    f"stage {i} value must be rational (only the last may be irrational"
                    " or infinite)", code="IRRATIONAL_INNER", field=f"stages[{i - 1}].mu")
            if mu.is_rational:
                den = (mu.rational() * self.E[i - 1]).denominator
                self.e.append(den)
                self.E.append(self.E[i - 1] * den)
            if i == 1:
                continue
            phi = self.phis[i]
            where = f"stages[{i - 1}]"
            if not phi.is_monic():
                raise PreconditionError("key must be monic", code="NOT_MONIC", field=where + ".phi")
            if phi.degree <= self.phis[i - 1].degree:
                raise PreconditionError("key degrees must strictly increase",
                                        code="DEGREE_NOT_INCREASING", field=where + ".phi")
            psi = self._key_residual(i - 1, phi)
            if psi is None:
                raise PreconditionError(f"{to_text(phi)} is not a key polynomial over "
                                        f"stage {i - 1}", code="NOT_KEY", field=where + ".phi")
            prev = self._value(phi, i - 1)
            if not mu > prev:
                raise PreconditionError(f"stage {i} value must exceed {prev}",
                                        code="MU_NOT_GREATER", field=where + ".mu")
            self.psis.append(tuple(psi))
            tower = tower.extend(psi)
            self._fields.append(tower.top)
        self.tower = tower

    def _check_first_stage(self):
        phi, mu = self.phis[1], self.mus[1]
        if phi.degree != 1 or not phi.is_monic():
            raise PreconditionError("first key must be monic of degree 1",
                                    code="BAD_FIRST_KEY", field="stages[0].phi")
        c = -phi[0]
        if c and self.base.order(c) < 0:
            raise PreconditionError("first key must have an integral root",
                                    code="NOT_INTEGRAL", field="stages[0].phi")
        if mu < 0 or (self.strict and mu == 0):
            raise PreconditionError("first stage value must be "
                                    + ("> 0" if self.strict else ">= 0"),
                                    code="MU_NEGATIVE", field="stages[0].mu")

    # -- classification ------------------------------------------------------
    @property
    def is_pseudo(self):
        return self.mus[self.k].is_infinite

    @property
    def is_commensurable(self):
        return self.mus[self.k].is_rational

    def _require_commensurable(self, what):
        if not self.is_commensurable:
            kind = "pseudo" if self.is_pseudo else "incommensurable"
            raise UnsupportedOperationError(f"{what} needs a commensurable valuation; "
                                            f"this one is {kind}", code="UNSUPPORTED")

    @property
    def last_key(self):
        return self.phis[self.k]

    @property
    def field(self):
        """Residue field ``kappa_k`` of the last stage."""
        return self._fields[self.k]

    def __eq__(self, other):
        return (isinstance(other, InductiveValuation) and self.base == other.base
                and self.stages == other.stages)

    def __hash__(self):
        return hash((self.base, self.stages))

    def __repr__(self):
        body = ", ".join(f"({to_text(s.phi)}, {s.mu})" for s in self.stages)
        return f"InductiveValuation(p={self.p}, [{body}])"

    def truncate(self, k):
        """The valuation given by the first ``k`` stages."""
        return InductiveValuation(self.base, self.stages[:k], strict=self.strict)

    # -- values --------------------------------------------------------------
    def _value(self, f, i):
        if f.is_zero():
            return INF
        while i > 0 and f.degree < self.phis[i].degree:
            i -= 1
        if i == 0:
            return self.base.value(f[0])
        mu = self.mus[i]
        best = None
        for j, a in enumerate(phi_expand(f, self.phis[i])):
            if a.is_zero():
                continue
            v = self._value(a, i - 1)
            if j:
                v = v + mu.scale(j)
            if best is None or v < best:
                best = v
        return best

    def value(self, f):
        return self._value(_as_poly(f), self.k)

    def trace(self, f):
        """Per-stage expansion digits and term values used by :meth:`value`."""
        f = _as_poly(f)
        return self._trace(f, self.k)

    def _trace(self, f, i):
        if f.is_zero():
            return {"value": "inf"}
        if i == 0:
            return {"stage": 0, "value": self.base.value(f[0]).to_json()}
        digits = phi_expand(f, self.phis[i])
        terms = []
        for j, a in enumerate(digits):
            if a.is_zero():
                continue
            v = self._value(a, i - 1)
            tv = v + self.mus[i].scale(j) if j else v
            terms.append({"j": j, "digit": to_text(a), "digit_value": v.to_json(),
                          "term_value": tv.to_json()})
        return {"stage": i, "key": to_text(self.phis[i]), "terms": terms,
                "value": self._value(f, i).to_json()}

    # -- monomial bookkeeping -------------------------------------------------
    def _canonical(self, i, gamma):
        """Exponents ``(b_0, ..., b_i)`` of the canonical monomial of value ``gamma``."""
        key = (i, gamma)
        hit = self._canon.get(key)
        if hit is not None:
            return hit
        b = [0] * (i + 1)
        g = Fraction(gamma)
        for j in range(i, 0, -1):
            mu = self.mus[j].rational()
            for bb in range(self.e[j]):
                if ((g - bb * mu) * self.E[j - 1]).denominator == 1:
                    break
            else:
                raise PreconditionError(f"{gamma} is not in the value group of stage {i}",
                                        code="NOT_IN_VALUE_GROUP")
            b[j] = bb
            g -= bb * mu
        if g.denominator != 1:
            raise PreconditionError(f"{gamma} is not in the value group of stage {i}",
                                    code="NOT_IN_VALUE_GROUP")
        b[0] = int(g)
        b = tuple(b)
        self._canon[key] = b
        return b

    def _unit_monomial(self, i, gamma_w, t, gamma_base):
        # canonical(w) + t * canonical(e_i mu_i) - canonical(base), all at stage i-1
        a = self._canonical(i - 1, gamma_w)
        n = self._canonical(i - 1, self.e[i] * self.mus[i].rational())
        c = self._canonical(i - 1, gamma_base)
        return tuple(x + t * y - z for x, y, z in zip(a, n, c))

    def _red_unit(self, i, b):
        """Residue in ``kappa_i`` of a value-0 monomial in ``pi, phi_1..phi_{i-1}``."""
        F = self._fields[i]
        if i == 1:
            if b[0] != 0:
                raise AssertionError("unit monomial with nonzero p-exponent")
            return F.one
        e_prev = self.e[i - 1]
        last = b[i - 1]
        if last % e_prev:
            raise AssertionError("unit monomial exponent not divisible by e")
        t = last // e_prev
        n = self._canonical(i - 2, e_prev * self.mus[i - 1].rational())
        rest = tuple(x + t * y for x, y in zip(b[:i - 1], n))
        inner = F.embed(self._red_unit(i - 1, rest))
        if t:
            inner = F.mul(inner, F.pow(F.gen(), t))
        return inner

    def _prev_residue(self, i, a):
        """``(value, residue in kappa_i)`` of a digit ``a`` with ``deg a < deg phi_i``."""
        if i == 1:
            c = a[0]
            w = self.base.order(c)
            return Fraction(w), self.base.reduce(c / Fraction(self.p) ** w)
        gamma, _, coeffs = self._reduce(i - 1, a)
        return gamma, self._fields[i]._elt(coeffs)

    def _reduce(self, i, f):
        """``(gamma, s, coeffs)``: value, canonical phi_i-exponent and the full
        residual coefficient list (index = power of ``Y``) of ``f`` at stage ``i``."""
        F = self._fields[i]
        mu = self.mus[i].rational()
        e = self.e[i]
        digits = phi_expand(f, self.phis[i])
        terms = []
        for j, a in enumerate(digits):
            if a.is_zero():
                continue
            w = self._value(a, i - 1).rational()
            terms.append((w + j * mu, j, a, w))
        gamma = min(t[0] for t in terms)
        s = self._canonical(i, gamma)[i]
        base_gamma = gamma - s * mu
        coeffs = {}
        for total, j, a, w in terms:
            if total != gamma:
                continue
            t = (j - s) // e
            _, r = self._prev_residue(i, a)
            u = self._red_unit(i, self._unit_monomial(i, w, t, base_gamma))
            coeffs[t] = F.mul(r, u)
        top = max(coeffs)
        return gamma, s, [coeffs.get(t, F.zero) for t in range(top + 1)]

    def _orders(self, i, gamma, s, coeffs):
        tmin = next(t for t, c in enumerate(coeffs) if c != self._fields[i].zero)
        return tmin, s + tmin * self.e[i]

    def residual(self, f):
        """The :class:`ResiduePoly` of a nonzero ``f``."""
        self._require_commensurable("residual")
        f = _as_poly(f)
        if f.is_zero():
            raise InputError("residual of the zero polynomial", code="ZERO_POLY")
        gamma, s, coeffs = self._reduce(self.k, f)
        tmin, order = self._orders(self.k, gamma, s, coeffs)
        return ResiduePoly(self.k - 1, self.field, tuple(coeffs[tmin:]), order,
                           self.base.ev(gamma))

    # -- keys ----------------------------------------------------------------
    def _key_residual(self, i, phi):
        """Monic residual of ``phi`` if it is a key over stage ``i`` with
        residual different from ``Y``; otherwise None."""
        if not phi.is_monic() or phi.degree < 1:
            return None
        F = self._fields[i]
        gamma, s, coeffs = self._reduce(i, phi)
        if s != 0 or coeffs[0] == F.zero:
            return None
        n, rem = divmod(phi.degree, self.e[i] * self.phis[i].degree)
        if rem or len(coeffs) - 1 != n:
            return None
        psi = poly_monic(F, coeffs)
        if not is_irreducible(F, psi):
            return None
        return psi

    def is_key(self, phi):
        """True when ``phi`` is a key polynomial admissible as the next stage."""
        self._require_commensurable("is_key")
        phi = _as_poly(phi)
        if not phi.is_monic():
            raise PreconditionError("key candidates must be monic", code="NOT_MONIC")
        return self._key_residual(self.k, phi) is not None

    def _lift(self, i, gamma, coeffs):
        """A polynomial of value ``gamma`` at stage ``i`` whose full residual is
        ``coeffs`` (elements of ``kappa_i``, index = power of ``Y``)."""
        F = self._fields[i]
        mu = self.mus[i].rational()
        e = self.e[i]
        s = self._canonical(i, gamma)[i]
        base_gamma = gamma - s * mu
        phi = self.phis[i]
        digits = {}
        for t, r in enumerate(coeffs):
            if r == F.zero:
                continue
            j = s + t * e
            w = gamma - j * mu
            u = self._red_unit(i, self._unit_monomial(i, w, t, base_gamma))
            tau = F.mul(r, F.inv(u))
            if i == 1:
                a = QPoly(Fraction(self.p) ** int(w) * tau)
            else:
                a = self._lift(i - 1, w, list(tau))
            digits[j] = a
        if not digits:
            return QPoly()
        if phi.degree == 1:
            h = QPoly([digits[j][0] if j in digits else 0 for j in range(max(digits) + 1)])
            return h.shift(phi[0]) if phi[0] else h
        return phi_unexpand([digits.get(j, QPoly()) for j in range(max(digits) + 1)], phi)

    def lift(self, gamma, coeffs):
        """Polynomial of value ``gamma`` with full residual ``coeffs``."""
        self._require_commensurable("lift")
        return self._lift(self.k, Fraction(gamma), list(coeffs))

    def key_lift(self, psi):
        """A key polynomial whose residual is the monic irreducible ``psi``."""
        self._require_commensurable("key_lift")
        F = self.field
        if isinstance(psi, FFPoly):
            psi = psi.coeffs
        psi = poly_trim(F, list(psi))
        if len(psi) < 2 or psi[-1] != F.one:
            raise PreconditionError("residual must be monic of degree >= 1", code="NOT_MONIC")
        if psi == [F.zero, F.one]:
            raise PreconditionError("Y is the residual of the current key itself",
                                    code="DISTINGUISHED_MONOMIAL")
        if not is_irreducible(F, psi):
            raise PreconditionError("residual polynomial is reducible", code="REDUCIBLE")
        f = len(psi) - 1
        k = self.k
        gamma = f * self.e[k] * self.mus[k].rational()
        lam = self._red_unit(k, self._unit_monomial(k, 0, f, gamma))
        phi = self._lift(k, gamma, [F.mul(lam, c) for c in psi])
        if not phi.is_monic():
            raise AssertionError("lifted key is not monic")
        return phi

    # -- augmentation ----------------------------------------------------------
    def augment(self, phi, mu):
        """``(V, phi, mu)``; a key of the same degree as the last key replaces it."""
        self._require_commensurable("augment")
        phi = _as_poly(phi)
        mu = ExtValue.coerce(mu, self.base.d)
        if not self.is_key(phi):
            raise PreconditionError(f"{to_text(phi)} is not a key polynomial", code="NOT_KEY")
        current = self.value(phi)
        if not mu > current:
            raise PreconditionError(f"new value {mu} must exceed {current}",
                                    code="MU_NOT_GREATER")
        if phi.degree == self.last_key.degree:
            stages = self.stages[:-1] + (Stage(phi, mu),)
        else:
            stages = self.stages + (Stage(phi, mu),)
        return InductiveValuation(self.base, stages, strict=self.strict)

    def replace_last_value(self, mu):
        """Same last key with a larger value."""
        mu = ExtValue.coerce(mu, self.base.d)
        if not mu > self.mus[self.k]:
            raise PreconditionError("replacement value must increase", code="MU_NOT_GREATER")
        stages = self.stages[:-1] + (Stage(self.last_key, mu),)
        return InductiveValuation(self.base, stages, strict=self.strict)

    # -- divisibility ----------------------------------------------------------
    def is_equiv_divisible(self, f, g):
        """Whether ``f`` is equivalence-divisible by ``g``: ``v(f - g c) > v(f)``
        for some polynomial ``c``."""
        self._require_commensurable("is_equiv_divisible")
        f, g = _as_poly(f), _as_poly(g)
        if f.is_zero() or g.is_zero():
            raise InputError("equivalence divisibility of zero", code="ZERO_POLY")
        rf, rg = self.residual(f), self.residual(g)
        if rg.order > rf.order:
            return False
        F = self.field
        return not poly_divmod(F, list(rf.coeffs), list(rg.coeffs))[1]

    def value_group_data(self):
        self._require_commensurable("value_group_data")
        gens = [Fraction(1)] + [self.mus[i].rational() for i in range(1, self.k + 1)]
        return self.E[self.k], gens

    def residue_degree(self):
        """Degree of ``kappa_k`` over ``GF(p)``."""
        return self.field.degree

    # -- JSON ------------------------------------------------------------------
    def to_json(self):
        return {"base": self.base.to_json(),
                "stages": [{"phi": [str(c) for c in s.phi.coeffs], "mu": s.mu.to_json()}
                           for s in self.stages]}


def first_stage(base, mu, center=0, strict=False):
    """``v_1(X - center) = mu``."""
    mu = ExtValue.coerce(mu, base.d)
    if mu.is_infinite:
        raise PreconditionError("first stage value must be finite", code="MU_INFINITE")
    phi = QPoly([-Fraction(center), 1])
    return InductiveValuation(base, [Stage(phi, mu)], strict=strict)


def preceq(V, W):
    """Sufficient test for ``V <= W``: values on every key of ``V`` do not exceed
    those under ``W``."""
    if V.base != W.base:
        raise PreconditionError("valuations over different bases", code="BASE_MISMATCH")
    for i in range(1, V.k + 1):
        if not V.mus[i] <= W.value(V.phis[i]):
            return Comparison.UNKNOWN
    return Comparison.PROVEN


def equivalent(V, W):
    """Equality of valuations, decided by comparing values on all keys."""
    return preceq(V, W) is Comparison.PROVEN and preceq(W, V) is Comparison.PROVEN


def equiv_divides_witness(V, f, g, max_degree=None, exponents=range(-3, 4)):
    """Brute-force search for ``c`` with ``v(f - g c) > v(f)``.

    Candidates have coefficients ``u * p^k`` with ``0 <= u < p`` and ``k`` in
    ``exponents``.  Only practical for tiny degrees; returns ``c`` or None.
    """
    f, g = _as_poly(f), _as_poly(g)
    vf = V.value(f)
    if max_degree is None:
        max_degree = max(f.degree - g.degree, 0)
    choices = [Fraction(0)] + [Fraction(u) * Fraction(V.p) ** k
                               for u in range(1, V.p) for k in exponents]
    for combo in product(choices, repeat=max_degree + 1):
        c = QPoly(list(combo))
        if c.is_zero():
            continue
        if V.value(f - g * c) > vf:
            return c
    return None


def residual_factors(V, f, seed=0):
    """Irreducible factors of the ``Y``-free residual of ``f``."""
    r = V.residual(f)
    if len(r.coeffs) == 1:
        return []
    return factor(V.field, list(r.coeffs), seed)


__all__ = ["Comparison", "InductiveValuation", "ResiduePoly", "Stage", "equiv_divides_witness",
           "equivalent", "first_stage", "preceq", "residual_factors",
           "same_up_to_scalar"]
