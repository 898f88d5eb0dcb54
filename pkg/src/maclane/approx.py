"""Approximation of valuations by inductive ones.

Two entry points.  :func:`approximate` rebuilds a valuation that is only
available as a black box, one stage at a time.  :func:`extensions` runs the
same construction on every branch at once to find all extensions of the
p-adic valuation to ``Q[X]/(g)``.

Both rest on one fact.  Let ``V <= w`` agree below the degree of the last key
of ``V``.  Then ``w(f) > V(f)`` exactly when the residual of ``f`` under
``V`` is divisible by one fixed irreducible ``psi`` (the tangent direction of
``w`` at ``V``).  Searching over residual polynomials therefore locates the
next key without guessing polynomials over Q.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .basedvr import BaseDVR
from .errors import (InputError, InvariantError, OracleInconsistencyError,
                     PreconditionError)
from .finitefield import factor, poly_mul
from .inductive import InductiveValuation, Stage, first_stage
from .poly import QPoly, phi_expand, poly_gcd, to_text
from .scalar import INF, ExtValue

# -- Newton polygons ----------------------------------------------------------


def _lower_hull(points):
    """Lower convex hull of ``(i, value)`` points sorted by ``i``."""
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            lhs = (y2 - y1).scale(pt[0] - x1)
            rhs = (pt[1] - y1).scale(x2 - x1)
            if lhs >= rhs:
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def newton_slopes(V, expansion, values=None):
    """Principal slopes of the Newton diagram of an expansion.

    Points are ``(i, values[i])`` for the nonzero digits; ``values`` defaults
    to the values of the digits under ``V``.  Returns ``(slope, length)``
    pairs left to right, where ``slope`` is the positive number ``-s`` for a
    hull side of slope ``s < 0``.
    """
    if values is None:
        values = [V.value(a) for a in expansion]
    pts = [(i, ExtValue.coerce(v) if not isinstance(v, ExtValue) else v)
           for i, v in enumerate(values)]
    pts = [(i, v) for i, v in pts if not v.is_infinite]
    if len(pts) < 2:
        raise InputError("Newton diagram needs at least two finite points",
                         code="DEGENERATE_DIAGRAM")
    low = min(v for _, v in pts)
    end = next(i for i, v in pts if v == low)
    hull = _lower_hull([pt for pt in pts if pt[0] <= end])
    out = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        out.append(((y1 - y2).scale(Fraction(1, x2 - x1)), x2 - x1))
    return out


# -- oracles ------------------------------------------------------------------


class ValuationOracle:
    """Black-box valuation ``w`` on ``Q[X]`` with a query counter.

    ``fn`` maps a :class:`QPoly` to an :class:`ExtValue` (or a rational).
    """

    def __init__(self, fn, base, max_queries=10**4):
        self.fn = fn
        self.base = base
        self.max_queries = max_queries
        self.queries = 0
        self._cache = {}

    @classmethod
    def from_valuation(cls, V, max_queries=10**4):
        return cls(V.value, V.base, max_queries)

    @property
    def exhausted(self):
        return self.queries >= self.max_queries

    def __call__(self, f):
        f = f if isinstance(f, QPoly) else QPoly(f)
        hit = self._cache.get(f)
        if hit is not None:
            return hit
        if self.exhausted:
            raise _BudgetExhausted()
        self.queries += 1
        v = self.fn(f)
        if not isinstance(v, ExtValue):
            v = ExtValue.coerce(v, self.base.d)
        if f.is_zero() != v.is_infinite and not f.is_zero() and f.degree == 0:
            raise OracleInconsistencyError("oracle gives a nonzero constant infinite value",
                                           code="ORACLE_INCONSISTENT")
        self._cache[f] = v
        return v

    def check_base(self):
        """Spot-check that ``w`` extends the base valuation on constants."""
        p = self.base.p
        for c in (Fraction(1), Fraction(p), Fraction(1, p), Fraction(p + 1), Fraction(p * p, 3 if p != 3 else 2)):
            if self(QPoly(c)) != self.base.value(c):
                raise OracleInconsistencyError(f"oracle disagrees with the base valuation on {c}",
                                               code="ORACLE_INCONSISTENT", field="oracle")


class _BudgetExhausted(Exception):
    pass


@dataclass
class ApproxStep:
    """One move of :func:`approximate`: key ``psi`` had value ``v_prev``
    before the step and ``w_value`` under the oracle; ``mu`` was chosen."""

    psi: QPoly
    v_prev: ExtValue
    mu: ExtValue
    w_value: ExtValue

    def sandwich_ok(self):
        if self.mu == self.w_value:
            return self.v_prev <= self.mu
        return self.v_prev < self.mu < self.w_value

    def to_json(self):
        return {"psi": to_text(self.psi), "v_prev": self.v_prev.to_json(),
                "mu": self.mu.to_json(), "w": self.w_value.to_json()}


@dataclass
class ApproxResult:
    valuation: InductiveValuation
    status: str
    steps: list = field(default_factory=list)
    queries: int = 0

    def to_json(self):
        return {"status": self.status, "valuation": self.valuation.to_json(),
                "steps": [s.to_json() for s in self.steps], "queries": self.queries}


def _rational_between(lo, hi):
    """A dyadic rational strictly between ``lo`` and the irrational ``hi``."""
    n = 0
    while True:
        c = Fraction(hi.scale(2 ** n).floor(), 2 ** n)
        if ExtValue.coerce(c, hi.d) > lo:
            return c
        n += 1


def _monic_nonzero_constant(F, r):
    elems = list(F.elements())
    nonzero = [x for x in elems if x != F.zero]
    for c0 in nonzero:
        for rest in product(elems, repeat=r - 1):
            yield (c0,) + rest + (F.one,)


@lru_cache(maxsize=None)
def _irreducibles(F, r):
    """Monic irreducibles of degree ``r`` over ``F`` other than ``Y``.

    A sieve: strike out every product with a factor of degree at most ``r/2``.
    """
    if r == 1:
        return tuple(_monic_nonzero_constant(F, 1))
    reducible = set()
    for d in range(1, r // 2 + 1):
        cofactors = list(_monic_nonzero_constant(F, r - d))
        for a in _irreducibles(F, d):
            a = list(a)
            for b in cofactors:
                reducible.add(tuple(poly_mul(F, a, list(b))))
    return tuple(f for f in _monic_nonzero_constant(F, r) if f not in reducible)


def _groups(cands, budget):
    """Consecutive groups whose degrees sum to at most ``budget``."""
    group, size = [], 0
    for c in cands:
        d = len(c) - 1
        if group and size + d > budget:
            yield group
            group, size = [], 0
        group.append(c)
        size += d
    if group:
        yield group


class _Search:
    def __init__(self, w, max_key_degree, max_query_degree, seed):
        self.w = w
        self.max_key_degree = max_key_degree
        self.max_query_degree = max_query_degree
        self.rng = random.Random(seed)

    def exceeds(self, V, R):
        """Whether ``w`` exceeds ``V`` on a lift of the residual ``R``."""
        F = V.field
        n = len(R) - 1
        gamma = n * V.e[V.k] * V.mus[V.k].rational()
        L = V.lift(gamma, R)
        vl, wl = V.value(L), self.w(L)
        if wl < vl:
            raise OracleInconsistencyError(
                f"oracle value {wl} of {to_text(L)} is below the approximant value {vl}",
                code="ORACLE_INCONSISTENT", field="oracle")
        return wl > vl

    def _product(self, V, group):
        F = V.field
        R = [F.one]
        for c in group:
            R = poly_mul(F, R, list(c))
        return R

    def _pinpoint(self, V, group):
        while len(group) > 1:
            half = group[:len(group) // 2]
            group = half if self.exceeds(V, self._product(V, half)) else group[len(half):]
        return group[0]

    def tangent(self, V):
        """Residual ``psi`` of the next key (bounded by the key degree), or None."""
        unit = V.e[V.k] * V.last_key.degree
        budget = max(self.max_query_degree // unit, 1)
        r = 1
        while r * unit <= self.max_key_degree:
            cands = _irreducibles(V.field, r)
            for group in _groups(cands, budget):
                if self.exceeds(V, self._product(V, group)):
                    return self._pinpoint(V, group)
            r += 1
        return None

    def from_witness(self, V, f):
        """``f`` with ``w(f) > V(f)``: the tangent divides its residual."""
        for psi, _ in factor(V.field, list(V.residual(f).coeffs), self.rng.randrange(2**31)):
            if len(psi) > 1 and self.exceeds(V, list(psi)):
                return tuple(psi)
        return None


def _random_poly(rng, degree, p):
    coeffs = [Fraction(rng.randint(-20, 20)) * Fraction(p) ** rng.randint(-1, 2)
              for _ in range(degree + 1)]
    coeffs[-1] = Fraction(1)
    return QPoly(coeffs)


def approximate(oracle, B, max_stages=20, max_key_degree=6, max_query_degree=64,
                max_queries=10**4, verify_count=20, verify_degree=12, seed=0):
    """Reconstruct a valuation ``w`` given only as an oracle.

    ``oracle`` is a :class:`ValuationOracle` or a plain callable.  Each step
    finds the key of least degree on which ``w`` exceeds the current
    approximant and raises its value to ``w`` (or, if that value is
    irrational, to a dyadic rational just below it).  ``max_stages`` bounds the
    number of steps.

    Status ``Exact`` means no residual direction up to ``max_key_degree`` is
    left and ``verify_count`` random polynomials agree with the oracle.
    """
    if not isinstance(B, BaseDVR):
        raise InputError("base must be a BaseDVR", code="BAD_BASE", field="base")
    w = oracle if isinstance(oracle, ValuationOracle) else ValuationOracle(oracle, B, max_queries)
    w.max_queries = max_queries
    search = _Search(w, max_key_degree, max_query_degree, seed)
    steps = []

    def done(V, status):
        return ApproxResult(V, status, steps, w.queries)

    try:
        w.check_base()
        X = QPoly.x()
        wx = w(X)
        if wx < 0:
            raise OracleInconsistencyError("oracle gives X a negative value",
                                           code="ORACLE_INCONSISTENT", field="oracle")
        zero = B.ev(0)
        if wx.is_infinite:
            V = InductiveValuation(B, [Stage(X, INF)])
            steps.append(ApproxStep(X, zero, INF, INF))
            return done(V, "Exact")
        mu = wx.rational() if wx.is_rational else _rational_between(zero, wx)
        V = first_stage(B, mu)
        steps.append(ApproxStep(X, zero, B.ev(mu), wx))
        rng = random.Random(seed)
        while len(steps) < max_stages:
            phi = V.last_key
            wphi = w(phi)
            if wphi < V.mus[V.k]:
                raise OracleInconsistencyError(
                    f"oracle value of key {to_text(phi)} is below its stage value",
                    code="ORACLE_INCONSISTENT", field="oracle")
            if wphi > V.mus[V.k]:
                psi_poly, prev = phi, V.mus[V.k]
                new = V.replace_last_value
            else:
                psi = search.tangent(V)
                if psi is None:
                    witness = None
                    for _ in range(verify_count):
                        f = _random_poly(rng, rng.randint(1, verify_degree), B.p)
                        if w(f) != V.value(f):
                            witness = f
                            break
                    if witness is None:
                        return done(V, "Exact")
                    if w(witness) < V.value(witness):
                        raise OracleInconsistencyError("oracle below the approximant",
                                                       code="ORACLE_INCONSISTENT", field="oracle")
                    psi = search.from_witness(V, witness)
                    if psi is None:
                        return done(V, "Truncated")
                psi_poly = V.key_lift(psi)
                prev = V.value(psi_poly)
                wphi = w(psi_poly)
                new = lambda m, V=V, phi=psi_poly: V.augment(phi, m)
            if wphi.is_infinite or wphi.is_rational:
                mu = wphi
            else:
                mu = B.ev(_rational_between(prev, wphi))
            V = new(mu)
            steps.append(ApproxStep(psi_poly, prev, mu, wphi))
            if V.is_pseudo:
                return done(V, "Exact")
        return done(V, "Truncated")
    except _BudgetExhausted:
        return done(V, "Truncated")


# -- extensions ---------------------------------------------------------------


@dataclass
class ExtensionLeaf:
    """One extension of the base valuation to ``Q[X]/(g)``."""

    approximant: InductiveValuation
    e: int
    f: int
    g_value: ExtValue
    complete: bool = True
    pseudo: bool = False

    def to_json(self):
        return {"e": self.e, "f": self.f,
                "stages": self.approximant.to_json()["stages"],
                "g_value": "inf" if self.pseudo else self.g_value.to_json(),
                "complete": self.complete}


def _check_extension_input(B, g):
    if g.degree < 1:
        raise InputError("g must have degree at least 1", code="DEGREE_ZERO", field="poly")
    if not g.is_monic():
        raise PreconditionError("g must be monic", code="NOT_MONIC", field="poly")
    if any(c and B.order(c) < 0 for c in g.coeffs):
        raise PreconditionError("g must have p-integral coefficients", code="NOT_INTEGRAL",
                                field="poly")
    if poly_gcd(g, g.derivative()).degree > 0:
        raise PreconditionError("g must be squarefree", code="NOT_SQUAREFREE", field="poly")


def _signature(leaf):
    return [(to_text(s.phi), str(s.mu)) for s in leaf.approximant.stages]


def extensions(B, g, seed=0):
    """All extensions of the p-adic valuation to ``Q[X]/(g)``, as leaves.

    ``g`` must be monic, p-integral and squarefree.  Each leaf carries its
    ramification index ``e`` and residue degree ``f``; the sum of ``e*f`` over
    the leaves equals ``deg g``, and a violation raises :class:`InvariantError`.
    """
    if not isinstance(g, QPoly):
        g = QPoly(g)
    _check_extension_input(B, g)
    root = first_stage(B, 0)
    leaves = []
    # work items: (valuation, residual psi to follow, include_last_key)
    work = [(root, psi) for psi, _ in factor(root.field, list(root.residual(g).full().coeffs),
                                             seed)]
    while work:
        V, psi = work.pop()
        if len(psi) == 2 and psi[0] == V.field.zero:
            phi, same = V.last_key, True
        else:
            phi, same = V.key_lift(psi), False
        digits = phi_expand(g, phi)
        values = [V.value(a) for a in digits]
        vphi = V.value(phi)
        pseudo = digits[0].is_zero()
        if pseudo:
            # phi is a factor of g over Q: one branch ends in a pseudo-valuation
            values = values[1:]
            digits = digits[1:]
        finite = [v for v in values if not v.is_infinite]
        slopes = newton_slopes(V, digits, values) if len(finite) >= 2 else []
        if pseudo:
            top = max([vphi] + [s for s, _ in slopes])
            leaves.append(_pseudo_leaf(V, phi, psi, top, same))
        for slope, _ in slopes:
            if not slope > vphi:
                continue
            W = V.replace_last_value(slope) if same else V.augment(phi, slope)
            R = W.residual(g)
            facs = factor(W.field, list(R.coeffs), seed) if len(R.coeffs) > 1 else []
            if len(facs) == 1 and facs[0][1] == 1:
                n = len(facs[0][0]) - 1
                leaves.append(ExtensionLeaf(W, W.E[W.k], W.residue_degree() * n, W.value(g)))
            else:
                work.extend((W, q) for q, _ in facs)
    leaves.sort(key=_signature)
    total = sum(leaf.e * leaf.f for leaf in leaves)
    if total != g.degree:
        raise InvariantError(f"sum of e*f is {total}, expected {g.degree}", code="INVARIANT")
    return leaves


def _pseudo_leaf(V, phi, psi, top, same):
    """Leaf for a key ``phi`` dividing ``g``: the valuation ``(V, phi, inf)``.

    The approximant replaces the infinite value by the first integer above
    ``top``, the largest value of ``phi`` on the sibling branches, so it stays
    apart from them; ``e`` and ``f`` are those of ``Q_p[X]/(phi)``.
    """
    mu = Fraction(top.floor() + 1)
    if same:
        e, f = V.E[V.k - 1], V._fields[V.k].degree
        W = V.replace_last_value(mu)
    else:
        e, f = V.E[V.k], V.residue_degree() * (len(psi) - 1)
        W = V.augment(phi, mu)
    return ExtensionLeaf(W, e, f, INF, pseudo=True)


__all__ = ["ApproxResult", "ApproxStep", "ExtensionLeaf", "ValuationOracle", "approximate",
           "extensions", "newton_slopes"]
