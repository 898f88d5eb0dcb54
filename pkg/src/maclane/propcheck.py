"""Random generators and property suites for inductive valuations.

Valuations are generated by construction: each new stage is the key lift of
a random irreducible residual polynomial, so every sample is valid without
rejection of whole stage lists.
"""

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .basedvr import BaseDVR
from .errors import InputError
from .finitefield import is_irreducible, poly_trim
from .inductive import Comparison, first_stage, preceq, same_up_to_scalar
from .poly import QPoly, to_text
from .scalar import INF


@dataclass
class GenConfig:
    seed: int = 0
    p_set: tuple = (2, 3, 5)
    max_stages: int = 3
    max_degree: int = 8
    max_coeff_height: int = 20
    sample_count: int = 100
    max_mu_num: int = 5
    max_mu_den: int = 3

    def __post_init__(self):
        for name in ("max_stages", "max_degree", "max_coeff_height", "sample_count",
                     "max_mu_num", "max_mu_den"):
            if getattr(self, name) <= 0:
                raise InputError(f"{name} must be positive", code="BAD_CONFIG", field=name)
        if not self.p_set:
            raise InputError("p_set must be nonempty", code="BAD_CONFIG", field="p_set")


def random_rational(rng, max_num, max_den, positive=True):
    lo = 1 if positive else 0
    return Fraction(rng.randint(lo, max_num), rng.randint(1, max_den))


def random_irreducible(F, degree, rng, tries=200):
    """Random monic irreducible of the given degree, never ``Y`` itself."""
    for _ in range(tries):
        f = [F.random(rng) for _ in range(degree)] + [F.one]
        if f[0] == F.zero:
            continue
        if degree == 1 or is_irreducible(F, f):
            return f
    return None


def random_poly(rng, degree, height, monic=False):
    coeffs = [rng.randint(-height, height) for _ in range(degree + 1)]
    if monic:
        coeffs[-1] = 1
    elif coeffs[-1] == 0:
        coeffs[-1] = rng.choice([-1, 1]) * rng.randint(1, height)
    return QPoly(coeffs)


def random_rational_poly(rng, degree, height, p):
    """Random polynomial whose coefficients carry assorted powers of ``p``."""
    out = []
    for _ in range(degree + 1):
        c = Fraction(rng.randint(-height, height))
        if rng.random() < 0.3:
            c *= Fraction(p) ** rng.randint(-2, 3)
        out.append(c)
    if out[-1] == 0:
        out[-1] = Fraction(1)
    return QPoly(out)


def extend_randomly(V, rng, cfg, max_degree=None):
    """One more stage via the key lift of a random residual, or None."""
    max_degree = max_degree or cfg.max_degree
    unit = V.e[V.k] * V.last_key.degree
    options = [r for r in range(1, max_degree // unit + 1) if r * unit > V.last_key.degree]
    if not options:
        return None
    # small residual degrees leave room for further stages
    r = rng.choice(options[:2])
    psi = random_irreducible(V.field, r, rng)
    if psi is None:
        return None
    phi = V.key_lift(psi)
    mu = V.value(phi).rational() + random_rational(rng, cfg.max_mu_num, cfg.max_mu_den)
    return V.augment(phi, mu)


def random_valuation(rng, cfg, stages=None, p=None):
    p = p or rng.choice(list(cfg.p_set))
    base = BaseDVR(p)
    V = first_stage(base, random_rational(rng, cfg.max_mu_num, cfg.max_mu_den))
    target = stages or rng.randint(1, cfg.max_stages)
    while V.k < target:
        W = extend_randomly(V, rng, cfg)
        if W is None:
            break
        V = W
    return V


def gen_inductive(cfg):
    """Deterministic stream of ``cfg.sample_count`` valuations."""
    rng = random.Random(cfg.seed)
    for _ in range(cfg.sample_count):
        yield random_valuation(rng, cfg)


# Suites ------------------------------------------------------------------------

@dataclass
class Report:
    suite: str
    passed: int = 0
    failed: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self):
        return self.failed == 0

    def to_json(self):
        return asdict(self)


def _shrink_candidates(c):
    yield Fraction(0)
    sign = 1 if c > 0 else -1
    if abs(c) != 1:
        yield Fraction(sign)
    half = Fraction(int(c / 2))
    if half not in (0, sign, c):
        yield half


def _shrink_poly(f, still_fails):
    """Greedy shrink to a local minimum: zero out terms, then lower
    coefficient heights, while the failure persists."""
    changed = True
    while changed:
        changed = False
        coeffs = list(f.coeffs)
        for i in range(len(coeffs) - 1, -1, -1):
            if coeffs[i] == 0:
                continue
            for c in _shrink_candidates(coeffs[i]):
                trial = QPoly(coeffs[:i] + [c] + coeffs[i + 1:])
                if not trial.is_zero() and still_fails(trial):
                    f, changed = trial, True
                    break
            if changed:
                break
    return f


def _axioms(V, rng, cfg, bug):
    f = random_rational_poly(rng, rng.randint(0, cfg.max_degree), cfg.max_coeff_height, V.p)
    g = random_rational_poly(rng, rng.randint(0, cfg.max_degree), cfg.max_coeff_height, V.p)

    def fails(h):
        vf, vg = V.value(h), V.value(g)
        if V.value(h * g) != vf + vg:
            return True
        return V.value(h + g) < min(vf, vg)

    return f, fails


def _buggy_augmented_value(W, f):
    # off-by-one in the last stage: counts one power of the key too few
    from .poly import phi_expand
    k = W.k
    best = None
    for j, a in enumerate(phi_expand(f, W.phis[k])):
        if a.is_zero():
            continue
        v = W._value(a, k - 1) + W.mus[k].scale(max(j - 1, 0))
        best = v if best is None or v < best else best
    return best


def _monotonicity(V, rng, cfg, bug):
    W = extend_randomly(V, rng, cfg)
    if W is None:
        return None, None
    value_w = (lambda h: _buggy_augmented_value(W, h)) if bug else W.value
    f = random_rational_poly(rng, rng.randint(0, cfg.max_degree), cfg.max_coeff_height, V.p)

    def fails(h):
        a, b = V.value(h), value_w(h)
        if b < a:
            return True
        return h.degree < W.last_key.degree and a != b

    return f, fails


def _residual(V, rng, cfg, bug):
    if not V.is_commensurable:
        return None, None
    f = random_rational_poly(rng, rng.randint(0, cfg.max_degree), cfg.max_coeff_height, V.p)
    g = random_rational_poly(rng, rng.randint(0, cfg.max_degree), cfg.max_coeff_height, V.p)
    F = V.field

    def fails(h):
        rh, rg, rhg = V.residual(h), V.residual(g), V.residual(h * g)
        from .finitefield import poly_mul
        prod = poly_mul(F, list(rh.coeffs), list(rg.coeffs))
        return rhg.order != rh.order + rg.order or not same_up_to_scalar(F, prod, rhg.coeffs)

    return f, fails


def _keylift(V, rng, cfg, bug):
    unit = V.e[V.k] * V.last_key.degree
    options = [r for r in range(1, 4) if r * unit <= max(cfg.max_degree, unit)]
    psi = random_irreducible(V.field, rng.choice(options), rng)
    if psi is None:
        return None, None
    phi = V.key_lift(psi)

    def fails(_):
        r = V.residual(phi)
        return r.order != 0 or not same_up_to_scalar(V.field, r.coeffs, psi) or not V.is_key(phi)

    return phi, fails


def _comparison(V, rng, cfg, bug):
    W = extend_randomly(V, rng, cfg)
    if W is None:
        return None, None
    f = random_rational_poly(rng, rng.randint(0, cfg.max_degree), cfg.max_coeff_height, V.p)

    def fails(h):
        if preceq(V, W) is not Comparison.PROVEN:
            return True
        return V.value(h) > W.value(h)

    return f, fails


def _maximality(V, rng, cfg, bug):
    # A pseudo-valuation (V, phi, inf) is maximal: a commensurable valuation
    # that dominates its finite truncation on keys and agrees below deg phi
    # must not exceed it anywhere.
    W = extend_randomly(V, rng, cfg)
    if W is None:
        return None, None
    phi = W.last_key
    pseudo = V.augment(phi, INF)
    f = random_rational_poly(rng, rng.randint(0, cfg.max_degree), cfg.max_coeff_height, V.p)

    def fails(h):
        if preceq(W, pseudo) is not Comparison.PROVEN:
            return True
        return W.value(h) > pseudo.value(h)

    return f, fails


SUITES = {
    "axioms": _axioms,
    "monotonicity": _monotonicity,
    "residual": _residual,
    "keylift": _keylift,
    "comparison": _comparison,
    "maximality": _maximality,
}


def run_suite(name, cfg=None, inject_bug=False):
    """Run one suite (or ``"all"``) and return a :class:`Report` (a list for ``all``)."""
    cfg = cfg or GenConfig()
    if name == "all":
        return [run_suite(n, cfg, inject_bug) for n in SUITES]
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}", code="UNKNOWN_SUITE", field="suite")
    check = SUITES[name]
    rng = random.Random(cfg.seed)
    report = Report(name)
    for V in gen_inductive(cfg):
        sample, fails = check(V, rng, cfg, inject_bug)
        if fails is None:
            continue
        if fails(sample):
            report.failed += 1
            if isinstance(sample, QPoly) and name != "keylift":
                sample = _shrink_poly(sample, fails)
            if len(report.counterexamples) < 5:
                report.counterexamples.append(
                    {"valuation": V.to_json(), "poly": to_text(sample)})
        else:
            report.passed += 1
    return report


__all__ = ["GenConfig", "Report", "SUITES", "gen_inductive", "random_irreducible",
           "random_poly", "random_rational_poly", "random_valuation", "run_suite",
           "extend_randomly", "poly_trim"]
