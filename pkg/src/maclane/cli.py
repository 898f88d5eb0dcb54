"""Command-line interface.

Every command prints one JSON document on stdout carrying ``"format": 1``.
Exit codes: 0 success, 2 invalid input, 3 violated precondition, 4 internal
invariant breach (a bug; failing self-tests also report 4).

    maclane value --p 2 --val '[["x",1,"1/2"]]' --poly "x^3+2x+4"
    maclane extensions --p 5 --poly "x^2+1"
"""

import argparse
import json
import sys

from .approx import ValuationOracle, approximate, extensions
from .errors import InputError, InvariantError, ValuationError
from .finitefield import poly_trim
from .poly import phi_expand, to_text
from .propcheck import GenConfig, SUITES, run_suite
from .serialize import (FORMAT, parse_base, parse_poly, parse_valuation, parse_value,
                        poly_to_json, valuation_to_json)
from .separate import separate


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message, code="BAD_ARGUMENTS", field="argv")


def _common(parser):
    parser.add_argument("--p", type=int, help="residue characteristic (a prime)")
    parser.add_argument("--d", type=int, help="squarefree d for values a + b*sqrt(d)")
    parser.add_argument("--seed", type=int, default=0, help="seed for finite-field splitting")
    parser.add_argument("--trace", action="store_true", help="human-readable trace on stderr")
    parser.add_argument("--strict-mu", action="store_true",
                        help="require the first stage value to be > 0")


def build_parser():
    top = _Parser(prog="maclane", description="MacLane inductive valuations over p-adic Q.")
    sub = top.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def cmd(name, help_text, val=True, poly=False):
        p = sub.add_parser(name, help=help_text)
        _common(p)
        if val:
            p.add_argument("--val", action="append", required=True,
                           help="valuation: JSON text or a path to a JSON file")
        if poly:
            p.add_argument("--poly", required=True, help="polynomial text or coefficient array")
        return p

    cmd("value", "value of a polynomial", poly=True)
    p = cmd("expand", "key expansion with digit values", poly=True)
    p.add_argument("--phi", help="expand in this monic polynomial instead of the last key")
    cmd("residual", "residual polynomial", poly=True)
    p = cmd("keylift", "key polynomial lifting a residual polynomial")
    p.add_argument("--psi", required=True,
                   help="monic irreducible residual: JSON list of field elements, "
                        "or text in y over GF(p)")
    p = cmd("augment", "augment by a key and a value")
    p.add_argument("--phi", required=True)
    p.add_argument("--mu", required=True)
    p = cmd("extensions", "all extensions to Q[X]/(g)", val=False, poly=True)
    p = cmd("approximate", "rebuild a hidden valuation from value queries")
    p.add_argument("--max-stages", type=int, default=20)
    p.add_argument("--max-key-degree", type=int, default=6)
    p.add_argument("--max-queries", type=int, default=10**4)
    cmd("separate", "separation certificate for two valuations")
    p = cmd("selftest", "property suites", val=False)
    p.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-stages", type=int, default=3)
    p.add_argument("--inject-bug", action="store_true", help="mutation canary")
    return top


def _one_val(args):
    if len(args.val) != 1:
        raise InputError("exactly one --val is expected", code="BAD_ARGUMENTS", field="val")
    return parse_valuation(args.val[0], args.p, args.d, strict=args.strict_mu)


def _trace(args, obj):
    if args.trace:
        print(obj if isinstance(obj, str) else json.dumps(obj, indent=2), file=sys.stderr)


def _field_poly(F, coeffs):
    return [F.to_json(c) for c in coeffs]


def do_value(args):
    V = _one_val(args)
    f = parse_poly(args.poly)
    _trace(args, V.trace(f))
    return {"value": V.value(f).to_json()}


def do_expand(args):
    V = _one_val(args)
    f = parse_poly(args.poly)
    phi = parse_poly(args.phi, "phi") if args.phi else V.last_key
    digits = phi_expand(f, phi)
    return {"key": to_text(phi),
            "digits": [{"j": j, "digit": to_text(a), "coeffs": poly_to_json(a),
                        "value": V.value(a).to_json()} for j, a in enumerate(digits)]}


def do_residual(args):
    V = _one_val(args)
    r = V.residual(parse_poly(args.poly))
    return {"value": r.value.to_json(), "order": r.order,
            "coeffs": _field_poly(r.field, r.coeffs), "field": V.tower.to_json()}


def _parse_psi(V, text):
    F = V.field
    s = text.strip()
    if s.startswith("["):
        try:
            raw = json.loads(s)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}", code="BAD_JSON", field="psi") from exc
        if not isinstance(raw, list):
            raise InputError("psi must be a list of field elements", code="BAD_PSI", field="psi")
        return poly_trim(F, [F.from_json(c) for c in raw])
    if F.degree != 1:
        raise InputError("text residuals need a prime residue field; give a JSON list",
                         code="BAD_PSI", field="psi")
    f = parse_poly(s.replace("y", "x").replace("Y", "x"), "psi")
    out = []
    for c in f.coeffs:
        if c.denominator % V.p == 0:
            raise InputError("coefficient is not p-integral", code="BAD_PSI", field="psi")
        out.append(c.numerator * pow(c.denominator, -1, V.p) % V.p)
    return poly_trim(F, out)


def do_keylift(args):
    V = _one_val(args)
    psi = _parse_psi(V, args.psi)
    phi = V.key_lift(psi)
    r = V.residual(phi)
    return {"phi": to_text(phi), "coeffs": poly_to_json(phi), "is_key": V.is_key(phi),
            "residual": _field_poly(r.field, r.coeffs)}


def do_augment(args):
    V = _one_val(args)
    W = V.augment(parse_poly(args.phi, "phi"), parse_value(args.mu, V.base.d))
    return {"valuation": valuation_to_json(W)}


def do_extensions(args):
    base = parse_base(args.p, args.d)
    g = parse_poly(args.poly)
    leaves = extensions(base, g, seed=args.seed)
    for leaf in leaves:
        _trace(args, f"e={leaf.e} f={leaf.f}: {leaf.approximant!r}")
    return {"leaves": [leaf.to_json() for leaf in leaves],
            "check": {"sum_ef": sum(l.e * l.f for l in leaves), "deg": g.degree}}


def do_approximate(args):
    hidden = _one_val(args)
    oracle = ValuationOracle.from_valuation(hidden, args.max_queries)
    res = approximate(oracle, hidden.base, max_stages=args.max_stages,
                      max_key_degree=args.max_key_degree, max_queries=args.max_queries,
                      seed=args.seed)
    for step in res.steps:
        _trace(args, step.to_json())
    out = res.to_json()
    out["valuation"] = valuation_to_json(res.valuation)
    return out


def do_separate(args):
    if len(args.val) != 2:
        raise InputError("separate takes exactly two --val", code="BAD_ARGUMENTS", field="val")
    W1 = parse_valuation(args.val[0], args.p, args.d, strict=args.strict_mu, field="val[0]")
    W2 = parse_valuation(args.val[1], args.p, args.d, strict=args.strict_mu, field="val[1]")
    cert = separate(W1, W2)
    _trace(args, "\n".join(cert.trace + [f"witness {cert.witness_text()}: "
                                         f"W1 -> {cert.w1_value}, W2 -> {cert.w2_value}"]))
    out = cert.to_json()
    out["floor"] = valuation_to_json(cert.floor)
    return out


def do_selftest(args):
    cfg = GenConfig(seed=args.seed, sample_count=args.samples, max_stages=args.max_stages,
                    p_set=(args.p,) if args.p else (2, 3, 5))
    reports = run_suite(args.suite, cfg, inject_bug=args.inject_bug)
    if not isinstance(reports, list):
        reports = [reports]
    out = {"reports": [r.to_json() for r in reports], "ok": all(r.ok for r in reports)}
    if not out["ok"]:
        out["error"] = {"code": "SELFTEST_FAILED", "message": "property suite failures"}
    return out


COMMANDS = {"value": do_value, "expand": do_expand, "residual": do_residual,
            "keylift": do_keylift, "augment": do_augment, "extensions": do_extensions,
            "approximate": do_approximate, "separate": do_separate, "selftest": do_selftest}


def run(argv):
    """Parse and dispatch; returns ``(exit_code, document)``."""
    try:
        args = build_parser().parse_args(argv)
        doc = COMMANDS[args.command](args)
        code = 0 if doc.get("ok", True) else InvariantError.exit_code
    except ValuationError as exc:
        return exc.exit_code, {"format": FORMAT, "error": exc.to_json()}
    except Exception as exc:  # noqa: BLE001 - anything else is a bug
        return InvariantError.exit_code, {"format": FORMAT, "error": {
            "code": "INTERNAL", "message": f"{type(exc).__name__}: {exc}"}}
    return code, {"format": FORMAT, **doc}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(argv)
        return 0
    code, doc = run(argv)
    print(json.dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
