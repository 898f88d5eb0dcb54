"""Text and JSON formats.

Polynomial text grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := ["+" | "-"] factor (("*" | "/")? factor)*
    factor := atom ("^" integer)?
    atom   := integer | "x" | "(" expr ")"

Juxtaposition is only accepted after a number (``2x``, ``3(x+1)``), and
``/`` only divides by a nonzero constant, so ``3/2x`` reads as ``(3/2)*x``.
``X`` and ``**`` are accepted as spellings of ``x`` and ``^``.

A polynomial may also be given as a JSON array of coefficients in ascending
degree; that array form is canonical.

A valuation descriptor is either an object::

    {"format": 1, "base": {"p": 2, "d": 1},
     "stages": [{"phi": "x", "mu": "1"}, {"phi": [4, 2, 1], "mu": "3"}]}

or the compact list ``[[phi, index, mu], ...]`` where ``index`` is the
1-based stage number.  Values are ``"inf"``, integers, ``"num/den"`` strings
or ``{"a": .., "b": .., "d": ..}`` for ``a + b*sqrt(d)``.
"""

import json
import os
import re
from fractions import Fraction

from .basedvr import BaseDVR
from .errors import InputError
from .inductive import InductiveValuation, Stage
from .poly import QPoly
from .scalar import ExtValue, as_fraction

FORMAT = 1

_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([xX]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InputError(f"unexpected character {text[pos:].lstrip()[:1]!r} at {pos}",
                             code="BAD_POLY", field="poly")
        num, op, var = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif var is not None:
            out.append(("x", None))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "more input"
            raise InputError(f"expected {want} at token {self.i}", code="BAD_POLY", field="poly")
        self.i += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term(allow_sign=False)
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self, allow_sign=True):
        sign = 1
        if allow_sign and self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.factor()
        last_was_number = self.toks[self.i - 1][0] == "num"
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                acc = acc * self.factor()
            elif tok == ("op", "/"):
                self.take()
                d = self.factor()
                if d.degree != 0:
                    raise InputError("division only by nonzero constants", code="BAD_POLY",
                                     field="poly")
                acc = acc * QPoly(1 / d[0])
            elif last_was_number and tok[0] in ("x",) or (last_was_number and tok == ("op", "(")):
                acc = acc * self.factor()
            else:
                break
            last_was_number = self.toks[self.i - 1][0] == "num"
        return acc * sign

    def factor(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            n = self.take("num")[1]
            base = base ** n
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return QPoly(val)
        if kind == "x":
            self.take()
            return QPoly.x()
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise InputError(f"unexpected token {val!r}" if kind else "unexpected end of input",
                         code="BAD_POLY", field="poly")


def parse_poly_text(text):
    tokens = _tokenize(text)
    if not tokens:
        raise InputError("empty polynomial", code="BAD_POLY", field="poly")
    p = _Parser(tokens)
    out = p.expr()
    if p.i != len(tokens):
        raise InputError(f"trailing input at token {p.i}", code="BAD_POLY", field="poly")
    return out


def parse_poly(obj, field="poly"):
    """A :class:`QPoly` from text, a coefficient list or a JSON array string."""
    if isinstance(obj, QPoly):
        return obj
    if isinstance(obj, str):
        s = obj.strip()
        if s.startswith("["):
            try:
                obj = json.loads(s)
            except json.JSONDecodeError as exc:
                raise InputError(f"bad coefficient array: {exc}", code="BAD_POLY",
                                 field=field) from exc
        else:
            try:
                return parse_poly_text(s)
            except InputError as exc:
                exc.field = field
                raise
    if isinstance(obj, (int, Fraction)) and not isinstance(obj, bool):
        return QPoly(obj)
    if isinstance(obj, list):
        try:
            return QPoly([as_fraction(c if not isinstance(c, float) else repr(c)) for c in obj])
        except InputError as exc:
            exc.field = field
            raise
    raise InputError(f"cannot read a polynomial from {obj!r}", code="BAD_POLY", field=field)


def poly_to_json(f):
    return [str(c) for c in f.coeffs]


def parse_value(obj, d=1, field="mu"):
    try:
        return ExtValue.from_json(obj, d)
    except InputError as exc:
        exc.field = field
        raise


def _load(obj, field):
    """JSON text, a path to a JSON file, or an already decoded object."""
    if not isinstance(obj, str):
        return obj
    s = obj.strip()
    if s and s[0] not in "[{" and os.path.exists(s):
        with open(s, encoding="utf-8") as fh:
            s = fh.read()
    try:
        return json.loads(s)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}", code="BAD_JSON", field=field) from exc


def parse_base(p=None, d=None, obj=None):
    if obj is not None:
        base = BaseDVR.from_json(obj)
        if p is not None and p != base.p or d is not None and d != base.d:
            raise InputError("--p/--d disagree with the descriptor's base",
                             code="BASE_MISMATCH", field="base")
        return base
    if p is None:
        raise InputError("the prime p is required", code="MISSING_P", field="p")
    return BaseDVR(p, 1 if d is None else d)


def parse_valuation(obj, p=None, d=None, strict=False, field="val"):
    """An :class:`InductiveValuation` from either descriptor form."""
    obj = _load(obj, field)
    if isinstance(obj, dict):
        if obj.get("format", FORMAT) != FORMAT:
            raise InputError(f"unsupported format {obj.get('format')!r}", code="BAD_FORMAT",
                             field=field + ".format")
        base = parse_base(p, d, obj.get("base"))
        raw = obj.get("stages")
        if not isinstance(raw, list):
            raise InputError("'stages' must be a list", code="BAD_VALUATION",
                             field=field + ".stages")
        stages = []
        for n, s in enumerate(raw):
            where = f"{field}.stages[{n}]"
            if not isinstance(s, dict) or "phi" not in s or "mu" not in s:
                raise InputError("a stage needs 'phi' and 'mu'", code="BAD_VALUATION", field=where)
            stages.append(Stage(parse_poly(s["phi"], where + ".phi"),
                                parse_value(s["mu"], base.d, where + ".mu")))
    elif isinstance(obj, list):
        base = parse_base(p, d)
        stages = []
        for n, s in enumerate(obj):
            where = f"{field}[{n}]"
            if not isinstance(s, list) or len(s) != 3:
                raise InputError("compact stages are [phi, index, mu]", code="BAD_VALUATION",
                                 field=where)
            if s[1] != n + 1:
                raise InputError(f"stage index {s[1]!r} should be {n + 1}",
                                 code="BAD_VALUATION", field=where)
            stages.append(Stage(parse_poly(s[0], where), parse_value(s[2], base.d, where)))
    else:
        raise InputError("a valuation is an object or a list of stages",
                         code="BAD_VALUATION", field=field)
    return InductiveValuation(base, stages, strict=strict)


def valuation_to_json(V):
    out = {"format": FORMAT}
    out.update(V.to_json())
    return out


__all__ = ["FORMAT", "parse_base", "parse_poly", "parse_poly_text", "parse_valuation",
           "parse_value", "poly_to_json", "valuation_to_json"]
