"""Separation certificates for pairs of distinct inductive valuations.

Given commensurable ``W1 != W2`` we find a common lower inductive valuation
(the floor) and an element of floor value 0 that is a unit for one input and
lies in the center of the other.

The element has the shape ``phi^N / p^M``: ``phi`` is the first key on which
the two valuations disagree and ``M/N`` is the smaller of the two values of
``phi``.
"""

from dataclasses import dataclass

from .errors import InputError, InvariantError, PreconditionError
from .inductive import Comparison, equivalent, first_stage, preceq
from .poly import QPoly, to_text


class IdenticalValuationsError(PreconditionError):
    def __init__(self, message="the two valuations are equal", field=None):
        super().__init__(message, code="IDENTICAL_VALUATIONS", field=field)


@dataclass
class SeparationCertificate:
    floor: object
    key: QPoly
    power: int
    p_exponent: int
    w1_value: object
    w2_value: object
    trace: list

    @property
    def numerator(self):
        return self.key ** self.power

    def value_under(self, V):
        """Value of the witness ``key^power / p^p_exponent`` under ``V``."""
        return V.value(self.numerator) - V.base.ev(self.p_exponent)

    def verify(self, W1, W2):
        """Recompute every claim from scratch; returns a list of failures."""
        problems = []
        if self.value_under(self.floor) != self.floor.base.ev(0):
            problems.append("floor value of the witness is not 0")
        v1, v2 = self.value_under(W1), self.value_under(W2)
        zero = W1.base.ev(0)
        if (v1, v2) != (self.w1_value, self.w2_value):
            problems.append("recorded values differ from recomputed ones")
        if not ((v1 == zero and v2 > zero) or (v2 == zero and v1 > zero)):
            problems.append(f"witness values {v1}, {v2} are not (0, >0) in some order")
        if preceq(self.floor, W1) is not Comparison.PROVEN:
            problems.append("floor is not below W1")
        if preceq(self.floor, W2) is not Comparison.PROVEN:
            problems.append("floor is not below W2")
        return problems

    def witness_text(self):
        num = to_text(self.key)
        compound = " " in num
        if self.power > 1:
            num = f"({num})^{self.power}" if compound else f"{num}^{self.power}"
        elif compound and self.p_exponent:
            num = f"({num})"
        if self.p_exponent == 0:
            return num
        p = self.floor.p
        den = f"{p}^{self.p_exponent}" if self.p_exponent != 1 else str(p)
        return f"{num} / {den}" if self.p_exponent > 0 else f"{num} * {p}^{-self.p_exponent}"

    def to_json(self):
        return {"floor": self.floor.to_json(),
                "witness": {"key": [str(c) for c in self.key.coeffs], "power": self.power,
                            "p_exponent": self.p_exponent, "text": self.witness_text()},
                "w1_value": self.w1_value.to_json(), "w2_value": self.w2_value.to_json(),
                "trace": self.trace}


def _first_disagreement(A, B):
    """First stage ``j`` of ``A`` whose key has a different value under ``B``."""
    for j in range(1, A.k + 1):
        if B.value(A.phis[j]) != A.mus[j]:
            return j
    return None


def _floor(A, j, beta):
    """Stages ``1..j-1`` of ``A`` followed by ``(phi_j, beta)`` when that is an
    augmentation; ``beta`` is at least the value of ``phi_j`` there."""
    phi = A.phis[j]
    if j == 1:
        return first_stage(A.base, beta, center=-phi[0], strict=False)
    below = A.truncate(j - 1)
    if beta == below.value(phi):
        return below
    return below.augment(phi, beta)


def separate(W1, W2):
    """A :class:`SeparationCertificate` for distinct commensurable valuations."""
    if W1.base != W2.base:
        raise PreconditionError("valuations over different bases", code="BASE_MISMATCH")
    for name, W in (("W1", W1), ("W2", W2)):
        if not W.is_commensurable:
            raise PreconditionError(f"{name} must be commensurable", code="NOT_COMMENSURABLE",
                                    field=name)
    if equivalent(W1, W2):
        raise IdenticalValuationsError()
    trace = []
    j = _first_disagreement(W1, W2)
    if j is not None:
        A, B, owner = W1, W2, "W1"
    else:
        j = _first_disagreement(W2, W1)
        A, B, owner = W2, W1, "W2"
        trace.append("all keys of W1 keep their values under W2")
    phi = A.phis[j]
    a, b = A.mus[j], B.value(phi)
    beta = min(a, b).rational()
    trace.append(f"key {j} of {owner}, {to_text(phi)}: value {a} there and {b} in the other")
    floor = _floor(A, j, beta)
    trace.append(f"floor has {floor.k} stage(s); witness value {beta} on the key")
    N = beta.denominator
    M = int(beta * N)
    cert = SeparationCertificate(floor, phi, N, M, None, None, trace)
    cert.w1_value = cert.value_under(W1)
    cert.w2_value = cert.value_under(W2)
    problems = cert.verify(W1, W2)
    if problems:
        raise InvariantError("; ".join(problems), code="INVARIANT")
    return cert


def pairwise_report(valuations):
    """Certificates for every pair ``i < j``, keyed by ``(i, j)``."""
    vals = list(valuations)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if equivalent(vals[i], vals[j]):
                raise InputError(f"entries {i} and {j} are the same valuation",
                                 code="DUPLICATE", field=f"valuations[{j}]")
    return {(i, j): separate(vals[i], vals[j])
            for i in range(len(vals)) for j in range(i + 1, len(vals))}


__all__ = ["IdenticalValuationsError", "SeparationCertificate", "pairwise_report", "separate"]
