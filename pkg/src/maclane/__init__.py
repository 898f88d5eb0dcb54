"""MacLane inductive valuations on Q[X] over the p-adic rationals.

Building blocks: exact values (:mod:`.scalar`), finite-field towers
(:mod:`.finitefield`), rational polynomials (:mod:`.poly`) and the base DVR
(:mod:`.basedvr`).  The valuations themselves live in :mod:`.inductive`;
:mod:`.approx` approximates valuations and computes extensions,
:mod:`.separate` separates pairs, and :mod:`.propcheck` holds the property
suites behind ``maclane selftest``.
"""

from .approx import (ApproxResult, ExtensionLeaf, ValuationOracle, approximate, extensions,
                     newton_slopes)
from .basedvr import BaseDVR
from .errors import (ContextMismatchError, InputError, InvariantError,
                     OracleInconsistencyError, PreconditionError, UnsupportedOperationError,
                     ValuationError)
from .finitefield import ExtensionField, FFPoly, FieldTower, PrimeField
from .inductive import (Comparison, InductiveValuation, ResiduePoly, Stage, equivalent,
                        first_stage, preceq)
from .poly import QPoly, phi_expand, phi_unexpand
from .scalar import INF, ExtValue, sqrt_value
from .separate import IdenticalValuationsError, SeparationCertificate, pairwise_report, separate
from .serialize import parse_poly, parse_valuation, valuation_to_json

__version__ = "0.1.0"

__all__ = [
    "ApproxResult", "BaseDVR", "Comparison", "ContextMismatchError", "ExtValue",
    "ExtensionField", "ExtensionLeaf", "FFPoly", "FieldTower", "INF", "IdenticalValuationsError",
    "InductiveValuation", "InputError", "InvariantError", "OracleInconsistencyError",
    "PreconditionError", "PrimeField", "QPoly", "ResiduePoly", "SeparationCertificate", "Stage",
    "UnsupportedOperationError", "ValuationError", "ValuationOracle", "approximate",
    "equivalent", "extensions", "first_stage", "newton_slopes", "pairwise_report",
    "parse_poly", "parse_valuation", "phi_expand", "phi_unexpand", "preceq", "separate",
    "sqrt_value", "valuation_to_json",
]
