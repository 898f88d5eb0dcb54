"""Exception hierarchy.

Every error carries a machine-readable ``code`` and, where it makes sense,
the ``field`` that caused it.  The CLI maps the classes to exit codes.
"""


class ValuationError(Exception):
    code = "ERROR"
    exit_code = 1

    def __init__(self, message, code=None, field=None):
        super().__init__(message)
        if code is not None:
            self.code = code
        self.field = field

    def to_json(self):
        out = {"code": self.code, "message": str(self)}
        if self.field is not None:
            out["field"] = self.field
        return out


class InputError(ValuationError, ValueError):
    """Malformed or invalid input (bad argument, parse failure, zero polynomial)."""

    code = "INVALID_INPUT"
    exit_code = 2


class PreconditionError(ValuationError, ValueError):
    """Well-formed input that violates an operation's mathematical precondition."""

    code = "PRECONDITION"
    exit_code = 3


class ContextMismatchError(PreconditionError):
    code = "CONTEXT_MISMATCH"


class UnsupportedOperationError(PreconditionError):
    code = "UNSUPPORTED"


class OracleInconsistencyError(PreconditionError):
    code = "ORACLE_INCONSISTENT"


class InvariantError(ValuationError, AssertionError):
    """An internal postcondition failed.  Always a bug."""

    code = "INVARIANT"
    exit_code = 4
