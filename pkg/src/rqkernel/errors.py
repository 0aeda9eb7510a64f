"""Exception hierarchy shared by the kernel modules."""

from __future__ import annotations


class KernelError(Exception):
    """Base class for every error raised by rqkernel."""


class BoundError(KernelError, ValueError):
    """A requested exponent or weight exceeds a configured bound."""


class ConsistencyError(KernelError, ArithmeticError):
    """An internal invariant failed (for example an inexact 'exact' division)."""


class EvaluationError(KernelError, ZeroDivisionError):
    """A coefficient cannot be specialized because its denominator vanishes."""


class RuleError(KernelError, ValueError):
    """A reduction rule or system violates its structural invariants."""


class UnknownIdentityError(KernelError, KeyError):
    """verify_identity was asked for a name that is not in the catalog."""


class ParseError(KernelError, ValueError):
    """Syntax or elaboration error in the surface expression language."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column
