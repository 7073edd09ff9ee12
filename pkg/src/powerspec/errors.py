"""Exception hierarchy.

Every error raised by the package derives from :class:`PowerSpecError`.  The
three intermediate classes map onto the command-line exit codes: validation
problems (2), numerical failures (3) and size caps (4).
"""

from __future__ import annotations


class PowerSpecError(Exception):
    exit_code = 1


class ValidationError(PowerSpecError, ValueError):
    exit_code = 2


class NumericalError(PowerSpecError, ArithmeticError):
    exit_code = 3


class TooLarge(PowerSpecError):
    exit_code = 4


# structural validation
class NonUniformEdge(ValidationError):
    pass


class DuplicateVertexInEdge(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class VertexIdOutOfRange(ValidationError):
    pass


class InvalidOrder(ValidationError):
    pass


class EdgeNotPresent(ValidationError):
    pass


class IsolatedVertexError(ValidationError):
    pass


class NotConnected(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class PreconditionViolated(ValidationError):
    pass


class ZeroVector(ValidationError):
    pass


class ZeroEigenvalue(ValidationError):
    pass


class ZeroBase(ValidationError):
    pass


class ZeroEigenvalueQuery(ValidationError):
    pass


class UnsupportedBaseRank(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class EmptyResult(PowerSpecError):
    """A removal left no vertices; callers decide whether that is fatal."""

    exit_code = 2


# numerical failures
class ResidualTooLarge(NumericalError):
    def __init__(self, residual: float, message: str | None = None):
        super().__init__(message or f"eigen residual {residual:.3e} exceeds tolerance")
        self.residual = residual


class IterationDiverged(NumericalError):
    pass


class RelationViolated(NumericalError):
    def __init__(self, pair, deviation: float, relation: str = "copy"):
        super().__init__(f"{relation} relation violated at {pair}: deviation {deviation:.3e}")
        self.pair = pair
        self.deviation = deviation
        self.relation = relation


class LiftSearchExhausted(NumericalError):
    pass


class DescentSearchExhausted(NumericalError):
    pass


class CheckFailed(PowerSpecError):
    exit_code = 3

    def __init__(self, prop: str, seed: int, instance: str, detail: str = ""):
        msg = f"property {prop!r} failed (seed={seed})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg + "\nreproducer:\n" + instance)
        self.prop = prop
        self.seed = seed
        self.instance = instance
