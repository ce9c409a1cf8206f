"""Exception hierarchy shared by all cancelkit modules."""


class CancelkitError(Exception):
    """Base class for all errors raised by cancelkit."""


class ZeroInversion(CancelkitError):
    """Attempted to invert the zero element of a field."""


class ArityMismatch(CancelkitError):
    """Operands disagree on variable count or map arity."""


class RingMismatch(CancelkitError):
    """Operands live in different rings."""


class ResourceExceeded(CancelkitError):
    """A configured pair-count or degree ceiling was hit."""


class NotHomogeneous(CancelkitError):
    """Operation requires a (weighted-)homogeneous input."""


class ZeroColon(CancelkitError):
    """Colon by the zero ideal."""


class BadRegularSequence(CancelkitError):
    """Sequence fails the height criterion for a regular sequence."""


class NotSubideal(CancelkitError):
    """Expected containment between ideals does not hold."""


class NotGraded(CancelkitError):
    """Ideal is not homogeneous in the grading the operation needs."""


class NotReduction(CancelkitError):
    """J is not a verified reduction of I."""


class HypothesisFailed(CancelkitError):
    """A required hypothesis could not be certified."""


class PreconditionUnmet(CancelkitError):
    """Caller-supplied data violates an operation precondition."""


class RequiresDimensionOne(CancelkitError):
    """Witness construction only applies when dim(R/I) = 1."""


class SearchExhausted(CancelkitError):
    """Randomized search gave up after its attempt budget."""


class TheoremViolation(CancelkitError):
    """A certified instance contradicts a proved statement.

    This is never an expected outcome: it means either the hypothesis
    certification or the ideal arithmetic is wrong, and any surrounding
    suite must abort loudly.
    """


class ScriptSyntaxError(CancelkitError):
    """Script parse error, with source location."""

    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, column {col})")
        self.message = message
        self.line = line
        self.col = col
