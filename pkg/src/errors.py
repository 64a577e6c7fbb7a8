"""
Exception hierarchy shared by every monodromy component.
"""


class MonodromyError(Exception):
    """Base class for all library errors."""


class AlphabetError(MonodromyError):
    """Generator index or label outside the alphabet, or alphabet mismatch."""


class CatalogError(MonodromyError):
    """Unknown curve name or genus too small for a requested curve family."""


class EvaluationError(MonodromyError):
    """A mapping class cannot be evaluated at the requested level."""


class BudgetExceeded(EvaluationError):
    """Word growth passed the configured letter budget during L2 evaluation."""

    def __init__(self, budget: int, reached: int):
        super().__init__(f"word budget {budget} exceeded ({reached} letters)")
        self.budget = budget
        self.reached = reached


class RelatorError(MonodromyError):
    """A relator could not be built or failed verification."""


class MoveError(MonodromyError):
    """A factorization move was applied with invalid arguments."""


class PipelineError(MonodromyError):
    """A construction stage failed its invariance gate."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


class SignatureError(MonodromyError):
    """Signature bookkeeping is unavailable or inconsistent."""


class PresentationError(MonodromyError):
    """Malformed presentation or missing hypothesis for a group computation."""


class SchemaError(MonodromyError):
    """Input document does not match the monodromy/1 schema."""


class UsageError(MonodromyError):
    """Command-line arguments out of range."""
