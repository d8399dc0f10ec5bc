"""Error hierarchy shared by the library and the command line."""

from typing import ClassVar


class RankMetError(Exception):
    """Raised when an operation cannot produce a result."""

    exit_code: ClassVar[int] = 2

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class NotPrime(RankMetError):
    pass


class Reducible(RankMetError):
    pass


class NotPrimitiveModulus(RankMetError):
    pass


class FieldTooLarge(RankMetError):
    pass


class InvalidArgs(RankMetError):
    pass


class DimensionMismatch(RankMetError):
    pass


class NotContained(RankMetError):
    pass


class FullSpace(RankMetError):
    pass


class Degenerate(RankMetError):
    pass


class NotSpanning(RankMetError):
    pass


class NotScattered(RankMetError):
    pass


class NoSpanningSubspace(RankMetError):
    pass


class NotLinearOverExtension(RankMetError):
    pass


class HypothesisViolated(RankMetError):
    pass


class NotMinimalInput(RankMetError):
    pass


class ParseError(RankMetError):
    pass


class BudgetExceeded(RankMetError):
    """Raised when an enumeration would visit more objects than allowed."""

    exit_code: ClassVar[int] = 3

    def __init__(self, what: str, required: int, budget: int):
        super().__init__(
            f"Enumerating {what} needs {required} steps, budget is {budget}"
        )
        self.what = what
        self.required = required
        self.budget = budget

    def __reduce__(self):
        return type(self), (self.what, self.required, self.budget)


class InternalInconsistency(RankMetError):
    """Raised when two independent computations disagree."""

    exit_code: ClassVar[int] = 1
