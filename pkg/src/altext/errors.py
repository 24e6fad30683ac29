"""Shared exception types."""


class AltextError(Exception):
    """Base class for all library errors."""


class FieldMismatch(AltextError):
    """Two objects over different scalar fields were combined."""


class DimensionMismatch(AltextError):
    """A vector or map was used with an incompatible dimension."""


class LabelClash(AltextError):
    """Duplicate basis labels inside one space."""


class IndexOutOfRange(AltextError):
    """A basis index fell outside its space."""


class BadPrime(AltextError):
    """Rejected characteristic: p must be a prime other than 2 and 3."""

    def __init__(self, p: int, reason: str = ""):
        msg = f"bad prime {p}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)
        self.p = p


class NotASubalgebra(AltextError):
    """A claimed subalgebra basis is not closed under the product."""

    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"product of basis elements {pair} leaves the chosen span")
        self.pair = pair


class BudgetExceeded(AltextError):
    """An exhaustive search would exceed the caller's budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"search space of size {required} exceeds budget {budget}")
        self.required = required
        self.budget = budget


class NotADeformation(AltextError):
    """A map failed the deformation identity at the recorded witness."""

    def __init__(self, witness):
        super().__init__(f"deformation identity fails: {witness}")
        self.witness = witness


class SyntaxError(AltextError):  # noqa: A001  document grammar error, line/col addressed
    """Raised when a document is not syntactically well formed."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class SchemaError(AltextError):
    """Raised when a well-formed document violates its schema."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
