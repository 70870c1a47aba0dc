"""Exceptions raised by interval exchanges and their number fields."""


class IETError(Exception):
    """Base class for interval-exchange errors."""


class Reducible(IETError):
    """The permutation fixes an initial block ``{1..k}`` with ``k < n``."""

    def __init__(self, permutation, k: int):
        self.permutation = tuple(permutation)
        self.k = k
        super().__init__(f"permutation {self.permutation} is reducible: it preserves {{1..{k}}}")


class NotNormalized(IETError):
    """Lengths that are not positive or do not sum to 1."""

    def __init__(self, message: str, total=None):
        self.total = total
        super().__init__(message)


class FieldMismatch(IETError):
    """Arithmetic between elements of two different quadratic fields."""

    def __init__(self, first: int, second: int):
        self.fields = (first, second)
        super().__init__(f"cannot mix Q(sqrt({first})) and Q(sqrt({second}))")


class IETFileError(IETError):
    """Malformed IET input file."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
