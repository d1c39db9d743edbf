"""Exception types shared across the package.

The CLI maps :class:`InputError` (and subclasses) to exit status 2.
"""


class InputError(ValueError):
    """Invalid argument or out-of-domain physical input."""


class ParseError(InputError):
    """A structured-text document could not be parsed."""


class ValidationError(InputError):
    """A parsed record violates a field constraint.

    ``field`` names the offending key (or rule) so callers can report it.
    """

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class DataError(LookupError):
    """Required reference data (parameters, defects, catalog entry) is missing."""


class NumericError(ArithmeticError):
    """A numerical procedure overflowed or produced non-finite values."""
