"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""


class TenfoldError(Exception):
    code = "error"


class InvalidPrimeError(TenfoldError, ValueError):
    code = "invalid_prime"


class ParseError(TenfoldError, ValueError):
    code = "parse_failure"


class ShapeError(TenfoldError, ValueError):
    code = "shape_mismatch"


class IndexRangeError(TenfoldError, IndexError):
    code = "index_out_of_range"


class BijectionError(TenfoldError, ValueError):
    code = "bijection_violation"


class DomainError(TenfoldError, ValueError):
    """Raised when an input leaves the operation's domain (e.g. a non-integral entry)."""

    code = "domain_error"


class DuplicatePrimeError(TenfoldError, ValueError):
    code = "duplicate_prime"


class FactorizationRangeError(TenfoldError, ArithmeticError):
    code = "factorization_out_of_range"


class NumericFailureError(TenfoldError, ArithmeticError):
    code = "numeric_failure"
