"""Exception hierarchy shared by the library, the CLI and the API."""


class OGSError(ValueError):
    """Base class for every error raised by this project."""

    # Process exit status used by the CLI; HTTP status used by the API.
    exit_code = 2
    http_status = 400


class ParseError(OGSError):
    """Malformed notation text, out-of-range point or duplicate point."""


class DegreeError(OGSError):
    """Invalid degree, or operands of different degrees."""


class IndexRangeError(OGSError):
    """Generator index or operation parameter outside its valid range."""


class BoundsError(OGSError):
    """Canonical-form exponent outside its bounds."""


class ParityError(OGSError):
    """An odd permutation was given where an even one is required."""

    exit_code = 3
    http_status = 422


class BudgetError(OGSError):
    """Requested degree exceeds a configured budget."""


class InternalError(OGSError):
    """A self-check failed; indicates a bug rather than bad input."""

    exit_code = 1
    http_status = 500
