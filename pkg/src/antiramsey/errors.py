"""Exception types shared across the package."""


class ArcError(Exception):
    """Base class for all package errors."""


class InvalidInput(ArcError, ValueError):
    """Malformed or infeasible arguments.

    ``line`` is set when the error comes from parsing a coloring file.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotCovered(ArcError):
    """No closed form is known for the requested (motif, n, s) combination."""


class NotFound(ArcError):
    """A constructive procedure ran out of material before meeting its quota."""

    def __init__(self, message, partial=()):
        super().__init__(message)
        self.partial = list(partial)


class ResourceLimit(ArcError):
    """A configured work budget would be exceeded."""


class CertificateRefuted(ArcError):
    """A claimed rainbow-free coloring turned out to contain a rainbow copy."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
