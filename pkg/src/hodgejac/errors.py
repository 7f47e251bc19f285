"""Exception types shared across the package (mapped to CLI exit codes)."""


class HodgejacError(Exception):
    """Base class for errors raised deliberately by the package."""


class PreconditionError(HodgejacError, ValueError):
    """A mathematical precondition of an operation does not hold."""


class DegenerateInputError(HodgejacError):
    """The input is degenerate (for instance a singular section)."""
