"""Exception hierarchy shared by every satmon module."""


class SatmonError(Exception):
    """Base class for all errors raised by satmon."""


class DimensionMismatch(SatmonError, ValueError):
    pass


class ExponentOverflow(SatmonError, OverflowError):
    """An exponent grew beyond the configured cap."""


class NotDivisible(SatmonError, ValueError):
    pass


class InvalidMove(SatmonError, ValueError):
    pass


class ParseError(SatmonError, ValueError):
    pass


class NotApplicable(SatmonError, ValueError):
    """A closed formula was called on an ideal outside its hypotheses."""


class CapExceeded(SatmonError, RuntimeError):
    """A size or step cap was hit; this signals a resource limit, not a math result."""
