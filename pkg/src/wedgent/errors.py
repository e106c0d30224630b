"""Exception hierarchy shared by all wedgent modules."""


class WedgentError(Exception):
    """Base class for every error raised by this package."""


class ArgumentError(WedgentError, ValueError):
    """An argument is out of range or of the wrong arity."""


class DimensionError(ArgumentError):
    """Amplitude count, vector length, or matrix shape disagrees with the dims."""


class DegenerateStateError(WedgentError, ValueError):
    """The state vector is zero and cannot be normalized."""


class StateFormatError(WedgentError, ValueError):
    """A serialized state document is malformed."""
