"""Exception hierarchy shared by every module of the package."""


class PseudoSysError(Exception):
    """Base class for all errors raised by this package."""


class SignalError(PseudoSysError, ValueError):
    """A signal, step function or tail was constructed from invalid data."""


class DimensionMismatch(PseudoSysError, ValueError):
    """Operands have incompatible input/state/vector dimensions."""


class UnsupportedSignal(PseudoSysError, ValueError):
    """The operation is not defined for the given tail shape.

    Raised for periodic tails where only eventually constant signals are
    supported, and for periodic tails whose common period would need an
    unreasonable number of breakpoints to unroll.
    """


class UniverseError(PseudoSysError, ValueError):
    """Duplicate universe entries or table indices out of range."""


class NoInducedSystem(PseudoSysError):
    """No signal input of the pseudo-system has a signal state."""


class MissingLimit(PseudoSysError):
    """A state has no initial (or final) value, so no state function exists."""

    def __init__(self, message, input_signal=None, state_signal=None):
        super().__init__(message)
        self.input_signal = input_signal
        self.state_signal = state_signal


class ParseError(PseudoSysError):
    """Malformed text input; carries a 1-based line and column."""

    def __init__(self, message, line=0, column=0, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")
