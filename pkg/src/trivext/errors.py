"""Exception hierarchy shared by every module of the package."""


class AlgebraError(ValueError):
    """Base class for all errors raised by trivext."""


class InvalidRing(AlgebraError):
    pass


class InvalidModule(AlgebraError):
    pass


class InvalidElement(AlgebraError):
    pass


class Unsupported(AlgebraError):
    """The operation needs a finite ring (or some other capability) the input lacks."""


class CardinalityCapExceeded(Unsupported):
    pass


class NotAnIdeal(AlgebraError):
    pass


class InvalidMultiplicativeSet(AlgebraError):
    pass


class PreconditionViolated(AlgebraError):
    pass


class InternalError(RuntimeError):
    """A search that is guaranteed to succeed came back empty."""


class ParseError(AlgebraError):
    """Malformed ring, module or element text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)
