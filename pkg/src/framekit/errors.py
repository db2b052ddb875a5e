"""Exception hierarchy shared by every framekit module."""


class FrameKitError(Exception):
    """Base class for all framekit errors."""


class DimensionMismatch(FrameKitError, ValueError):
    pass


class InvalidExponent(FrameKitError, ValueError):
    pass


class NotSymmetric(FrameKitError, ValueError):
    pass


class NotInvertible(FrameKitError, ArithmeticError):
    """Raised when a matrix is singular or too ill-conditioned to invert.

    For a frame operator this means the pair is not a p-ASF at the
    requested condition limit.
    """

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class NotSurjective(FrameKitError, ValueError):
    pass


class NotHilbertStyle(FrameKitError, ValueError):
    pass


class NotAFrame(FrameKitError, ValueError):
    pass


class NotInComplement(FrameKitError, ValueError):
    pass


class DegenerateComplement(UserWarning):
    """Warning: the dilation complement is {0}, so the dilation is trivial."""


class GenerationFailed(FrameKitError, RuntimeError):
    pass


class ParseError(FrameKitError, ValueError):
    pass
