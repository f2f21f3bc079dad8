"""Exception hierarchy shared by all modules."""


class K3ConeError(Exception):
    """Base class for all errors raised by this package."""


class InputError(K3ConeError):
    """Malformed or inconsistent caller input (dimension mismatch, bad flags, ...)."""


class DegenerateFormError(K3ConeError):
    """A bilinear form was singular where an invertible one is required."""


class FrameError(K3ConeError):
    """A fibration frame violates one of its defining constraints."""


class DomainError(K3ConeError):
    """A vector lies outside the geometric domain of an operation."""


class CuspError(DomainError):
    """A boundary operation received (a multiple of) the cusp class itself."""


class SingularFiberError(K3ConeError):
    """Specialization hit a parameter value with vanishing discriminant."""


class ResourceError(K3ConeError):
    """A computation exceeded its configured resource budget.

    The partial result accumulated so far is attached as ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
