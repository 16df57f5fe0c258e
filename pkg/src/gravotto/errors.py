"""Exception hierarchy shared by all modules."""


class GravOttoError(Exception):
    """Base class for every error raised by gravotto."""


class ArgumentError(GravOttoError, ValueError):
    """An argument is outside the range the physics allows (e.g. T <= 0)."""


class DomainError(GravOttoError, ValueError):
    """A station lies on, inside, or too close to a horizon / outside the static patch."""


class NoHorizonError(DomainError):
    """A horizon-relative construction was requested for a horizonless metric."""


class OrientationError(GravOttoError, ValueError):
    """The station pair cannot refrigerate in the requested orientation."""


class UndefinedError(GravOttoError, ArithmeticError):
    """A performance coefficient is undefined for the given inputs."""
