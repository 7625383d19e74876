"""Exception hierarchy shared by every layer of the package."""


class Gl3BetheError(Exception):
    """Base class for all package errors."""


class PoleError(Gl3BetheError, ZeroDivisionError):
    """A rational function was evaluated on one of its poles."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class GenericityError(Gl3BetheError):
    """Parameters could not be drawn (or were given) in generic position."""


class SignatureError(Gl3BetheError, ValueError):
    """Block sizes of a partition do not match the source set."""


class DuplicateError(Gl3BetheError, ValueError):
    """Two sets that must be disjoint share a value."""


class CardinalityError(Gl3BetheError, ValueError):
    """A set has the wrong number of elements for the requested formula."""


class ResourceError(Gl3BetheError):
    """The requested construction exceeds the supported size bounds."""


class DegenerateWeightError(Gl3BetheError):
    """A weight that must be divided by vanishes."""


class NoConvergence(Gl3BetheError):
    """The Bethe-root solver exhausted all starting points."""


class DegenerateRoots(Gl3BetheError):
    """Two Bethe roots collided."""
