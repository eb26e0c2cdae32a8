"""Exceptions shared by the whole engine."""


class ToricGITError(Exception):
    """Base class for all engine errors."""


class UnboundedSolutionSet(ToricGITError):
    """The nonnegative solution set has a nontrivial recession cone."""


class UnboundedPolytope(ToricGITError):
    """A polyhedron expected to be bounded is not."""


class NotStronglyConvex(ToricGITError):
    """Operation requires a strongly convex cone."""


class NotFullDimensional(ToricGITError):
    """Operation requires a full-dimensional polytope."""


class DimensionMismatch(ToricGITError):
    """Objects live in incompatible ambient dimensions."""


class LatticeModeUnsupported(ToricGITError):
    """Operation is only defined for nonnegative-exponent generators."""


class ZeroTorusEntry(ToricGITError):
    """Torus sample points must have nonzero coordinates."""


class EmptyGeneratorList(ToricGITError):
    """Operation needs at least one generator."""


class ProblemFileError(ToricGITError):
    """A problem file failed to parse or validate."""

    def __init__(self, message, *, path=None):
        super().__init__(message)
        self.path = path
