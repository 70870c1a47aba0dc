"""Exceptions raised while building and combining complexes."""


class ComplexError(Exception):
    """Base class for complex errors."""


class UnsupportedSurface(ComplexError):
    """Complex geometry is only available on square-tiled surfaces."""


class EdgesIntersect(ComplexError):
    """Two proposed edges cross away from the marked points."""

    def __init__(self, first, second, point=None):
        self.first = first
        self.second = second
        self.point = point
        where = f" at {point}" if point is not None else ''
        super().__init__(f"{first!r} and {second!r} intersect{where}")


class AngleSpreadExceeded(ComplexError):
    """An edge is more than pi/4 away from the direction of the complex."""

    def __init__(self, edge, theta, spread):
        self.edge = edge
        self.theta = theta
        self.spread = spread
        super().__init__(f"{edge!r} is {spread:.6f} away from theta(K) = {theta:.6f}")


class LevelBoundExceeded(ComplexError):
    """More edges than a triangulation of the surface can have."""

    def __init__(self, level: int, bound: int):
        self.level = level
        self.bound = bound
        super().__init__(f"level {level} exceeds the bound {bound} for this surface")


class GammaInsideK(ComplexError):
    """Joint shrinkability asked for an edge that already belongs to the complex."""


class PreconditionViolated(ComplexError):
    """Inputs to combine do not satisfy its hypotheses."""


class NoSigmaFound(ComplexError):
    """No admissible new edge was found in the available spectrum."""

    def __init__(self, message: str, lmax=None):
        self.lmax = lmax
        if lmax is not None:
            message = f"{message} (spectrum reaches {lmax})"
        super().__init__(message)
