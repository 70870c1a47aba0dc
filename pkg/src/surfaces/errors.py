"""Exceptions raised while building surfaces and enumerating spectra."""


class SurfaceError(Exception):
    """Base class for flat-surface errors."""


class NotConnected(SurfaceError):
    """Square-tiled data whose permutations do not act transitively."""


class IrrationalAngle(SurfaceError):
    """A polygon angle is not a rational multiple of pi."""

    def __init__(self, vertex: int, angle):
        self.vertex = vertex
        self.angle = angle
        super().__init__(f"angle {angle!r} at vertex {vertex} is not a rational multiple of pi")


class BudgetExceeded(SurfaceError):
    """Enumeration would produce more entries than the configured cap."""

    def __init__(self, requested: int, cap: int):
        self.requested = requested
        self.cap = cap
        super().__init__(f"spectrum would hold {requested} entries, cap is {cap}")


class IncompleteSpectrum(SurfaceError):
    """A query needs saddle connections longer than the spectrum holds."""

    def __init__(self, required, available):
        self.required = required
        self.available = available
        super().__init__(f"query needs Lmax >= {required}, spectrum only reaches {available}")


class SurfaceFileError(SurfaceError):
    """Malformed surface or IET input file."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
