"""The unit square torus with one marked point."""

from typing import Any, Dict, List

from .flat_surface import ConePoint, FlatSurface
from .saddle import SaddleConnection
from .spectrum import LatticeSpectrum


class Torus(FlatSurface):
    """``R^2 / Z^2``; saddle connections are the primitive integer vectors."""

    kind = 'torus'

    def __init__(self, config: Dict[str, Any] = None):
        super().__init__(config)
        self.cone_points = [ConePoint('v0', 1)]

    def saddle_connections(self, lmax) -> List[SaddleConnection]:
        return self.enumerate_saddle_connections(lmax).entries

    def enumerate_saddle_connections(self, lmax) -> LatticeSpectrum:
        spectrum = LatticeSpectrum(self, lmax, self.config)
        self.logger.info(f"torus lattice spectrum up to length {spectrum.lmax}")
        return spectrum


def build_torus(config: Dict[str, Any] = None) -> Torus:
    return Torus(config)
