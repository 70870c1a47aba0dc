"""
Flat surfaces, saddle-connection spectra and the Teichmüller flow
"""

from .errors import (BudgetExceeded, IncompleteSpectrum, IrrationalAngle, NotConnected,
                     SurfaceError, SurfaceFileError)
from .flat_surface import ConePoint, FlatSurface, primitive_directions, worker_count
from .flow import FlowParams, badness, flow_holonomy, min_flow_length, rotate, systole_along, systole_profile
from .origami import Origami, build_origami, parse_cycles
from .saddle import SaddleConnection, canonical_sign, circle_distance, direction
from .spectrum import DirectionSpectrum, LatticeSpectrum, count_primitive
from .surface_io import load_surface, parse_surface
from .torus import Torus, build_torus
from .unfolding import DihedralGroup, RationalPolygon, UnfoldedPolygon, unfold_polygon


def enumerate_saddle_connections(q: FlatSurface, Lmax) -> DirectionSpectrum:
    """Complete spectrum of ``q`` up to ``Lmax``."""
    return q.enumerate_saddle_connections(Lmax)


__all__ = [
    'BudgetExceeded', 'IncompleteSpectrum', 'IrrationalAngle', 'NotConnected',
    'SurfaceError', 'SurfaceFileError',
    'ConePoint', 'FlatSurface', 'primitive_directions', 'worker_count',
    'FlowParams', 'badness', 'flow_holonomy', 'min_flow_length', 'rotate',
    'systole_along', 'systole_profile',
    'Origami', 'build_origami', 'parse_cycles',
    'SaddleConnection', 'canonical_sign', 'circle_distance', 'direction',
    'DirectionSpectrum', 'LatticeSpectrum', 'count_primitive',
    'load_surface', 'parse_surface',
    'Torus', 'build_torus',
    'DihedralGroup', 'RationalPolygon', 'UnfoldedPolygon', 'unfold_polygon',
    'enumerate_saddle_connections',
]
