"""
Complexes of disjoint saddle connections, shrinkability and combination
"""

from .combine import CombineParams, check_preconditions, combine, sigma_candidates
from .complex import (Complex, blocking_levels, edges_outside, epsilon_zero, is_small_complex, level_bound,
                      make_complex, rank, representative_key, topologically_equivalent)
from .errors import (AngleSpreadExceeded, ComplexError, EdgesIntersect, GammaInsideK, LevelBoundExceeded,
                     NoSigmaFound, PreconditionViolated, UnsupportedSurface)
from .geometry import SquareTiledGeometry, Triangle, geometry_for, segment_intersection
from .shrinkable import enumerate_shrinkable_complexes, is_shrinkable, jointly_shrinkable

__all__ = [
    'CombineParams', 'check_preconditions', 'combine', 'sigma_candidates',
    'Complex', 'blocking_levels', 'edges_outside', 'epsilon_zero', 'is_small_complex', 'level_bound',
    'make_complex', 'rank', 'representative_key', 'topologically_equivalent',
    'AngleSpreadExceeded', 'ComplexError', 'EdgesIntersect', 'GammaInsideK', 'LevelBoundExceeded',
    'NoSigmaFound', 'PreconditionViolated', 'UnsupportedSurface',
    'SquareTiledGeometry', 'Triangle', 'geometry_for', 'segment_intersection',
    'enumerate_shrinkable_complexes', 'is_shrinkable', 'jointly_shrinkable',
]
