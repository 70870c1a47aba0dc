"""
Exact interval exchange transformations and their badly-approximable statistic
"""

from .errors import FieldMismatch, IETError, IETFileError, NotNormalized, Reducible
from .iet import (IET, apply, discontinuities, first_invariant_block, images, is_partition, make_iet, orbit,
                  reorder, rotation, rotation_number)
from .iet_io import load_iet, parse_iet
from .quadratic import GOLDEN, QuadraticNumber, parse_quadratic, squarefree_part
from .stats import DEFAULT_HORIZON, OrbitStats, badness_statistic, minimum_statistic, reorder_harness, statistic_table

__all__ = [
    'FieldMismatch', 'IETError', 'IETFileError', 'NotNormalized', 'Reducible',
    'IET', 'apply', 'discontinuities', 'first_invariant_block', 'images', 'is_partition', 'make_iet', 'orbit',
    'reorder', 'rotation', 'rotation_number',
    'load_iet', 'parse_iet',
    'GOLDEN', 'QuadraticNumber', 'parse_quadratic', 'squarefree_part',
    'DEFAULT_HORIZON', 'OrbitStats', 'badness_statistic', 'minimum_statistic', 'reorder_harness', 'statistic_table',
]
