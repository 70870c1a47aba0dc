"""Surface description files.

One ``key = value`` pair per line, ``#`` starts a comment::

    kind = origami
    h = (1 2)
    v = (1 3)

``kind`` is ``torus``, ``origami`` (with ``h`` and ``v`` in cycle
notation) or ``polygon`` (with ``angles`` as multiples of pi, e.g.
``1/2 1/4 1/4``, and optional rational ``lengths``).
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Tuple, Union

from .errors import SurfaceError, SurfaceFileError
from .flat_surface import FlatSurface
from .origami import Origami, parse_cycles
from .torus import Torus
from .unfolding import RationalPolygon, UnfoldedPolygon

logger = logging.getLogger(__name__)

KINDS = ('torus', 'origami', 'polygon')


def _parse_fractions(text: str, line: int, key: str) -> Tuple[Fraction, ...]:
    try:
        return tuple(Fraction(tok) for tok in text.replace(',', ' ').split())
    except (ValueError, ZeroDivisionError):
        raise SurfaceFileError(line, f"{key} must be rationals like 1/4, got {text!r}")


def parse_surface(text: str, config: Dict[str, Any] = None) -> FlatSurface:
    """Build a surface from the text of a surface file."""
    fields: Dict[str, Tuple[str, int]] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise SurfaceFileError(number, f"expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split('=', 1))
        if key in fields:
            raise SurfaceFileError(number, f"duplicate key {key!r}")
        fields[key] = (value, number)

    if 'kind' not in fields:
        raise SurfaceFileError(1, "missing 'kind'")
    kind, kind_line = fields['kind']
    if kind not in KINDS:
        raise SurfaceFileError(kind_line, f"unknown kind {kind!r}, expected one of {', '.join(KINDS)}")

    if kind == 'torus':
        return Torus(config)

    if kind == 'origami':
        perms = {}
        for key in ('h', 'v'):
            if key not in fields:
                raise SurfaceFileError(kind_line, f"origami needs '{key}'")
            value, number = fields[key]
            try:
                perms[key] = parse_cycles(value)
            except (SurfaceError, ValueError) as e:
                raise SurfaceFileError(number, f"bad permutation {value!r}: {e}")
        size = max(len(perms['h']), len(perms['v']))
        try:
            return Origami([x + 1 for x in perms['h']] + list(range(len(perms['h']) + 1, size + 1)),
                           [x + 1 for x in perms['v']] + list(range(len(perms['v']) + 1, size + 1)),
                           config)
        except SurfaceError as e:
            raise SurfaceFileError(kind_line, str(e))

    if 'angles' not in fields:
        raise SurfaceFileError(kind_line, "polygon needs 'angles'")
    angles_text, angles_line = fields['angles']
    angles = _parse_fractions(angles_text, angles_line, 'angles')
    lengths = None
    if 'lengths' in fields:
        lengths_text, lengths_line = fields['lengths']
        lengths = _parse_fractions(lengths_text, lengths_line, 'lengths')
    try:
        return UnfoldedPolygon(RationalPolygon(angles, lengths), config)
    except SurfaceError as e:
        raise SurfaceFileError(angles_line, str(e))


def load_surface(source: Union[str, Path], config: Dict[str, Any] = None) -> FlatSurface:
    """Surface from a file path, or the keyword ``torus``."""
    if str(source) == 'torus':
        return Torus(config)
    path = Path(source)
    if not path.exists():
        raise SurfaceError(f"surface file not found: {path}")
    surface = parse_surface(path.read_text(encoding='utf-8'), config)
    logger.info(f"Loaded {surface.kind} surface from {path}: genus {surface.genus}")
    return surface
