"""Teichmüller flow on holonomy vectors and the boundedness criterion.

Rotation by theta is ``r = [[cos, sin], [-sin, cos]]`` and the flow is
``g_t = diag(e^t, e^-t)``. A saddle connection is vertical for
``r_theta`` exactly when ``theta`` is its direction ``theta_gamma``.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Iterable, List, Tuple

import numpy as np
from mpmath import mp, mpf

logger = logging.getLogger(__name__)


def _mp_mode(*values) -> bool:
    return any(isinstance(v, mpf) for v in values)


def cos_sin(theta) -> Tuple[Any, Any]:
    if _mp_mode(theta):
        return mp.cos(theta), mp.sin(theta)
    if isinstance(theta, np.ndarray):
        return np.cos(theta), np.sin(theta)
    return math.cos(theta), math.sin(theta)


def exp(t):
    if _mp_mode(t):
        return mp.exp(t)
    return math.exp(t)


def rotate(x, y, theta) -> Tuple[Any, Any]:
    """Apply ``r_theta`` to the vector ``(x, y)``."""
    c, s = cos_sin(theta)
    return x * c + y * s, -x * s + y * c


@dataclass(frozen=True)
class FlowParams:
    """Flow time ``t`` and rotation angle ``theta``."""

    t: Any = 0
    theta: Any = 0


def flow_holonomy(hol: Tuple[Any, Any], p: FlowParams) -> Tuple[Any, Any]:
    """``g_t r_theta hol``: horizontal scaled by e^t, vertical by e^-t after rotation."""
    x, y = rotate(hol[0], hol[1], p.theta)
    et = exp(p.t)
    return x * et, y / et


def min_flow_length(L, c):
    """Smallest flowed length of a connection of length L at angle c off vertical.

    ``min_t max(e^t L sin c, e^-t L cos c) = L sqrt(sin c cos c)``, reached
    at ``e^-t = sqrt(tan c)``.
    """
    if c < 0 or c > math.pi / 4 + 1e-15:
        raise ValueError(f"angle difference must lie in [0, pi/4], got {c}")
    if _mp_mode(L, c):
        return L * mp.sqrt(mp.sin(c) * mp.cos(c))
    return L * math.sqrt(math.sin(c) * math.cos(c))


def systole_along(q, theta, t, spectrum):
    """Shortest flowed saddle connection of ``q`` rotated by theta at time t.

    ``spectrum`` must belong to ``q`` and reach length ``e^t``.
    """
    if spectrum.surface is not None and q is not None and spectrum.surface is not q:
        logger.warning("spectrum was built for a different surface object")
    value, _ = spectrum.systole(theta, t)
    return value


def systole_profile(spectrum, theta, times: Iterable[Any]) -> List[Tuple[Any, Any]]:
    """``(t, systole)`` pairs along the geodesic in direction theta."""
    return [(t, spectrum.systole(theta, t)[0]) for t in times]


def badness(psi, spectrum):
    """``min |gamma|^2 d(theta_gamma, psi)`` over the spectrum, with its witness."""
    return spectrum.badness(psi)
