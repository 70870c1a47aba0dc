"""Combining two comparable shrinkable complexes into one of higher level.

The new edge is found by searching the spectrum for a connection disjoint
from the first complex whose components, measured in the frame of that
complex, stay within the holonomy bounds that the surgery construction
guarantees. With ``theta = theta(K1)`` and ``L1 = L(K1)`` those bounds read

    h_theta(sigma) <= h_theta(gamma) + 3 eps^2 / L1
    v_theta(sigma) <= v_theta(gamma) + 3 L1

where ``gamma`` is an edge of the second complex missing from the first.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List

from mpmath import mp

from games import numeric
from surfaces import SaddleConnection, circle_distance

from .complex import Complex, make_complex, topologically_equivalent
from .errors import ComplexError, NoSigmaFound, PreconditionViolated
from .geometry import geometry_for
from .shrinkable import is_shrinkable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CombineParams:
    """``eps`` and the length ratios; ``symmetric`` allows ``L(K2) < L(K1)``."""

    eps: Any
    rho1: Any
    rho2: Any
    symmetric: bool = False

    def __post_init__(self):
        if not (self.rho1 > 3 and self.rho2 > 3):
            raise PreconditionViolated(f"rho1 and rho2 must exceed 3, got {self.rho1}, {self.rho2}")
        if not self.eps > 0:
            raise PreconditionViolated(f"eps must be positive, got {self.eps}")

    @property
    def rho_star(self):
        return max(self.rho1, self.rho2) if self.symmetric else self.rho1

    def rho2_prime(self, L1):
        e, L, r = numeric.to_mp(self.eps), numeric.to_mp(L1), numeric.to_mp(self.rho_star)
        return mp.sqrt(4 * numeric.to_mp(self.rho2) ** 2 + 9 * r ** 2 * e ** 4 / L ** 4)

    def eps_prime(self, L1):
        factor = 8 * numeric.to_mp(self.rho_star) if self.symmetric else 16 * numeric.to_mp(self.rho1)
        return mp.sqrt(factor * self.rho2_prime(L1)) * numeric.to_mp(self.eps)

    def to_dict(self, L1=None) -> Dict[str, Any]:
        data = {'eps': float(self.eps), 'rho1': float(self.rho1), 'rho2': float(self.rho2),
                'symmetric': self.symmetric}
        if L1 is not None:
            data.update({'rho2_prime': float(self.rho2_prime(L1)), 'eps_prime': float(self.eps_prime(L1))})
        return data


def check_preconditions(K1: Complex, K2: Complex, params: CombineParams):
    """Raise PreconditionViolated unless ``K1`` and ``K2`` can be combined."""
    eps = params.eps
    if K1.surface is not K2.surface:
        raise PreconditionViolated("complexes live on different surfaces")
    if K1.level != K2.level:
        raise PreconditionViolated(f"levels differ: {K1.level} and {K2.level}")
    if topologically_equivalent(K1, K2):
        raise PreconditionViolated("complexes are topologically equivalent")
    for K in (K1, K2):
        if not is_shrinkable(K, eps):
            raise PreconditionViolated(f"{K!r} is not {float(eps):g}-shrinkable")

    L1, L2 = numeric.to_mp(K1.length), numeric.to_mp(K2.length)
    rho2 = numeric.to_mp(params.rho2)
    if params.symmetric:
        if not (L1 / rho2 <= L2 < rho2 * L1):
            raise PreconditionViolated(f"lengths {float(L1):g}, {float(L2):g} are not comparable")
    elif not (L1 <= L2 < rho2 * L1):
        raise PreconditionViolated(f"need L(K1) <= L(K2) < rho2 L(K1), got {float(L1):g}, {float(L2):g}")

    e = numeric.to_mp(eps)
    gap = circle_distance(K1.theta_mp, K2.theta_mp, mp.pi)
    if not gap < numeric.to_mp(params.rho1) * e * e / (L1 * L2):
        raise PreconditionViolated(f"directions differ by {float(gap):.3g}, too far apart")


def sigma_candidates(K1: Complex, gamma: SaddleConnection, params: CombineParams, spectrum,
                     max_length) -> List[SaddleConnection]:
    """Spectrum entries within the holonomy bounds, shortest first, ``gamma`` leading."""
    theta = K1.theta_mp
    L1 = numeric.to_mp(K1.length)
    e = numeric.to_mp(params.eps)
    h_bound = gamma.h_theta(theta) + 3 * e * e / L1
    v_bound = gamma.v_theta(theta) + 3 * L1

    shortest = float(spectrum.shortest().length)
    radius = math.pi / 2 if h_bound >= shortest else float(mp.asin(h_bound / shortest)) * 1.001
    found = []
    for sigma in spectrum.window(K1.theta, radius, max_length=max_length):
        if sigma.key == gamma.key or K1.contains(sigma):
            continue
        if numeric.leq(sigma.h_theta(theta), h_bound, L1) and numeric.leq(sigma.v_theta(theta), v_bound, L1):
            found.append(sigma)
    found.sort(key=lambda s: (s.length, s.theta))
    if not K1.contains(gamma):
        found.insert(0, gamma)
    return found


def combine(K1: Complex, K2: Complex, params: CombineParams, spectrum) -> Complex:
    """``K1`` plus one disjoint edge, eps'-shrinkable with ``L(K') < rho2' L(K1)``."""
    check_preconditions(K1, K2, params)
    missing = sorted((e for e in K2.edges if not K1.contains(e)), key=lambda e: (e.length, e.theta))
    if not missing:
        raise PreconditionViolated("every edge of K2 already lies in K1")
    gamma = missing[0]

    L1 = K1.length
    rho2_prime = params.rho2_prime(L1)
    eps_prime = params.eps_prime(L1)
    limit = rho2_prime * numeric.to_mp(L1)
    max_length = min(limit, numeric.to_mp(spectrum.lmax))
    geometry = geometry_for(K1.surface)

    for sigma in sigma_candidates(K1, gamma, params, spectrum, max_length):
        if not all(geometry.disjoint(sigma, edge) for edge in K1.edges):
            continue
        try:
            combined = make_complex(K1.surface, list(K1.edges) + [sigma], geometry)
        except ComplexError as e:
            logger.debug(f"sigma {sigma!r} rejected: {e}")
            continue
        if combined.level != K1.level + 1 or not numeric.to_mp(combined.length) < limit:
            continue
        if not is_shrinkable(combined, eps_prime):
            continue
        logger.info(f"combined level {K1.level} complexes with {sigma!r}: "
                    f"eps' = {float(eps_prime):.6g}, L(K') = {float(combined.length):.6g}")
        return combined

    raise NoSigmaFound(f"no admissible sigma for {K1!r} and {K2!r} below length {float(limit):.6g}",
                       lmax=spectrum.lmax)
