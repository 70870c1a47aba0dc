"""Shrinkability predicates and enumeration of shrinkable complexes."""

import logging
import math
from typing import Any, Dict, List, Optional, Sequence, Tuple

from mpmath import mp

from games import numeric
from surfaces import BudgetExceeded, SaddleConnection, circle_distance
from surfaces.flat_surface import parallel_map

from .complex import Complex, epsilon_zero, is_small_complex, make_complex, rank, representative_key
from .errors import ComplexError, GammaInsideK
from .geometry import geometry_for

logger = logging.getLogger(__name__)

DEFAULT_MAX_COMPLEXES = 200_000


def _gap(a, b):
    return circle_distance(a, b, mp.pi)


def _within(gap, eps, first, second) -> bool:
    """``gap <= eps^2 / (|first| |second|)`` in mpmath."""
    e = numeric.to_mp(eps)
    bound = e * e / (numeric.to_mp(first) * numeric.to_mp(second))
    return numeric.leq(gap, bound, mp.pi)


def is_shrinkable(K: Complex, eps) -> bool:
    """Every edge beta satisfies ``|theta_beta - theta(K)| <= eps^2 / (|beta| L(K))``."""
    theta = K.theta_mp
    return all(_within(_gap(beta.theta_mp, theta), eps, beta.length, K.length) for beta in K.edges)


def jointly_shrinkable(K: Complex, gamma: SaddleConnection, eps) -> bool:
    if K.contains(gamma):
        raise GammaInsideK(f"{gamma!r} is an edge of {K!r}")
    if not is_shrinkable(K, eps):
        return False
    if gamma.length <= K.length:
        return _within(_gap(K.theta_mp, gamma.theta_mp), eps, gamma.length, K.length)
    return all(_within(_gap(gamma.theta_mp, omega.theta_mp), eps, gamma.length, omega.length)
               for omega in K.edges)


def _candidates(spectrum, window: Optional[Tuple[Any, Any]], lmax, min_length) -> List[SaddleConnection]:
    if window is not None:
        center, radius = window
        return spectrum.window(center, radius, max_length=lmax, min_length=min_length)
    return [e for e in spectrum.entries
            if e.length <= lmax and (min_length is None or e.length >= min_length)]


class _Enumerator:
    """Level-``i`` complexes whose longest edge is a given seed."""

    def __init__(self, spectrum, eps, level: int, cap: int):
        self.spectrum = spectrum
        self.surface = spectrum.surface
        self.eps = eps
        self.level = level
        self.cap = cap
        self.geometry = geometry_for(self.surface) if level > 1 else None
        self.shortest = float(spectrum.shortest().length)

    def neighbours(self, seed: SaddleConnection) -> List[SaddleConnection]:
        e = float(self.eps)
        radius = min(math.pi / 2, 1.001 * e * e / (self.shortest * float(seed.length)))
        theta = seed.theta_mp
        found = []
        for beta in self.spectrum.window(seed.theta, radius, max_length=seed.length):
            if beta.key == seed.key or rank(beta) <= rank(seed):
                continue
            if not _within(_gap(beta.theta_mp, theta), self.eps, beta.length, seed.length):
                continue
            if self.geometry.disjoint(beta, seed):
                found.append(beta)
        return found

    def __call__(self, seed: SaddleConnection) -> List[Complex]:
        if self.level == 1:
            return [make_complex(self.surface, [seed])]
        pool = self.neighbours(seed)
        results: List[Complex] = []

        def extend(chosen: List[SaddleConnection], start: int):
            if len(results) > self.cap:
                raise BudgetExceeded(len(results), self.cap)
            if len(chosen) == self.level - 1:
                try:
                    results.append(make_complex(self.surface, [seed] + chosen, self.geometry))
                except ComplexError as e:
                    logger.debug(f"skipping candidate complex: {e}")
                return
            for index in range(start, len(pool)):
                beta = pool[index]
                if all(self.geometry.disjoint(beta, other) for other in chosen):
                    extend(chosen + [beta], index + 1)

        extend([], 0)
        return results


def enumerate_shrinkable_complexes(spectrum, eps, level: int, lmax=None, window=None, min_length=None,
                                   config: Dict[str, Any] = None) -> List[Complex]:
    """All eps-shrinkable level-``level`` complexes with edges from ``spectrum`` and ``L(K) <= lmax``.

    One representative per topological class is kept, the one with the
    smallest ``L(K)``. ``window = (center, radius)`` restricts the
    direction of the longest edge.
    """
    config = config or {}
    if level < 1:
        raise ComplexError(f"level must be positive, got {level}")
    lmax = spectrum.lmax if lmax is None else lmax
    spectrum.require(lmax)
    cap = config.get('max_complexes', DEFAULT_MAX_COMPLEXES)

    seeds = _candidates(spectrum, window, lmax, min_length)
    enumerator = _Enumerator(spectrum, eps, level, cap)
    batches = parallel_map(enumerator, seeds)

    best: Dict[Any, Complex] = {}
    total = 0
    for batch in batches:
        for K in batch:
            total += 1
            if total > cap:
                raise BudgetExceeded(total, cap)
            if not is_shrinkable(K, eps):
                continue
            current = best.get(K.support)
            if current is None or representative_key(K) < representative_key(current):
                best[K.support] = K
    complexes = sorted(best.values(), key=lambda K: (K.length, K.theta))
    eps0 = epsilon_zero(spectrum.surface, config)
    oversized = sum(1 for K in complexes if not is_small_complex(K, eps0))
    if oversized:
        logger.warning(f"{oversized} complex(es) of length <= 3 eps0 = {3 * eps0:.4g} reach the triangulation bound")
    logger.debug(f"level {level}: {len(complexes)} shrinkable complexes from {len(seeds)} seeds")
    return complexes
