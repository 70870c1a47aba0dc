"""Dangerous complexes of one round and where Alice blocks them.

For Bob's interval ``I`` and level ``i`` a ``beta c_i``-shrinkable complex
``K`` is *safe* when ``d(theta(K), I) > beta c_i^2 / (4 L(K) L(dK))`` and
*dangerous* when it is not safe and

    c_i^2 / (L(K) L(dK)) <= |I| < c_i^2 / (beta L(K) L(dK)).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from mpmath import mp

from complexes import (Complex, CombineParams, ComplexError, NoSigmaFound, combine, enumerate_shrinkable_complexes,
                       is_shrinkable, topologically_equivalent)
from games import Ball, numeric
from surfaces.flat_surface import parallel_map

from .constants import StrategyConstants

logger = logging.getLogger(__name__)


def boundary_product(K: Complex):
    """``L(K) L(dK)``; a complex with no boundary counts its longest edge twice."""
    boundary = K.boundary_length
    return numeric.to_mp(K.length) * numeric.to_mp(boundary if boundary is not None else K.length)


@dataclass
class LevelState:
    level: int
    dangerous: List[Complex] = field(default_factory=list)
    thetas: List[Any] = field(default_factory=list)
    center: Any = None
    diameter: Any = 0
    separated: bool = True
    unresolved: int = 0

    @property
    def empty(self) -> bool:
        return not self.dangerous


@dataclass
class RoundState:
    """Bob's interval ``I_j`` with the dangerous sets and block centres per level."""

    round: int
    interval: Ball
    levels: List[LevelState]

    @property
    def centers(self) -> List[Any]:
        return [state.center for state in self.levels]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'round': self.round,
            'center': numeric.decimal(self.interval.center, 20),
            'length': numeric.decimal(self.interval.diameter, 6),
            'levels': [{'level': s.level, 'dangerous': len(s.dangerous),
                        'block_center': numeric.decimal(s.center, 20),
                        'theta_diameter': numeric.decimal(s.diameter, 6),
                        'separated': s.separated, 'unresolved_pairs': s.unresolved} for s in self.levels],
        }


class DangerAnalyzer:
    """Computes dangerous sets from a spectrum for the blocking strategy."""

    def __init__(self, spectrum, constants: StrategyConstants, config: Dict[str, Any] = None):
        self.spectrum = spectrum
        self.surface = spectrum.surface
        self.constants = constants
        self.config = config or {}
        self.logger = logging.getLogger(self.__class__.__name__)

    def length_band(self, level: int, interval_length) -> Tuple[Any, Any]:
        """Range of ``L(K)`` a dangerous level-``level`` complex can have."""
        c2 = numeric.to_mp(self.constants.c(level)) ** 2
        beta = numeric.to_mp(self.constants.beta)
        lower = mp.sqrt(c2 / interval_length)
        if level == 1:
            upper = mp.sqrt(c2 / (beta * interval_length))
        else:
            upper = c2 / (beta * interval_length * numeric.to_mp(self.constants.systole))
        return lower, upper

    def complexes_near(self, level: int, interval: Ball, reach, lower, upper) -> List[Complex]:
        """Shrinkable level-``level`` complexes with ``theta(K)`` within ``reach`` of ``interval``."""
        shortest = numeric.to_mp(self.spectrum.shortest().length)
        if upper < shortest:
            return []
        eps = numeric.mul(self.constants.beta, self.constants.c(level))
        return enumerate_shrinkable_complexes(
            self.spectrum, eps, level, lmax=upper, window=(interval.center, interval.radius + reach),
            min_length=lower, config=self.config,
        )

    def is_safe(self, K: Complex, level: int, interval: Ball) -> bool:
        c2 = numeric.to_mp(self.constants.c(level)) ** 2
        margin = numeric.to_mp(self.constants.beta) * c2 / (4 * boundary_product(K))
        return interval.distance_to_point(K.theta_mp) > margin

    def _level_state(self, args) -> LevelState:
        level, interval = args
        length = numeric.to_mp(interval.diameter)
        c2 = numeric.to_mp(self.constants.c(level)) ** 2
        beta = numeric.to_mp(self.constants.beta)
        lower, upper = self.length_band(level, length)
        state = LevelState(level)
        for K in self.complexes_near(level, interval, length / 4, lower, upper):
            product = boundary_product(K)
            if not (c2 / product <= length < c2 / (beta * product)):
                continue
            if self.is_safe(K, level, interval):
                continue
            state.dangerous.append(K)

        space = interval.space
        if state.dangerous:
            offsets = [space.offset(interval.center, K.theta_mp) for K in state.dangerous]
            lo, hi = min(offsets), max(offsets)
            state.thetas = [K.theta_mp for K in state.dangerous]
            state.center = space.shift(interval.center, (lo + hi) / 2)
            state.diameter = hi - lo
        else:
            state.center = interval.center
        if level == self.constants.levels and len(state.dangerous) > 1:
            state.separated, state.unresolved = self.separated(state.dangerous)
        return state

    def round_state(self, round_number: int, interval: Ball) -> RoundState:
        levels = range(1, self.constants.levels + 1)
        states = parallel_map(self._level_state, [(level, interval) for level in levels])
        for state in states:
            if state.dangerous:
                self.logger.debug(f"round {round_number}: {len(state.dangerous)} dangerous complex(es) "
                                  f"at level {state.level}")
        return RoundState(round_number, interval, states)

    def separated(self, dangerous: List[Complex]) -> Tuple[bool, int]:
        """Distinct top-level dangerous complexes never combine into a ``c_(M+1)``-shrinkable one.

        Also returns how many pairs could not be combined because the
        spectrum held no suitable connection; those are not violations.
        """
        top = self.constants.c(self.constants.levels + 1)
        eps = numeric.mul(self.constants.beta, self.constants.c(self.constants.levels))
        rho = self.config.get('rho', 4)
        unresolved = 0
        for index, first in enumerate(dangerous):
            for second in dangerous[index + 1:]:
                if topologically_equivalent(first, second):
                    continue
                K1, K2 = sorted((first, second), key=lambda K: K.length)
                try:
                    merged = combine(K1, K2, CombineParams(eps, rho, rho, symmetric=True), self.spectrum)
                except NoSigmaFound as e:
                    logger.debug(f"separation check unresolved: {e}")
                    unresolved += 1
                    continue
                except ComplexError as e:
                    logger.debug(f"separation check: {e}")
                    continue
                if is_shrinkable(merged, top):
                    logger.warning(f"level {self.constants.levels} complexes {K1!r} and {K2!r} combine "
                                   f"into a c_(M+1)-shrinkable complex")
                    return False, unresolved
        return True, unresolved
