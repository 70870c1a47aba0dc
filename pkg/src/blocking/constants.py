"""The constants ladder ``c_1 < ... < c_{M+1}`` of the blocking strategy."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from mpmath import mp

from complexes import blocking_levels, epsilon_zero
from games import numeric
from surfaces import SurfaceError

from .errors import BetaTooLarge

logger = logging.getLogger(__name__)

MAX_BETA = Fraction(1, 12)


def exponent_sequence(levels: int) -> Tuple[int, ...]:
    """``N_1 = 6`` and ``N_(i+1) = 6 + 2 (N_1 + ... + N_i)``."""
    sequence: List[int] = []
    for _ in range(levels):
        sequence.append(6 + 2 * sum(sequence))
    return tuple(sequence)


def surface_systole(surface, start: int = 1, limit: int = 64):
    """Length of the shortest saddle connection of ``surface``."""
    lmax = start
    while lmax <= limit:
        spectrum = surface.enumerate_saddle_connections(lmax)
        if spectrum.entries:
            return spectrum.shortest().length
        lmax *= 2
    raise SurfaceError(f"no saddle connection shorter than {limit}")


@dataclass(frozen=True)
class StrategyConstants:
    """``M``, ``eps_0``, ``L_0``, ``beta``, ``N_i`` and the ladder top ``c_(M+1)``."""

    levels: int
    beta: Any
    epsilon_zero: Any
    systole: Any
    opening_length: Any
    exponents: Tuple[int, ...]
    top: Any

    def ratio(self, i: int):
        """``c_i / c_(M+1)``, exact when beta is."""
        value = self.beta ** 0
        for k in range(i, self.levels + 1):
            value = value * self.beta ** self.exponents[k - 1]
        return value

    def c(self, i: int):
        """``c_i`` for ``1 <= i <= M + 1``."""
        if not 1 <= i <= self.levels + 1:
            raise IndexError(f"ladder index {i} outside 1..{self.levels + 1}")
        return numeric.mul(self.top, self.ratio(i))

    @property
    def ladder(self) -> Tuple[Any, ...]:
        return tuple(self.c(i) for i in range(1, self.levels + 2))

    def identity_holds(self) -> bool:
        """``c_(i+1) / c_i == beta^-6 (c_i / c_1)^2`` for every ``i <= M``."""
        for i in range(1, self.levels + 1):
            lhs = self.ratio(i + 1) / self.ratio(i)
            rhs = self.beta ** -6 * (self.ratio(i) / self.ratio(1)) ** 2
            if numeric.is_exact(self.beta):
                if lhs != rhs:
                    return False
            elif not numeric.close(lhs, rhs):
                return False
        return True

    @property
    def quiet_scale(self):
        """Bob intervals longer than ``beta^(2 N_M)`` cannot violate any blocking condition."""
        return self.beta ** (2 * self.exponents[-1])

    def to_dict(self) -> Dict[str, Any]:
        return {
            'levels': self.levels,
            'beta': numeric.format_number(self.beta),
            'epsilon_zero': numeric.decimal(self.epsilon_zero),
            'systole': numeric.format_number(self.systole),
            'opening_length': numeric.decimal(self.opening_length),
            'exponents': list(self.exponents),
            'c': [{'i': i, 'value': numeric.format_number(c), 'decimal': numeric.decimal(c, 12),
                   'exactness': numeric.exactness(c)}
                  for i, c in enumerate(self.ladder, start=1)],
            'identity': self.identity_holds(),
        }


def derive_constants(surface, beta, opening_length, spectrum=None,
                     config: Dict[str, Any] = None) -> StrategyConstants:
    """Full ladder for ``surface`` from ``beta`` and the length of Bob's opening interval."""
    config = config or {}
    if not 0 < beta < MAX_BETA:
        raise BetaTooLarge(beta)
    levels = config.get('levels') or blocking_levels(surface)
    eps0 = epsilon_zero(surface, config)
    systole = spectrum.shortest().length if spectrum is not None else surface_systole(surface)
    exponents = exponent_sequence(levels)

    by_beta = numeric.mul(systole, beta ** exponents[-1])
    by_area = numeric.to_mp(systole) * mp.sqrt(numeric.to_mp(opening_length)) * eps0
    top = by_beta if numeric.to_mp(by_beta) <= by_area else by_area

    constants = StrategyConstants(levels, beta, eps0, systole, opening_length, exponents, top)
    logger.info(f"Blocking constants: M={levels}, N={exponents}, c_1={numeric.decimal(constants.c(1), 6)}, "
                f"c_(M+1)={numeric.decimal(top, 6)}")
    return constants
