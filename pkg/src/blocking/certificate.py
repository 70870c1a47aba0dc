"""Finite-round certificates for the blocking strategy.

Round ``j`` passes at level ``i`` when every ``beta c_i``-shrinkable
level-``i`` complex with ``L(K) L(dK) |I_j| < c_i^2`` keeps its direction
more than ``beta c_i^2 / (4 L(K) L(dK))`` away from Bob's interval ``I_j``.
The final check compares ``min |gamma|^2 d(theta_gamma, psi)`` over a
spectrum with ``beta c_1^2 / 4``.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from mpmath import mp

from complexes import Complex
from games import Transcript, numeric
from surfaces import SaddleConnection

from .constants import StrategyConstants
from .danger import DangerAnalyzer, boundary_product

logger = logging.getLogger(__name__)


@dataclass
class RoundCheck:
    """Outcome of one round at one level."""

    round: int
    level: int
    interval_length: Any
    checked: int = 0
    passed: bool = True
    quiet: bool = False
    witness: Optional[Complex] = None
    distance: Any = None
    margin: Any = None
    theta_diameter: Any = None
    diameter_ok: Optional[bool] = None
    separated: Optional[bool] = None
    unresolved_pairs: int = 0

    def to_dict(self) -> Dict[str, Any]:
        witness = self.witness.longest if self.witness is not None else None
        return {
            'round': self.round,
            'level': self.level,
            'interval_length': numeric.decimal(self.interval_length, 8),
            'quiet': self.quiet,
            'checked': self.checked,
            'passed': self.passed,
            'witness_x': None if witness is None else numeric.format_number(witness.x),
            'witness_y': None if witness is None else numeric.format_number(witness.y),
            'distance': None if self.distance is None else numeric.decimal(self.distance, 8),
            'margin': None if self.margin is None else numeric.decimal(self.margin, 8),
            'theta_diameter': None if self.theta_diameter is None else numeric.decimal(self.theta_diameter, 8),
            'diameter_ok': self.diameter_ok,
            'separated': self.separated,
            'unresolved_pairs': self.unresolved_pairs,
            'exactness': 'approx',
        }


@dataclass
class FinalBound:
    """``min |gamma|^2 d(theta_gamma, psi)`` against ``beta c_1^2 / 4``."""

    psi: Any
    value: Any
    witness: Optional[SaddleConnection]
    bound: Any
    lmax: Any

    @property
    def passed(self) -> bool:
        return self.value > self.bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            'psi': numeric.decimal(self.psi, 30),
            'value': numeric.decimal(self.value, 12),
            'bound': numeric.decimal(self.bound, 12),
            'passed': self.passed,
            'witness': None if self.witness is None else self.witness.to_dict(),
            'lmax': numeric.format_number(self.lmax),
            'exactness': 'approx',
        }


@dataclass
class Certificate:
    """Per-round, per-level results of a replayed game."""

    constants: StrategyConstants
    rounds: int
    checks: List[RoundCheck] = field(default_factory=list)
    final: Optional[FinalBound] = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_violation(self) -> Optional[RoundCheck]:
        return next((check for check in self.checks if not check.passed), None)

    @property
    def quiet_rounds(self) -> int:
        return len({check.round for check in self.checks if check.quiet})

    def to_records(self) -> List[Dict[str, Any]]:
        return [check.to_dict() for check in self.checks]

    def summary(self) -> Dict[str, Any]:
        violation = self.first_violation
        return {
            'rounds': self.rounds,
            'quiet_rounds': self.quiet_rounds,
            'passed': self.passed,
            'first_violation': None if violation is None else violation.to_dict(),
            'final': None if self.final is None else self.final.to_dict(),
        }


def _hypothesis_band(constants: StrategyConstants, level: int, length):
    c2 = numeric.to_mp(constants.c(level)) ** 2
    if level == 1:
        return mp.sqrt(c2 / length)
    return c2 / (length * numeric.to_mp(constants.systole))


def _check_level(analyzer: DangerAnalyzer, constants: StrategyConstants, round_number: int,
                 level: int, interval) -> RoundCheck:
    length = numeric.to_mp(interval.diameter)
    c2 = numeric.to_mp(constants.c(level)) ** 2
    beta = numeric.to_mp(constants.beta)
    systole = numeric.to_mp(constants.systole)
    check = RoundCheck(round_number, level, length)
    reach = beta * c2 / (4 * systole * systole)
    upper = _hypothesis_band(constants, level, length)
    for K in analyzer.complexes_near(level, interval, reach, None, upper):
        product = boundary_product(K)
        if not product * length < c2:
            continue
        check.checked += 1
        margin = beta * c2 / (4 * product)
        distance = interval.distance_to_point(K.theta_mp)
        if not distance > margin:
            check.passed = False
            check.witness, check.distance, check.margin = K, distance, margin
            break
    return check


def verify_Pj(transcript: Transcript, spectrum, constants: StrategyConstants,
              config: Dict[str, Any] = None, stop_at_first: bool = True) -> Certificate:
    """Check every round of ``transcript`` against the blocking condition.

    ``spectrum`` must reach ``c_i^2 / (L_0 |I_j|)`` for the rounds it checks;
    otherwise :class:`surfaces.IncompleteSpectrum` is raised.
    """
    config = config or {}
    analyzer = DangerAnalyzer(spectrum, constants, config)
    quiet = numeric.to_mp(constants.quiet_scale)
    beta = numeric.to_mp(constants.beta)
    balls = transcript.bob_balls
    certificate = Certificate(constants, len(balls))

    for j, interval in enumerate(balls, start=1):
        length = numeric.to_mp(interval.diameter)
        if length >= quiet:
            certificate.checks.extend(RoundCheck(j, level, length, quiet=True)
                                      for level in range(1, constants.levels + 1))
            continue
        state = analyzer.round_state(j, interval)
        for level_state in state.levels:
            check = _check_level(analyzer, constants, j, level_state.level, interval)
            check.theta_diameter = level_state.diameter
            check.diameter_ok = numeric.to_mp(level_state.diameter) < beta * length / 2
            check.separated = level_state.separated
            check.unresolved_pairs = level_state.unresolved
            certificate.checks.append(check)
            if not check.passed:
                witness = check.witness.longest
                logger.warning(f"round {j}, level {check.level}: complex along ({witness.x}, {witness.y}) "
                               f"is only {numeric.decimal(check.distance, 6)} from I_j")
        if stop_at_first and certificate.first_violation is not None:
            break

    verdict = 'passed' if certificate.passed else 'FAILED'
    logger.info(f"blocking certificate {verdict} after {len({c.round for c in certificate.checks})} "
                f"round(s), {certificate.quiet_rounds} quiet")
    return certificate


def final_certificate(psi, spectrum, constants: StrategyConstants) -> FinalBound:
    """``min |gamma|^2 d(theta_gamma, psi)`` over ``spectrum`` against ``beta c_1^2 / 4``."""
    value, witness = spectrum.badness(numeric.to_mp(psi))
    c1 = numeric.to_mp(constants.c(1))
    bound = numeric.to_mp(constants.beta) * c1 * c1 / 4
    result = FinalBound(numeric.to_mp(psi), value, witness, bound, spectrum.lmax)
    logger.info(f"final bound {numeric.decimal(value, 6)} vs {numeric.decimal(bound, 6)}: "
                f"{'passed' if result.passed else 'FAILED'}")
    return result


def certify(transcript: Transcript, spectrum, final_spectrum, constants: StrategyConstants,
            config: Dict[str, Any] = None) -> Certificate:
    """Round checks on ``spectrum`` plus the final bound at Bob's last centre on ``final_spectrum``."""
    certificate = verify_Pj(transcript, spectrum, constants, config)
    final = transcript.final_interval
    if final is not None:
        certificate.final = final_certificate(final.center, final_spectrum, constants)
    return certificate
