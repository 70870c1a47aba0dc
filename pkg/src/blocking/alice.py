"""Alice's blocking strategy for the circle game of directions."""

import random
from typing import Any, Dict, List, Optional

from mpmath import mp

from games import AbsoluteToStrong, Ball, BaseStrategy, GameConfig, MoveRecord, Space, Transcript, numeric

from .constants import StrategyConstants
from .danger import DangerAnalyzer, RoundState

DEFAULT_DPS = 80


def direction_space() -> Space:
    """The circle of directions, of period pi at the current precision."""
    return Space.circle(+mp.pi)


def blocking_game(constants: StrategyConstants, config: Dict[str, Any] = None) -> GameConfig:
    """Modified absolute game with ``M`` blocks of length ``beta |I_j|`` on the direction circle."""
    config = config or {}
    numeric.set_precision(config.get('dps', DEFAULT_DPS))
    return GameConfig('modified_absolute', numeric.to_mp(constants.beta), block_count=constants.levels,
                      block_exponent=1, space=direction_space())


def opening_interval(game: GameConfig, length, center=None) -> Ball:
    """Bob's first interval ``I_1``; centred at pi/2 unless given."""
    center = mp.pi / 2 if center is None else numeric.to_mp(center)
    return Ball(center, numeric.to_mp(length) / 2, game.space)


def alice_move(constants: StrategyConstants, state: RoundState) -> List[Ball]:
    """One block of length ``beta |I_j|`` per level, centred at that level's ``z_i(j)``."""
    interval = state.interval
    radius = numeric.mul(constants.beta, interval.radius)
    return [Ball(center, radius, interval.space) for center in state.centers]


class BlockingAlice(BaseStrategy):
    """Blocks, at every level, the directions of the complexes that are dangerous this round."""

    def __init__(self, spectrum, constants: StrategyConstants, config: Dict[str, Any] = None):
        super().__init__(config)
        self.constants = constants
        self.analyzer = DangerAnalyzer(spectrum, constants, self.config)
        self.history: List[RoundState] = []

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        interval = transcript.last_bob_ball
        state = self.analyzer.round_state(transcript.round, interval)
        self.history = [s for s in self.history if s.round < state.round] + [state]
        busy = [s.level for s in state.levels if s.dangerous]
        if busy:
            self.logger.info(f"round {state.round}: blocking dangerous complexes at level(s) {busy}")
        return MoveRecord.blocks(alice_move(self.constants, state))

    def state_for(self, round_number: int) -> Optional[RoundState]:
        for state in self.history:
            if state.round == round_number:
                return state
        return None


class NullAlice(BaseStrategy):
    """Never blocks anything."""

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        return MoveRecord.blocks([])


def strong_game(constants: StrategyConstants, alpha) -> GameConfig:
    """Strong game on the direction circle whose Bob shrinks by ``beta / alpha`` after Alice's ``alpha``.

    Bob's balls then shrink by at least ``beta`` per round, which is what the
    wrapped blocking game allows.
    """
    alpha = numeric.to_mp(alpha)
    return GameConfig('strong', numeric.to_mp(constants.beta) / alpha, alpha=alpha, space=direction_space())


def strong_blocking_alice(spectrum, constants: StrategyConstants, config: Dict[str, Any] = None) -> AbsoluteToStrong:
    """Blocking strategy playing the strong game by avoiding its blocks."""
    return AbsoluteToStrong(BlockingAlice(spectrum, constants, config), blocking_game(constants, config))
