"""Deterministic game loop."""

import logging
import random
from typing import Any, Dict

from .base_strategy import ALICE, BOB, BaseStrategy, GameConfig, Transcript
from .errors import StrategyIllegalMove
from .rules import validate_move

logger = logging.getLogger(__name__)


def player_rng(seed: int, role: str) -> random.Random:
    """Independent, reproducible random stream for one player."""
    return random.Random(f"{seed}:{role}")


class GameEngine:
    """Runs one game between two strategies and records the transcript."""

    def __init__(self, config: Dict[str, Any] = None):
        self.config = config or {}
        self.logger = logging.getLogger(self.__class__.__name__)

    def play(self, game: GameConfig, alice: BaseStrategy, bob: BaseStrategy,
             rounds: int, seed: int = 0) -> Transcript:
        """Play until Bob has made ``rounds`` moves or someone resigns."""
        if rounds < 1:
            raise ValueError("rounds must be positive")

        transcript = Transcript(game, (), seed)
        rngs = {ALICE: player_rng(seed, ALICE), BOB: player_rng(seed, BOB)}
        players = {ALICE: alice, BOB: bob}

        while True:
            mover = transcript.next_mover
            round_number = transcript.round + (1 if mover == BOB else 0)
            move = players[mover].next_move(game, transcript, rngs[mover])
            if move.mover != mover:
                raise StrategyIllegalMove(mover, round_number, f"strategy answered as {move.mover}")
            verdict = validate_move(game, transcript, move)
            if not verdict:
                self.logger.error(f"{players[mover].name} broke the rules in round {round_number}: {verdict.reason}")
                raise StrategyIllegalMove(mover, round_number, verdict.reason)
            transcript = transcript.extend(move)

            if move.resign:
                self.logger.info(f"{players[mover].name} resigned in round {round_number}")
                break
            if mover == BOB and transcript.round >= rounds:
                break

        self.logger.debug(f"{game.variant} game finished after {transcript.round} rounds (seed {seed})")
        return transcript


def play(config: GameConfig, alice: BaseStrategy, bob: BaseStrategy,
         rounds: int, seed: int = 0) -> Transcript:
    """Convenience wrapper around :class:`GameEngine`."""
    return GameEngine().play(config, alice, bob, rounds, seed)
