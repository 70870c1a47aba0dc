"""Bob strategies for the direction game."""

import random
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from games import (Ball, BaseStrategy, GameConfig, MoveRecord, RandomBob, Transcript, numeric, place_ball,
                   read_transcript, validate_move)
from games.base_strategy import BOB
from games.strategies import OpeningMixin

from .errors import UnknownBob

DEFAULT_NEAREST_RATIO = 0.125


class _ShrinkingBob(OpeningMixin, BaseStrategy):
    """Bob moving to the admissible ball of radius ``ratio * r`` nearest to a target."""

    default_ratio: Any = None

    def ratio(self, game: GameConfig):
        ratio = self.config.get('ratio', self.default_ratio)
        if ratio is None:
            return game.block_scale
        ratio = numeric.to_mp(ratio)
        return ratio if ratio >= game.block_scale else game.block_scale

    def target(self, game: GameConfig, transcript: Transcript, previous: Ball):
        raise NotImplementedError

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        previous = transcript.last_bob_ball
        if previous is None:
            return MoveRecord.bob(self.opening_ball())
        target = self.target(game, transcript, previous)
        if not game.is_absolute:
            container = transcript.last_alice_move.ball
            ball = place_ball(container, (), numeric.mul(game.beta, container.radius), target)
            return MoveRecord.bob(ball)
        blocks = transcript.last_alice_move.balls if transcript.last_alice_move else ()
        for radius in (numeric.mul(self.ratio(game), previous.radius),
                       numeric.mul(game.block_scale, previous.radius)):
            ball = place_ball(previous, blocks, radius, target)
            if ball is not None:
                return MoveRecord.bob(ball)
            self.logger.warning(f"round {transcript.round}: no room for radius {numeric.decimal(radius, 6)}")
        return MoveRecord.resignation(BOB)


class NearestDangerBob(_ShrinkingBob):
    """Heads for the connection that makes the current centre worst approximable."""

    default_ratio = DEFAULT_NEAREST_RATIO

    def __init__(self, spectrum, config: Dict[str, Any] = None):
        super().__init__(config)
        self.spectrum = spectrum

    def target(self, game: GameConfig, transcript: Transcript, previous: Ball):
        _, witness = self.spectrum.badness(previous.center)
        return witness.theta_mp


class TargetBob(_ShrinkingBob):
    """Converges to a fixed direction as fast as the rules allow."""

    def target(self, game: GameConfig, transcript: Transcript, previous: Ball):
        target = self.config.get('target')
        if target is None:
            raise UnknownBob("TargetBob needs a 'target' direction")
        return numeric.to_mp(target)


class ScriptedBob(OpeningMixin, BaseStrategy):
    """Replays Bob's balls from a script, falling back to the greedy move when one is illegal."""

    def __init__(self, balls: Sequence[Ball], config: Dict[str, Any] = None):
        super().__init__(config)
        self.balls = list(balls)

    @classmethod
    def from_file(cls, path, config: Dict[str, Any] = None) -> 'ScriptedBob':
        transcript = read_transcript(path)
        return cls(transcript.bob_balls, config)

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        index = transcript.round
        if index < len(self.balls):
            move = MoveRecord.bob(self.balls[index])
            verdict = validate_move(game, transcript, move)
            if verdict:
                return move
            self.logger.warning(f"scripted move {index + 1} is illegal ({verdict.reason}), improvising")
        previous = transcript.last_bob_ball
        if previous is None:
            return MoveRecord.bob(self.opening_ball())
        blocks = transcript.last_alice_move.balls if transcript.last_alice_move else ()
        ball = place_ball(previous, blocks, numeric.mul(game.block_scale, previous.radius))
        if ball is None:
            return MoveRecord.resignation(BOB)
        return MoveRecord.bob(ball)


def make_bob(kind: str, opening: Ball, spectrum=None, config: Dict[str, Any] = None) -> BaseStrategy:
    """Bob from a command-line kind: ``nearest``, ``random``, ``target`` or ``script:<path>``."""
    config = dict(config or {})
    config['opening'] = opening
    if kind == 'nearest':
        if spectrum is None:
            raise UnknownBob("the nearest-danger Bob needs a spectrum")
        return NearestDangerBob(spectrum, config)
    if kind == 'random':
        return RandomBob(config)
    if kind == 'target':
        return TargetBob(config)
    if kind.startswith('script:'):
        path = Path(kind.split(':', 1)[1])
        if not path.exists():
            raise UnknownBob(f"script not found: {path}")
        return ScriptedBob.from_file(path, config)
    raise UnknownBob(f"unknown Bob kind {kind!r}, expected nearest, random, target or script:<path>")
