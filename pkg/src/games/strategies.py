"""Reference strategies for both players."""

import random
from typing import Any, Dict, List, Optional

from . import numeric
from .balls import Ball, ProductSpace, free_gaps, place_ball
from .base_strategy import ALICE, BOB, BaseStrategy, GameConfig, MoveRecord, Transcript
from .errors import GameError, StrategyIllegalMove
from .rules import validate_move


class OpeningMixin:
    """Bob strategies open with a configured ball."""

    def opening_ball(self) -> Ball:
        opening = self.config.get('opening')
        if opening is None:
            raise GameError(f"{self.__class__.__name__} needs an 'opening' ball")
        return opening


def _shift_point(space, center, offsets):
    if isinstance(space, ProductSpace):
        return tuple(f.shift(c, o) for f, c, o in zip(space.factors, center, offsets))
    return space.shift(center, offsets)


class ConcentricAlice(BaseStrategy):
    """Classic/strong Alice answering with the concentric ball of ratio alpha."""

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        bob_ball = transcript.last_bob_ball
        ratio = self.config.get('ratio', game.alpha)
        return MoveRecord.alice(bob_ball.with_radius(ratio * bob_ball.radius))


class LeftmostBlockAlice(BaseStrategy):
    """Absolute-game Alice blocking the leftmost allowed subintervals."""

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        bob_ball = transcript.last_bob_ball
        radius = game.block_scale * bob_ball.radius
        blocks = []
        for k in range(game.max_blocks):
            offset = -bob_ball.radius + (2 * k + 1) * radius
            blocks.append(Ball(bob_ball.space.shift(bob_ball.center, offset), radius, bob_ball.space))
        return MoveRecord.blocks(blocks)


class RandomBlockAlice(BaseStrategy):
    """Seeded Alice placing every allowed block at a random spot of Bob's ball."""

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        bob_ball = transcript.last_bob_ball
        radius = game.block_scale * bob_ball.radius
        blocks = []
        for _ in range(game.max_blocks):
            u = numeric.random_unit(rng, bob_ball.radius)
            offset = (2 * u - 1) * bob_ball.radius
            blocks.append(Ball(bob_ball.space.shift(bob_ball.center, offset), radius, bob_ball.space))
        return MoveRecord.blocks(blocks)


class GreedyBob(OpeningMixin, BaseStrategy):
    """Fallback Bob: smallest legal ball, in the widest free gap.

    Always finds a move in absolute games with (2M+1)·beta < 1.
    """

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        previous = transcript.last_bob_ball
        if previous is None:
            return MoveRecord.bob(self.opening_ball())
        alice = transcript.last_alice_move
        if not game.is_absolute:
            return MoveRecord.bob(alice.ball.with_radius(game.beta * alice.ball.radius))
        ball = place_ball(previous, alice.balls, game.block_scale * previous.radius)
        if ball is None:
            self.logger.warning("no free gap wide enough, resigning")
            return MoveRecord.resignation(BOB)
        return MoveRecord.bob(ball)


class RandomBob(OpeningMixin, BaseStrategy):
    """Seeded random Bob for every variant.

    ``max_ratio`` caps how large Bob's ball may be relative to the ball he
    plays into (strong and absolute variants).
    """

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        previous = transcript.last_bob_ball
        if previous is None:
            return MoveRecord.bob(self.opening_ball())
        alice = transcript.last_alice_move
        max_ratio = self.config.get('max_ratio', 0.5)
        if not game.is_absolute:
            return MoveRecord.bob(self._inside(game, alice.ball, rng, max_ratio))
        return self._avoiding(game, previous, alice.balls, rng, max_ratio)

    def _inside(self, game: GameConfig, outer: Ball, rng: random.Random, max_ratio) -> Ball:
        radius = game.beta * outer.radius
        if game.variant == 'strong':
            top = max(game.beta, numeric.like(outer.radius, max_ratio))
            u = numeric.random_unit(rng, outer.radius)
            radius = (game.beta + u * (top - game.beta)) * outer.radius
        room = outer.radius - radius
        if isinstance(outer.space, ProductSpace):
            offsets = tuple((2 * numeric.random_unit(rng, outer.radius) - 1) * room
                            for _ in outer.space.factors)
        else:
            offsets = (2 * numeric.random_unit(rng, outer.radius) - 1) * room
        return Ball(_shift_point(outer.space, outer.center, offsets), radius, outer.space)

    def _avoiding(self, game: GameConfig, previous: Ball, blocks, rng: random.Random, max_ratio) -> MoveRecord:
        smallest = game.block_scale * previous.radius
        gaps = [(lo, hi) for lo, hi in free_gaps(previous, blocks) if hi - lo >= 2 * smallest]
        if not gaps:
            self.logger.warning("no free gap wide enough, resigning")
            return MoveRecord.resignation(BOB)
        lo, hi = gaps[rng.randrange(len(gaps))]
        largest = min((hi - lo) / 2, numeric.like(previous.radius, max_ratio) * previous.radius)
        if largest < smallest:
            largest = smallest
        radius = smallest + numeric.random_unit(rng, previous.radius) * (largest - smallest)
        first, last = lo + radius, hi - radius
        offset = first + numeric.random_unit(rng, previous.radius) * (last - first)
        return MoveRecord.bob(Ball(previous.space.shift(previous.center, offset), radius, previous.space))


class AbsoluteToStrong(BaseStrategy):
    """Play the strong game with an absolute-game strategy on one coordinate.

    Each round Bob's ball is projected to coordinate ``axis`` and handed to
    the wrapped strategy as its Bob move; the blocks it answers with are
    avoided by the returned ball of radius ``alpha * r``. The wrapped game's
    block ratio must not exceed alpha*beta of the strong game.
    """

    def __init__(self, inner: BaseStrategy, inner_game: GameConfig, axis: int = 0,
                 config: Dict[str, Any] = None):
        super().__init__(config)
        self.inner = inner
        self.inner_game = inner_game
        self.axis = axis
        self._inner_transcript: Optional[Transcript] = None
        self._seen: List[Ball] = []

    @property
    def inner_transcript(self) -> Optional[Transcript]:
        return self._inner_transcript

    def _project(self, ball: Ball) -> Ball:
        center = ball.center[self.axis] if isinstance(ball.space, ProductSpace) else ball.center
        return Ball(center, ball.radius, self.inner_game.space)

    def _sync(self, transcript: Transcript, rng: random.Random):
        balls = transcript.bob_balls
        if self._seen != balls[:len(self._seen)] or self._inner_transcript is None:
            self._seen = []
            self._inner_transcript = Transcript(self.inner_game, (), transcript.seed)
        for ball in balls[len(self._seen):]:
            move = MoveRecord.bob(self._project(ball))
            verdict = validate_move(self.inner_game, self._inner_transcript, move)
            if not verdict:
                raise GameError(f"projected Bob move is illegal in the wrapped game: {verdict.reason}")
            self._inner_transcript = self._inner_transcript.extend(move)
            self._seen.append(ball)

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        self._sync(transcript, rng)
        blocks = self.inner.next_move(self.inner_game, self._inner_transcript, rng)
        verdict = validate_move(self.inner_game, self._inner_transcript, blocks)
        if not verdict:
            raise StrategyIllegalMove(ALICE, self._inner_transcript.round, verdict.reason)
        self._inner_transcript = self._inner_transcript.extend(blocks)

        bob_ball = transcript.last_bob_ball
        radius = game.alpha * bob_ball.radius
        axis_ball = self._project(bob_ball)
        placed = place_ball(axis_ball, blocks.balls, radius)
        if placed is None:
            raise GameError("no alpha-ball of Bob's ball avoids the wrapped strategy's blocks")
        if isinstance(bob_ball.space, ProductSpace):
            center = list(bob_ball.center)
            center[self.axis] = placed.center
            return MoveRecord.alice(Ball(tuple(center), radius, bob_ball.space))
        return MoveRecord.alice(Ball(placed.center, radius, bob_ball.space))
