"""Move legality for the classic, strong, absolute and modified-absolute games."""

import logging
from dataclasses import dataclass
from typing import Optional, Type

from . import numeric
from .balls import Ball
from .base_strategy import ALICE, BOB, GameConfig, MoveRecord, Transcript
from .errors import GameError, IllegalRadius, NotContained, OverlapsBlock

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a legality check; ``error`` names the violated rule."""

    legal: bool
    reason: str = ''
    error: Optional[Type[GameError]] = None

    def __bool__(self) -> bool:
        return self.legal

    def raise_if_illegal(self):
        if not self.legal:
            raise (self.error or GameError)(self.reason)


LEGAL = Verdict(True)


def _illegal(error: Type[GameError], reason: str) -> Verdict:
    return Verdict(False, reason, error)


def _check_space(config: GameConfig, ball: Ball) -> Optional[Verdict]:
    if ball.space != config.space:
        return _illegal(GameError, f"ball lives in {ball.space}, game is played on {config.space}")
    return None


def _radius_rule(config: GameConfig, actual, reference, ratio, label: str) -> Optional[Verdict]:
    """Equality for classic, lower bound for strong."""
    expected = numeric.mul(ratio, reference)
    if config.variant == 'classic':
        if not numeric.close(actual, expected):
            return _illegal(IllegalRadius, f"{label} must equal {expected}, got {actual}")
    elif not numeric.leq(expected, actual):
        return _illegal(IllegalRadius, f"{label} must be at least {expected}, got {actual}")
    return None


def _validate_alice(config: GameConfig, bob_ball: Ball, move: MoveRecord) -> Verdict:
    if config.is_absolute:
        if len(move.balls) > config.max_blocks:
            return _illegal(GameError, f"at most {config.max_blocks} block(s) allowed, got {len(move.balls)}")
        bound = numeric.mul(config.block_scale, bob_ball.radius)
        for block in move.balls:
            problem = _check_space(config, block)
            if problem:
                return problem
            if not numeric.leq(block.radius, bound):
                return _illegal(IllegalRadius, f"block radius {block.radius} exceeds {bound}")
        return LEGAL

    if len(move.balls) != 1:
        return _illegal(GameError, "Alice must play exactly one ball")
    ball = move.ball
    problem = _check_space(config, ball)
    if problem:
        return problem
    problem = _radius_rule(config, ball.radius, bob_ball.radius, config.alpha, "|A_i|/2")
    if problem:
        return problem
    if not bob_ball.contains(ball):
        return _illegal(NotContained, "A_i must lie inside B_i")
    return LEGAL


def _validate_bob(config: GameConfig, history: Transcript, move: MoveRecord) -> Verdict:
    if len(move.balls) != 1:
        return _illegal(GameError, "Bob must play exactly one ball")
    ball = move.ball
    problem = _check_space(config, ball)
    if problem:
        return problem
    previous = history.last_bob_ball
    if previous is None:
        return LEGAL
    alice = history.last_alice_move

    if config.is_absolute:
        bound = numeric.mul(config.block_scale, previous.radius)
        if not numeric.leq(bound, ball.radius):
            return _illegal(IllegalRadius, f"|B_(i+1)|/2 must be at least {bound}, got {ball.radius}")
        if not previous.contains(ball):
            return _illegal(NotContained, "B_(i+1) must lie inside B_i")
        for block in (alice.balls if alice else ()):
            if block.overlaps(ball):
                return _illegal(OverlapsBlock, f"B_(i+1) meets the block centred at {block.center}")
        return LEGAL

    alice_ball = alice.ball
    problem = _radius_rule(config, ball.radius, alice_ball.radius, config.beta, "|B_(i+1)|/2")
    if problem:
        return problem
    if not alice_ball.contains(ball):
        return _illegal(NotContained, "B_(i+1) must lie inside A_i")
    return LEGAL


def validate_move(config: GameConfig, history: Transcript, proposed: MoveRecord) -> Verdict:
    """Check ``proposed`` against the rules of ``config`` given a legal ``history``."""
    if history.resigned:
        return _illegal(GameError, "game already ended by resignation")
    if proposed.mover != history.next_mover:
        return _illegal(GameError, f"it is {history.next_mover}'s turn, not {proposed.mover}'s")
    if proposed.resign:
        return LEGAL
    if proposed.mover == BOB:
        return _validate_bob(config, history, proposed)
    return _validate_alice(config, history.last_bob_ball, proposed)


def replay(transcript: Transcript) -> Verdict:
    """Re-validate every move of ``transcript`` against its prefix."""
    for index, move in enumerate(transcript.moves):
        verdict = validate_move(transcript.config, transcript.prefix(index), move)
        if not verdict:
            return Verdict(False, f"move {index + 1} ({move.mover}): {verdict.reason}", verdict.error)
    return LEGAL


def is_nested(transcript: Transcript) -> bool:
    """Bob's balls are totally ordered by inclusion."""
    balls = transcript.bob_balls
    return all(outer.contains(inner) for outer, inner in zip(balls, balls[1:]))
