"""Exceptions raised by the game engine."""


class GameError(Exception):
    """Base class for all game-engine errors."""


class InvalidConfig(GameError):
    """A game configuration violates its parameter constraints."""


class IllegalRadius(GameError):
    """A ball's radius breaks the variant's radius rule."""


class NotContained(GameError):
    """A ball is not contained in the ball it must nest in."""


class OverlapsBlock(GameError):
    """Bob's ball meets one of Alice's blocked balls."""


class StrategyIllegalMove(GameError):
    """A strategy produced a move that failed validation."""

    def __init__(self, mover: str, round_number: int, reason: str):
        self.mover = mover
        self.round = round_number
        self.reason = reason
        super().__init__(f"{mover} made an illegal move in round {round_number}: {reason}")


class LiftFailure(GameError):
    """No legal lift of Bob's ball exists in the auxiliary game."""
