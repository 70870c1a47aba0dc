"""Game configuration, move records, transcripts and the strategy base class."""

import logging
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple

from . import numeric
from .balls import LINE, Ball
from .errors import InvalidConfig

logger = logging.getLogger(__name__)

VARIANTS = ('classic', 'strong', 'absolute', 'modified_absolute')
ALICE = 'alice'
BOB = 'bob'


@dataclass(frozen=True)
class GameConfig:
    """Variant and parameters of one game.

    ``block_exponent`` only matters for ``modified_absolute``: Alice's blocks
    and Bob's minimum radius scale with ``beta ** block_exponent`` (defaults
    to ``block_count``).
    """

    variant: str
    beta: Any
    alpha: Any = None
    block_count: int = 1
    block_exponent: Optional[int] = None
    space: Any = LINE

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise InvalidConfig(f"unknown variant {self.variant!r}")
        if not 0 < self.beta < 1:
            raise InvalidConfig(f"beta must lie in (0, 1), got {self.beta}")
        if self.variant in ('classic', 'strong'):
            if self.alpha is None or not 0 < self.alpha < 1:
                raise InvalidConfig(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.variant == 'absolute' and not 3 * self.beta < 1:
            raise InvalidConfig(f"absolute game requires beta < 1/3, got {self.beta}")
        if self.variant == 'modified_absolute':
            if self.block_count < 1:
                raise InvalidConfig(f"block count must be positive, got {self.block_count}")
            if not (2 * self.block_count + 1) * self.beta < 1:
                raise InvalidConfig(
                    f"modified game requires (2M+1)*beta < 1, got M={self.block_count}, beta={self.beta}"
                )
            if self.block_exponent is None:
                object.__setattr__(self, 'block_exponent', self.block_count)
            elif self.block_exponent < 1:
                raise InvalidConfig("block exponent must be positive")

    @property
    def is_absolute(self) -> bool:
        return self.variant in ('absolute', 'modified_absolute')

    @property
    def max_blocks(self) -> int:
        return self.block_count if self.variant == 'modified_absolute' else 1

    @property
    def block_scale(self) -> Any:
        """Ratio bounding Alice's blocks and Bob's shrinkage in absolute variants."""
        if self.variant == 'modified_absolute':
            return self.beta ** self.block_exponent
        return self.beta

    def to_dict(self) -> Dict[str, Any]:
        return {
            'variant': self.variant,
            'alpha': None if self.alpha is None else numeric.format_number(self.alpha),
            'beta': numeric.format_number(self.beta),
            'block_count': self.block_count,
            'block_exponent': self.block_exponent,
            'space': self.space.to_dict(),
        }


@dataclass(frozen=True)
class MoveRecord:
    """One move: Bob's ball, Alice's ball, or Alice's list of blocks."""

    mover: str
    balls: Tuple[Ball, ...] = ()
    resign: bool = False

    @classmethod
    def bob(cls, ball: Ball) -> 'MoveRecord':
        return cls(BOB, (ball,))

    @classmethod
    def alice(cls, ball: Ball) -> 'MoveRecord':
        return cls(ALICE, (ball,))

    @classmethod
    def blocks(cls, balls) -> 'MoveRecord':
        return cls(ALICE, tuple(balls))

    @classmethod
    def resignation(cls, mover: str) -> 'MoveRecord':
        return cls(mover, (), True)

    @property
    def ball(self) -> Ball:
        return self.balls[0]

    def __repr__(self):
        if self.resign:
            return f"MoveRecord({self.mover}, resign)"
        return f"MoveRecord({self.mover}, {len(self.balls)} ball(s))"


@dataclass(frozen=True)
class Transcript:
    """Immutable, replayable move history of one game."""

    config: GameConfig
    moves: Tuple[MoveRecord, ...] = field(default_factory=tuple)
    seed: Optional[int] = None

    def extend(self, move: MoveRecord) -> 'Transcript':
        return replace(self, moves=self.moves + (move,))

    def prefix(self, length: int) -> 'Transcript':
        return replace(self, moves=self.moves[:length])

    @property
    def next_mover(self) -> str:
        return BOB if len(self.moves) % 2 == 0 else ALICE

    @property
    def bob_balls(self) -> List[Ball]:
        return [m.ball for m in self.moves if m.mover == BOB and not m.resign]

    @property
    def alice_moves(self) -> List[MoveRecord]:
        return [m for m in self.moves if m.mover == ALICE and not m.resign]

    @property
    def round(self) -> int:
        """Number of Bob moves made so far."""
        return len(self.bob_balls)

    @property
    def last_bob_ball(self) -> Optional[Ball]:
        balls = self.bob_balls
        return balls[-1] if balls else None

    @property
    def last_alice_move(self) -> Optional[MoveRecord]:
        moves = self.alice_moves
        return moves[-1] if moves else None

    @property
    def final_interval(self) -> Optional[Ball]:
        return self.last_bob_ball

    @property
    def resigned(self) -> bool:
        return bool(self.moves) and self.moves[-1].resign


class BaseStrategy(ABC):
    """Abstract base class for all strategies.

    A strategy maps (game config, transcript so far, seeded rng) to its next
    move. Same inputs must give the same output.
    """

    def __init__(self, config: Dict[str, Any] = None):
        self.config = config or {}
        self.logger = logging.getLogger(self.__class__.__name__)

    @abstractmethod
    def next_move(self, game: GameConfig, transcript: Transcript,
                  rng: random.Random) -> MoveRecord:
        """Return the next move for the player this strategy controls."""
        pass

    @property
    def name(self) -> str:
        return self.__class__.__name__
