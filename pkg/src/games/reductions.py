"""Strategy combinators: modified-to-absolute reduction and projection transfer."""

import logging
import random
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .balls import Ball, ProductSpace, Space, intersect
from .base_strategy import ALICE, BaseStrategy, GameConfig, MoveRecord, Transcript
from .errors import GameError, InvalidConfig, LiftFailure, StrategyIllegalMove
from .rules import validate_move

logger = logging.getLogger(__name__)


class ModifiedToAbsolute(BaseStrategy):
    """Absolute-game strategy built from a modified-game strategy.

    Bob's balls ``I_1, I_(1+M), I_(1+2M), ...`` are fed to ``alice_mod`` as
    its Bob moves in the modified game with ratio ``beta ** M``. When she
    answers ``I_j`` with ``J_1..J_M`` the returned strategy plays
    ``U_j = J_1`` and then ``U_(j+k-1) = J_k ∩ I_(j+k-1)``.
    """

    def __init__(self, alice_mod: BaseStrategy, block_count: int, beta: Any,
                 config: Dict[str, Any] = None):
        super().__init__(config)
        self.alice_mod = alice_mod
        self.block_count = block_count
        self.beta = beta
        self._modified: Optional[Transcript] = None
        self._fed: List[Ball] = []

    def modified_game(self, space) -> GameConfig:
        return GameConfig('modified_absolute', beta=self.beta, block_count=self.block_count,
                          block_exponent=self.block_count, space=space)

    @property
    def modified_transcript(self) -> Optional[Transcript]:
        """The modified game Alice is secretly playing."""
        return self._modified

    def _sync(self, game: GameConfig, bob_balls: Sequence[Ball], rng: random.Random):
        sub = list(bob_balls[::self.block_count])
        if self._modified is None or self._fed != sub[:len(self._fed)]:
            self._modified = Transcript(self.modified_game(game.space), (), None)
            self._fed = []
        mod_game = self._modified.config
        for ball in sub[len(self._fed):]:
            bob_move = MoveRecord.bob(ball)
            verdict = validate_move(mod_game, self._modified, bob_move)
            if not verdict:
                raise GameError(f"Bob's subsequence is not a legal modified game: {verdict.reason}")
            self._modified = self._modified.extend(bob_move)
            answer = self.alice_mod.next_move(mod_game, self._modified, rng)
            verdict = validate_move(mod_game, self._modified, answer)
            if not verdict:
                raise StrategyIllegalMove(ALICE, self._modified.round, verdict.reason)
            self._modified = self._modified.extend(answer)
            self._fed.append(ball)

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        if game.variant != 'absolute' or game.beta != self.beta:
            raise InvalidConfig("reduced strategy plays the absolute game with its own beta")
        bob_balls = transcript.bob_balls
        self._sync(game, bob_balls, rng)

        j = len(bob_balls)
        k = (j - 1) % self.block_count
        answer = self._modified.alice_moves[-1]
        if answer.resign or k >= len(answer.balls):
            return MoveRecord.blocks([])
        block = answer.balls[k]
        if k == 0:
            return MoveRecord.blocks([block])
        clipped = intersect(block, bob_balls[-1])
        return MoveRecord.blocks([clipped] if clipped is not None else [])


def reduce_modified_to_absolute(alice_mod: BaseStrategy, M: int, beta: Any) -> ModifiedToAbsolute:
    return ModifiedToAbsolute(alice_mod, M, beta)


@dataclass(frozen=True)
class ProjectionMap:
    """Projection of an n-dimensional max-metric space onto its first m coordinates.

    ``c`` is the covering constant: ``F(B(x, r))`` contains ``B(F(x), c r)``.
    Coordinate projections satisfy this for every c in (0, 1].
    """

    source: Any
    target_dim: int
    c: Any = 1

    def __post_init__(self):
        if not 0 < self.c <= 1:
            raise InvalidConfig(f"covering constant must lie in (0, 1], got {self.c}")
        if not 1 <= self.target_dim <= self.source_dim:
            raise InvalidConfig("target dimension must lie between 1 and the source dimension")

    @property
    def factors(self) -> Tuple[Space, ...]:
        return self.source.factors if isinstance(self.source, ProductSpace) else (self.source,)

    @property
    def source_dim(self) -> int:
        return len(self.factors)

    @property
    def target(self):
        if self.target_dim == 1:
            return self.factors[0]
        return ProductSpace(self.factors[:self.target_dim])

    def _coords(self, point) -> Tuple[Any, ...]:
        return tuple(point) if isinstance(point, tuple) else (point,)

    def _pack(self, coords: Sequence[Any], space):
        return tuple(coords) if isinstance(space, ProductSpace) else coords[0]

    def project(self, point):
        return self._pack(self._coords(point)[:self.target_dim], self.target)

    def lift(self, point, anchor):
        """A preimage of ``point`` agreeing with ``anchor`` off the first m coordinates."""
        coords = self._coords(point) + self._coords(anchor)[self.target_dim:]
        return self._pack(coords, self.source)


class StrategyTransfer(BaseStrategy):
    """Strong-game strategy in the target of a projection, from one in its source.

    ``alice_n`` must win the auxiliary (alpha, c²beta) strong game upstairs;
    the result plays the (c²alpha, beta) strong game downstairs. Bob's ball
    ``B(z, s)`` is lifted to ``B(z', c s)``, Alice's answer ``B(x, t)`` is
    pushed down to ``B(F(x), c t)``.
    """

    def __init__(self, alice_n: BaseStrategy, projection: ProjectionMap, alpha: Any,
                 config: Dict[str, Any] = None):
        super().__init__(config)
        self.alice_n = alice_n
        self.projection = projection
        self.alpha = alpha
        self._aux: Optional[Transcript] = None
        self._seen: List[Ball] = []
        self.radius_log: List[Tuple[Any, Any, Any]] = []

    @property
    def auxiliary_transcript(self) -> Optional[Transcript]:
        return self._aux

    def auxiliary_game(self, game: GameConfig) -> GameConfig:
        c = self.projection.c
        return GameConfig('strong', alpha=self.alpha, beta=c * c * game.beta, space=self.projection.source)

    def _anchor(self):
        aux_alice = self._aux.last_alice_move
        if aux_alice is not None:
            return aux_alice.ball.center
        base = self.config.get('anchor')
        if base is not None:
            return base
        zeros = tuple(0 * f.scale() for f in self.projection.factors)
        return zeros if isinstance(self.projection.source, ProductSpace) else zeros[0]

    def _lift(self, ball: Ball) -> Ball:
        c = self.projection.c
        lifted = Ball(self.projection.lift(ball.center, self._anchor()), c * ball.radius,
                      self.projection.source)
        move = MoveRecord.bob(lifted)
        verdict = validate_move(self._aux.config, self._aux, move)
        if not verdict:
            raise LiftFailure(f"no legal lift of Bob's ball centred at {ball.center}: {verdict.reason}")
        return lifted

    def next_move(self, game: GameConfig, transcript: Transcript, rng: random.Random) -> MoveRecord:
        if game.variant != 'strong':
            raise InvalidConfig("transferred strategies play the strong game")
        balls = transcript.bob_balls
        if self._aux is None or self._seen != balls[:len(self._seen)] or len(balls) != len(self._seen) + 1:
            if self._seen and self._seen == balls[:len(self._seen)]:
                raise GameError("transfer strategy skipped a round")
            self._aux = Transcript(self.auxiliary_game(game), (), transcript.seed)
            self._seen = []
            self.radius_log = []

        bob_ball = balls[-1]
        lifted = self._lift(bob_ball)
        self._aux = self._aux.extend(MoveRecord.bob(lifted))

        answer = self.alice_n.next_move(self._aux.config, self._aux, rng)
        verdict = validate_move(self._aux.config, self._aux, answer)
        if not verdict:
            raise LiftFailure(f"auxiliary strategy broke its contract: {verdict.reason}")
        self._aux = self._aux.extend(answer)
        self._seen.append(bob_ball)

        t = answer.ball.radius
        c = self.projection.c
        self.radius_log.append((bob_ball.radius, t, c * t))
        return MoveRecord.alice(Ball(self.projection.project(answer.ball.center), c * t,
                                     self.projection.target))


def transfer_strategy(alice_n: BaseStrategy, proj: ProjectionMap, alpha: Any) -> StrategyTransfer:
    return StrategyTransfer(alice_n, proj, alpha)
