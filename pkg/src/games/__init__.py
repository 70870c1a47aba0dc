"""
Game engine: Schmidt, strong, absolute and modified-absolute games
"""

from .balls import LINE, Ball, ProductSpace, Space, free_gaps, intersect, place_ball
from .base_strategy import ALICE, BOB, BaseStrategy, GameConfig, MoveRecord, Transcript
from .engine import GameEngine, play, player_rng
from .errors import (GameError, IllegalRadius, InvalidConfig, LiftFailure, NotContained,
                     OverlapsBlock, StrategyIllegalMove)
from .reductions import (ModifiedToAbsolute, ProjectionMap, StrategyTransfer,
                         reduce_modified_to_absolute, transfer_strategy)
from .rules import Verdict, is_nested, replay, validate_move
from .strategies import (AbsoluteToStrong, ConcentricAlice, GreedyBob, LeftmostBlockAlice,
                         RandomBlockAlice, RandomBob)
from .transcript_io import read_transcript, write_transcript

__all__ = [
    'LINE', 'Ball', 'ProductSpace', 'Space', 'free_gaps', 'intersect', 'place_ball',
    'ALICE', 'BOB', 'BaseStrategy', 'GameConfig', 'MoveRecord', 'Transcript',
    'GameEngine', 'play', 'player_rng',
    'GameError', 'IllegalRadius', 'InvalidConfig', 'LiftFailure', 'NotContained',
    'OverlapsBlock', 'StrategyIllegalMove',
    'ModifiedToAbsolute', 'ProjectionMap', 'StrategyTransfer',
    'reduce_modified_to_absolute', 'transfer_strategy',
    'Verdict', 'is_nested', 'replay', 'validate_move',
    'AbsoluteToStrong', 'ConcentricAlice', 'GreedyBob', 'LeftmostBlockAlice',
    'RandomBlockAlice', 'RandomBob',
    'read_transcript', 'write_transcript',
]
