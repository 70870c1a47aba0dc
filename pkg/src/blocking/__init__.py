"""
Alice's blocking strategy for the direction game and its certificates
"""

from .alice import (DEFAULT_DPS, BlockingAlice, NullAlice, alice_move, blocking_game, direction_space, opening_interval,
                    strong_blocking_alice, strong_game)
from .bobs import NearestDangerBob, ScriptedBob, TargetBob, make_bob
from .certificate import Certificate, FinalBound, RoundCheck, certify, final_certificate, verify_Pj
from .constants import MAX_BETA, StrategyConstants, derive_constants, exponent_sequence, surface_systole
from .danger import DangerAnalyzer, LevelState, RoundState, boundary_product
from .errors import BetaTooLarge, BlockingError, UnknownBob

__all__ = [
    'DEFAULT_DPS', 'BlockingAlice', 'NullAlice', 'alice_move', 'blocking_game', 'direction_space',
    'opening_interval', 'strong_blocking_alice', 'strong_game',
    'NearestDangerBob', 'ScriptedBob', 'TargetBob', 'make_bob',
    'Certificate', 'FinalBound', 'RoundCheck', 'certify', 'final_certificate', 'verify_Pj',
    'MAX_BETA', 'StrategyConstants', 'derive_constants', 'exponent_sequence', 'surface_systole',
    'DangerAnalyzer', 'LevelState', 'RoundState', 'boundary_product',
    'BetaTooLarge', 'BlockingError', 'UnknownBob',
]
