"""Tests for the blocking strategy, its constants and its certificates on the torus."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from fractions import Fraction

import pytest
from mpmath import mp

from blocking import (BetaTooLarge, BlockingAlice, NullAlice, TargetBob, UnknownBob, blocking_game, certify,
                      derive_constants, exponent_sequence, final_certificate, make_bob, opening_interval,
                      strong_blocking_alice, strong_game, verify_Pj)
from games import (LINE, GameEngine, ProductSpace, ProjectionMap, StrategyTransfer, is_nested, replay)
from surfaces import Torus

BETA = Fraction(1, 16)


@pytest.fixture(scope='module')
def torus():
    return Torus()


@pytest.fixture(scope='module')
def spectrum(torus):
    return torus.enumerate_saddle_connections(1000)


@pytest.fixture(scope='module')
def reading(torus):
    return torus.enumerate_saddle_connections(10 ** 7)


@pytest.fixture(scope='module')
def constants(torus, spectrum):
    return derive_constants(torus, BETA, mp.pi / 4, spectrum=spectrum)


@pytest.fixture(scope='module')
def game(constants):
    return blocking_game(constants, {'dps': 80})


@pytest.fixture(scope='module')
def opening(game):
    return opening_interval(game, mp.pi / 4)


def test_exponent_sequence():
    assert exponent_sequence(3) == (6, 18, 54)
    assert exponent_sequence(1) == (6,)


def test_torus_constants(constants):
    """One level on the torus; the ladder is exact for rational beta."""
    assert constants.levels == 1
    assert constants.systole == 1
    assert constants.c(2) == BETA ** 6
    assert constants.c(1) == BETA ** 12
    assert constants.quiet_scale == BETA ** 12
    assert constants.identity_holds()
    assert constants.to_dict()['identity'] is True
    with pytest.raises(IndexError):
        constants.c(3)


def test_ladder_identity_on_more_levels(torus, spectrum):
    deep = derive_constants(torus, BETA, mp.pi / 4, spectrum=spectrum, config={'levels': 3})
    assert deep.exponents == (6, 18, 54)
    assert deep.identity_holds()
    ladder = deep.ladder
    assert all(a < b for a, b in zip(ladder, ladder[1:]))
    assert ladder[0] == ladder[1] * BETA ** 6


def test_beta_must_stay_below_one_twelfth(torus, spectrum):
    with pytest.raises(BetaTooLarge):
        derive_constants(torus, Fraction(1, 12), mp.pi / 4, spectrum=spectrum)


def test_blocking_game(game, constants, opening):
    assert game.variant == 'modified_absolute'
    assert game.block_count == constants.levels
    assert game.block_scale == mp.mpf(1) / 16
    assert opening.center == mp.pi / 2
    assert opening.diameter == mp.pi / 4


def test_null_alice_fails_against_a_target(game, opening, constants, reading):
    """Bob converging to the direction of (1, 0) breaks the certificate of a passive Alice."""
    bob = TargetBob({'opening': opening, 'target': mp.pi / 2})
    transcript = GameEngine().play(game, NullAlice(), bob, rounds=40)

    assert replay(transcript)
    certificate = verify_Pj(transcript, reading, constants)
    assert not certificate.passed
    witness = certificate.first_violation.witness.longest
    assert witness.holonomy == (1, 0)
    assert certificate.quiet_rounds >= 12


def test_blocking_alice_certificate(game, opening, constants, spectrum, reading):
    """Forty rounds against the nearest-danger Bob pass every round check and the final bound."""
    alice = BlockingAlice(reading, constants)
    bob = make_bob('nearest', opening, spectrum, {'ratio': 0.125})
    transcript = GameEngine().play(game, alice, bob, rounds=40)

    assert transcript.round == 40
    assert replay(transcript)
    assert is_nested(transcript)
    for move, interval in zip(transcript.alice_moves, transcript.bob_balls):
        assert len(move.balls) == constants.levels
        assert all(block.radius == interval.radius * mp.mpf(1) / 16 for block in move.balls)
    assert len(alice.history) == 39

    certificate = certify(transcript, reading, spectrum, constants)
    assert certificate.passed
    assert certificate.final is not None
    assert certificate.final.passed
    assert certificate.summary()['first_violation'] is None


def test_certificate_records(game, opening, constants, reading):
    transcript = GameEngine().play(game, BlockingAlice(reading, constants),
                                   TargetBob({'opening': opening, 'target': '1.2'}), rounds=15)
    certificate = verify_Pj(transcript, reading, constants)
    records = certificate.to_records()

    assert len(records) == 15 * constants.levels
    assert records[0]['quiet'] is True
    assert all(r['exactness'] == 'approx' for r in records)
    assert {'round', 'level', 'passed', 'witness_x', 'witness_y', 'margin', 'unresolved_pairs'} <= set(records[0])


def test_final_bound_of_the_golden_direction(constants, spectrum):
    result = final_certificate(mp.atan((1 + mp.sqrt(5)) / 2), spectrum, constants)
    assert result.passed
    assert result.witness.holonomy == (-1, 1)
    assert result.to_dict()['passed'] is True


def test_strong_game_wrapping(constants, opening, spectrum, reading):
    alpha = Fraction(1, 2)
    game = strong_game(constants, alpha)
    assert game.variant == 'strong'
    assert game.beta == mp.mpf(1) / 8

    alice = strong_blocking_alice(reading, constants)
    bob = make_bob('nearest', opening, spectrum)
    transcript = GameEngine().play(game, alice, bob, rounds=12)

    assert replay(transcript)
    assert replay(alice.inner_transcript)
    assert alice.inner_transcript.round == 11
    assert verify_Pj(alice.inner_transcript, reading, constants).passed


def test_transfer_of_the_blocking_strategy(constants, opening, spectrum, reading):
    """A strategy on circle x line pushed down by the projection still plays the direction game."""
    alpha = Fraction(1, 2)
    game = strong_game(constants, alpha)
    projection = ProjectionMap(ProductSpace((game.space, LINE)), 1, c=1)
    transfer = StrategyTransfer(strong_blocking_alice(reading, constants), projection, mp.mpf(alpha))
    bob = make_bob('nearest', opening, spectrum)
    transcript = GameEngine().play(game, transfer, bob, rounds=8)

    assert replay(transcript)
    assert replay(transfer.auxiliary_transcript)
    assert replay(transfer.alice_n.inner_transcript)
    for s, t, pushed in transfer.radius_log:
        assert pushed == t


@pytest.mark.parametrize('seed', range(20))
def test_transfer_against_random_bobs(constants, opening, spectrum, reading, seed):
    """Both games stay legal and every pushed radius is c^2 alpha times Bob's."""
    alpha, c = mp.mpf(1) / 2, 1
    game = strong_game(constants, Fraction(1, 2))
    projection = ProjectionMap(ProductSpace((game.space, LINE)), 1, c=c)
    transfer = StrategyTransfer(strong_blocking_alice(reading, constants), projection, alpha)
    bob = make_bob('random', opening, spectrum, {'max_ratio': 0.5})
    transcript = GameEngine().play(game, transfer, bob, rounds=6, seed=seed)

    assert replay(transcript)
    assert replay(transfer.auxiliary_transcript)
    assert transfer.auxiliary_transcript.config.beta == c * c * game.beta
    assert transfer.auxiliary_transcript.config.alpha == alpha
    assert len(transfer.radius_log) == len(transcript.alice_moves)
    for (s, t, pushed), move in zip(transfer.radius_log, transcript.alice_moves):
        assert abs(pushed - c * c * alpha * s) <= mp.mpf(10) ** -40 * s
        assert move.ball.radius == pushed


def test_unknown_bobs(opening, spectrum):
    with pytest.raises(UnknownBob):
        make_bob('wizard', opening, spectrum)
    with pytest.raises(UnknownBob):
        make_bob('script:/no/such/transcript.jsonl', opening, spectrum)
    with pytest.raises(UnknownBob):
        make_bob('nearest', opening, None)
