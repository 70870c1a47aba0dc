"""Tests for the game engine: rules, reference strategies and reductions."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from fractions import Fraction

import pytest

from games import (LINE, AbsoluteToStrong, Ball, ConcentricAlice, GameConfig, GameEngine, GreedyBob,
                   InvalidConfig, LeftmostBlockAlice, MoveRecord, NotContained, OverlapsBlock, ProductSpace,
                   ProjectionMap, RandomBlockAlice, RandomBob, Space, StrategyTransfer, Transcript, free_gaps,
                   is_nested, place_ball, read_transcript, reduce_modified_to_absolute, replay, transfer_strategy,
                   validate_move, write_transcript)

HALF = Fraction(1, 2)
OPENING = Ball(Fraction(0), Fraction(1))


def test_config_constraints():
    """Parameter ranges of every variant are enforced."""
    GameConfig('classic', HALF, alpha=HALF)
    GameConfig('absolute', Fraction(1, 4))
    GameConfig('modified_absolute', Fraction(1, 6), block_count=2)

    with pytest.raises(InvalidConfig):
        GameConfig('classic', HALF)
    with pytest.raises(InvalidConfig):
        GameConfig('absolute', Fraction(1, 3))
    with pytest.raises(InvalidConfig):
        GameConfig('modified_absolute', Fraction(1, 5), block_count=2)
    with pytest.raises(InvalidConfig):
        GameConfig('chess', HALF)


def test_modified_block_scale_defaults_to_block_count():
    game = GameConfig('modified_absolute', Fraction(1, 10), block_count=3)
    assert game.block_exponent == 3
    assert game.block_scale == Fraction(1, 1000)

    single = GameConfig('modified_absolute', Fraction(1, 10), block_count=3, block_exponent=1)
    assert single.block_scale == Fraction(1, 10)


def test_classic_game_is_exact_and_nested():
    """Concentric Alice against greedy Bob shrinks by exactly alpha*beta per round."""
    game = GameConfig('classic', Fraction(1, 3), alpha=HALF)
    transcript = GameEngine().play(game, ConcentricAlice(), GreedyBob({'opening': OPENING}), rounds=8)

    assert transcript.round == 8
    assert replay(transcript)
    assert is_nested(transcript)
    radii = [ball.radius for ball in transcript.bob_balls]
    assert all(b == a * Fraction(1, 6) for a, b in zip(radii, radii[1:]))


def test_illegal_moves_are_reported():
    game = GameConfig('absolute', Fraction(1, 4))
    history = Transcript(game).extend(MoveRecord.bob(OPENING))
    block = Ball(Fraction(0), Fraction(1, 4))
    history = history.extend(MoveRecord.blocks([block]))

    overlapping = validate_move(game, history, MoveRecord.bob(Ball(Fraction(1, 8), Fraction(1, 4))))
    assert not overlapping
    assert overlapping.error is OverlapsBlock

    outside = validate_move(game, history, MoveRecord.bob(Ball(Fraction(7, 8), Fraction(1, 4))))
    assert outside.error is NotContained

    tangent = validate_move(game, history, MoveRecord.bob(Ball(Fraction(5, 8), Fraction(3, 8))))
    assert tangent


def test_wrong_player_and_resigned_games():
    game = GameConfig('absolute', Fraction(1, 4))
    empty = Transcript(game)
    assert not validate_move(game, empty, MoveRecord.blocks([]))

    resigned = empty.extend(MoveRecord.resignation('bob'))
    assert resigned.resigned
    assert not validate_move(game, resigned, MoveRecord.blocks([]))


def test_free_gaps_and_place_ball_on_the_circle():
    circle = Space.circle(Fraction(4))
    ball = Ball(Fraction(0), Fraction(1), circle)
    blocks = [Ball(Fraction(7, 2), Fraction(1, 2), circle)]

    assert free_gaps(ball, blocks) == [(Fraction(0), Fraction(1))]
    placed = place_ball(ball, blocks, Fraction(1, 4), target=Fraction(-1))
    assert placed.center == Fraction(1, 4)
    assert place_ball(ball, blocks, Fraction(3, 4)) is None


def test_seeded_games_are_deterministic():
    game = GameConfig('absolute', Fraction(1, 4))
    engine = GameEngine()

    def run(seed):
        return engine.play(game, LeftmostBlockAlice(), RandomBob({'opening': OPENING}), rounds=10, seed=seed)

    first, again, other = run(7), run(7), run(8)
    assert first.moves == again.moves
    assert first.moves != other.moves
    assert replay(first)


def test_transcript_files_restore_exact_games(tmp_path):
    game = GameConfig('modified_absolute', Fraction(1, 6), block_count=2)
    transcript = GameEngine().play(game, LeftmostBlockAlice(), GreedyBob({'opening': OPENING}), rounds=5, seed=3)

    path = write_transcript(transcript, tmp_path / 'game.jsonl')
    restored = read_transcript(path)
    assert restored.config == game
    assert restored.seed == 3
    assert restored.moves == transcript.moves


def test_modified_strategy_reduces_to_absolute():
    """The reduced strategy stays legal in the absolute game and in its hidden modified game."""
    beta = Fraction(1, 10)
    reduced = reduce_modified_to_absolute(LeftmostBlockAlice(), 2, beta)
    game = GameConfig('absolute', beta)
    transcript = GameEngine().play(game, reduced, GreedyBob({'opening': OPENING}), rounds=7)

    assert transcript.round == 7
    assert replay(transcript)
    assert replay(reduced.modified_transcript)
    assert reduced.modified_transcript.config.block_count == 2
    assert reduced.modified_transcript.round == 3


@pytest.mark.parametrize('block_count', [1, 2, 3])
@pytest.mark.parametrize('seed', range(50))
def test_reduced_random_blocks_stay_legal(block_count, seed):
    """Random modified-game blocks, replayed in the absolute game against a random Bob."""
    beta = Fraction(1, 10)
    reduced = reduce_modified_to_absolute(RandomBlockAlice(), block_count, beta)
    game = GameConfig('absolute', beta)
    transcript = GameEngine().play(game, reduced, RandomBob({'opening': OPENING}), rounds=10, seed=seed)

    assert replay(transcript)
    bob_balls = transcript.bob_balls
    for move, bob_ball in zip(transcript.alice_moves, bob_balls):
        assert len(move.balls) <= 1
        assert all(block.radius <= beta * bob_ball.radius for block in move.balls)

    hidden = reduced.modified_transcript
    assert replay(hidden)
    assert hidden.config.block_count == block_count
    for j, answer in enumerate(hidden.alice_moves):
        later = (j + 1) * block_count
        if later >= len(bob_balls):
            break
        assert not any(block.overlaps(bob_balls[later]) for block in answer.balls)


def test_absolute_strategy_plays_the_strong_game():
    inner_game = GameConfig('absolute', Fraction(1, 4))
    alice = AbsoluteToStrong(LeftmostBlockAlice(), inner_game)
    game = GameConfig('strong', HALF, alpha=HALF)
    transcript = GameEngine().play(game, alice, GreedyBob({'opening': OPENING}), rounds=6)

    assert replay(transcript)
    assert replay(alice.inner_transcript)
    assert alice.inner_transcript.round == 5
    for move, bob_ball in zip(transcript.alice_moves, transcript.bob_balls):
        assert move.ball.radius == HALF * bob_ball.radius


def test_projection_transfer_scales_radii():
    plane = ProductSpace((LINE, LINE))
    projection = ProjectionMap(plane, 1, c=HALF)
    transfer = transfer_strategy(ConcentricAlice(), projection, HALF)
    assert isinstance(transfer, StrategyTransfer)
    game = GameConfig('strong', HALF, alpha=Fraction(1, 8))
    transcript = GameEngine().play(game, transfer, GreedyBob({'opening': OPENING}), rounds=5)

    assert replay(transcript)
    assert replay(transfer.auxiliary_transcript)
    assert transfer.auxiliary_transcript.config.beta == Fraction(1, 8)
    for s, t, pushed in transfer.radius_log:
        assert t == HALF * HALF * s
        assert pushed == HALF * t


def test_projection_rejects_bad_constants():
    plane = ProductSpace((LINE, LINE))
    with pytest.raises(InvalidConfig):
        ProjectionMap(plane, 1, c=2)
    with pytest.raises(InvalidConfig):
        ProjectionMap(plane, 3)
    assert ProjectionMap(plane, 1).project((1, 2)) == 1
    assert ProjectionMap(plane, 1).lift(5, (1, 2)) == (5, 2)


def test_random_blocks_in_the_modified_game():
    game = GameConfig('modified_absolute', Fraction(1, 6), block_count=2)

    def run(seed):
        return GameEngine().play(game, RandomBlockAlice(), GreedyBob({'opening': OPENING}), rounds=6, seed=seed)

    transcript = run(4)
    assert transcript.moves == run(4).moves
    assert replay(transcript)
    assert all(len(move.balls) == 2 for move in transcript.alice_moves)
    assert all(block.radius == Fraction(1, 36) * bob_ball.radius
               for move, bob_ball in zip(transcript.alice_moves, transcript.bob_balls) for block in move.balls)
