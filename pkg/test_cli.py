"""End-to-end tests of the schmidt_flat command line."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

import json

import pandas as pd
import pytest
import yaml

from schmidt_flat import SchmidtFlat, build_parser, main, parse_direction


@pytest.fixture
def config_file(tmp_path):
    config = {
        'numerics': {'mode': 'exact', 'dps': 50},
        'game': {'beta': '1/16', 'rounds': 6, 'seed': 0, 'opening_length': '1/4', 'opening_center': '1/2'},
        'bobs': {'nearest': {'ratio': 0.125}, 'random': {'max_ratio': 0.5}},
        'blocking': {'lmax': 50, 'alice_lmax': 10000},
        'iet': {'horizon': 100},
        'logging': {'level': 'INFO', 'file': str(tmp_path / 'logs' / 'test.log')},
    }
    path = tmp_path / 'config.yaml'
    path.write_text(yaml.safe_dump(config))
    return path


def run(config_file, out, *argv):
    args = build_parser().parse_args(['--config', str(config_file), '--out', str(out), *argv])
    return SchmidtFlat(args.config, args.out).run(args)


def read_json(path):
    with open(path) as f:
        return json.load(f)


def test_parse_direction():
    assert float(parse_direction('golden')) == pytest.approx(1.0172219678978514)
    assert float(parse_direction('0.5')) == 0.5


def test_spectrum_command(config_file, tmp_path):
    out = tmp_path / 'spectrum'
    assert run(config_file, out, 'spectrum', '--surface', 'torus', '--lmax', '3') == 0

    table = pd.read_csv(out / 'spectrum.csv')
    assert len(table) == 16
    summary = read_json(out / 'spectrum_summary.json')
    assert summary['entries'] == 16
    assert summary['systole'] == '1'


def test_badness_of_the_golden_direction(config_file, tmp_path):
    out = tmp_path / 'badness'
    assert run(config_file, out, 'badness', '--surface', 'torus', '--lmax', '1000', '--psi', 'golden') == 0

    summary = read_json(out / 'badness_summary.json')
    assert summary['badness'] == pytest.approx(0.2318238, abs=1e-6)
    assert (summary['witness_x'], summary['witness_y']) == ('-1', '1')
    assert len(pd.read_csv(out / 'badness.csv')) == 4


def test_badness_needs_one_direction(config_file, tmp_path):
    assert run(config_file, tmp_path / 'none', 'badness', '--surface', 'torus', '--lmax', '10') == 1


def test_play_writes_every_artifact(config_file, tmp_path):
    out = tmp_path / 'play'
    assert run(config_file, out, 'play', '--surface', 'torus', '--rounds', '6', '--bob', 'nearest') == 0

    for name in ('transcript.jsonl', 'constants.json', 'certificate.csv', 'rounds.csv', 'play_summary.json'):
        assert (out / name).exists(), name
    summary = read_json(out / 'play_summary.json')
    assert summary['rounds_played'] == 6
    assert summary['passed'] is True
    assert read_json(out / 'constants.json')['identity'] is True

    again = tmp_path / 'again'
    assert run(config_file, again, 'badness', '--surface', 'torus', '--lmax', '20',
               '--transcript', str(out / 'transcript.jsonl')) == 0


def test_seeded_play_is_reproducible(config_file, tmp_path):
    first, second = tmp_path / 'first', tmp_path / 'second'
    for out in (first, second):
        assert run(config_file, out, 'play', '--surface', 'torus', '--rounds', '5', '--bob', 'random',
                   '--seed', '11') == 0
    assert (first / 'transcript.jsonl').read_text() == (second / 'transcript.jsonl').read_text()


def test_null_alice_and_strong_game_runs(config_file, tmp_path):
    assert run(config_file, tmp_path / 'null', 'play', '--surface', 'torus', '--rounds', '4', '--null-alice') == 0
    assert not (tmp_path / 'null' / 'rounds.csv').exists()

    out = tmp_path / 'strong'
    assert run(config_file, out, 'play', '--surface', 'torus', '--rounds', '4', '--alpha', '1/2') == 0
    assert read_json(out / 'play_summary.json')['game']['variant'] == 'strong'


def test_iet_command(config_file, tmp_path):
    path = tmp_path / 'golden.iet'
    path.write_text("permutation = 2 1\nlengths = (-1+sqrt(5))/2, (3-sqrt(5))/2\n")
    out = tmp_path / 'iet'
    assert run(config_file, out, 'iet', '--iet', str(path), '--reorder') == 0

    summary = read_json(out / 'iet_summary.json')
    assert summary['positive'] is True
    assert summary['minimum']['witness_n'] == 3
    assert summary['reorderings'] == 2
    assert summary['all_positive'] is True
    assert (out / 'iet_stats.csv').exists()
    assert (out / 'iet_reorder.csv').exists()


def test_failures_exit_with_one(config_file, tmp_path):
    missing = str(tmp_path / 'missing.surface')
    assert run(config_file, tmp_path / 'a', 'spectrum', '--surface', missing, '--lmax', '3') == 1
    assert run(config_file, tmp_path / 'b', 'play', '--surface', 'torus', '--bob', 'wizard') == 1

    with pytest.raises(SystemExit) as info:
        main(['--config', str(config_file), '--out', str(tmp_path / 'c'), 'iet', '--iet', missing])
    assert info.value.code == 1


def test_unknown_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        build_parser().parse_args(['dance'])
    assert info.value.code == 2
