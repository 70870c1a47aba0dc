#!/usr/bin/env python3
"""
Schmidt games on flat surfaces

Enumerates saddle connections, plays Alice's blocking strategy against
Bob on the circle of directions with finite-round certificates, measures
how badly approximable a direction is, and checks interval exchanges.
"""

import argparse
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from blocking import (DEFAULT_DPS, BlockingAlice, BlockingError, NullAlice, blocking_game, certify,
                      derive_constants, make_bob, opening_interval, strong_game)
from complexes import ComplexError
from dotenv import load_dotenv
from games import AbsoluteToStrong, GameEngine, GameError, numeric, read_transcript, write_transcript
from iet import IETError, load_iet, minimum_statistic, reorder_harness, statistic_table
from mpmath import mp
from reports import certificate_frame, iet_frame, rounds_frame, write_json, write_spectrum, write_table
from surfaces import SurfaceError, Torus, load_surface

import pandas as pd

PACKAGE_ERRORS = (GameError, SurfaceError, ComplexError, BlockingError, IETError)
DEFAULT_CONFIG = Path(__file__).parent / 'config' / 'config.yaml'
DEFAULT_OUTPUT = 'data/output'


def parse_direction(text: str):
    """Radians as a decimal string, or ``golden`` for the direction with tangent the golden ratio."""
    if text.strip().lower() == 'golden':
        return mp.atan((1 + mp.sqrt(5)) / 2)
    return mp.mpf(text)


class SchmidtFlat:
    """Command runner: loads configuration, sets up logging and executes subcommands."""

    def __init__(self, config_path: str = None, output_dir: str = None):
        self.config = self._load_config(config_path or DEFAULT_CONFIG)
        self._setup_logging()
        self.logger = logging.getLogger(__name__)
        self.output_dir = self._resolve_output(output_dir)
        numeric.set_precision(self.section('numerics').get('dps', DEFAULT_DPS))

    def _load_config(self, config_path) -> Dict[str, Any]:
        """Load configuration from YAML file."""
        load_dotenv()

        with open(config_path, 'r') as f:
            config = yaml.safe_load(f) or {}

        # Substitute environment variables
        config_str = yaml.dump(config)
        for env_var in os.environ:
            config_str = config_str.replace(f'${{{env_var}}}', os.environ[env_var])

        return yaml.safe_load(config_str)

    def _setup_logging(self):
        """Setup logging configuration."""
        log_config = self.config.get('logging', {})
        log_level = getattr(logging, log_config.get('level', 'INFO'))
        log_file = log_config.get('file', 'logs/schmidt_flat.log')

        Path(log_file).parent.mkdir(parents=True, exist_ok=True)

        logging.basicConfig(
            level=log_level,
            format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            handlers=[
                logging.FileHandler(log_file),
                logging.StreamHandler(sys.stdout)
            ]
        )

    def _resolve_output(self, output_dir: Optional[str]) -> Path:
        directory = output_dir or self.section('output').get('directory')
        if not directory or '${' in str(directory):
            directory = DEFAULT_OUTPUT
        path = Path(directory)
        path.mkdir(parents=True, exist_ok=True)
        return path

    def section(self, name: str) -> Dict[str, Any]:
        return self.config.get(name) or {}

    def parameter(self, value, exact: bool = False):
        """``1/16``-style parameter as a Fraction, or a float in float mode."""
        if value is None:
            return None
        value = Fraction(str(value))
        if exact or self.section('numerics').get('mode', 'exact') == 'exact':
            return value
        return float(value)

    def surface(self, source: str):
        return load_surface(source, self.section('spectrum'))

    # -- spectrum ------------------------------------------------------------

    def cmd_spectrum(self, source: str, lmax) -> Dict[str, Any]:
        """Every saddle connection up to ``lmax`` as a CSV table."""
        self.logger.info("=" * 60)
        self.logger.info(f"Enumerating saddle connections of {source} up to {lmax}")
        self.logger.info("=" * 60)

        surface = self.surface(source)
        spectrum = surface.enumerate_saddle_connections(lmax)
        write_spectrum(spectrum, self.output_dir / 'spectrum.csv')
        summary = {
            'surface': surface.to_dict(),
            'lmax': numeric.format_number(lmax),
            'entries': len(spectrum),
            'systole': numeric.format_number(spectrum.shortest().length) if len(spectrum) else None,
        }
        write_json(summary, self.output_dir / 'spectrum_summary.json')
        self.logger.info(f"{summary['entries']} saddle connection(s) up to {lmax}")
        return summary

    # -- play ----------------------------------------------------------------

    def cmd_play(self, source: str, beta=None, rounds: int = None, bob: str = 'nearest', seed: int = None,
                 lmax=None, alpha=None, null_alice: bool = False, exact: bool = False) -> Dict[str, Any]:
        """Blocking Alice against ``bob``, with the transcript and its certificate."""
        game_cfg = self.section('game')
        blocking_cfg = self.section('blocking')
        complexes_cfg = self.section('complexes')
        dps = self.section('numerics').get('dps', DEFAULT_DPS)

        beta = self.parameter(beta if beta is not None else game_cfg.get('beta', '1/16'), exact)
        alpha = self.parameter(alpha if alpha is not None else game_cfg.get('alpha'), exact)
        rounds = rounds or game_cfg.get('rounds', 40)
        seed = seed if seed is not None else game_cfg.get('seed', 0)
        lmax = lmax or blocking_cfg.get('lmax', 1000)

        self.logger.info("=" * 60)
        self.logger.info(f"Playing {rounds} round(s) on {source}: beta={beta}, bob={bob}, seed={seed}"
                         + (", null Alice" if null_alice else ""))
        self.logger.info("=" * 60)

        surface = self.surface(source)
        spectrum = surface.enumerate_saddle_connections(lmax)
        reading = spectrum
        if isinstance(surface, Torus):
            reading = surface.enumerate_saddle_connections(blocking_cfg.get('alice_lmax', 10 ** 7))

        numeric.set_precision(dps)
        opening_length = mp.pi * numeric.to_mp(Fraction(str(game_cfg.get('opening_length', '1/4'))))
        opening_center = mp.pi * numeric.to_mp(Fraction(str(game_cfg.get('opening_center', '1/2'))))
        overrides = {key: blocking_cfg[key] for key in ('epsilon_zero', 'levels') if blocking_cfg.get(key)}
        constants = derive_constants(surface, beta, opening_length, spectrum=spectrum, config=overrides)

        inner_game = blocking_game(constants, {'dps': dps})
        opening = opening_interval(inner_game, opening_length, opening_center)
        blocker = NullAlice() if null_alice else BlockingAlice(reading, constants, complexes_cfg)
        kind = bob.split(':', 1)[0]
        bob_strategy = make_bob(bob, opening, spectrum, self.section('bobs').get(kind, {}))

        if alpha is not None:
            game = strong_game(constants, alpha)
            alice = AbsoluteToStrong(blocker, inner_game)
        else:
            game, alice = inner_game, blocker

        transcript = GameEngine(self.config).play(game, alice, bob_strategy, rounds, seed)
        blocked = alice.inner_transcript if alpha is not None else transcript
        certificate = certify(blocked, reading, spectrum, constants, complexes_cfg)

        write_transcript(transcript, self.output_dir / 'transcript.jsonl')
        write_json(constants.to_dict(), self.output_dir / 'constants.json')
        write_table(certificate_frame(certificate), self.output_dir / 'certificate.csv')
        if isinstance(blocker, BlockingAlice):
            write_table(rounds_frame(blocker.history), self.output_dir / 'rounds.csv')

        summary = {
            'surface': surface.to_dict(),
            'game': game.to_dict(),
            'bob': bob,
            'seed': seed,
            'rounds_played': transcript.round,
            'resigned': transcript.resigned,
            'null_alice': null_alice,
            'certificate': certificate.summary(),
            'passed': certificate.passed and (certificate.final is None or certificate.final.passed),
        }
        write_json(summary, self.output_dir / 'play_summary.json')
        verdict = 'passed' if summary['passed'] else 'FAILED'
        self.logger.info(f"Certificate {verdict} after {transcript.round} round(s)")
        return summary

    # -- badness -------------------------------------------------------------

    def cmd_badness(self, source: str, lmax, psi: str = None, transcript: str = None) -> Dict[str, Any]:
        """``min |gamma|^2 d(theta_gamma, psi)`` with its witness, for doubling length bounds."""
        if (psi is None) == (transcript is None):
            raise GameError("give exactly one of --psi and --transcript")
        if transcript is not None:
            final = read_transcript(transcript).final_interval
            if final is None:
                raise GameError(f"transcript {transcript} has no Bob move")
            direction = numeric.to_mp(final.center)
        else:
            direction = parse_direction(psi)

        self.logger.info("=" * 60)
        self.logger.info(f"Badness of {mp.nstr(direction, 20)} on {source} up to {lmax}")
        self.logger.info("=" * 60)

        surface = self.surface(source)
        bounds = sorted({max(1, int(lmax) // 2 ** k) for k in range(4)} | {lmax})
        rows: List[Dict[str, Any]] = []
        for bound in bounds:
            value, witness = surface.enumerate_saddle_connections(bound).badness(direction)
            rows.append({
                'lmax': numeric.format_number(bound),
                'badness': float(value),
                'witness_x': numeric.format_number(witness.x),
                'witness_y': numeric.format_number(witness.y),
                'exactness': 'approx',
            })
        write_table(pd.DataFrame(rows), self.output_dir / 'badness.csv')
        summary = {'psi': mp.nstr(direction, 30), **rows[-1]}
        write_json(summary, self.output_dir / 'badness_summary.json')
        self.logger.info(f"badness {summary['badness']:.6g} witnessed by "
                         f"({summary['witness_x']}, {summary['witness_y']})")
        return summary

    # -- iet -----------------------------------------------------------------

    def cmd_iet(self, path: str, horizon: int = None, reorder: bool = False) -> Dict[str, Any]:
        """Statistic table of an interval exchange, optionally over every reordering."""
        horizon = horizon or self.section('iet').get('horizon', 10_000)
        T = load_iet(path)
        self.logger.info("=" * 60)
        self.logger.info(f"Orbit statistic of {T!r} up to n={horizon}")
        self.logger.info("=" * 60)

        table = statistic_table(T, horizon)
        write_table(iet_frame(table), self.output_dir / 'iet_stats.csv')
        worst = minimum_statistic(table)
        summary = {'iet': T.to_dict(), 'minimum': worst.to_dict(), 'positive': worst.positive}
        if reorder:
            harness = reorder_harness(T, horizon)
            write_table(pd.DataFrame(harness), self.output_dir / 'iet_reorder.csv')
            summary['reorderings'] = len(harness)
            summary['all_positive'] = all(row['statistic'] != '0' for row in harness)
        write_json(summary, self.output_dir / 'iet_summary.json')
        return summary

    # -- dispatch ------------------------------------------------------------

    def run(self, args: argparse.Namespace) -> int:
        """Run one subcommand; 0 on success, 1 on any error."""
        try:
            if args.command == 'spectrum':
                self.cmd_spectrum(args.surface, self.parameter(args.lmax, True))
            elif args.command == 'play':
                self.cmd_play(args.surface, args.beta, args.rounds, args.bob, args.seed,
                              self.parameter(args.lmax, True) if args.lmax else None,
                              args.alpha, args.null_alice, args.exact)
            elif args.command == 'badness':
                self.cmd_badness(args.surface, self.parameter(args.lmax, True), args.psi, args.transcript)
            elif args.command == 'iet':
                self.cmd_iet(args.iet, args.horizon, args.reorder)
            self.logger.info(f"Output saved to: {self.output_dir}")
            return 0
        except PACKAGE_ERRORS as e:
            self.logger.error(f"{args.command} failed: {e}")
            return 1
        except Exception as e:
            self.logger.error(f"Fatal error: {e}", exc_info=True)
            return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='schmidt_flat', description=__doc__.strip().splitlines()[0])
    parser.add_argument('--config', default=None, help='YAML configuration file')
    parser.add_argument('--out', default=None, help='directory receiving every artifact of the command')
    commands = parser.add_subparsers(dest='command', required=True)

    spectrum = commands.add_parser('spectrum', help='enumerate saddle connections')
    spectrum.add_argument('--surface', required=True, help="surface file or 'torus'")
    spectrum.add_argument('--lmax', required=True, help='length bound')

    play = commands.add_parser('play', help='play the blocking strategy and certify the game')
    play.add_argument('--surface', required=True, help="surface file or 'torus'")
    play.add_argument('--beta', default=None, help='block ratio, e.g. 1/16')
    play.add_argument('--alpha', default=None, help='play the strong game with this alpha')
    play.add_argument('--rounds', type=int, default=None)
    play.add_argument('--lmax', default=None, help='length bound of the final certificate')
    play.add_argument('--seed', type=int, default=None)
    play.add_argument('--bob', default='nearest', help='nearest, random, target or script:<path>')
    play.add_argument('--null-alice', action='store_true', help='Alice never blocks (negative control)')
    play.add_argument('--exact', action='store_true', help='keep beta and alpha exact rationals')

    badness = commands.add_parser('badness', help='min |gamma|^2 d(theta_gamma, psi) over a spectrum')
    badness.add_argument('--surface', required=True, help="surface file or 'torus'")
    badness.add_argument('--lmax', required=True, help='length bound')
    badness.add_argument('--psi', default=None, help="direction in radians, or 'golden'")
    badness.add_argument('--transcript', default=None, help="use the final interval of a transcript")

    iet = commands.add_parser('iet', help='orbit statistic of an interval exchange')
    iet.add_argument('--iet', required=True, help='IET file')
    iet.add_argument('--horizon', type=int, default=None, help='largest n in the statistic')
    iet.add_argument('--reorder', action='store_true', help='also run every reordering of the lengths')
    return parser


def main(argv: Optional[List[str]] = None):
    """Main entry point."""
    args = build_parser().parse_args(argv)
    runner = SchmidtFlat(args.config, args.out)
    sys.exit(runner.run(args))


if __name__ == '__main__':
    main()
