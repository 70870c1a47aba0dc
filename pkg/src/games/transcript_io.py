"""JSON-lines transcript files.

The first line is a header with the game config and seed, then one record
per move: ``round``, ``mover``, ``variant``, ``centers``, ``radii`` and
``resign``. Numbers use :func:`numeric.format_number`, so rational games
round-trip bit-exactly.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterator, List, Union

from . import numeric
from .balls import Ball, space_from_dict
from .base_strategy import BOB, GameConfig, MoveRecord, Transcript
from .errors import GameError

logger = logging.getLogger(__name__)


def _config_from_dict(data: Dict[str, Any]) -> GameConfig:
    alpha = data.get('alpha')
    return GameConfig(
        variant=data['variant'],
        beta=numeric.parse_number(data['beta']),
        alpha=None if alpha is None else numeric.parse_number(alpha),
        block_count=data.get('block_count', 1),
        block_exponent=data.get('block_exponent'),
        space=space_from_dict(data['space']),
    )


def transcript_records(transcript: Transcript) -> Iterator[Dict[str, Any]]:
    """Header followed by one dict per move."""
    yield {'header': True, 'config': transcript.config.to_dict(), 'seed': transcript.seed}
    round_number = 0
    for move in transcript.moves:
        if move.mover == BOB:
            round_number += 1
        balls = [b.to_dict() for b in move.balls]
        yield {
            'round': round_number,
            'mover': move.mover,
            'variant': transcript.config.variant,
            'centers': [b['center'] for b in balls],
            'radii': [b['radius'] for b in balls],
            'resign': move.resign,
        }


def write_transcript(transcript: Transcript, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        for record in transcript_records(transcript):
            f.write(json.dumps(record) + '\n')
    logger.info(f"Wrote {len(transcript.moves)} moves to {path}")
    return path


def _parse_center(raw, space):
    if isinstance(raw, list):
        return tuple(numeric.parse_number(c) for c in raw)
    return numeric.parse_number(raw)


def read_transcript(path: Union[str, Path]) -> Transcript:
    """Inverse of :func:`write_transcript`."""
    path = Path(path)
    with open(path, 'r', encoding='utf-8') as f:
        lines: List[str] = [line for line in f if line.strip()]
    if not lines:
        raise GameError(f"{path}: empty transcript file")

    header = json.loads(lines[0])
    if not header.get('header'):
        raise GameError(f"{path}: first line must be the transcript header")
    config = _config_from_dict(header['config'])
    moves = []
    for number, line in enumerate(lines[1:], start=2):
        try:
            record = json.loads(line)
            balls = tuple(
                Ball(_parse_center(c, config.space), numeric.parse_number(r), config.space)
                for c, r in zip(record['centers'], record['radii'])
            )
            moves.append(MoveRecord(record['mover'], balls, record.get('resign', False)))
        except (KeyError, ValueError, json.JSONDecodeError) as e:
            raise GameError(f"{path}:{number}: malformed move record ({e})")
    return Transcript(config, tuple(moves), header.get('seed'))
