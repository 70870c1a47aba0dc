"""CSV tables and JSON summaries written by the command line.

Every table is a pandas DataFrame with an ``exactness`` column. Spectrum
tables keep the exact holonomy as text so they read back losslessly.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Union

import pandas as pd

from games import numeric
from surfaces import DirectionSpectrum, SaddleConnection

logger = logging.getLogger(__name__)

SPECTRUM_COLUMNS = ['theta', 'x', 'y', 'h', 'v', 'length', 'start', 'end', 'key', 'exactness']


def spectrum_frame(connections: Iterable[SaddleConnection]) -> pd.DataFrame:
    """One row per connection, sorted by direction."""
    rows = []
    for connection in connections:
        row = connection.to_dict()
        row['key'] = json.dumps(list(connection.key), default=str)
        rows.append(row)
    return pd.DataFrame(rows, columns=SPECTRUM_COLUMNS)


def _as_tuple(value):
    return tuple(_as_tuple(v) for v in value) if isinstance(value, list) else value


def _parse_key(text: str):
    if not isinstance(text, str) or not text:
        return ()
    return _as_tuple(json.loads(text))


def spectrum_from_frame(surface, lmax, frame: pd.DataFrame, config: Dict[str, Any] = None) -> DirectionSpectrum:
    """Rebuild a spectrum from :func:`spectrum_frame` output."""
    connections = [
        SaddleConnection(numeric.parse_number(row.x), numeric.parse_number(row.y), row.start, row.end,
                         _parse_key(row.key))
        for row in frame.itertuples(index=False)
    ]
    return DirectionSpectrum(surface, lmax, connections, config)


def write_table(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)
    logger.info(f"Saved {len(frame)} row(s) to: {path}")
    return path


def read_table(path: Union[str, Path]) -> pd.DataFrame:
    """CSV back as text columns, so exact numbers are not coerced to floats."""
    return pd.read_csv(path, dtype=str, keep_default_na=False)


def write_spectrum(spectrum: DirectionSpectrum, path: Union[str, Path]) -> Path:
    return write_table(spectrum_frame(spectrum.entries), path)


def read_spectrum(surface, lmax, path: Union[str, Path], config: Dict[str, Any] = None) -> DirectionSpectrum:
    return spectrum_from_frame(surface, lmax, read_table(path), config)


def certificate_frame(certificate) -> pd.DataFrame:
    return pd.DataFrame(certificate.to_records())


def rounds_frame(states) -> pd.DataFrame:
    """Alice's per-round dangerous sets, one row per round and level."""
    rows: List[Dict[str, Any]] = []
    for state in states:
        record = state.to_dict()
        for level in record.pop('levels'):
            rows.append({**record, **level, 'exactness': 'approx'})
    return pd.DataFrame(rows)


def iet_frame(table) -> pd.DataFrame:
    return pd.DataFrame([stats.to_dict() for stats in table])


def write_json(data: Any, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2, default=str)
    logger.info(f"Saved {path.name} to: {path}")
    return path
