"""IET description files.

Same ``key = value`` layout as surface files::

    n = 2
    permutation = 2 1
    lengths = (-1+sqrt(5))/2, (3-sqrt(5))/2

Lengths are comma separated (whitespace also works for plain rationals) and
may be ``p/q`` or ``(a+b*sqrt(d))/c``. ``normalize = yes`` rescales them to
total 1.
"""

import logging
from pathlib import Path
from typing import Dict, Tuple, Union

from .errors import IETError, IETFileError
from .iet import IET, make_iet
from .quadratic import parse_quadratic

logger = logging.getLogger(__name__)


def _split_lengths(text: str):
    if ',' in text:
        return [tok for tok in (part.strip() for part in text.split(',')) if tok]
    return text.split()


def parse_iet(text: str) -> IET:
    fields: Dict[str, Tuple[str, int]] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise IETFileError(number, f"expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split('=', 1))
        if key in fields:
            raise IETFileError(number, f"duplicate key {key!r}")
        fields[key] = (value, number)

    for key in ('permutation', 'lengths'):
        if key not in fields:
            raise IETFileError(1, f"missing {key!r}")

    perm_text, perm_line = fields['permutation']
    try:
        permutation = [int(tok) for tok in perm_text.replace(',', ' ').split()]
    except ValueError:
        raise IETFileError(perm_line, f"permutation must be integers in one-line notation, got {perm_text!r}")

    lengths_text, lengths_line = fields['lengths']
    try:
        lengths = [parse_quadratic(tok) for tok in _split_lengths(lengths_text)]
    except (ValueError, IETError) as e:
        raise IETFileError(lengths_line, str(e))

    if 'n' in fields:
        n_text, n_line = fields['n']
        if not n_text.isdigit() or int(n_text) != len(permutation) or int(n_text) != len(lengths):
            raise IETFileError(n_line, f"n = {n_text} but got {len(permutation)} letters "
                                       f"and {len(lengths)} lengths")

    normalize = fields.get('normalize', ('no', 0))[0].lower() in ('yes', 'true', '1')
    try:
        return make_iet(lengths, permutation, normalize=normalize)
    except IETError as e:
        raise IETFileError(lengths_line, str(e))


def load_iet(path: Union[str, Path]) -> IET:
    path = Path(path)
    T = parse_iet(path.read_text())
    logger.info(f"Loaded {T!r} from {path}")
    return T
