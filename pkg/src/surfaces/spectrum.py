"""Direction spectra: saddle connections up to a length bound, sorted by direction.

Queries run on float64 arrays and re-verify anything within the guard band
of a decision boundary with mpmath.
"""

import logging
import math
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from mpmath import mp, mpf

from games import numeric

from .errors import BudgetExceeded, IncompleteSpectrum
from .saddle import SaddleConnection, circle_distance

logger = logging.getLogger(__name__)

DEFAULT_MAX_ENTRIES = 5_000_000
GUARD_BAND = 1e-9
PI = math.pi


def _as_float(value) -> float:
    return float(numeric.to_mp(value)) if numeric.is_exact(value) else float(value)


def split_window(center, radius) -> List[Tuple[float, float]]:
    """Arcs of ``[center - radius, center + radius]`` inside [0, pi), as floats."""
    c = _as_float(center) % PI
    r = _as_float(radius)
    if 2 * r >= PI:
        return [(0.0, PI)]
    lo, hi = c - r, c + r
    if lo < 0:
        return [(lo + PI, PI), (0.0, hi)]
    if hi >= PI:
        return [(lo, PI), (0.0, hi - PI)]
    return [(lo, hi)]


def _mp_distance(theta_mp, target):
    return circle_distance(theta_mp, numeric.to_mp(target), mp.pi)


class DirectionSpectrum:
    """Every saddle connection of ``surface`` with ``|gamma| <= lmax``, once up to sign."""

    def __init__(self, surface, lmax, connections: Optional[Sequence[SaddleConnection]] = None,
                 config: Dict[str, Any] = None):
        self.surface = surface
        self.lmax = lmax
        self.config = config or {}
        self.max_entries = self.config.get('max_entries', DEFAULT_MAX_ENTRIES)
        self.guard_band = self.config.get('guard_band', GUARD_BAND)
        self.logger = logging.getLogger(self.__class__.__name__)
        self._entries: Optional[List[SaddleConnection]] = None
        if connections is not None:
            self._store(connections)

    # -- storage -----------------------------------------------------------

    def _store(self, connections: Sequence[SaddleConnection]):
        if len(connections) > self.max_entries:
            raise BudgetExceeded(len(connections), self.max_entries)
        entries = sorted(connections, key=lambda s: (s.theta, float(s.length), float(s.x), float(s.y), s.key))
        self._entries = entries
        self._x = np.array([float(s.x) for s in entries], dtype=np.float64)
        self._y = np.array([float(s.y) for s in entries], dtype=np.float64)
        self._theta = np.array([s.theta for s in entries], dtype=np.float64)
        self._length = np.maximum(np.abs(self._x), np.abs(self._y))

    def _generate(self) -> List[SaddleConnection]:
        raise NotImplementedError("spectrum was built without connections")

    def _ensure(self):
        if self._entries is None:
            self._store(self._generate())

    @property
    def entries(self) -> List[SaddleConnection]:
        self._ensure()
        return self._entries

    @property
    def complete(self) -> bool:
        return True

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def require(self, needed):
        """Raise :class:`IncompleteSpectrum` unless the spectrum reaches ``needed``."""
        if not numeric.leq(_as_float(needed), _as_float(self.lmax)):
            raise IncompleteSpectrum(needed, self.lmax)

    def truncated(self, lmax) -> 'DirectionSpectrum':
        """The sub-spectrum of connections no longer than ``lmax``."""
        self.require(lmax)
        kept = [s for s in self.entries if numeric.leq(s.length, lmax)]
        return DirectionSpectrum(self.surface, lmax, kept, self.config)

    # -- queries -------------------------------------------------------------

    def _in_window(self, entry: SaddleConnection, theta: float, center, radius) -> bool:
        d = circle_distance(theta, _as_float(center) % PI, PI)
        r = _as_float(radius)
        if d < r - self.guard_band:
            return True
        if d > r + self.guard_band:
            return False
        return _mp_distance(entry.theta_mp, center) <= numeric.to_mp(radius)

    def _length_ok(self, length, min_length, max_length) -> bool:
        if max_length is not None and not numeric.leq(length, max_length):
            return False
        if min_length is not None and not numeric.leq(min_length, length):
            return False
        return True

    def window(self, center, radius, max_length=None, min_length=None) -> List[SaddleConnection]:
        """Connections with ``d(theta, center) <= radius`` and length in the band."""
        self._ensure()
        if max_length is not None:
            self.require(max_length)
        found = []
        for lo, hi in split_window(center, radius):
            a = np.searchsorted(self._theta, lo - self.guard_band, side='left')
            b = np.searchsorted(self._theta, hi + self.guard_band, side='right')
            for index in range(a, b):
                entry = self._entries[index]
                if not self._length_ok(entry.length, min_length, max_length):
                    continue
                if self._in_window(entry, self._theta[index], center, radius):
                    found.append(entry)
        unique = {id(e): e for e in found}
        return sorted(unique.values(), key=lambda s: (float(s.length), s.theta))

    def _refine_badness(self, psi, candidates: Sequence[SaddleConnection]):
        best, witness = None, None
        target = numeric.to_mp(psi)
        for entry in candidates:
            length = numeric.to_mp(entry.length)
            value = length * length * circle_distance(entry.theta_mp, target % mp.pi, mp.pi)
            if best is None or value < best:
                best, witness = value, entry
        return best, witness

    def _badness_result(self, psi, best, witness):
        if isinstance(psi, mpf):
            return best, witness
        return float(best), witness

    def badness(self, psi) -> Tuple[Any, SaddleConnection]:
        """``min |gamma|^2 d(theta_gamma, psi)`` and the connection attaining it."""
        self._ensure()
        if not self._entries:
            raise IncompleteSpectrum('a nonempty spectrum', self.lmax)
        p = _as_float(psi) % PI
        d = np.abs(self._theta - p) % PI
        d = np.minimum(d, PI - d)
        values = self._length ** 2 * d
        floor_value = values.min()
        chosen = np.nonzero((values <= floor_value * (1 + 1e-6) + 1e-300) | (d < self.guard_band))[0]
        best, witness = self._refine_badness(psi, [self._entries[i] for i in chosen])
        return self._badness_result(psi, best, witness)

    def systole(self, theta, t) -> Tuple[float, SaddleConnection]:
        """Shortest connection after rotating by theta and flowing for time t."""
        self._ensure()
        et = math.exp(float(t))
        self.require(et)
        c, s = math.cos(float(theta)), math.sin(float(theta))
        h = np.abs(self._x * c + self._y * s)
        v = np.abs(-self._x * s + self._y * c)
        values = np.maximum(et * h, v / et)
        index = int(np.argmin(values))
        return float(values[index]), self._entries[index]

    def shortest(self) -> SaddleConnection:
        self._ensure()
        return self._entries[int(np.argmin(self._length))]

    def __repr__(self):
        return f"{self.__class__.__name__}(lmax={self.lmax}, entries={len(self)})"


def mobius(n: int) -> np.ndarray:
    """Möbius function on 0..n (index 0 unused)."""
    mu = np.ones(n + 1, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, n + 1):
        if not sieve[p]:
            continue
        sieve[2 * p::p] = False
        mu[p::p] *= -1
        mu[p * p::p * p] = 0
    mu[0] = 0
    return mu


def count_primitive(lmax: int) -> int:
    """Primitive integer vectors with max-norm <= lmax, counted up to sign."""
    if lmax < 1:
        return 0
    d = np.arange(1, lmax + 1, dtype=np.int64)
    pairs = int(np.sum(mobius(lmax)[1:] * (lmax // d) ** 2))
    return 2 + 2 * pairs


class LatticeSpectrum(DirectionSpectrum):
    """Spectrum of the unit square torus, answered from the integer lattice.

    Connections are the primitive vectors. Two charts cover the directions:
    rows ``y = 1..L`` with ``|x| <= y`` (directions within pi/4 of 0) and
    rows ``k = 1..L`` holding ``(-k, w)`` with ``|w| < k`` (the rest).
    Queries only materialise the rows' extremal candidates, so large
    ``lmax`` stays cheap.
    """

    def __init__(self, surface, lmax, config: Dict[str, Any] = None):
        super().__init__(surface, int(math.floor(_as_float(lmax) + 1e-12)), None, config)

    def __len__(self) -> int:
        if self._entries is not None:
            return len(self._entries)
        return count_primitive(self.lmax)

    def _generate(self) -> List[SaddleConnection]:
        total = count_primitive(self.lmax)
        if total > self.max_entries:
            raise BudgetExceeded(total, self.max_entries)
        rows = self._rows(None, None)
        ys, xs = self._expand(rows, -rows, rows)
        ks, ws = self._expand(rows, -(rows - 1), rows - 1)
        x, y = self._canonical(xs, ys, ks, ws)
        return [self._make(a, b) for a, b in zip(x.tolist(), y.tolist())]

    @staticmethod
    def _make(x: int, y: int) -> SaddleConnection:
        x, y = int(x), int(y)
        return SaddleConnection(x, y, 'v0', 'v0', (1, 'BL' if x >= 0 else 'BR', x, y))

    @staticmethod
    def _canonical(xs, ys, ks, ws) -> Tuple[np.ndarray, np.ndarray]:
        """Merge both charts into upper-half-plane vectors without repeats."""
        x = np.concatenate([xs, np.where(ws > 0, -ks, ks)])
        y = np.concatenate([ys, np.abs(ws)])
        if x.size == 0:
            return x, y
        stacked = np.unique(np.stack([x, y], axis=1), axis=0)
        return stacked[:, 0], stacked[:, 1]

    def _rows(self, max_length, min_length) -> np.ndarray:
        top = self.lmax if max_length is None else min(self.lmax, int(math.floor(_as_float(max_length) + 1e-12)))
        bottom = 1 if min_length is None else max(1, int(math.ceil(_as_float(min_length) - 1e-12)))
        if top - bottom + 1 > self.max_entries:
            raise BudgetExceeded(top - bottom + 1, self.max_entries)
        return np.arange(bottom, top + 1, dtype=np.int64)

    def _expand(self, rows, lo, hi) -> Tuple[np.ndarray, np.ndarray]:
        counts = np.maximum(hi - lo + 1, 0)
        total = int(counts.sum())
        if total > self.max_entries:
            raise BudgetExceeded(total, self.max_entries)
        starts = np.repeat(lo, counts)
        row_of = np.repeat(rows, counts)
        offsets = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
        values = starts + offsets
        keep = np.gcd(values, row_of) == 1
        return row_of[keep], values[keep]

    def window(self, center, radius, max_length=None, min_length=None) -> List[SaddleConnection]:
        if max_length is not None:
            self.require(max_length)
        rows = self._rows(max_length, min_length)
        if rows.size == 0:
            return []
        rf = rows.astype(np.float64)
        quarter = PI / 4
        empty = np.zeros(0, dtype=np.int64)
        parts_a, parts_b = [], []
        for lo, hi in split_window(center, radius):
            lo_g, hi_g = lo - self.guard_band, hi + self.guard_band
            # directions within pi/4 of vertical, as signed angles in [-pi/4, pi/4]
            for a, b in ((max(lo_g, 0.0), min(hi_g, quarter)),
                         (max(lo_g, 3 * quarter) - PI, min(hi_g, PI) - PI)):
                if a > b:
                    continue
                x_lo = np.maximum(np.floor(-rf * math.tan(b)) - 1, -rf).astype(np.int64)
                x_hi = np.minimum(np.ceil(-rf * math.tan(a)) + 1, rf).astype(np.int64)
                parts_a.append(self._expand(rows, x_lo, x_hi))
            a, b = max(lo_g, quarter), min(hi_g, 3 * quarter)
            if a <= b:
                # vectors (-k, w) with |w| < k and cot(theta) = w / k
                w_lo = np.maximum(np.floor(rf / math.tan(b)) - 1, -(rf - 1)).astype(np.int64)
                w_hi = np.minimum(np.ceil(rf / math.tan(a)) + 1, rf - 1).astype(np.int64)
                parts_b.append(self._expand(rows, w_lo, w_hi))
        ys = np.concatenate([p[0] for p in parts_a] or [empty])
        xs = np.concatenate([p[1] for p in parts_a] or [empty])
        ks = np.concatenate([p[0] for p in parts_b] or [empty])
        ws = np.concatenate([p[1] for p in parts_b] or [empty])
        x, y = self._canonical(xs, ys, ks, ws)
        if x.size:
            theta = np.mod(np.arctan2(-x.astype(np.float64), y.astype(np.float64)), PI)
            gap = np.abs(theta - _as_float(center) % PI)
            gap = np.minimum(gap, PI - gap)
            keep = gap <= _as_float(radius) + self.guard_band
            x, y = x[keep], y[keep]
        entries = []
        for a, b in zip(x.tolist(), y.tolist()):
            entry = self._make(a, b)
            if self._in_window(entry, entry.theta, center, radius):
                entries.append(entry)
        return sorted(entries, key=lambda s: (s.length, s.theta))

    @staticmethod
    def _near(rows: np.ndarray, points: Sequence[np.ndarray], bound: np.ndarray):
        """Primitive ``(row, n)`` with n an integer next to one of ``points``, ``|n| <= bound``."""
        columns = []
        for p in points:
            p = np.nan_to_num(np.asarray(p, dtype=np.float64), nan=0.0, posinf=1e18, neginf=-1e18)
            p = np.clip(p, -bound - 2.0, bound + 2.0)
            for near in (np.floor(p) - 1, np.floor(p), np.ceil(p), np.ceil(p) + 1):
                columns.append(np.clip(near, -bound, bound))
        columns.append(-bound)
        columns.append(bound)
        grid = np.stack(columns, axis=1).astype(np.int64)
        row_grid = np.repeat(rows[:, None], grid.shape[1], axis=1)
        keep = np.gcd(grid, row_grid) == 1
        return row_grid[keep], grid[keep]

    def _candidates(self, chart_a_points, chart_b_points) -> Tuple[np.ndarray, np.ndarray]:
        """Per-row extremal candidates of a query that is convex or unimodal along rows."""
        rows = self._rows(None, None)
        rf = rows.astype(np.float64)
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            ys, xs = self._near(rows, chart_a_points(rf), rf)
            ks, ws = self._near(rows, chart_b_points(rf), rf - 1)
        return self._canonical(xs, ys, ks, ws)

    def badness(self, psi):
        p = _as_float(psi) % PI
        signed = p - PI if p > PI / 2 else p
        tan_p = math.tan(signed)
        cot_p = math.cos(p) / math.sin(p) if math.sin(p) != 0 else math.inf
        xi, yi = self._candidates(lambda r: [-r * tan_p], lambda r: [r * cot_p])
        x, y = xi.astype(np.float64), yi.astype(np.float64)
        d = np.abs(np.arctan2(-x, y) % PI - p) % PI
        d = np.minimum(d, PI - d)
        values = np.maximum(np.abs(x), np.abs(y)) ** 2 * d
        floor_value = values.min()
        chosen = np.nonzero((values <= floor_value * (1 + 1e-6) + 1e-300) | (d < self.guard_band))[0]
        best, witness = self._refine_badness(psi, [self._make(xi[i], yi[i]) for i in chosen])
        return self._badness_result(psi, best, witness)

    def systole(self, theta, t):
        et = math.exp(float(t))
        self.require(et)
        c, s = math.cos(float(theta)), math.sin(float(theta))

        def kinks(a1, b1, a2, b2):
            # corners of max(|a1 n + b1|, |a2 n + b2|) as a function of n
            return [-b1 / a1, -b2 / a2, -(b1 - b2) / (a1 - a2), -(b1 + b2) / (a1 + a2)]

        # chart A holds (n, row), chart B holds (-row, n)
        xi, yi = self._candidates(
            lambda r: kinks(et * c, et * r * s, -s / et, r * c / et),
            lambda r: kinks(et * s, -et * r * c, c / et, r * s / et),
        )
        x, y = xi.astype(np.float64), yi.astype(np.float64)
        values = np.maximum(et * np.abs(x * c + y * s), np.abs(-x * s + y * c) / et)
        index = int(np.argmin(values))
        return float(values[index]), self._make(xi[index], yi[index])

    def shortest(self) -> SaddleConnection:
        return self._make(0, 1)
