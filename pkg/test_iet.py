"""Tests for exact interval exchanges and the orbit statistic."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

import math
from fractions import Fraction

import pytest

from iet import (GOLDEN, IETError, IETFileError, FieldMismatch, NotNormalized, QuadraticNumber, Reducible, apply,
                 badness_statistic, discontinuities, is_partition, load_iet, make_iet, minimum_statistic, orbit,
                 parse_iet, parse_quadratic, reorder, reorder_harness, rotation, rotation_number, statistic_table)

GOLDEN_IET = """\
# rotation by the golden mean
n = 2
permutation = 2 1
lengths = (-1+sqrt(5))/2, (3-sqrt(5))/2
"""


@pytest.fixture
def golden():
    return parse_iet(GOLDEN_IET)


class TestQuadraticNumber:
    def test_normal_form(self):
        assert QuadraticNumber.sqrt(8) == QuadraticNumber(0, 2, 2)
        assert QuadraticNumber(1, 3, 4) == 7
        assert QuadraticNumber(Fraction(1, 2)).is_rational

    def test_arithmetic(self):
        assert GOLDEN * GOLDEN == GOLDEN + 1
        assert GOLDEN.norm() == -1
        assert 1 / GOLDEN == GOLDEN - 1
        assert GOLDEN.conjugate() == 1 - GOLDEN
        with pytest.raises(FieldMismatch):
            QuadraticNumber.sqrt(2) + QuadraticNumber.sqrt(3)

    def test_exact_ordering_and_floor(self):
        assert Fraction(8, 5) < GOLDEN < Fraction(13, 8)
        assert math.floor(GOLDEN) == 1
        assert math.floor(-GOLDEN) == -2
        assert (GOLDEN * 1000).floor() == 1618
        assert GOLDEN.fractional() == GOLDEN - 1
        assert abs(1 - GOLDEN) == GOLDEN - 1

    def test_parsing(self):
        assert parse_quadratic('3/4') == Fraction(3, 4)
        assert parse_quadratic('(-1+sqrt(5))/2') == GOLDEN - 1
        assert parse_quadratic('2-3*sqrt(2)') == QuadraticNumber(2, -3, 2)
        assert parse_quadratic((GOLDEN / 7).format()) == GOLDEN / 7
        with pytest.raises(ValueError):
            parse_quadratic('pi/4')


def test_golden_rotation(golden):
    assert golden.n == 2
    assert rotation_number(golden) == GOLDEN - 1
    assert golden == rotation(GOLDEN - 1)
    assert is_partition(golden)
    assert discontinuities(golden) == (GOLDEN - 1,)
    assert apply(golden, 0) == 2 - GOLDEN
    assert orbit(golden, GOLDEN - 1, 2) == [0, 2 - GOLDEN]


def test_golden_statistic_is_exact(golden):
    """The smallest value comes from the third iterate: 3 (5 - 3 phi)."""
    stats = badness_statistic(golden, 1, 1, horizon=500)
    assert stats.statistic == 15 - 9 * GOLDEN
    assert stats.witness == 3
    assert stats.positive
    assert stats.to_dict()['exactness'] == 'exact'
    assert stats.to_dict()['statistic_decimal'] == pytest.approx(0.437694, abs=1e-6)


def test_rational_rotation_returns_to_its_discontinuity():
    stats = badness_statistic(rotation(Fraction(1, 3)), 1, 1, horizon=10)
    assert stats.statistic == 0
    assert stats.witness == 3
    assert not stats.positive


def test_statistic_table_covers_every_pair():
    T = make_iet([Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)], [3, 1, 2])
    table = statistic_table(T, horizon=20)
    assert [(s.p1, s.p2) for s in table] == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert minimum_statistic(table).statistic == 0
    with pytest.raises(IETError):
        badness_statistic(T, 1, 3)


def test_reorder_harness_on_the_golden_rotation(golden):
    swapped = reorder(golden, (2, 1))
    assert rotation_number(swapped) == 2 - GOLDEN

    rows = reorder_harness(golden, horizon=200)
    assert [row['sigma'] for row in rows] == ['1 2', '2 1']
    assert all(row['statistic'] != '0' for row in rows)


def test_validation():
    with pytest.raises(Reducible) as info:
        make_iet([Fraction(1, 2), Fraction(1, 2)], [1, 2])
    assert info.value.k == 1
    with pytest.raises(NotNormalized):
        make_iet([Fraction(1, 2), Fraction(1, 3)], [2, 1])
    with pytest.raises(NotNormalized):
        make_iet([Fraction(3, 2), Fraction(-1, 2)], [2, 1])
    with pytest.raises(IETError):
        make_iet([Fraction(1, 2), Fraction(1, 2)], [2, 2])

    scaled = make_iet([1, 2], [2, 1], normalize=True)
    assert scaled.lengths == (Fraction(1, 3), Fraction(2, 3))


def test_iet_files(tmp_path):
    path = tmp_path / 'three.iet'
    path.write_text("permutation = 3 2 1\nlengths = 1 1 2\nnormalize = yes\n")
    T = load_iet(path)
    assert T.permutation == (3, 2, 1)
    assert T.lengths == (Fraction(1, 4), Fraction(1, 4), Fraction(1, 2))

    with pytest.raises(IETFileError) as info:
        parse_iet("permutation = 2 1\npermutation = 2 1\n")
    assert info.value.line == 2
    with pytest.raises(IETFileError):
        parse_iet("permutation = 2 1\n")
    with pytest.raises(IETFileError):
        parse_iet("n = 3\npermutation = 2 1\nlengths = 1/2, 1/2\n")
    with pytest.raises(IETFileError):
        parse_iet("permutation = 1 2\nlengths = 1/2, 1/2\n")
