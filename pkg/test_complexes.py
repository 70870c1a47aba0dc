"""Tests for complexes on square-tiled surfaces: disjointness, triangles, shrinking and combining."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

import math
from itertools import combinations

import pytest

from complexes import (AngleSpreadExceeded, CombineParams, EdgesIntersect, GammaInsideK, LevelBoundExceeded,
                       NoSigmaFound, PreconditionViolated, UnsupportedSurface, blocking_levels, check_preconditions,
                       combine, enumerate_shrinkable_complexes, epsilon_zero, geometry_for, is_shrinkable,
                       is_small_complex, jointly_shrinkable, level_bound, make_complex, representative_key,
                       topologically_equivalent)
from surfaces import DirectionSpectrum, Origami, RationalPolygon, Torus, UnfoldedPolygon, count_primitive


@pytest.fixture
def torus():
    return Torus()


@pytest.fixture
def spectrum(torus):
    return torus.enumerate_saddle_connections(10)


def connection(spectrum, x, y):
    for entry in spectrum.entries:
        if entry.holonomy == (x, y):
            return entry
    raise KeyError((x, y))


def holonomies(K):
    return {e.holonomy for e in K.edges}


def test_level_bounds(torus):
    assert level_bound(torus) == 3
    assert blocking_levels(torus) == 1
    L = Origami('(1 2)', '(1 3)')
    assert level_bound(L) == 9
    assert blocking_levels(L) == 7
    assert 0 < epsilon_zero(torus) < 1
    assert epsilon_zero(torus, {'epsilon_zero': 0.25}) == 0.25


def test_tracing_agrees_with_the_determinant(torus):
    """On the torus two primitive vectors are disjoint exactly when their determinant is ±1."""
    geometry = geometry_for(torus)
    entries = torus.enumerate_saddle_connections(4).entries
    for a, b in combinations(entries, 2):
        det = a.x * b.y - a.y * b.x
        traced = geometry.crossing_by_tracing(a, b)
        assert (traced is None) == (abs(det) == 1), (a, b)


def test_torus_triangulation(torus, spectrum):
    """(0,1), (1,1) and (1,2) cut the torus into two triangles."""
    K = make_complex(torus, [connection(spectrum, 0, 1), connection(spectrum, 1, 1), connection(spectrum, 1, 2)])
    assert K.level == 3
    assert len(K.triangles) == 2
    assert len(K.internal) == 3
    assert K.boundary == ()
    assert K.boundary_length is None
    assert K.length == 2
    assert K.longest.holonomy == (1, 2)

    assert K.is_eps_complex(2)
    assert not K.is_eps_complex(1.5)
    assert not is_small_complex(K, 1.0)
    assert is_small_complex(K, 0.5)
    pair = make_complex(torus, [connection(spectrum, 0, 1), connection(spectrum, 1, 1)])
    assert is_small_complex(pair, 1.0)


def test_invalid_complexes(torus, spectrum):
    with pytest.raises(EdgesIntersect):
        make_complex(torus, [connection(spectrum, 1, 0), connection(spectrum, 1, 2)])
    with pytest.raises(AngleSpreadExceeded):
        make_complex(torus, [connection(spectrum, 0, 1), connection(spectrum, 1, 0)])
    with pytest.raises(LevelBoundExceeded):
        make_complex(torus, [connection(spectrum, x, y) for x, y in ((0, 1), (1, 1), (1, 2), (1, 3))])


def test_complexes_need_square_tiled_surfaces():
    triangle = UnfoldedPolygon(RationalPolygon(('1/2', '1/4', '1/4')))
    with pytest.raises(UnsupportedSurface):
        geometry_for(triangle)


def test_shrinkability(torus, spectrum):
    K = make_complex(torus, [connection(spectrum, 0, 1), connection(spectrum, 1, 1)])
    assert not is_shrinkable(K, 0.8)
    assert is_shrinkable(K, 1.0)

    single = make_complex(torus, [connection(spectrum, 2, 3)])
    assert is_shrinkable(single, 0.01)
    with pytest.raises(GammaInsideK):
        jointly_shrinkable(single, connection(spectrum, 2, 3), 1.0)
    assert jointly_shrinkable(single, connection(spectrum, 1, 1), 1.0)
    assert not jointly_shrinkable(single, connection(spectrum, 1, 0), 0.5)


def test_level_one_enumeration_is_the_spectrum(spectrum):
    complexes = enumerate_shrinkable_complexes(spectrum, 0.5, 1)
    assert len(complexes) == count_primitive(10)
    assert all(K.level == 1 for K in complexes)


def test_level_two_enumeration(spectrum):
    """Unimodular pairs are 1-shrinkable when close in direction but never 1/2-shrinkable."""
    assert enumerate_shrinkable_complexes(spectrum, 0.5, 2) == []

    complexes = enumerate_shrinkable_complexes(spectrum, 1.0, 2, lmax=6)
    assert complexes
    for K in complexes:
        assert K.level == 2
        assert is_shrinkable(K, 1.0)
        assert float(K.length) <= 6


def test_combine_preconditions(torus, spectrum):
    K1 = make_complex(torus, [connection(spectrum, 0, 1)])
    K2 = make_complex(torus, [connection(spectrum, 1, 2)])
    pair = make_complex(torus, [connection(spectrum, 0, 1), connection(spectrum, 1, 1)])
    params = CombineParams(0.5, 4, 4)

    check_preconditions(K1, K2, params)
    assert not topologically_equivalent(K1, K2)
    with pytest.raises(PreconditionViolated):
        check_preconditions(K1, K1, params)
    with pytest.raises(PreconditionViolated):
        check_preconditions(K1, pair, params)
    with pytest.raises(PreconditionViolated):
        check_preconditions(K2, K1, params)
    with pytest.raises(PreconditionViolated):
        CombineParams(0.5, 3, 4)


def test_combine_adds_the_missing_edge(torus, spectrum):
    K1 = make_complex(torus, [connection(spectrum, 0, 1)])
    K2 = make_complex(torus, [connection(spectrum, 1, 2)])
    combined = combine(K1, K2, CombineParams(0.5, 4, 4), spectrum)

    assert combined.level == 2
    assert holonomies(combined) == {(0, 1), (1, 2)}
    assert combined.length == 2


def test_combine_searches_past_a_crossing_edge(torus, spectrum):
    """(2, 1) crosses (0, 1), so a shorter disjoint edge is taken instead."""
    K1 = make_complex(torus, [connection(spectrum, 0, 1)])
    K2 = make_complex(torus, [connection(spectrum, 2, 1)])
    combined = combine(K1, K2, CombineParams(1.0, 4, 4), spectrum)

    assert combined.level == 2
    assert holonomies(combined) == {(0, 1), (-1, 1)}


def test_combine_reports_missing_sigma(torus, spectrum):
    sparse = DirectionSpectrum(torus, 10, [connection(spectrum, 0, 1), connection(spectrum, 2, 1)])
    K1 = make_complex(torus, [connection(spectrum, 0, 1)])
    K2 = make_complex(torus, [connection(spectrum, 2, 1)])
    with pytest.raises(NoSigmaFound) as info:
        combine(K1, K2, CombineParams(1.0, 4, 4), sparse)
    assert info.value.lmax == 10


def test_equivalent_complexes_keep_the_smallest_angle(torus, spectrum):
    """Every triangulation with L(K) = 2 covers the whole torus; ties go to the smallest angle."""
    triangulations = [
        make_complex(torus, [connection(spectrum, x, y) for x, y in edges])
        for edges in (((0, 1), (1, 1), (1, 2)),
                      ((1, 0), (1, 1), (2, 1)),
                      ((1, 0), (-1, 1), (-2, 1)),
                      ((0, 1), (-1, 1), (-1, 2)))
    ]
    assert {K.length for K in triangulations} == {2}
    assert all(topologically_equivalent(triangulations[0], K) for K in triangulations[1:])

    ordered = sorted(triangulations, key=representative_key)
    assert [K.longest.holonomy for K in ordered] == [(-1, 2), (-2, 1), (2, 1), (1, 2)]
    assert ordered[0].theta == pytest.approx(math.atan(0.5))

    kept = enumerate_shrinkable_complexes(spectrum, 1.0, 3, lmax=2, min_length=2)
    assert len(kept) == 1
    assert kept[0].longest.holonomy == (-1, 2)
