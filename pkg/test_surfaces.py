"""Tests for flat surfaces, their spectra and the Teichmüller flow."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

import math
from fractions import Fraction

import numpy as np
import pytest
from mpmath import mp

from surfaces import (DirectionSpectrum, FlowParams, IncompleteSpectrum, IrrationalAngle, NotConnected, Origami,
                      RationalPolygon, SaddleConnection, SurfaceError, SurfaceFileError, Torus, UnfoldedPolygon,
                      build_origami, build_torus, circle_distance, count_primitive, direction, flow_holonomy,
                      load_surface, min_flow_length, parse_surface, primitive_directions, systole_along,
                      systole_profile, unfold_polygon)
from surfaces.saddle import direction_mp

GOLDEN_PSI = mp.atan((1 + mp.sqrt(5)) / 2)


def holonomies(connections):
    return {(int(s.x), int(s.y)) for s in connections}


def test_direction_convention():
    """theta rotates the connection to vertical."""
    assert direction(0, 1) == 0.0
    assert direction(1, 0) == pytest.approx(math.pi / 2)
    assert direction(1, 1) == pytest.approx(3 * math.pi / 4)
    assert direction(-1, 1) == pytest.approx(math.pi / 4)
    assert SaddleConnection(-2, -3).holonomy == (2, 3)
    assert circle_distance(0.1, math.pi - 0.1) == pytest.approx(0.2)


def test_count_primitive():
    assert count_primitive(1) == 4
    assert count_primitive(3) == 16
    assert count_primitive(10) == len(list(primitive_directions(10)))


def primitive_lattice(lmax):
    """Primitive integer vectors with max-norm <= lmax, by gcd over the whole square."""
    found = set()
    for x in range(-lmax, lmax + 1):
        for y in range(-lmax, lmax + 1):
            if math.gcd(x, y) == 1:
                found.add((x, y) if y > 0 or (y == 0 and x > 0) else (-x, -y))
    return found


@pytest.mark.parametrize('lmax', range(1, 65))
def test_torus_spectrum_is_the_primitive_lattice(lmax):
    spectrum = Torus().enumerate_saddle_connections(lmax)
    expected = primitive_lattice(lmax)
    assert holonomies(spectrum.entries) == expected
    assert len(spectrum) == len(expected) == count_primitive(lmax)
    assert set(primitive_directions(lmax)) == expected
    assert spectrum.shortest().length == 1


def test_square_origami_matches_the_torus():
    """A one-square origami traced through its squares gives the lattice spectrum."""
    square = Origami([1], [1]).enumerate_saddle_connections(7)
    assert holonomies(square.entries) == holonomies(Torus().enumerate_saddle_connections(7).entries)


def test_lattice_window_matches_a_materialised_spectrum():
    torus = Torus()
    lattice = torus.enumerate_saddle_connections(20)
    plain = DirectionSpectrum(torus, 20, lattice.entries)
    center, radius = direction(2, 3), 0.05

    assert holonomies(lattice.window(center, radius, max_length=15)) == \
        holonomies(plain.window(center, radius, max_length=15))
    assert holonomies(lattice.window(0.0, 0.02, min_length=5)) == \
        holonomies(plain.window(0.0, 0.02, min_length=5))


def test_window_beyond_lmax_is_refused():
    spectrum = Torus().enumerate_saddle_connections(10)
    with pytest.raises(IncompleteSpectrum):
        spectrum.window(1.0, 0.1, max_length=11)


def test_golden_direction_badness():
    """Up to L = 1000 the minimum is psi - pi/4, attained by (-1, 1).

    This is a short-vector value, not the asymptotic constant: the Fibonacci
    vectors further out sit near phi^2 / (sqrt5 (1 + phi^2)) ~ 0.3236.
    """
    value, witness = Torus().enumerate_saddle_connections(1000).badness(GOLDEN_PSI)
    assert witness.holonomy == (-1, 1)
    assert float(value) == pytest.approx(float(GOLDEN_PSI) - math.pi / 4, rel=1e-9)


def convergents(x, max_denominator):
    """Continued-fraction convergents ``(p, q)`` of x with ``q <= max_denominator``."""
    p0, p1, q0, q1 = 0, 1, 1, 0
    found = []
    while True:
        a = int(mp.floor(x))
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        if q1 > max_denominator:
            return found
        found.append((p1, q1))
        rest = x - a
        if rest == 0:
            return found
        x = 1 / rest


def test_golden_badness_matches_the_convergent_oracle():
    with mp.workdps(50):
        phi = (1 + mp.sqrt(5)) / 2
        psi = mp.atan(phi)
        pairs = convergents(phi, 10 ** 4)
        assert pairs[:5] == [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5)]
        assert pairs[-1] == (10946, 6765)

        # slope statistic q ||q phi|| tends to 1/sqrt5
        slope = [q * abs(q * phi - p) for p, q in pairs if q >= 100]
        assert all(abs(s - 1 / mp.sqrt(5)) < 1e-4 for s in slope)

        # (-p, q) has direction atan(p/q); the axes are the only other candidates
        angle = {(-p, q): abs(mp.atan(mp.mpf(p) / q) - psi) for p, q in pairs if p <= 10 ** 4}
        angle[(0, 1)] = psi
        angle[(1, 0)] = mp.pi / 2 - psi
        oracle = {v: max(abs(v[0]), abs(v[1])) ** 2 * d for v, d in angle.items()}
        best = min(oracle, key=oracle.get)
        far = oracle[(-6765, 4181)]
        limit = phi ** 2 / (mp.sqrt(5) * (1 + phi ** 2))

    value, witness = Torus().enumerate_saddle_connections(10 ** 4).badness(GOLDEN_PSI)
    assert best == (-1, 1)
    assert witness.holonomy == best
    assert float(value) == pytest.approx(float(oracle[best]), abs=1e-3)
    assert float(far) == pytest.approx(float(limit), abs=1e-3)
    assert float(far) == pytest.approx(
        float(6765 ** 2 * circle_distance(direction_mp(-6765, 4181), GOLDEN_PSI, mp.pi)), abs=1e-3)


def test_rational_direction_has_zero_badness():
    spectrum = Torus().enumerate_saddle_connections(50)
    value, witness = spectrum.badness(direction_mp(3, 7))
    assert value == 0
    assert witness.holonomy == (3, 7)


def test_l_shaped_origami():
    L = Origami('(1 2)', '(1 3)')
    assert L.n == 3
    assert L.genus == 2
    assert L.zero_orders == (2,)
    assert L.num_marked == 1
    assert float(L.area) == pytest.approx(1.0)

    spectrum = L.enumerate_saddle_connections(3)
    assert float(spectrum.shortest().length) == pytest.approx(1 / math.sqrt(3))
    assert all(s.start == 'v0' and s.end == 'v0' for s in spectrum)


def trace_separatrix(h, v, square, p, q):
    """Follow the ray along (p, q) from a corner of ``square`` to the next corner.

    ``h`` and ``v`` are 0-based right and top neighbours. Every corner of
    the L-shaped origami is its cone point, so the first corner ends the ray.
    """
    x, y = Fraction(0 if p >= 0 else 1), Fraction(0)
    travelled = Fraction(0)
    while True:
        to_side = (1 - x) / p if p > 0 else (x / -p if p < 0 else None)
        to_top = (1 - y) / q if q > 0 else None
        step = min(s for s in (to_side, to_top) if s is not None)
        x, y = x + p * step, y + q * step
        travelled += step
        if x in (0, 1) and y in (0, 1):
            return p * travelled, q * travelled
        if step == to_side:
            square, x = (h[square], Fraction(0)) if p > 0 else (h.index(square), Fraction(1))
        else:
            square, y = v[square], Fraction(0)


@pytest.mark.parametrize('lmax', range(1, 9))
def test_l_shaped_origami_matches_separatrix_tracing(lmax):
    h, v = [1, 0, 2], [2, 1, 0]
    bound = math.floor(lmax * math.sqrt(3))
    expected = set()
    for p, q in primitive_lattice(bound):
        for square in range(3):
            x, y = trace_separatrix(h, v, square, p, q)
            expected.add((square + 1, 'BL' if p >= 0 else 'BR', int(x), int(y)))

    spectrum = Origami('(1 2)', '(1 3)').enumerate_saddle_connections(lmax)
    assert len(spectrum) == len(expected) == 3 * count_primitive(bound)
    assert {s.key for s in spectrum} == expected
    for s in spectrum:
        assert float(s.length) == pytest.approx(max(abs(s.key[2]), abs(s.key[3])) / math.sqrt(3))


def test_builders():
    assert isinstance(build_torus(), Torus)
    assert build_origami('(1 2)', '(1 3)').genus == 2
    assert unfold_polygon(RationalPolygon(('1/2', '1/4', '1/4'))).genus == 1


def test_disconnected_origami():
    with pytest.raises(NotConnected):
        Origami('(1)(2)', '(1)(2)')


def test_right_isosceles_triangle_unfolds_to_a_torus():
    surface = UnfoldedPolygon(RationalPolygon((Fraction(1, 2), Fraction(1, 4), Fraction(1, 4))))
    assert surface.copies == 8
    assert surface.genus == 1
    assert surface.zero_orders == ()
    assert surface.num_marked == 4
    assert float(surface.area) == pytest.approx(1.0)

    spectrum = surface.enumerate_saddle_connections(1.5)
    assert len(spectrum) > 0
    assert all(float(s.length) <= 1.5 + 1e-9 for s in spectrum)


def test_pi_over_five_triangle_unfolds_into_ten_copies():
    polygon = RationalPolygon(('1/5', '2/5', '2/5'))
    assert polygon.order == 5
    surface = UnfoldedPolygon(polygon)
    assert surface.copies == 10
    assert surface.genus == 2
    assert surface.zero_orders == (1, 1)
    assert float(surface.area) == pytest.approx(1.0)


def test_unit_square_unfolds_to_the_torus():
    """Four copies of the square glue into a torus whose vertex classes sit on a half lattice."""
    square = RationalPolygon(('1/2', '1/2', '1/2', '1/2'), lengths=(1, 1, 1, 1))
    surface = UnfoldedPolygon(square)
    assert surface.copies == 4
    assert surface.genus == 1
    assert surface.zero_orders == ()
    assert surface.num_marked == 4
    assert float(surface.area) == pytest.approx(1.0)

    spectrum = surface.enumerate_saddle_connections(1.5)
    assert float(spectrum.shortest().length) == pytest.approx(0.5)
    for s in spectrum:
        for coordinate in s.holonomy:
            assert 2 * float(coordinate) == pytest.approx(round(2 * float(coordinate)), abs=1e-9)


def test_polygon_validation():
    with pytest.raises(SurfaceError):
        RationalPolygon((Fraction(1, 2), Fraction(1, 4), Fraction(1, 3)))
    with pytest.raises(IrrationalAngle):
        RationalPolygon(('1/2', 'pi/4', '1/4'))
    with pytest.raises(SurfaceError):
        RationalPolygon((Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))


def test_surface_files(tmp_path):
    origami = parse_surface("# L shape\nkind = origami\nh = (1 2)\nv = (1 3)\n")
    assert isinstance(origami, Origami)
    assert origami.n == 3

    path = tmp_path / 'triangle.surface'
    path.write_text("kind = polygon\nangles = 1/2 1/4 1/4\n")
    assert isinstance(load_surface(path), UnfoldedPolygon)
    assert isinstance(load_surface('torus'), Torus)

    with pytest.raises(SurfaceFileError):
        parse_surface("h = (1 2)\n")
    with pytest.raises(SurfaceFileError) as info:
        parse_surface("kind = origami\nkind = torus\n")
    assert info.value.line == 2
    with pytest.raises(SurfaceError):
        load_surface(tmp_path / 'missing.surface')


def test_flow():
    x, y = flow_holonomy((1, 0), FlowParams(t=math.log(2), theta=0))
    assert x == pytest.approx(2)
    assert y == pytest.approx(0)
    x, y = flow_holonomy((0, 1), FlowParams(t=math.log(2), theta=0))
    assert x == pytest.approx(0)
    assert y == pytest.approx(0.5)

    c = 0.3
    assert min_flow_length(2.0, c) == pytest.approx(2.0 * math.sqrt(math.sin(c) * math.cos(c)))
    with pytest.raises(ValueError):
        min_flow_length(1.0, 1.0)


@pytest.mark.parametrize('hol', [(1, 0), (0, 1), (3, -2), (0.7, 4.1)])
def test_flow_group_law(hol):
    for theta in (0.0, 0.4, 2.9):
        for s, t in ((0.3, 1.1), (-2.0, 0.5), (1.5, -1.5)):
            once = flow_holonomy(hol, FlowParams(t=s + t, theta=theta))
            twice = flow_holonomy(flow_holonomy(hol, FlowParams(t=s, theta=theta)), FlowParams(t=t))
            assert once == pytest.approx(twice, abs=1e-12 * math.exp(abs(s) + abs(t)) * max(map(abs, hol)))

    for a, b in ((0.2, 0.9), (1.3, -0.4), (math.pi, 0.5)):
        composed = flow_holonomy(flow_holonomy(hol, FlowParams(theta=b)), FlowParams(theta=a))
        assert composed == pytest.approx(flow_holonomy(hol, FlowParams(theta=a + b)), abs=1e-11)


def test_flow_preserves_area():
    pairs = [((1, 0), (0, 1)), ((2, 1), (-1, 3)), ((0.5, -1.25), (4.0, 2.0))]
    for t in (0.0, 0.8, -1.7, 3.0):
        for theta in (0.0, 0.3, 1.9):
            params = FlowParams(t=t, theta=theta)
            for u, w in pairs:
                gu, gw = flow_holonomy(u, params), flow_holonomy(w, params)
                before = u[0] * w[1] - u[1] * w[0]
                after = gu[0] * gw[1] - gu[1] * gw[0]
                assert after == pytest.approx(before, abs=1e-10 * math.exp(2 * abs(t)))


def test_torus_systole_along_the_flow():
    torus = Torus()
    spectrum = torus.enumerate_saddle_connections(100)
    value, _ = spectrum.systole(0.0, 0.0)
    assert value == pytest.approx(1.0)
    value, witness = spectrum.systole(0.0, math.log(3))
    assert value == pytest.approx(1 / 3)
    assert witness.holonomy == (0, 1)
    assert systole_along(torus, 0.0, math.log(3), spectrum) == pytest.approx(1 / 3)


def flowed_minimum(L, c):
    """Golden-section search for the minimum over t of max(e^t L sin c, e^-t L cos c)."""
    L, c = mp.mpf(L), mp.mpf(c)
    horizontal, vertical = L * mp.sin(c), L * mp.cos(c)

    def flowed(t):
        return max(mp.exp(t) * horizontal, mp.exp(-t) * vertical)

    lo, hi = mp.mpf(-40), mp.mpf(40)
    ratio = (mp.sqrt(5) - 1) / 2
    for _ in range(200):
        a, b = hi - ratio * (hi - lo), lo + ratio * (hi - lo)
        if flowed(a) <= flowed(b):
            hi = b
        else:
            lo = a
    return flowed((lo + hi) / 2)


def test_min_flow_length_matches_a_numerical_minimum():
    rng = np.random.default_rng(0)
    lengths = rng.uniform(0.5, 50.0, 100)
    angles = rng.uniform(1e-3, math.pi / 4, 100)
    with mp.workdps(40):
        for L, c in zip(lengths.tolist(), angles.tolist()):
            searched = flowed_minimum(L, c)
            assert min_flow_length(L, c) == pytest.approx(float(searched), rel=1e-9)
            precise = min_flow_length(mp.mpf(L), mp.mpf(c))
            assert abs(precise - searched) <= mp.mpf(10) ** -25 * searched


def test_golden_geodesic_stays_in_a_compact_set():
    """A bounded direction keeps every flowed connection above sqrt(badness / 2)."""
    spectrum = Torus().enumerate_saddle_connections(1000)
    delta, _ = spectrum.badness(GOLDEN_PSI)
    floor = math.sqrt(float(delta) / 2) * (1 - 1e-6)
    profile = systole_profile(spectrum, float(GOLDEN_PSI), np.linspace(0.0, 5.0, 26))
    assert all(float(value) >= floor for _, value in profile)
