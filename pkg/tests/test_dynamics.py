import math

import numpy as np
import pytest

from vr_ellipse import (
    RadiusUnreachable,
    chord_distance,
    clockwise_delta,
    in_clockwise_order,
    max_chord,
    reduce_angle,
    step,
    step_n,
    winding_count,
)
from vr_ellipse.dynamics import step_batch

TWO_PI = 2 * math.pi


def circ_diff(x, y):
    return abs((x - y + math.pi) % TWO_PI - math.pi)


def quartic_intersection_step(p, r, a):
    """Independent oracle: intersect the circle of radius r centered at the
    embedded point with the ellipse by solving the degree-4 polynomial in
    cos(theta), then take the clockwise-first intersection."""
    c0, s0 = math.cos(p), math.sin(p)
    A = a * a - 1.0
    B = -2.0 * a * a * c0
    C = a * a * c0 * c0 + 1.0 + s0 * s0 - r * r
    # (A c^2 + B c + C)^2 == 4 s0^2 (1 - c^2)
    coeffs = [
        A * A,
        2 * A * B,
        B * B + 2 * A * C + 4 * s0 * s0,
        2 * B * C,
        C * C - 4 * s0 * s0,
    ]
    roots = np.roots(coeffs)
    best = None
    for c in roots:
        if abs(c.imag) > 1e-9 or abs(c.real) > 1 + 1e-12:
            continue
        c = min(1.0, max(-1.0, c.real))
        mag = math.sqrt(max(0.0, 1.0 - c * c))
        for s in {mag, -mag} if abs(s0) < 1e-8 else {(A * c * c + B * c + C) / (2 * s0)}:
            if abs(s) > 1 + 1e-9:
                continue
            resid = a * a * (c - c0) ** 2 + (s - s0) ** 2 - r * r
            if abs(resid) > 1e-7:
                continue
            u = math.atan2(s, c)
            d = clockwise_delta(p, u)
            if 1e-7 < d < TWO_PI - 1e-7 and (best is None or d < best):
                best = d
    assert best is not None, "oracle found no intersection"
    return reduce_angle(p - best)


def test_circle_closed_form(rng):
    for r in rng.uniform(0.01, 1.99, 100):
        p = rng.uniform(0, TWO_PI)
        out = step(p, r, 1.0)
        assert out.delta == pytest.approx(2 * math.asin(r / 2), abs=1e-12)


def test_pentagram_and_triangle_orbits(rng):
    p = rng.uniform(0, TWO_PI)
    tr = step_n(p, 2 * math.sin(2 * math.pi / 5), 1.0, 5)
    assert tr.winding == pytest.approx(2.0, abs=1e-10)
    assert circ_diff(tr.points[-1], p) < 1e-10
    tr = step_n(p, math.sqrt(3), 1.0, 3)
    assert tr.winding == pytest.approx(1.0, abs=1e-10)
    assert circ_diff(tr.points[-1], p) < 1e-10


def test_step_exactness(rng):
    # includes radii close to the per-point maximum (slow path)
    for _ in range(100):
        a = rng.uniform(1.0, 1.41)
        p = rng.uniform(0, TWO_PI)
        hi = max_chord(p, a)
        r = rng.uniform(0.05, hi - 1e-6)
        out = step(p, r, a)
        assert abs(chord_distance(p, out.point, a) - r) <= 1e-11 * max(1.0, r)


def test_step_against_quartic_oracle(rng):
    for _ in range(100):
        a = rng.uniform(1.001, 1.41)
        p = rng.uniform(0, TWO_PI)
        r = rng.uniform(0.1, 1.9)
        mine = step(p, r, a).point
        oracle = quartic_intersection_step(p, r, a)
        assert circ_diff(mine, oracle) <= 1e-9


def test_step_monotone_in_radius(rng):
    for _ in range(1000):
        a = rng.uniform(1.0, 1.41)
        p = rng.uniform(0, TWO_PI)
        r1, r2 = np.sort(rng.uniform(0.05, 1.95, 2))
        if r2 - r1 < 1e-9:
            continue
        q1 = step(p, r1, a).point
        q2 = step(p, r2, a).point
        assert clockwise_delta(p, q1) < clockwise_delta(p, q2)
        assert in_clockwise_order(p, q1, q2)


def test_step_monotone_in_eccentricity(rng):
    # larger semi-major axis means the same radius is reached sooner
    for _ in range(1000):
        p = rng.uniform(0, TWO_PI)
        r = rng.uniform(0.1, 1.9)
        a1, a2 = np.sort(rng.uniform(1.0, 1.41, 2))
        if a2 - a1 < 1e-9:
            continue
        d1 = step(p, r, a1).delta
        d2 = step(p, r, a2).delta
        assert d2 < d1


def test_step_delta_range(rng):
    # for radii up to the minor-axis length every step stays within a half turn
    for _ in range(300):
        a = rng.uniform(1.0, 1.41)
        p = rng.uniform(0, TWO_PI)
        r = rng.uniform(0.01, 2.0)
        d = step(p, r, a).delta
        assert 0.0 < d <= math.pi + 1e-12
    # near the maximum reach the step can exceed a half turn on a true ellipse
    p = math.pi / 4
    big = step(p, max_chord(p, 1.2) - 1e-9, 1.2).delta
    assert big > math.pi


def test_radius_unreachable():
    p = math.pi / 4
    hi = max_chord(p, 1.2)
    with pytest.raises(RadiusUnreachable):
        step(p, hi + 1e-6, 1.2)
    # at the reach boundary the step lands on the farthest point
    out = step(p, hi, 1.2)
    assert abs(chord_distance(p, out.point, 1.2) - hi) < 1e-11
    with pytest.raises(RadiusUnreachable):
        step_n(0.3, 2.9, 1.2, 3)


def test_orbit_trace_consistency(rng):
    p = rng.uniform(0, TWO_PI)
    tr = step_n(p, 1.3, 1.25, 7)
    assert len(tr.points) == 8
    assert tr.winding == pytest.approx(math.fsum(tr.deltas) / TWO_PI, abs=1e-12)
    assert all(d > 0 for d in tr.deltas)


def test_winding_monotone_in_radius(rng):
    for _ in range(200):
        a = rng.uniform(1.0, 1.41)
        p = rng.uniform(0, TWO_PI)
        r1, r2 = np.sort(rng.uniform(0.05, 1.99, 2))
        n = int(rng.integers(1, 8))
        assert winding_count(p, r1, a, n) <= winding_count(p, r2, a, n) + 1e-15


def test_winding_examples(rng):
    p = rng.uniform(0, TWO_PI)
    assert winding_count(p, 0.01, 1.2, 5) < 1.0
    assert winding_count(p, 2 * math.sin(2 * math.pi / 5), 1.0, 5) == pytest.approx(
        2.0, abs=1e-10
    )


def test_axis_symmetry_of_step(rng):
    # reflection across the y-axis maps the clockwise step from the north
    # pole to the counter-clockwise step, so deltas agree
    for a in (1.1, 1.32):
        r = 1.5
        d = step(math.pi / 2, r, a).delta
        # counter-clockwise step from pi/2 == clockwise step from pi/2 reflected
        q = step(math.pi / 2, r, a).point
        q_reflected = reduce_angle(math.pi - q)
        assert chord_distance(math.pi / 2, q_reflected, a) == pytest.approx(r, abs=1e-10)
        assert clockwise_delta(q_reflected, math.pi / 2) == pytest.approx(d, abs=1e-10)


def test_batch_step_matches_scalar(rng):
    for a in (1.0, 1.2, 1.38):
        t = rng.uniform(0, TWO_PI, 64)
        r = rng.uniform(0.1, 1.95, 64)
        pts, deltas, sat = step_batch(t, r, a)
        assert not sat.any()
        for i in range(64):
            out = step(float(t[i]), float(r[i]), a)
            assert circ_diff(float(pts[i]), out.point) < 1e-12
            assert abs(float(deltas[i]) - out.delta) < 1e-12


def test_batch_step_saturation():
    t = np.array([math.pi / 4, 0.3])
    r = np.array([2.9, 1.0])
    pts, deltas, sat = step_batch(t, r, 1.2)
    assert sat.tolist() == [True, False]
