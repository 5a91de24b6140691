"""Ellipse parameterization via the circle, chord metric, and arc arithmetic.

Points on the ellipse with semi-major axis ``a`` are identified with angles
theta in [0, 2*pi) through (a*cos(theta), sin(theta)).  The clockwise
direction is the direction of decreasing theta; every directed quantity in
the package follows that convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._validation import check_eccentricity

TWO_PI = 2.0 * math.pi


def reduce_angle(theta: float) -> float:
    """Reduce an angle to its canonical representative in [0, 2*pi)."""
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI:
        t = 0.0
    return t


def embed(theta: float, a: float) -> tuple[float, float]:
    """Map a circle angle to the plane point (a*cos(theta), sin(theta))."""
    return a * math.cos(theta), math.sin(theta)


def angle_of(x: float, y: float, a: float) -> float:
    """Inverse of :func:`embed` for points on the ellipse."""
    return reduce_angle(math.atan2(y, x / a))


def chord_distance(p: float, q: float, a: float) -> float:
    """Euclidean distance between the embedded points at angles p and q."""
    return math.hypot(a * (math.cos(p) - math.cos(q)), math.sin(p) - math.sin(q))


def clockwise_delta(p: float, q: float) -> float:
    """Angle swept moving clockwise (decreasing theta) from p to q, in [0, 2*pi)."""
    return reduce_angle(p - q)


def in_clockwise_order(p: float, w: float, u: float) -> bool:
    """True iff w lies on the closed clockwise arc from p to u."""
    return clockwise_delta(p, w) <= clockwise_delta(p, u)


@dataclass(frozen=True)
class ArcInterval:
    """Closed clockwise arc from ``start`` to ``end`` on the circle."""

    start: float
    end: float

    def contains(self, theta: float) -> bool:
        return in_clockwise_order(self.start, theta, self.end)

    def length(self) -> float:
        return clockwise_delta(self.start, self.end)


def normal_antipode(p: float, a: float) -> float:
    """Other intersection of the normal line at angle p with the ellipse.

    The normal at P = (a*cos p, sin p) has direction (cos(p)/a, sin p);
    substituting the line P + s*n into the ellipse equation gives a
    quadratic in s with the trivial root s = 0, so the second intersection
    has the closed form s = -2*(cos^2/a^2 + sin^2) / (cos^2/a^4 + sin^2).
    On the circle (a = 1) this degenerates to the exact antipode.
    """
    a = check_eccentricity(a)
    c, s = math.cos(p), math.sin(p)
    c2, s2 = c * c, s * s
    t = -2.0 * (c2 / (a * a) + s2) / (c2 / (a * a * a * a) + s2)
    qx = a * c + t * c / a
    qy = s + t * s
    return angle_of(qx, qy, a)


def _dist2_clockwise_deriv(a: float, p: float, s: float) -> float:
    """d/ds of the squared chord distance from p to the point s clockwise."""
    u = p - s
    cu, su = math.cos(u), math.sin(u)
    return 2.0 * a * a * (cu - math.cos(p)) * su - 2.0 * (su - math.sin(p)) * cu


def farthest_point(p: float, a: float, tol: float = 1e-13) -> float:
    """Point of maximal chord distance from p; end of the monotone arc.

    The chord distance from p is strictly increasing along the clockwise
    arc from p up to the unique point whose normal line passes back
    through p, and strictly decreasing beyond it.  Found by bisecting the
    exact derivative of the squared distance.  Equals the antipode on the
    circle, but differs from :func:`normal_antipode` on a true ellipse.
    """
    a = check_eccentricity(a)
    lo, hi = 1e-9, TWO_PI - 1e-9
    for _ in range(80):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if _dist2_clockwise_deriv(a, p, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return reduce_angle(p - 0.5 * (lo + hi))


def max_chord(p: float, a: float) -> float:
    """Largest chord distance attainable from p (at the farthest point)."""
    return chord_distance(p, farthest_point(p, a), a)
