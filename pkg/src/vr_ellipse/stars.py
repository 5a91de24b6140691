"""Side lengths of inscribed equilateral stars and the pole gap.

The side-length function maps a base point to the infimal radius at which
``beta`` clockwise steps wind ``alpha`` times around the ellipse.  At that
radius the step orbit closes up into an equilateral ``beta``-pointed star
wrapping ``alpha`` times.  Winding is monotone in the radius, so the
infimum is found by plain bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._validation import check_eccentricity, check_winding_target
from .dynamics import orbit_max_radius, step_n, winding_count, winding_count_batch
from .errors import RadiusUnreachable, TargetUnreachable
from .geometry import TWO_PI, embed

SIDE_R_TOL = 1e-11
# minor axis has length 2: five or seven steps of radius 2 always complete
# the required loops, so [0, 2] brackets the infimum for the targets used here
_BRACKET_HI = 2.0


@dataclass(frozen=True)
class WindingTarget:
    """Loops over steps, in lowest terms and below one half."""

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        check_winding_target(self.alpha, self.beta)

    @classmethod
    def from_fraction(cls, value: str | Fraction) -> "WindingTarget":
        f = Fraction(value)
        return cls(f.numerator, f.denominator)

    def __str__(self) -> str:
        return f"{self.alpha}/{self.beta}"


PENTAGRAM = WindingTarget(2, 5)
SEVEN_STAR = WindingTarget(3, 7)


@dataclass(frozen=True)
class StarConfig:
    """An inscribed equilateral star produced by the closing step orbit.

    ``vertices`` are in traversal order (consecutive entries are one step
    apart, at chord distance ``diameter``); ``closure_error`` is the angular
    gap between the final step and the base point.
    """

    base: float
    vertices: tuple[float, ...]
    diameter: float
    target: WindingTarget
    a: float
    winding: float
    closure_error: float

    def plane_vertices(self) -> list[tuple[float, float]]:
        return [embed(t, self.a) for t in self.vertices]


def _winding_reaches(p: float, r: float, a: float, target: WindingTarget) -> bool:
    return winding_count(p, r, a, target.beta) >= target.alpha


def side_length(
    p: float,
    a: float,
    target: WindingTarget = PENTAGRAM,
    r_tol: float = SIDE_R_TOL,
) -> float:
    """Infimal radius whose step orbit winds ``target.alpha`` times in
    ``target.beta`` steps, bisected to ``r_tol``.

    Raises :class:`TargetUnreachable` if even the maximal orbit radius
    falls short of the target winding.
    """
    a = check_eccentricity(a)
    lo, hi = 0.0, _BRACKET_HI
    try:
        reached = _winding_reaches(p, hi, a, target)
    except RadiusUnreachable:
        reached = False
        hi = orbit_max_radius(p, hi, a, target.beta)
    if not reached:
        # probe upward by doubling, capped at the orbit reachability frontier
        while True:
            if _winding_reaches(p, hi, a, target):
                break
            lo = hi
            try:
                winding_count(p, 2.0 * hi, a, target.beta)
                hi = 2.0 * hi
            except RadiusUnreachable:
                cap = orbit_max_radius(p, 2.0 * hi, a, target.beta)
                if cap <= hi or not _winding_reaches(p, cap, a, target):
                    raise TargetUnreachable(
                        f"winding {target} unattainable from theta={p!r} at a={a!r}"
                    ) from None
                hi = cap
                break
    while hi - lo > r_tol:
        mid = 0.5 * (lo + hi)
        if _winding_reaches(p, mid, a, target):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def side_length_batch(
    thetas: np.ndarray,
    a: float,
    target: WindingTarget = PENTAGRAM,
    r_tol: float = SIDE_R_TOL,
) -> np.ndarray:
    """Vectorized :func:`side_length` over an array of base angles.

    Uses the fixed bracket [0, 2]; lanes that saturate the step map are
    treated as having reached the target, which biases them toward the
    reachability frontier, and the final winding check rejects any lane
    whose target is genuinely unattainable.
    """
    a = check_eccentricity(a)
    t = np.asarray(thetas, dtype=float)
    lo = np.zeros_like(t)
    hi = np.full_like(t, _BRACKET_HI)
    iters = int(math.ceil(math.log2(_BRACKET_HI / r_tol)))
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        w, sat = winding_count_batch(t, mid, a, target.beta)
        ok = (w >= target.alpha) | sat
        hi = np.where(ok, mid, hi)
        lo = np.where(ok, lo, mid)
    out = 0.5 * (lo + hi)
    w, sat = winding_count_batch(t, hi, a, target.beta)
    bad = w < target.alpha
    if bad.any():
        k = int(np.argmax(bad))
        raise TargetUnreachable(
            f"winding {target} unattainable from theta={t[k]!r} at a={a!r}"
        )
    return out


def star_points(
    p: float,
    a: float,
    target: WindingTarget = PENTAGRAM,
    r_tol: float = 1e-13,
) -> StarConfig:
    """The inscribed star based at ``p``: the step orbit at the closing radius.

    The orbit closure amplifies the radius error by up to a few thousand
    near the critical eccentricities (landing points graze the poles where
    the chord derivative vanishes), hence the tight default tolerance.
    """
    r = side_length(p, a, target, r_tol=r_tol)
    trace = step_n(p, r, a, target.beta)
    closure = trace.points[-1] - trace.points[0]
    closure = abs((closure + math.pi) % TWO_PI - math.pi)
    return StarConfig(
        base=trace.points[0],
        vertices=tuple(trace.points[: target.beta]),
        diameter=r,
        target=target,
        a=a,
        winding=trace.winding,
        closure_error=closure,
    )


def s_north(a: float, target: WindingTarget = PENTAGRAM, r_tol: float = SIDE_R_TOL) -> float:
    """Side length of the star based at the north pole (0, 1)."""
    return side_length(0.5 * math.pi, a, target, r_tol=r_tol)


def s_east(a: float, target: WindingTarget = PENTAGRAM, r_tol: float = SIDE_R_TOL) -> float:
    """Side length of the star based at the east pole (a, 0)."""
    return side_length(0.0, a, target, r_tol=r_tol)


def pole_gap(a: float, r_tol: float = SIDE_R_TOL) -> float:
    """North-pole star diameter minus east-pole star diameter.

    The sign changes of this gap in the eccentricity locate the critical
    values where the two pole star families trade places as global
    extrema; the signal is at the 1e-6 scale, two orders above the
    bisection tolerance.
    """
    return s_north(a, r_tol=r_tol) - s_east(a, r_tol=r_tol)
