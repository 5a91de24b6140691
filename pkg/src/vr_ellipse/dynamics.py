"""The clockwise step map, its iterates, and winding counts.

A step from angle p at radius r moves to the clockwise-first point whose
chord distance from p equals r.  The chord distance is strictly increasing
on the clockwise arc from p to :func:`~vr_ellipse.geometry.farthest_point`,
so a bracketed bisection in the angle offset is exact and unconditionally
robust.  For r below the antipodal distance the bracket [0, pi] suffices
(the distance at the antipode is at least 2); the turning point is only
computed for near-maximal radii.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_eccentricity, check_radius
from .errors import RadiusUnreachable
from .geometry import TWO_PI, chord_distance, farthest_point, reduce_angle

STEP_THETA_TOL = 1e-13
_STEP_ITERS = 60
_REACH_SNAP = 1e-12


@dataclass(frozen=True)
class StepOutcome:
    """Landing point of one clockwise step and the angle it swept."""

    point: float
    delta: float


@dataclass(frozen=True)
class OrbitTrace:
    """Angles visited by successive steps, with the accumulated winding.

    ``points[0]`` is the start; ``points[k]`` the k-th iterate.  ``winding``
    is the total clockwise angle divided by 2*pi, accumulated per step so it
    is immune to wrap-around ambiguity.
    """

    points: list[float] = field(default_factory=list)
    deltas: list[float] = field(default_factory=list)

    @property
    def winding(self) -> float:
        return math.fsum(self.deltas) / TWO_PI


def step(p: float, r: float, a: float, theta_tol: float = STEP_THETA_TOL) -> StepOutcome:
    """Clockwise-first point at chord distance ``r`` from ``p``.

    Raises :class:`RadiusUnreachable` if ``r`` exceeds the maximum chord
    distance attained on the monotone arc from ``p``.
    """
    a = check_eccentricity(a)
    r = check_radius(r)
    ct, st = math.cos(p), math.sin(p)
    r2 = r * r
    d2_antipode = 4.0 * (a * a * ct * ct + st * st)
    if r2 < d2_antipode:
        lo, hi = 0.0, math.pi
    else:
        s_star = reduce_angle(p - farthest_point(p, a))
        dmax = chord_distance(p, p - s_star, a)
        if r > dmax + _REACH_SNAP:
            raise RadiusUnreachable(
                f"radius {r!r} exceeds maximum reach {dmax!r} from theta={p!r} at a={a!r}"
            )
        if r >= dmax - _REACH_SNAP:
            return StepOutcome(point=reduce_angle(p - s_star), delta=s_star)
        lo, hi = 0.0, s_star
    for _ in range(_STEP_ITERS):
        if hi - lo <= theta_tol:
            break
        mid = 0.5 * (lo + hi)
        u = p - mid
        dx = a * (math.cos(u) - ct)
        dy = math.sin(u) - st
        if dx * dx + dy * dy >= r2:
            hi = mid
        else:
            lo = mid
    s = 0.5 * (lo + hi)
    return StepOutcome(point=reduce_angle(p - s), delta=s)


def step_n(p: float, r: float, a: float, n: int) -> OrbitTrace:
    """Trace of ``n`` successive clockwise steps starting at ``p``."""
    if n < 1:
        raise ValueError(f"need a positive number of steps, got {n}")
    trace = OrbitTrace(points=[reduce_angle(p)])
    cur = p
    for _ in range(n):
        out = step(cur, r, a)
        trace.points.append(out.point)
        trace.deltas.append(out.delta)
        cur = out.point
    return trace


def winding_count(p: float, r: float, a: float, n: int) -> float:
    """Total clockwise angle of ``n`` steps divided by 2*pi.

    Monotone non-decreasing in ``r`` for fixed start, eccentricity and
    step count.
    """
    return step_n(p, r, a, n).winding


def orbit_max_radius(p: float, r_hi: float, a: float, n: int) -> float:
    """Largest radius at which all ``n`` steps from ``p`` stay reachable.

    Bisects the reachability frontier in (0, r_hi]; used to cap radius
    brackets when a probe overshoots the dynamical regime.
    """

    def reachable(r: float) -> bool:
        try:
            winding_count(p, r, a, n)
        except RadiusUnreachable:
            return False
        return True

    lo = min(2.0, r_hi)
    if not reachable(lo):
        lo = 1.0
        if not reachable(lo):
            raise RadiusUnreachable(f"no reachable radius at or below 1.0 from theta={p!r}")
    hi = r_hi
    if reachable(hi):
        return hi
    for _ in range(60):
        if hi - lo <= 1e-13:
            break
        mid = 0.5 * (lo + hi)
        if reachable(mid):
            lo = mid
        else:
            hi = mid
    return lo


# -- vectorized evaluation over angle arrays ---------------------------------
#
# The batch path mirrors the scalar algorithm with numpy arrays so that
# whole profiles evaluate in a handful of vector passes.  Lanes whose radius
# reaches past the antipodal distance fall back to a per-lane turning-point
# bracket; lanes beyond the maximum reach are clamped to it and flagged.


def _batch_turning_offset(a: float, t: np.ndarray, iters: int = 60) -> np.ndarray:
    ct, st = np.cos(t), np.sin(t)
    lo = np.full_like(t, 1e-9)
    hi = np.full_like(t, TWO_PI - 1e-9)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        u = t - mid
        cu, su = np.cos(u), np.sin(u)
        deriv = a * a * (cu - ct) * su - (su - st) * cu
        pos = deriv > 0.0
        lo = np.where(pos, mid, lo)
        hi = np.where(pos, hi, mid)
    return 0.5 * (lo + hi)


def step_batch(
    t: np.ndarray, r: np.ndarray, a: float, iters: int = _STEP_ITERS
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized :func:`step`: returns (landing angles, deltas, saturated).

    ``saturated`` marks lanes where ``r`` exceeded the maximum reach; those
    lanes land on the turning point instead of erroring.
    """
    ct, st = np.cos(t), np.sin(t)
    r2 = r * r
    d2_antipode = 4.0 * (a * a * ct * ct + st * st)
    slow = d2_antipode <= r2
    hi = np.full_like(t, math.pi)
    saturated = np.zeros(t.shape, dtype=bool)
    if slow.any():
        ts = t[slow]
        s_star = _batch_turning_offset(a, ts)
        u = ts - s_star
        d2max = (a * (np.cos(u) - np.cos(ts))) ** 2 + (np.sin(u) - np.sin(ts)) ** 2
        rs2 = r2[slow] if np.ndim(r2) else np.full_like(ts, float(r2))
        sat = rs2 > d2max
        hi_slow = s_star
        hi[slow] = hi_slow
        saturated[slow] = sat
    lo = np.zeros_like(t)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        u = t - mid
        dx = a * (np.cos(u) - ct)
        dy = np.sin(u) - st
        ge = dx * dx + dy * dy >= r2
        hi = np.where(ge, mid, hi)
        lo = np.where(ge, lo, mid)
    s = 0.5 * (lo + hi)
    if slow.any():
        # clamp saturated lanes to the turning point
        s = np.where(saturated, hi, s)
    return (t - s) % TWO_PI, s, saturated


def winding_count_batch(
    t: np.ndarray, r: np.ndarray, a: float, n: int
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`winding_count`: (windings, saturated lanes)."""
    cur = np.asarray(t, dtype=float).copy()
    r = np.asarray(r, dtype=float)
    total = np.zeros_like(cur)
    saturated = np.zeros(cur.shape, dtype=bool)
    for _ in range(n):
        cur, s, sat = step_batch(cur, r, a)
        total += s
        saturated |= sat
    return total / TWO_PI, saturated
