"""Exact-coefficient elimination polynomials and algebraic star certificates.

Two bivariate integer polynomials vanish exactly when an eccentricity/radius
pair admits an inscribed five-pointed star wrapping twice and based at the
north pole (respectively the east pole).  Isolating their real roots above
the maximal-triangle bound certifies the pole star diameters to full double
precision, independently of the step dynamics.

The coefficient tables are transcribed as exact integers.  The two tables
determine each other through the substitution

    east(a, r) == a**38 * north(1/a, r/a)

(scaling the ellipse by 1/a swaps the roles of the two axes), which holds
term by term in exact arithmetic and guards against transcription slips.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NoSignChange, RootCountUnexpected
from .geometry import clockwise_delta, embed
from .stars import StarConfig

# term format: (degree in a, degree in r, integer coefficient)
_NORTH_TERMS = (
    (24, 14, 50625), (24, 12, -432000), (24, 10, -576000),
    (24, 8, 10076160), (24, 6, -983040), (24, 4, -62914560),
    (22, 14, 40500), (22, 12, 1728000), (22, 10, -14929920),
    (22, 8, -1474560), (22, 6, 161218560), (22, 4, -125829120),
    (20, 14, -273150), (20, 12, 2593920), (20, 10, 14059520),
    (20, 8, -128696320), (20, 6, 172359680), (20, 4, -62914560),
    (18, 14, -63900), (18, 12, -4603904), (18, 10, 35885056),
    (18, 8, -42663936), (18, 6, 14417920), (16, 14, 488815),
    (16, 12, -3518208), (16, 10, -8330240), (16, 8, 23478272),
    (16, 6, -11468800), (14, 14, -91800), (14, 12, 3914752),
    (14, 10, -9973760), (14, 8, 5865472), (12, 14, -201956),
    (12, 12, 703744), (12, 10, 247808), (12, 8, -802816),
    (10, 14, 5480), (10, 12, -274432), (10, 10, 356352),
    (8, 14, 34991), (8, 12, -100736), (8, 10, 38400),
    (6, 14, 9316), (6, 12, -10752), (4, 14, 1026),
    (4, 12, -384), (2, 14, 52), (0, 14, 1),
)

_EAST_TERMS = (
    (24, 14, 1), (22, 14, 52), (22, 12, -384),
    (20, 14, 1026), (20, 12, -10752), (20, 10, 38400),
    (18, 14, 9316), (18, 12, -100736), (18, 10, 356352),
    (18, 8, -802816), (16, 14, 34991), (16, 12, -274432),
    (16, 10, 247808), (16, 8, 5865472), (16, 6, -11468800),
    (14, 14, 5480), (14, 12, 703744), (14, 10, -9973760),
    (14, 8, 23478272), (14, 6, 14417920), (14, 4, -62914560),
    (12, 14, -201956), (12, 12, 3914752), (12, 10, -8330240),
    (12, 8, -42663936), (12, 6, 172359680), (12, 4, -125829120),
    (10, 14, -91800), (10, 12, -3518208), (10, 10, 35885056),
    (10, 8, -128696320), (10, 6, 161218560), (10, 4, -62914560),
    (8, 14, 488815), (8, 12, -4603904), (8, 10, 14059520),
    (8, 8, -1474560), (8, 6, -983040), (6, 14, -63900),
    (6, 12, 2593920), (6, 10, -14929920), (6, 8, 10076160),
    (4, 14, -273150), (4, 12, 1728000), (4, 10, -576000),
    (2, 14, 40500), (2, 12, -432000), (0, 14, 50625),
)


@dataclass(frozen=True)
class BivariatePolynomial:
    """Integer polynomial in the eccentricity ``a`` and radius ``r``."""

    name: str
    terms: tuple[tuple[int, int, int], ...]

    def r_coefficients(self, a: float) -> np.ndarray:
        """Coefficients of the univariate slice in r, index = degree."""
        max_dr = max(dr for _, dr, _ in self.terms)
        coeff = np.zeros(max_dr + 1)
        for da, dr, c in self.terms:
            coeff[dr] += c * a**da
        return coeff

    def __call__(self, a: float, r):
        """Horner evaluation in r with powers of a precomputed; accepts
        a scalar or an ndarray of radii."""
        coeff = self.r_coefficients(a)
        acc = np.zeros_like(r) if isinstance(r, np.ndarray) else 0.0
        for k in range(len(coeff) - 1, -1, -1):
            acc = acc * r + coeff[k]
        return acc

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": 1,
                "name": self.name,
                "terms": [
                    {"deg_a": da, "deg_r": dr, "coeff": c} for da, dr, c in self.terms
                ],
            },
            indent=2,
        )


NORTH_STAR_POLY = BivariatePolynomial("north_pole_star", _NORTH_TERMS)
EAST_STAR_POLY = BivariatePolynomial("east_pole_star", _EAST_TERMS)


def eval_poly(poly: BivariatePolynomial, a: float, r: float) -> float:
    return float(poly(a, r))


def triangle_bounds(a: float) -> tuple[float, float]:
    """Minimal and maximal inscribed equilateral triangle diameters.

    Closed forms 4*sqrt(3)*a/(a^2+3) and 4*sqrt(3)*a^2/(3*a^2+1); equal
    exactly on the circle.
    """
    if a < 1.0:
        raise ValueError(f"eccentricity must be >= 1, got {a!r}")
    s3 = math.sqrt(3.0)
    return 4.0 * s3 * a / (a * a + 3.0), 4.0 * s3 * a * a / (3.0 * a * a + 1.0)


@dataclass(frozen=True)
class RootInterval:
    """Bracket certifying one sign-change root: signs at the ends differ."""

    lo: float
    hi: float
    sign_lo: int
    sign_hi: int

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo


def isolate_star_roots(
    poly: BivariatePolynomial,
    a: float,
    r_lo: float,
    r_hi: float,
    tol: float = 1e-12,
    grid: int = 10_000,
) -> list[RootInterval]:
    """Sign-change roots of ``poly(a, .)`` on (r_lo, r_hi], refined to ``tol``.

    The interval is open at ``r_lo``: the maximal-triangle diameter is
    itself a root of the north polynomial (a triangle traversed twice in
    five chords solves the same system), so the scan starts a hair above
    the bound to exclude it.  The star roots sit at least 0.02 higher, far
    beyond the offset.
    """
    eps = 1e-9 * max(1.0, abs(r_lo))
    xs = np.linspace(r_lo + eps, r_hi, grid + 1)
    vals = poly(a, xs)
    signs = np.sign(vals)
    roots: list[RootInterval] = []
    for i in np.nonzero(signs[:-1] * signs[1:] < 0)[0]:
        lo, hi = float(xs[i]), float(xs[i + 1])
        flo = eval_poly(poly, a, lo)
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            fmid = eval_poly(poly, a, mid)
            if flo * fmid <= 0.0:
                hi = mid
            else:
                lo, flo = mid, fmid
        sign_lo = int(math.copysign(1.0, eval_poly(poly, a, lo)))
        sign_hi = int(math.copysign(1.0, eval_poly(poly, a, hi)))
        roots.append(RootInterval(lo=lo, hi=hi, sign_lo=sign_lo, sign_hi=sign_hi))
    return roots


def pole_star_root(
    poly: BivariatePolynomial, a: float, r_ceiling: float = 2.2, tol: float = 1e-12
) -> float:
    """The unique root of ``poly(a, .)`` above the maximal-triangle bound."""
    _, r2 = triangle_bounds(a)
    lo = r2 + 1e-6
    roots = isolate_star_roots(poly, a, lo, r_ceiling, tol=tol)
    if len(roots) != 1:
        raise RootCountUnexpected(
            f"{poly.name}: expected one root in ({lo}, {r_ceiling}] at a={a!r},"
            f" found {len(roots)}"
        )
    return roots[0].midpoint


def pole_gap_algebraic(a: float, r_ceiling: float = 2.2, tol: float = 1e-12) -> float:
    """North-pole star diameter minus east-pole star diameter, from the
    elimination polynomials; resolves the 1e-6-scale gap to ~1e-10."""
    return pole_star_root(NORTH_STAR_POLY, a, r_ceiling, tol) - pole_star_root(
        EAST_STAR_POLY, a, r_ceiling, tol
    )


def bisect_sign_change(f, lo: float, hi: float, tol: float):
    """Generic sign-change bisection with a bracket trace.

    Returns (root, trace) where trace lists (lo, hi, f(mid)) per iteration.
    Raises :class:`NoSignChange` when the endpoint signs agree.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo, []
    if fhi == 0.0:
        return hi, []
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise NoSignChange(f"no sign change on [{lo}, {hi}]: f(lo)={flo!r}, f(hi)={fhi!r}")
    trace = []
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        trace.append((lo, hi, fmid))
        if fmid == 0.0:
            return mid, trace
        if math.copysign(1.0, flo) != math.copysign(1.0, fmid):
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi), trace


# -- residual checkers linking the dynamical stars to the algebraic systems --


def star_system_residual(star: StarConfig) -> float:
    """Largest residual of the defining star equations on a step orbit.

    Checks that every vertex satisfies the ellipse equation and that every
    consecutive pair (including the wrap back to the base) is at squared
    chord distance ``diameter**2``.
    """
    a, r = star.a, star.diameter
    pts = [embed(t, a) for t in star.vertices]
    worst = 0.0
    for x, y in pts:
        worst = max(worst, abs((x / a) ** 2 + y**2 - 1.0))
    cyc = pts + [pts[0]]
    for (x0, y0), (x1, y1) in zip(cyc[:-1], cyc[1:]):
        worst = max(worst, abs((x1 - x0) ** 2 + (y1 - y0) ** 2 - r * r))
    return worst


def _mirror_pair_residual(
    pts: Sequence[tuple[float, float]], pairs: Iterable[tuple[int, int]], flip_x: bool
) -> float:
    worst = 0.0
    for i, j in pairs:
        xi, yi = pts[i]
        xj, yj = pts[j]
        if flip_x:
            worst = max(worst, abs(xi + xj), abs(yi - yj))
        else:
            worst = max(worst, abs(xi - xj), abs(yi + yj))
    return worst


def north_symmetry_residual(star: StarConfig) -> float:
    """Residual of the north-pole symmetry system on an orbit star.

    The base vertex must be (0, 1) and the orbit must pair up under the
    mirror across the y-axis: first with fourth iterate, second with third.
    """
    pts = star.plane_vertices()
    x0, y0 = pts[0]
    worst = max(abs(x0), abs(y0 - 1.0))
    return max(worst, _mirror_pair_residual(pts, [(1, 4), (2, 3)], flip_x=True))


def east_symmetry_residual(star: StarConfig) -> float:
    """Residual of the east-pole symmetry system: base at (a, 0) and the
    orbit paired under the mirror across the x-axis."""
    pts = star.plane_vertices()
    x0, y0 = pts[0]
    worst = max(abs(x0 - star.a), abs(y0))
    return max(worst, _mirror_pair_residual(pts, [(1, 4), (2, 3)], flip_x=False))


def cyclic_positions(star: StarConfig) -> list[float]:
    """Star vertices re-ordered by clockwise position from the base."""
    return sorted(star.vertices, key=lambda t: clockwise_delta(star.base, t))
