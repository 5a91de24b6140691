"""Profiles of the side-length function, extremum refinement, and the
five-way shape classification.

The side-length function is evaluated on an even grid over the circle.
Because every value comes from the same fixed-bracket bisection, the
profile is quantized to a lattice of width ``2 / 2**iterations``; plateaus
of float-identical values are therefore expected near flat extrema and are
merged into a single candidate.  Candidates are refined by derivative-free
golden-section search (the function is only available through nested
bisection, so finite-difference refinement would amplify quantization
noise).
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._validation import check_eccentricity, check_samples, check_tolerance
from .algebraic import bisect_sign_change, pole_gap_algebraic
from .errors import DegenerateProfile, UnclassifiableProfile
from .geometry import TWO_PI
from .stars import (
    PENTAGRAM,
    WindingTarget,
    pole_gap,
    s_east,
    s_north,
    side_length,
    side_length_batch,
)

PROFILE_R_TOL = 1e-12
REFINE_THETA_TOL = 1e-6
VALUE_EQUAL_TOL = 1e-9

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SideProfile:
    """Side lengths sampled at evenly spaced angles over [0, 2*pi)."""

    a: float
    target: WindingTarget
    thetas: np.ndarray
    values: np.ndarray
    r_tol: float

    @property
    def count(self) -> int:
        return len(self.thetas)

    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.thetas.tolist(), self.values.tolist()))

    @property
    def quantization(self) -> float:
        """Lattice width of the fixed-bracket radius bisection."""
        iters = int(math.ceil(math.log2(2.0 / self.r_tol)))
        return 2.0 / 2.0**iters

    def to_csv(self) -> str:
        lines = ["# schema_version: 1", "theta,s_value"]
        lines += [f"{t!r},{v!r}" for t, v in self.samples()]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ExtremaReport:
    """Refined extrema of a side-length profile, in increasing angle order.

    ``fast_set_count`` divides the number of global minima by the star's
    step count: each minimal star contributes one invariant set of fast
    points per vertex.  Near the second critical eccentricity, vertices of
    distinct minimal stars approach each other closer than any practical
    grid resolves, so merged counts are rounded.
    """

    minima: tuple[tuple[float, float], ...]
    maxima: tuple[tuple[float, float], ...]
    global_min: float
    global_max: float
    fast_set_count: int
    global_min_count: int


class SituationLabel(enum.Enum):
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    S4 = "S4"
    S5 = "S5"


def profile(
    a: float,
    target: WindingTarget = PENTAGRAM,
    n: int = 2000,
    r_tol: float = PROFILE_R_TOL,
) -> SideProfile:
    """Sample the side-length function at ``n`` evenly spaced angles.

    The default radius tolerance resolves the 1e-8-scale extremum
    splitting that appears near the critical eccentricities.
    """
    a = check_eccentricity(a)
    n = check_samples(n)
    check_tolerance(r_tol, "r_tol")
    thetas = np.linspace(0.0, TWO_PI, n, endpoint=False)
    workers = int(os.environ.get("VR_ELLIPSE_THREADS", "1") or "1")
    if workers > 1 and n >= 4 * workers:
        # chunked evaluation; the radius bracket is fixed, so chunking does
        # not change any value and outputs stay byte-identical
        chunks = np.array_split(thetas, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(lambda c: side_length_batch(c, a, target, r_tol=r_tol), chunks)
            )
        values = np.concatenate(parts)
    else:
        values = side_length_batch(thetas, a, target, r_tol=r_tol)
    return SideProfile(a=a, target=target, thetas=thetas, values=values, r_tol=r_tol)


def _plateau_candidates(values: np.ndarray) -> list[tuple[str, int, int]]:
    """Cyclic scan for plateau-merged strict extrema: (kind, start, end)."""
    n = len(values)
    out: list[tuple[str, int, int]] = []
    i = 0
    visited = 0
    while visited < n:
        j = i
        while values[(j + 1) % n] == values[i % n]:
            j += 1
            if j - i >= n:
                return []  # constant profile
        before = values[(i - 1) % n]
        after = values[(j + 1) % n]
        v = values[i % n]
        if before > v and after > v:
            out.append(("min", i % n, j % n))
        elif before < v and after < v:
            out.append(("max", i % n, j % n))
        visited += j - i + 1
        i = j + 1
    return out


def _golden_minimize(f, lo: float, hi: float, xtol: float) -> tuple[float, float]:
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > xtol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = f(d)
    x = 0.5 * (lo + hi)
    return x, f(x)


def find_extrema(
    prof: SideProfile,
    refine_tol: float = REFINE_THETA_TOL,
    value_tol: float = VALUE_EQUAL_TOL,
) -> ExtremaReport:
    """Locate and refine all extrema of a sampled side-length profile.

    Raises :class:`DegenerateProfile` when the profile is constant within
    the bisection lattice (the circle case has no isolated extrema).
    """
    check_tolerance(refine_tol, "refine_tol")
    v = prof.values
    if float(np.ptp(v)) <= 3.0 * prof.quantization:
        raise DegenerateProfile(
            f"profile at a={prof.a!r} is constant within quantization; no isolated extrema"
        )
    cands = _plateau_candidates(v)
    if not cands:
        raise DegenerateProfile(f"profile at a={prof.a!r} has no strict extrema")

    n = prof.count
    spacing = TWO_PI / n

    def eval_s(theta: float) -> float:
        return side_length(theta, prof.a, prof.target, r_tol=prof.r_tol)

    minima: list[tuple[float, float]] = []
    maxima: list[tuple[float, float]] = []
    for kind, i, j in cands:
        # bracket one sample beyond each end of the plateau run
        run = (j - i) % n
        lo = prof.thetas[i] - spacing
        hi = prof.thetas[i] + run * spacing + spacing
        if kind == "min":
            x, val = _golden_minimize(eval_s, lo, hi, refine_tol)
            minima.append((x % TWO_PI, val))
        else:
            x, val = _golden_minimize(lambda t: -eval_s(t), lo, hi, refine_tol)
            maxima.append((x % TWO_PI, -val))
    minima.sort()
    maxima.sort()
    gmin = min(val for _, val in minima)
    gmax = max(val for _, val in maxima)
    gmin_count = sum(1 for _, val in minima if val - gmin <= value_tol)
    beta = prof.target.beta
    return ExtremaReport(
        minima=tuple(minima),
        maxima=tuple(maxima),
        global_min=gmin,
        global_max=gmax,
        fast_set_count=int(round(gmin_count / beta)),
        global_min_count=gmin_count,
    )


def classify_situation(
    report: ExtremaReport,
    a: float,
    value_tol: float = VALUE_EQUAL_TOL,
    r_tol: float = PROFILE_R_TOL,
) -> SituationLabel:
    """Assign one of the five profile shapes.

    Uses the extremum counts together with the sign of the pole gap
    (north minus east side length) at equality tolerance ``value_tol``.
    Counts between 12 and 20 all mark the split-family shapes: near the
    second critical eccentricity several extremum pairs merge below grid
    resolution, so the nominal count of 20 is not always attained.  The
    gap-equality rule for the critical shape applies only inside the
    split shapes; with the plain ten-plus-ten structure a tiny gap just
    means the ellipse is close to the circle, where the whole profile
    range collapses, and the sign still decides.
    """
    gap = s_north(a, r_tol=r_tol) - s_east(a, r_tol=r_tol)
    nmin, nmax = len(report.minima), len(report.maxima)
    if nmin != nmax:
        raise UnclassifiableProfile(
            f"{nmin} minima vs {nmax} maxima at a={a!r}; profile under-sampled"
        )
    if nmin == 10:
        return SituationLabel.S1 if gap >= 0 else SituationLabel.S5
    if 12 <= nmin <= 20:
        if abs(gap) <= value_tol:
            return SituationLabel.S3
        return SituationLabel.S2 if gap > 0 else SituationLabel.S4
    raise UnclassifiableProfile(
        f"extremum count {nmin}/{nmax} matches no known shape at a={a!r}"
    )


def critical_eccentricity(
    bracket_lo: float,
    bracket_hi: float,
    tol: float = 1e-6,
    gap: str = "algebraic",
    r_tol: float = PROFILE_R_TOL,
) -> float:
    """Eccentricity at which the pole gap changes sign, by bisection.

    ``gap`` selects the algebraic pipeline (default: exact polynomial
    roots, fast and noise-free) or the dynamical one (two nested
    side-length bisections per probe).  Raises :class:`NoSignChange` when
    the bracket endpoints have gaps of equal sign.
    """
    check_eccentricity(bracket_lo, allow_circle=False)
    check_eccentricity(bracket_hi, allow_circle=False)
    check_tolerance(tol, "tol")
    if gap == "algebraic":
        fn = pole_gap_algebraic
    elif gap == "dynamical":
        fn = lambda a: pole_gap(a, r_tol=r_tol)
    else:
        raise ValueError(f"gap must be 'algebraic' or 'dynamical', got {gap!r}")
    root, _ = bisect_sign_change(fn, bracket_lo, bracket_hi, tol)
    return root
