"""Scale thresholds and homotopy-type classification of the Rips complexes.

For an ellipse of eccentricity a, five radii split the scale axis: the
closed forms for the inscribed-triangle extremes, the global minimum and
maximum of the five-pointed-star side length, and the global minimum of
the seven-pointed-star side length.  Between consecutive thresholds the
complex has one fixed homotopy type; which sequence of types appears
depends on the shape of the star side-length profile.  Everything above
the second threshold is conditional on the star profile having the
conjectured monotone-between-extrema structure, and results carry that
flag.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from ._validation import check_eccentricity, check_radius, check_samples, check_tolerance
from .algebraic import triangle_bounds
from .extrema import (
    PROFILE_R_TOL,
    REFINE_THETA_TOL,
    VALUE_EQUAL_TOL,
    SituationLabel,
    _golden_minimize,
    classify_situation,
    find_extrema,
    profile,
)
from .stars import PENTAGRAM, SEVEN_STAR, s_east, s_north, side_length

# open-ball complexes never attain a periodic orbit, so the count entering
# the wedge-summand formula (orbits + fast sets - 1) is identically zero
PERIODIC_ORBIT_COUNT = 0


class EccentricityRegime(Enum):
    """How the even-sphere window is subdivided, derived from the profile shape."""

    PURE_ODD_EVEN = "pure"       # shapes S1/S5: single sphere per window
    CRITICAL = "critical"        # shape S3: wedge fills the whole window
    MIXED = "mixed"              # shapes S2/S4: sphere then wedge, split at r7half


_REGIME_OF = {
    SituationLabel.S1: EccentricityRegime.PURE_ODD_EVEN,
    SituationLabel.S5: EccentricityRegime.PURE_ODD_EVEN,
    SituationLabel.S3: EccentricityRegime.CRITICAL,
    SituationLabel.S2: EccentricityRegime.MIXED,
    SituationLabel.S4: EccentricityRegime.MIXED,
}


class HomotopyType(Enum):
    CIRCLE = "S1"
    SPHERE2 = "S2"
    SPHERE3 = "S3"
    SPHERE4 = "S4"
    WEDGE_THREE_SPHERE4 = "wedge-3-S4"
    SPHERE5 = "S5"
    OUT_OF_CLASSIFIED_RANGE = "out-of-classified-range"

    @property
    def label(self) -> str:
        return self.value


@dataclass(frozen=True)
class ScaleThresholds:
    """Critical radii for one eccentricity, with the profile-shape context.

    ``r7half`` is present only in the mixed regime: it is the side length
    of the pole family holding the local (non-global) minimum, where the
    wedge summands appear.
    """

    a: float
    r1: float
    r2: float
    r3: float
    r4: float
    r5: float
    r7half: float | None
    regime: EccentricityRegime
    situation: SituationLabel

    def ordered(self) -> bool:
        ok = self.r1 <= self.r2 < self.r3 <= self.r4 < self.r5
        if self.r7half is not None:
            ok = ok and self.r3 < self.r7half <= self.r4
        return ok


@lru_cache(maxsize=64)
def _thresholds_cached(
    a: float, samples: int, r_tol: float, refine_tol: float, value_tol: float
) -> ScaleThresholds:
    r1, r2 = triangle_bounds(a)
    prof5 = profile(a, PENTAGRAM, n=samples, r_tol=r_tol)
    rep5 = find_extrema(prof5, refine_tol=refine_tol, value_tol=value_tol)
    situation = classify_situation(rep5, a, value_tol=value_tol, r_tol=r_tol)
    regime = _REGIME_OF[situation]
    sn = s_north(a, r_tol=r_tol)
    se = s_east(a, r_tol=r_tol)
    r3 = min(sn, se)
    # the global maximum sits off the poles in the split shapes, so it is
    # always taken from the refined profile maxima
    r4 = max(rep5.global_max, sn, se)
    r7half = max(sn, se) if regime is EccentricityRegime.MIXED else None
    prof7 = profile(a, SEVEN_STAR, n=samples, r_tol=r_tol)
    # only the global minimum of the seven-star profile matters, so refine
    # just the lowest lobe; near sqrt(2) the profile flattens to the
    # bisection lattice and the grid minimum already is the answer
    i = int(np.argmin(prof7.values))
    spacing = prof7.thetas[1] - prof7.thetas[0]
    _, refined = _golden_minimize(
        lambda t: side_length(t, a, SEVEN_STAR, r_tol=r_tol),
        prof7.thetas[i] - spacing,
        prof7.thetas[i] + spacing,
        refine_tol,
    )
    r5 = min(refined, float(prof7.values.min()))
    return ScaleThresholds(
        a=a, r1=r1, r2=r2, r3=r3, r4=r4, r5=r5, r7half=r7half,
        regime=regime, situation=situation,
    )


def thresholds(
    a: float,
    samples: int = 2000,
    r_tol: float = PROFILE_R_TOL,
    refine_tol: float = REFINE_THETA_TOL,
    value_tol: float = VALUE_EQUAL_TOL,
) -> ScaleThresholds:
    """All five scale thresholds (plus r7half in the mixed regime) at ``a``."""
    a = check_eccentricity(a, allow_circle=False)
    samples = check_samples(samples)
    return _thresholds_cached(a, samples, float(r_tol), float(refine_tol), float(value_tol))


def classify(a: float, r: float, th: ScaleThresholds | None = None, **kw) -> HomotopyType:
    """Homotopy type of the Rips complex of the ellipse at scale ``r``.

    Intervals are half-open, closed on the right; scales above the last
    threshold are out of the classified range.
    """
    r = check_radius(r)
    if th is None:
        th = thresholds(a, **kw)
    if r <= th.r1:
        return HomotopyType.CIRCLE
    if r <= th.r2:
        return HomotopyType.SPHERE2
    if r <= th.r3:
        return HomotopyType.SPHERE3
    if th.regime is EccentricityRegime.MIXED and r <= th.r7half:
        return HomotopyType.SPHERE4
    if r <= th.r4:
        if th.regime is EccentricityRegime.PURE_ODD_EVEN:
            return HomotopyType.SPHERE4
        return HomotopyType.WEDGE_THREE_SPHERE4
    if r <= th.r5:
        return HomotopyType.SPHERE5
    return HomotopyType.OUT_OF_CLASSIFIED_RANGE


@dataclass(frozen=True)
class ClassificationReport:
    """Barcode-style interval list of homotopy types for one eccentricity."""

    thresholds: ScaleThresholds
    intervals: tuple[tuple[HomotopyType, float, float, bool], ...]
    homology_note: str | None

    def to_json(self) -> str:
        th = self.thresholds
        return json.dumps(
            {
                "schema_version": 1,
                "a": th.a,
                "situation": th.situation.value,
                "regime": th.regime.value,
                "thresholds": {
                    "r1": th.r1, "r2": th.r2, "r3": th.r3,
                    "r4": th.r4, "r5": th.r5, "r7half": th.r7half,
                },
                "intervals": [
                    {
                        "type": t.label,
                        "r_min": lo,
                        "r_max": hi,
                        "conjecture_conditional": cond,
                    }
                    for t, lo, hi, cond in self.intervals
                ],
                "homology_note": self.homology_note,
            },
            indent=2,
        )


def classification_report(a: float, **kw) -> ClassificationReport:
    """Interval decomposition of the scale axis with type labels.

    Types above the triangle window carry a conjecture-conditional flag;
    in the mixed regime the report records that the inclusion across
    ``r7half`` has rank one on 4-dimensional homology.
    """
    th = thresholds(a, **kw)
    ivals: list[tuple[HomotopyType, float, float, bool]] = [
        (HomotopyType.CIRCLE, 0.0, th.r1, False),
        (HomotopyType.SPHERE2, th.r1, th.r2, False),
        (HomotopyType.SPHERE3, th.r2, th.r3, True),
    ]
    if th.regime is EccentricityRegime.PURE_ODD_EVEN:
        ivals.append((HomotopyType.SPHERE4, th.r3, th.r4, True))
    elif th.regime is EccentricityRegime.CRITICAL:
        ivals.append((HomotopyType.WEDGE_THREE_SPHERE4, th.r3, th.r4, True))
    else:
        ivals.append((HomotopyType.SPHERE4, th.r3, th.r7half, True))
        ivals.append((HomotopyType.WEDGE_THREE_SPHERE4, th.r7half, th.r4, True))
    ivals.append((HomotopyType.SPHERE5, th.r4, th.r5, True))
    note = None
    if th.regime is EccentricityRegime.MIXED:
        note = (
            "inclusions from scales at or below r7half into scales above it "
            "induce a rank 1 map on 4-dimensional homology over any field"
        )
    return ClassificationReport(thresholds=th, intervals=tuple(ivals), homology_note=note)


class VRHomotopyClassifier(BaseEstimator):
    """Estimator-style wrapper: fit once per eccentricity, predict per scale.

    ``fit`` computes the scale thresholds (the expensive part); ``predict``
    maps an array of scale values to homotopy-type labels by interval
    lookup.  Follows the scikit-learn parameter conventions so it can be
    cloned and grid-searched.
    """

    def __init__(
        self,
        eccentricity: float = 1.2,
        samples: int = 2000,
        r_tol: float = PROFILE_R_TOL,
        refine_tol: float = REFINE_THETA_TOL,
        value_tol: float = VALUE_EQUAL_TOL,
    ):
        self.eccentricity = eccentricity
        self.samples = samples
        self.r_tol = r_tol
        self.refine_tol = refine_tol
        self.value_tol = value_tol

    def fit(self, X=None, y=None):
        check_tolerance(self.r_tol, "r_tol")
        self.thresholds_ = thresholds(
            self.eccentricity,
            samples=self.samples,
            r_tol=self.r_tol,
            refine_tol=self.refine_tol,
            value_tol=self.value_tol,
        )
        self.situation_ = self.thresholds_.situation
        self.regime_ = self.thresholds_.regime
        return self

    def predict(self, X) -> np.ndarray:
        if not hasattr(self, "thresholds_"):
            raise NotFittedError("call fit() before predict()")
        scales = np.asarray(X, dtype=float).ravel()
        return np.array(
            [classify(self.eccentricity, r, th=self.thresholds_).label for r in scales]
        )

    def report(self) -> ClassificationReport:
        if not hasattr(self, "thresholds_"):
            raise NotFittedError("call fit() before report()")
        return classification_report(
            self.eccentricity,
            samples=self.samples,
            r_tol=self.r_tol,
            refine_tol=self.refine_tol,
            value_tol=self.value_tol,
        )
