"""Vietoris-Rips complexes of ellipses: step dynamics on the chord metric,
inscribed-star side lengths, algebraic pole-star certificates, cyclic-graph
winding fractions, and the resulting scale-threshold classification of
homotopy types."""

from .algebraic import (
    EAST_STAR_POLY,
    NORTH_STAR_POLY,
    BivariatePolynomial,
    RootInterval,
    east_symmetry_residual,
    eval_poly,
    isolate_star_roots,
    north_symmetry_residual,
    pole_gap_algebraic,
    pole_star_root,
    star_system_residual,
    triangle_bounds,
)
from .classifier import (
    PERIODIC_ORBIT_COUNT,
    ClassificationReport,
    EccentricityRegime,
    HomotopyType,
    ScaleThresholds,
    VRHomotopyClassifier,
    classification_report,
    classify,
    thresholds,
)
from .cyclic import (
    CyclicGraph,
    PeriodicOrbit,
    WindingFractionResult,
    build_vr_graph,
    dynamics_step,
    from_edges,
    max_path_angle,
    periodic_orbit,
    standard_cnk,
    winding_fraction,
)
from .dynamics import OrbitTrace, StepOutcome, step, step_n, winding_count
from .errors import (
    DegenerateProfile,
    EmptyGraph,
    NoSignChange,
    NumericalError,
    RadiusUnreachable,
    RootCountUnexpected,
    TargetUnreachable,
    UnclassifiableProfile,
)
from .extrema import (
    ExtremaReport,
    SideProfile,
    SituationLabel,
    classify_situation,
    critical_eccentricity,
    find_extrema,
    profile,
)
from .geometry import (
    ArcInterval,
    chord_distance,
    clockwise_delta,
    embed,
    farthest_point,
    in_clockwise_order,
    max_chord,
    normal_antipode,
    reduce_angle,
)
from .stars import (
    PENTAGRAM,
    SEVEN_STAR,
    StarConfig,
    WindingTarget,
    pole_gap,
    s_east,
    s_north,
    side_length,
    side_length_batch,
    star_points,
)

__version__ = "0.1.0"

__all__ = [
    "ArcInterval",
    "BivariatePolynomial",
    "ClassificationReport",
    "CyclicGraph",
    "DegenerateProfile",
    "EAST_STAR_POLY",
    "EccentricityRegime",
    "EmptyGraph",
    "ExtremaReport",
    "HomotopyType",
    "NORTH_STAR_POLY",
    "NoSignChange",
    "NumericalError",
    "OrbitTrace",
    "PENTAGRAM",
    "PERIODIC_ORBIT_COUNT",
    "PeriodicOrbit",
    "RadiusUnreachable",
    "RootCountUnexpected",
    "RootInterval",
    "SEVEN_STAR",
    "ScaleThresholds",
    "SideProfile",
    "SituationLabel",
    "StarConfig",
    "StepOutcome",
    "TargetUnreachable",
    "UnclassifiableProfile",
    "VRHomotopyClassifier",
    "WindingFractionResult",
    "WindingTarget",
    "build_vr_graph",
    "chord_distance",
    "classification_report",
    "classify",
    "classify_situation",
    "clockwise_delta",
    "critical_eccentricity",
    "dynamics_step",
    "east_symmetry_residual",
    "embed",
    "eval_poly",
    "farthest_point",
    "find_extrema",
    "from_edges",
    "in_clockwise_order",
    "isolate_star_roots",
    "max_chord",
    "max_path_angle",
    "normal_antipode",
    "north_symmetry_residual",
    "periodic_orbit",
    "pole_gap",
    "pole_gap_algebraic",
    "pole_star_root",
    "profile",
    "reduce_angle",
    "s_east",
    "s_north",
    "side_length",
    "side_length_batch",
    "standard_cnk",
    "star_points",
    "star_system_residual",
    "step",
    "step_n",
    "thresholds",
    "triangle_bounds",
    "winding_count",
    "winding_fraction",
]
