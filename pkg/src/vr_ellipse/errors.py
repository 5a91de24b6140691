"""Exception types raised by the numerical pipelines."""


class NumericalError(Exception):
    """Base class for failures of the numerical machinery (CLI exit code 3)."""


class RadiusUnreachable(NumericalError):
    """The requested chord radius exceeds the maximum attainable on the
    distance-monotone arc, so no clockwise step of that length exists."""


class TargetUnreachable(NumericalError):
    """No radius below the reachable maximum attains the requested winding."""


class DegenerateProfile(NumericalError):
    """The side-length profile is constant within tolerance (circle case);
    there are no isolated extrema to report."""


class UnclassifiableProfile(NumericalError):
    """Extremum counts match none of the five known profile shapes,
    usually a sign of under-sampling."""


class NoSignChange(NumericalError):
    """Both bracket endpoints have the same sign; bisection cannot start."""


class RootCountUnexpected(NumericalError):
    """Root isolation found a different number of roots than the geometry
    guarantees, signalling a grid or bracket failure."""


class EmptyGraph(ValueError):
    """A cyclic graph was requested over an empty vertex set."""
