import numpy as np
import pytest

from vr_ellipse import critical_eccentricity, thresholds

# reference values for the pole-star pipeline, certified independently by
# rational root isolation of the elimination polynomials
NORTH_ROOT_132 = 1.99934602760558
EAST_ROOT_132 = 1.99934434212106
GAP_TABLE = {
    1.32: 1.68548452283979e-06,
    1.34: -1.62962280314538e-06,
    1.4: -3.13760593217971e-06,
    1.414: 5.834802545567896e-07,
}

# eccentricities inside the narrow split-shape windows around the critical
# values, located by high-precision scans of the pole splitting
S2_PROBE_A1 = 1.3296
S4_PROBE_A1 = 1.3303
S4_PROBE_A2 = 1.4121
S2_PROBE_A2 = 1.4123


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20250810)


@pytest.fixture(scope="session")
def a1():
    return critical_eccentricity(1.32, 1.34, tol=1e-7)


@pytest.fixture(scope="session")
def a2():
    return critical_eccentricity(1.4, 1.414, tol=1e-7)


@pytest.fixture(scope="session")
def th12():
    return thresholds(1.2)
