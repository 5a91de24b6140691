"""Input validation helpers shared by the public API and the CLI."""

from __future__ import annotations

import math
from math import gcd

SQRT2 = math.sqrt(2.0)


def check_eccentricity(a: float, *, allow_circle: bool = True) -> float:
    """Validate a semi-major axis length in [1, sqrt(2)).

    The closed left endpoint a = 1 is the circle, admitted as an exact
    oracle case; pass ``allow_circle=False`` for operations defined only
    on genuine ellipses.
    """
    a = float(a)
    if not math.isfinite(a):
        raise ValueError(f"eccentricity must be finite, got {a!r}")
    lo_ok = a >= 1.0 if allow_circle else a > 1.0
    if not (lo_ok and a < SQRT2):
        bound = "1 <= a < sqrt(2)" if allow_circle else "1 < a < sqrt(2)"
        raise ValueError(f"eccentricity out of range ({bound}): {a!r}")
    return a


def check_radius(r: float) -> float:
    r = float(r)
    if not (math.isfinite(r) and r > 0.0):
        raise ValueError(f"radius must be positive and finite, got {r!r}")
    return r


def check_samples(n: int, minimum: int = 100) -> int:
    n = int(n)
    if n < minimum:
        raise ValueError(f"need at least {minimum} samples, got {n}")
    return n


def check_tolerance(tol: float, name: str = "tol") -> float:
    tol = float(tol)
    if not (math.isfinite(tol) and tol > 0.0):
        raise ValueError(f"{name} must be positive, got {tol!r}")
    return tol


def check_winding_target(alpha: int, beta: int) -> tuple[int, int]:
    """Validate a loops/steps pair: coprime and below half a turn per step."""
    alpha, beta = int(alpha), int(beta)
    if alpha < 1 or beta < 1:
        raise ValueError(f"winding target must be positive, got {alpha}/{beta}")
    if gcd(alpha, beta) != 1:
        raise ValueError(f"winding target must be in lowest terms, got {alpha}/{beta}")
    if 2 * alpha >= beta:
        raise ValueError(f"winding target must satisfy alpha/beta < 1/2, got {alpha}/{beta}")
    return alpha, beta
