"""Finite cyclic graphs, their clockwise-most dynamics, and winding fractions.

A cyclic graph on circularly ordered vertices has out-neighborhoods that
form clockwise arcs, so the whole edge set is stored as one reach index per
vertex: the clockwise-most out-neighbor.  The dynamics jump straight to the
reach, every periodic orbit shares one (length, winding) pair, and the
winding fraction is their ratio.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyGraph
from .geometry import TWO_PI, chord_distance, clockwise_delta, farthest_point, reduce_angle


@dataclass(frozen=True)
class CyclicGraph:
    """Vertices in strict clockwise order plus per-vertex reach indices.

    ``reach[i]`` is the absolute index of the clockwise-most out-neighbor
    of vertex ``i`` (``i`` itself when the vertex has no outgoing edges).
    Cyclicity holds by construction: the out-neighborhood of ``i`` is the
    run of vertices from ``i`` to ``reach[i]`` in clockwise order.
    """

    thetas: tuple[float, ...]
    reach: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.thetas:
            raise EmptyGraph("cyclic graph needs at least one vertex")
        if len(self.reach) != len(self.thetas):
            raise ValueError("reach and vertex lists differ in length")

    @property
    def n(self) -> int:
        return len(self.thetas)

    def reach_offset(self, v: int) -> int:
        return (self.reach[v] - v) % self.n

    def out_neighbors(self, v: int) -> list[int]:
        return [(v + k) % self.n for k in range(1, self.reach_offset(v) + 1)]

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": 1,
                "vertices": list(self.thetas),
                "reach": list(self.reach),
            }
        )


@dataclass(frozen=True)
class PeriodicOrbit:
    length_l: int
    winding_w: int
    orbit: tuple[int, ...]


@dataclass(frozen=True)
class WindingFractionResult:
    numerator: int
    denominator: int
    attained: bool

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


def _evenly_spaced(n: int) -> tuple[float, ...]:
    return tuple(reduce_angle(-TWO_PI * i / n) for i in range(n))


def standard_cnk(n: int, k: int) -> CyclicGraph:
    """The canonical cyclic graph on n evenly spaced vertices with edges
    to the next k vertices clockwise."""
    if n < 1:
        raise EmptyGraph("need at least one vertex")
    if not 0 <= k <= n / 2:
        raise ValueError(f"need 0 <= k <= n/2, got k={k}, n={n}")
    return CyclicGraph(thetas=_evenly_spaced(n), reach=tuple((i + k) % n for i in range(n)))


def from_edges(n: int, edges: list[tuple[int, int]]) -> CyclicGraph:
    """Cyclic graph on n evenly spaced vertices from an explicit edge list.

    Validates the defining arc condition: every out-neighborhood must be a
    contiguous run of successors, so an edge skipping a vertex without the
    intermediate edges is rejected.
    """
    if n < 1:
        raise EmptyGraph("need at least one vertex")
    outs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u != v:
            outs[u].add((v - u) % n)
    reach = []
    for i, offs in enumerate(outs):
        k = len(offs)
        if offs != set(range(1, k + 1)):
            raise ValueError(
                f"vertex {i}: out-neighborhood offsets {sorted(offs)} are not a "
                "contiguous clockwise run; not a cyclic graph"
            )
        reach.append((i + k) % n)
    return CyclicGraph(thetas=_evenly_spaced(n), reach=tuple(reach))


def build_vr_graph(points: list[float], a: float, r: float) -> CyclicGraph:
    """Directed clockwise 1-skeleton of the Vietoris-Rips complex at scale r.

    Vertices are sorted into clockwise order; ``u -> v`` iff v lies on the
    clockwise arc from u to its farthest point and the chord distance is
    strictly below r.  The chord distance is monotone on that arc, so the
    out-neighborhood is the maximal run of consecutive clockwise successors
    within range.
    """
    if not points:
        raise EmptyGraph("no points given")
    thetas = sorted((reduce_angle(p) for p in points), reverse=True)
    n = len(thetas)
    for i in range(n):
        if thetas[i] == thetas[(i + 1) % n] and n > 1:
            raise ValueError(f"points must be pairwise distinct, got repeated {thetas[i]!r}")
    reach = []
    for i, t in enumerate(thetas):
        arc_end = clockwise_delta(t, farthest_point(t, a))
        last = i
        for j in range(1, n):
            v = thetas[(i + j) % n]
            if clockwise_delta(t, v) > arc_end:
                break
            if chord_distance(t, v, a) >= r:
                break
            last = (i + j) % n
        reach.append(last)
    return CyclicGraph(thetas=tuple(thetas), reach=tuple(reach))


def dynamics_step(g: CyclicGraph, v: int) -> int:
    """Clockwise-most out-neighbor of v (v itself if v has no edges)."""
    return g.reach[v]


def _orbit_winding(g: CyclicGraph, cycle: list[int]) -> int:
    total = math.fsum(
        clockwise_delta(g.thetas[u], g.thetas[dynamics_step(g, u)]) for u in cycle
    )
    w = total / TWO_PI
    if abs(w - round(w)) > 1e-9:
        raise ValueError(f"orbit winding {w!r} is not an integer; broken clockwise order")
    return int(round(w))


def periodic_orbit(g: CyclicGraph, start: int = 0) -> PeriodicOrbit:
    """Iterate the dynamics from ``start`` until a repeat; return the cycle."""
    seen: dict[int, int] = {}
    path = []
    v = start
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        v = dynamics_step(g, v)
    cycle = path[seen[v] :]
    return PeriodicOrbit(
        length_l=len(cycle), winding_w=_orbit_winding(g, cycle), orbit=tuple(cycle)
    )


def winding_fraction(g: CyclicGraph) -> WindingFractionResult:
    """Winding number over orbit length of any periodic orbit, in lowest
    terms; attained for every finite cyclic graph."""
    orb = periodic_orbit(g, 0)
    f = Fraction(orb.winding_w, orb.length_l)
    return WindingFractionResult(
        numerator=f.numerator, denominator=f.denominator, attained=True
    )


def max_path_angle(g: CyclicGraph, v: int, m: int) -> float:
    """Maximal total clockwise angle over directed paths of m edges from v.

    For cyclic graphs the greedy clockwise-most path attains the maximum,
    so this runs in O(m); the equivalence with exhaustive path search is
    enforced by tests on small graphs rather than assumed silently.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    total = 0.0
    cur = v
    for _ in range(m):
        nxt = dynamics_step(g, cur)
        total += clockwise_delta(g.thetas[cur], g.thetas[nxt])
        cur = nxt
    return total
