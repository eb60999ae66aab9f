"""Concentric circles, the arc multigraph, and bisector richness.

Works on either a rational :class:`PointSetPair` or a :class:`CircleGrid`.
For the grid the second set lives in the ``(i, sqrt(j))`` index domain,
so squared distances are integers and circle membership stays exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import NamedTuple

from .constructions import CircleGrid, grid_sqdist
from .errors import InvalidParams
from .exact import Pt2, cross2, line2_through, sqdist2
from .stats import PointSetPair

DEFAULT_CROSSING_CONSTANT = Fraction(1, 64)


def _half(v) -> int:
    """0 for angles in [0, pi), 1 for [pi, 2 pi)."""
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _ccw_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = cross2(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


class _Layout:
    """Uniform view of the centres P and the points Q for both input kinds."""

    def __init__(self, data):
        if isinstance(data, CircleGrid):
            self.grid = data
            self.centers = [Pt2(Fraction(a), Fraction(0)) for a in data.P]
            self.n = len(data.Q)
        elif isinstance(data, PointSetPair):
            self.grid = None
            self.pp = data
            self.centers = list(data.P)
            self.n = data.n
        else:
            raise InvalidParams(f"unsupported input {type(data).__name__}")
        self.m = len(self.centers)

    def sqdist(self, pi: int, qi: int):
        if self.grid is not None:
            return grid_sqdist(self.grid.P[pi], self.grid.Q[qi])
        return sqdist2(self.pp.P[pi], self.pp.Q[qi])

    def ccw_order(self, pi: int, members: list) -> list:
        if self.grid is not None:
            # every grid point has positive height, so counterclockwise from
            # angle 0 around (a, 0) means decreasing abscissa i
            return sorted(members, key=lambda qi: -self.grid.Q[qi].i)
        c = self.pp.P[pi]
        vec = {qi: (self.pp.Q[qi].x - c.x, self.pp.Q[qi].y - c.y) for qi in members}
        return sorted(members, key=cmp_to_key(lambda a, b: _ccw_cmp(vec[a], vec[b])))

    def on_bisector(self, u: int, v: int) -> tuple:
        """Indices of centres equidistant from Q-points u and v."""
        return tuple(pi for pi in range(self.m) if self.sqdist(pi, u) == self.sqdist(pi, v))

    def t(self) -> int:
        return max((len({self.sqdist(pi, qi) for qi in range(self.n)})
                    for pi in range(self.m)), default=0)


@dataclass(frozen=True)
class CircleRecord:
    center_index: int
    center: Pt2
    r2: Fraction
    members: tuple  # Q-indices in counterclockwise order from angle 0


def build_circles(data) -> list:
    lay = data if isinstance(data, _Layout) else _Layout(data)
    circles = []
    for pi in range(lay.m):
        groups = {}
        for qi in range(lay.n):
            groups.setdefault(lay.sqdist(pi, qi), []).append(qi)
        for r2 in sorted(groups):
            circles.append(CircleRecord(pi, lay.centers[pi], Fraction(r2),
                                        tuple(lay.ccw_order(pi, groups[r2]))))
    return circles


class Edge(NamedTuple):
    u: int
    v: int
    circle: int  # index into ArcMultigraph.circles

    @property
    def pair(self) -> tuple:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)


@dataclass
class ArcMultigraph:
    n_vertices: int
    circles: list
    edges: list
    pre_deletion_edges: int
    multiplicity: Counter = field(default_factory=Counter)

    @property
    def post_deletion_edges(self) -> int:
        return len(self.edges)

    @property
    def deleted_edges(self) -> int:
        return self.pre_deletion_edges - len(self.edges)


def build_multigraph(data) -> ArcMultigraph:
    """Arcs between consecutive points of every circle with at least three points.

    A circle with k points yields k arcs; circles with one or two points
    would only produce edges that get deleted, so none are created.  The
    pre-deletion count is therefore m * n by construction.
    """
    lay = data if isinstance(data, _Layout) else _Layout(data)
    circles = build_circles(lay)
    edges = []
    for ci, c in enumerate(circles):
        k = len(c.members)
        if k < 3:
            continue
        for idx in range(k):
            edges.append(Edge(c.members[idx], c.members[(idx + 1) % k], ci))
    mult = Counter(e.pair for e in edges)
    return ArcMultigraph(lay.n, circles, edges, lay.m * lay.n, mult)


class BisectorLink(NamedTuple):
    mult: int
    richness: int
    centers: tuple  # P-indices of the circles on which the pair is consecutive


def edge_multiplicity_bisector_link(g: ArcMultigraph, data) -> dict:
    lay = data if isinstance(data, _Layout) else _Layout(data)
    centers = {}
    for e in g.edges:
        centers.setdefault(e.pair, []).append(g.circles[e.circle].center_index)
    out = {}
    for pair, cs in centers.items():
        on = set(lay.on_bisector(*pair))
        if not set(cs) <= on:
            raise AssertionError(f"circle centre off the bisector of {pair}")
        out[pair] = BisectorLink(g.multiplicity[pair], len(on), tuple(cs))
    return out


@dataclass
class BisectorPairSet:
    r: int
    t: int
    pairs: list  # (line key, edge index)
    per_line: Counter
    richness: dict  # line key -> number of P-points on it

    def line_bound_holds(self) -> bool:
        return all(c <= 2 * self.richness[k] * self.t for k, c in self.per_line.items())


def bisector_pair_census(g: ArcMultigraph, data, r: int) -> BisectorPairSet:
    """Pairs (bisector, edge) whose bisector holds at least r centres.

    A bisector with two or more centres is the line through them, so that
    line is the exact key even when Q has irrational coordinates.
    """
    if r < 2:
        raise InvalidParams("richness threshold r must be at least 2")
    lay = data if isinstance(data, _Layout) else _Layout(data)
    t = lay.t()
    cache = {}
    pairs, richness = [], {}
    for ei, e in enumerate(g.edges):
        if e.pair not in cache:
            cache[e.pair] = lay.on_bisector(*e.pair)
        on = cache[e.pair]
        if len(on) < r:
            continue
        key = line2_through(lay.centers[on[0]], lay.centers[on[1]])
        richness[key] = len(on)
        pairs.append((key, ei))
    return BisectorPairSet(r, t, pairs, Counter(k for k, _ in pairs), richness)


class RichLines(NamedTuple):
    count: int
    lines: list  # (line key, sorted member indices)


def rich_lines(points, r: int) -> RichLines:
    if r < 2:
        raise InvalidParams("richness threshold r must be at least 2")
    members = {}
    for i, j in combinations(range(len(points)), 2):
        key = line2_through(points[i], points[j])
        s = members.setdefault(key, set())
        s.add(i)
        s.add(j)
    lines = [(k, sorted(s)) for k, s in members.items() if len(s) >= r]
    return RichLines(len(lines), lines)


class CrossingBounds(NamedTuple):
    simple_bound: Fraction
    multigraph_bound: Fraction
    simple_applicable: bool
    multigraph_applicable: bool


def crossing_bounds(nV: int, nE: int, max_mult: int, c=DEFAULT_CROSSING_CONSTANT) -> CrossingBounds:
    """Evaluate ``c e^3 / n^2`` and ``c e^3 / (mult n^2)`` with their side conditions."""
    c = Fraction(c)
    if nV <= 0:
        return CrossingBounds(Fraction(0), Fraction(0), False, False)
    e3 = Fraction(nE) ** 3
    return CrossingBounds(c * e3 / nV ** 2,
                          c * e3 / (max_mult * nV ** 2),
                          nE >= 4 * nV,
                          nE > 5 * max_mult * nV)


def circles_cross(c1: CircleRecord, c2: CircleRecord) -> bool:
    """True when two circles meet in exactly two points.

    ``(r1 - r2)^2 < d^2 < (r1 + r2)^2`` is the same as
    ``(d^2 - r1^2 - r2^2)^2 < 4 r1^2 r2^2``; no square roots needed.
    """
    d2 = sqdist2(c1.center, c2.center)
    s = d2 - c1.r2 - c2.r2
    return s * s < 4 * c1.r2 * c2.r2


class CirclePairCrossings(NamedTuple):
    intersecting_pairs: int
    upper: int


def circle_pair_crossings(circles) -> CirclePairCrossings:
    k = sum(1 for a, b in combinations(circles, 2) if circles_cross(a, b))
    return CirclePairCrossings(k, 2 * k)


@dataclass
class SzekelyReport:
    m: int
    n: int
    K: int
    c: Fraction
    t: int
    circles: int
    edges_pre: int
    edges_post: int
    deleted: int
    deletion_bound: int
    mult_histogram: dict
    heavy_edges: int
    e_prime: int
    max_mult_prime: int
    T_counts: dict
    T_line_bound_holds: bool
    rich_lines: dict
    circle_crossings: CirclePairCrossings
    bounds: CrossingBounds
    chain_lhs: int
    chain_rhs: Fraction
    chain_consistent: bool
    vacuous: bool


def szekely_report(data, K: int = 1, c=DEFAULT_CROSSING_CONSTANT) -> SzekelyReport:
    """Run the whole circle/multigraph pipeline and evaluate both ends of
    ``m^2 t^2  >~  cross(G')  >~  c e'^3 / (K n^2)``.

    ``G'`` drops every edge whose vertex pair has multiplicity above K.
    The comparison is reported, not asserted: the chain only holds
    asymptotically.
    """
    if K < 1:
        raise InvalidParams("multiplicity cap K must be at least 1")
    c = Fraction(c)
    lay = _Layout(data)
    g = build_multigraph(lay)
    t = lay.t()
    heavy = sum(cnt for cnt in g.multiplicity.values() if cnt > K)
    e_prime = g.post_deletion_edges - heavy
    max_mult_prime = max((cnt for cnt in g.multiplicity.values() if cnt <= K), default=0)
    T_counts, line_ok = {}, True
    for r in range(2, lay.m + 1):
        census = bisector_pair_census(g, lay, r)
        T_counts[r] = len(census.pairs)
        line_ok = line_ok and census.line_bound_holds()
    rich = {r: rich_lines(lay.centers, r).count for r in range(2, lay.m + 1)}
    lhs = lay.m ** 2 * t ** 2
    rhs = c * Fraction(e_prime) ** 3 / (K * lay.n ** 2) if lay.n else Fraction(0)
    return SzekelyReport(
        m=lay.m, n=lay.n, K=K, c=c, t=t,
        circles=len(g.circles),
        edges_pre=g.pre_deletion_edges,
        edges_post=g.post_deletion_edges,
        deleted=g.deleted_edges,
        deletion_bound=2 * lay.m * t,
        mult_histogram=dict(sorted(Counter(g.multiplicity.values()).items())),
        heavy_edges=heavy,
        e_prime=e_prime,
        max_mult_prime=max_mult_prime,
        T_counts=T_counts,
        T_line_bound_holds=line_ok,
        rich_lines=rich,
        circle_crossings=circle_pair_crossings(g.circles),
        bounds=crossing_bounds(lay.n, e_prime, max(max_mult_prime, 1), c),
        chain_lhs=lhs,
        chain_rhs=rhs,
        chain_consistent=lhs >= rhs,
        vacuous=e_prime == 0,
    )
