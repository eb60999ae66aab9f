"""Rotations of the plane as points of 3-space, and the two line families.

A rotation about ``(ox, oy)`` by counterclockwise angle ``alpha`` is the
point ``(ox, oy, cot(alpha / 2))``.  With ``z = cot(alpha / 2)`` the
half-angle identities give the rational values

    cos(alpha) = (z^2 - 1) / (z^2 + 1),    sin(alpha) = 2 z / (z^2 + 1),

so every rotation with a rational point is an exact rational map.  The
rotations taking ``p`` to ``q`` form the non-horizontal line built by
:func:`rho_line`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import NamedTuple

from .errors import HorizontalLine, IrrationalAngle, ParallelLines
from .exact import (
    Horizontal,
    NonHorizontal,
    OrLine2,
    Plane3,
    Pt2,
    Pt3,
    cross2,
    cross3,
    dot,
    plane_from,
    plane_through,
    pt2,
    rat,
)
from .stats import PointSetPair


# -- rotations --------------------------------------------------------------

def rotation_params(g) -> tuple[Fraction, Fraction]:
    """``(cos a, sin a)`` for the point ``g = (ox, oy, cot(a/2))``.

    The angle ``a`` is measured clockwise.  That is the reading under which
    every point of :func:`rho_line` ``(p, q)`` really takes ``p`` to ``q``.
    """
    z = rat(g[2])
    den = z * z + 1
    return (z * z - 1) / den, 2 * z / den


def apply_rotation(g, x) -> Pt2:
    cos, sin = rotation_params(g)
    ox, oy = rat(g[0]), rat(g[1])
    dx, dy = rat(x[0]) - ox, rat(x[1]) - oy
    # clockwise by a
    return Pt2(ox + cos * dx + sin * dy, oy - sin * dx + cos * dy)


def rho_line(p, q) -> NonHorizontal:
    """Line of all rotations taking ``p`` to ``q``.

    Base ``((px+qx)/2, (py+qy)/2, 0)``, direction ``((qy-py)/2, (px-qx)/2, 1)``.
    """
    p, q = pt2(*p), pt2(*q)
    return NonHorizontal(
        a=(q.y - p.y) / 2,
        b=(p.x + q.x) / 2,
        c=(p.x - q.x) / 2,
        d=(p.y + q.y) / 2,
        provenance=(p, q),
    )


def line_to_pq(line) -> tuple[Pt2, Pt2]:
    """Invert :func:`rho_line`: the unique (p, q) whose rotation line is ``line``."""
    if not isinstance(line, NonHorizontal):
        raise HorizontalLine("horizontal lines are not of the form l_{p,q}")
    a, b, c, d = line.a, line.b, line.c, line.d
    return Pt2(b + c, d - a), Pt2(b - c, d + a)


# -- oriented-line pairs: horizontal lines ----------------------------------

def rational_sqrt(value) -> Fraction | None:
    value = rat(value)
    if value < 0:
        return None
    rn, rd = isqrt(value.numerator), isqrt(value.denominator)
    if rn * rn == value.numerator and rd * rd == value.denominator:
        return Fraction(rn, rd)
    return None


def s_line(l1: OrLine2, l2: OrLine2) -> Horizontal:
    """Rotations mapping ``l1`` onto ``l2`` with orientation: a horizontal line.

    With ``theta`` the counterclockwise angle from ``v1`` to ``v2`` the same
    motion is a clockwise turn by ``2 pi - theta``, so the height is
    ``-cot(theta/2) = (|v1||v2| + v1.v2) / cross(v2, v1)``.  The centres run
    along the symmetry axis parallel to ``v1/|v1| - v2/|v2|``.
    """
    v1, v2 = l1.dir, l2.dir
    if l1.is_parallel(l2):
        raise ParallelLines("oriented lines are parallel; no rotation maps one onto the other")
    n1, n2 = rational_sqrt(dot(v1, v1)), rational_sqrt(dot(v2, v2))
    if n1 is None or n2 is None:
        raise IrrationalAngle(f"directions {v1}, {v2} need rational Euclidean norms")
    u1 = (v1[0] / n1, v1[1] / n1)
    u2 = (v2[0] / n2, v2[1] / n2)
    cr = cross2(v1, v2)
    if cr == 0:
        # anti-parallel: half turns about the midline
        base = Pt2((l1.base.x + l2.base.x) / 2, (l1.base.y + l2.base.y) / 2)
        return Horizontal(Fraction(0), base, u1)
    z = -(n1 * n2 + dot(v1, v2)) / cr
    w = (l2.base.x - l1.base.x, l2.base.y - l1.base.y)
    s = cross2(w, v2) / cr
    meet = Pt2(l1.base.x + s * v1[0], l1.base.y + s * v1[1])
    return Horizontal(z, meet, (u1[0] - u2[0], u1[1] - u2[1]))


# -- the line families ------------------------------------------------------

@dataclass(frozen=True)
class LineFamilies:
    L1: tuple  # l_{p,q}, p in P outer, q in Q inner
    L2: tuple  # l_{q,p}, same ordering

    @property
    def lines(self) -> tuple:
        return self.L1 + self.L2


def build_families(pp: PointSetPair) -> LineFamilies:
    L1 = tuple(rho_line(p, q) for p in pp.P for q in pp.Q)
    L2 = tuple(rho_line(q, p) for p in pp.P for q in pp.Q)
    return LineFamilies(L1, L2)


# Integer kernel.  Scaling x and y by a common L is an invertible affine map
# of 3-space, so incidence structure is unchanged and every line becomes
# x = A z + B, y = C z + D with integer A, B, C, D.

def _scaled(lines):
    L = 1
    for ln in lines:
        L = lcm(L, ln.a.denominator, ln.b.denominator, ln.c.denominator, ln.d.denominator)
    return L, [(int(ln.a * L), int(ln.b * L), int(ln.c * L), int(ln.d * L)) for ln in lines]


_PARALLEL = "parallel"


def _meet(u, v):
    """Canonical integer key of the common point of two scaled lines, or None / _PARALLEL."""
    A1, B1, C1, D1 = u
    A2, B2, C2, D2 = v
    da, dc = A1 - A2, C1 - C2
    db, dd = B2 - B1, D2 - D1
    if da == 0 and dc == 0:
        return _PARALLEL if (db or dd) else None
    if da != 0:
        if dc * db != dd * da:
            return None
        num, den = db, da
    else:
        if db != 0:
            return None
        num, den = dd, dc
    if den < 0:
        num, den = -num, -den
    g = gcd(num, den)
    num //= g
    den //= g
    return (A1 * num + B1 * den, C1 * num + D1 * den, num, den)


def _key_to_point(key, L) -> Pt3:
    X, Y, num, den = key
    return Pt3(Fraction(X, den * L), Fraction(Y, den * L), Fraction(num, den))


@dataclass
class RichPointHistogram:
    points: dict = field(default_factory=dict)  # Pt3 -> (count1, count2)

    @property
    def m_r(self) -> dict:
        """r -> number of points on at least r lines, for r = 2 .. max richness."""
        rich = [c1 + c2 for c1, c2 in self.points.values()]
        top = max(rich, default=1)
        return {r: sum(1 for k in rich if k >= r) for r in range(2, top + 1)}

    def max_richness(self) -> int:
        return max((c1 + c2 for c1, c2 in self.points.values()), default=0)


class IntersectionCensus(NamedTuple):
    I: int
    per_point: RichPointHistogram


def count_intersecting_pairs(fams: LineFamilies) -> IntersectionCensus:
    """Ordered intersecting pairs in ``L1 x L2`` plus the rich-point histogram of ``L1 + L2``."""
    lines = fams.lines
    k1 = len(fams.L1)
    L, scaled = _scaled(lines)
    s1, s2 = scaled[:k1], scaled[k1:]

    count = 0
    for u in s1:
        for v in s2:
            key = _meet(u, v)
            if key is not None and key is not _PARALLEL:
                count += 1

    through = {}
    for i in range(len(scaled)):
        u = scaled[i]
        for j in range(i + 1, len(scaled)):
            key = _meet(u, scaled[j])
            if key is None or key is _PARALLEL:
                continue
            members = through.setdefault(key, set())
            members.add(i)
            members.add(j)

    hist = RichPointHistogram()
    for key, members in through.items():
        c1 = sum(1 for i in members if i < k1)
        hist.points[_key_to_point(key, L)] = (c1, len(members) - c1)
    return IntersectionCensus(count, hist)


def weighted_richpoint_sum(h: RichPointHistogram) -> int:
    """Sum of squared richness; bounds 2 * sum(count1 * count2) from above."""
    return sum((c1 + c2) ** 2 for c1, c2 in h.points.values())


class PlaneCensus(NamedTuple):
    max_on_plane: int
    witness: Plane3 | None


def plane_census(fams: LineFamilies) -> PlaneCensus:
    lines = fams.lines
    if not lines:
        return PlaneCensus(0, None)
    _, scaled = _scaled(lines)
    on_plane = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if _meet(scaled[i], scaled[j]) is None:
                continue
            plane = plane_through(lines[i], lines[j])
            members = on_plane.setdefault(plane, set())
            members.add(i)
            members.add(j)
    if not on_plane:
        first = lines[0]
        d = first.direction
        normal = cross3(d, (1, 0, 0))
        if normal == (0, 0, 0):
            normal = cross3(d, (0, 1, 0))
        return PlaneCensus(1, plane_from(first.point, normal))
    best = max(on_plane, key=lambda pl: len(on_plane[pl]))  # first maximum in insertion order
    return PlaneCensus(len(on_plane[best]), best)
