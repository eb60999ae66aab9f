"""Exact rational points, lines and planes in the plane and in 3-space.

All scalars are :class:`fractions.Fraction`.  Floats are refused at the
boundary so that nothing inexact leaks into a computation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import DegenerateInput, NotCoplanar

Rat = Fraction


def rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean scalar {value!r}")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class Pt2(NamedTuple):
    x: Fraction
    y: Fraction


class Pt3(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction


def pt2(x, y) -> Pt2:
    return Pt2(rat(x), rat(y))


def pt3(x, y, z) -> Pt3:
    return Pt3(rat(x), rat(y), rat(z))


# -- small vector helpers (tuples of Fractions) -----------------------------

def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def scale(k, u):
    return tuple(k * a for a in u)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def cross2(u, v) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def cross3(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def is_zero(u) -> bool:
    return all(a == 0 for a in u)


def sqdist2(p: Pt2, q: Pt2) -> Fraction:
    """Squared Euclidean distance; the canonical stand-in for distance."""
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def _normalize_leading(vec):
    """Scale ``vec`` so that its first nonzero entry is 1."""
    for a in vec:
        if a != 0:
            return tuple(Fraction(b) / a for b in vec)
    raise DegenerateInput("zero vector has no direction")


# -- oriented lines of the plane --------------------------------------------

@dataclass(frozen=True)
class OrLine2:
    base: Pt2
    dir: tuple

    def __post_init__(self):
        object.__setattr__(self, "base", pt2(*self.base))
        d = (rat(self.dir[0]), rat(self.dir[1]))
        if d == (0, 0):
            raise DegenerateInput("oriented line needs a nonzero direction")
        object.__setattr__(self, "dir", d)

    def point_at(self, t) -> Pt2:
        t = rat(t)
        return Pt2(self.base.x + t * self.dir[0], self.base.y + t * self.dir[1])

    def contains(self, p: Pt2) -> bool:
        return cross2(self.dir, sub(p, self.base)) == 0

    def is_parallel(self, other: "OrLine2") -> bool:
        return cross2(self.dir, other.dir) == 0 and dot(self.dir, other.dir) > 0

    def is_antiparallel(self, other: "OrLine2") -> bool:
        return cross2(self.dir, other.dir) == 0 and dot(self.dir, other.dir) < 0


class Line2Key(NamedTuple):
    """Canonical unoriented plane line ``A x + B y = C`` with leading coefficient 1."""
    A: Fraction
    B: Fraction
    C: Fraction


def line2_through(p: Pt2, q: Pt2) -> Line2Key:
    if p == q:
        raise DegenerateInput("two equal points do not span a line")
    A, B = q.y - p.y, p.x - q.x
    A, B, C = _normalize_leading((A, B, A * p.x + B * p.y))
    return Line2Key(A, B, C)


def line2_key(line: OrLine2) -> Line2Key:
    return line2_through(line.base, line.point_at(1))


def bisector(p: Pt2, q: Pt2) -> OrLine2:
    """Perpendicular bisector: midpoint base, direction ``q - p`` turned a quarter."""
    if p == q:
        raise DegenerateInput(f"bisector of coincident points {p}")
    mid = Pt2((p.x + q.x) / 2, (p.y + q.y) / 2)
    dx, dy = q.x - p.x, q.y - p.y
    return OrLine2(mid, (-dy, dx))


class Collinear(NamedTuple):
    line: OrLine2


class Circle(NamedTuple):
    center: Pt2
    r2: Fraction


def collinear_or_circle(a: Pt2, b: Pt2, c: Pt2) -> Union[Collinear, Circle]:
    if a == b or b == c or a == c:
        raise DegenerateInput("three pairwise distinct points required")
    u, v = sub(b, a), sub(c, a)
    det = cross2(u, v)
    if det == 0:
        return Collinear(OrLine2(a, u))
    # circumcenter o solves 2 u.(o - a) = |u|^2, 2 v.(o - a) = |v|^2
    uu, vv = dot(u, u), dot(v, v)
    ox = (uu * v[1] - vv * u[1]) / (2 * det)
    oy = (vv * u[0] - uu * v[0]) / (2 * det)
    center = Pt2(a.x + ox, a.y + oy)
    return Circle(center, sqdist2(center, a))


# -- lines of 3-space -------------------------------------------------------

@dataclass(frozen=True)
class NonHorizontal:
    """The line ``{(a z + b, c z + d, z)}``.  Provenance does not affect equality."""
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    provenance: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, rat(getattr(self, name)))

    @property
    def point(self) -> Pt3:
        return Pt3(self.b, self.d, Fraction(0))

    @property
    def direction(self) -> tuple:
        return (self.a, self.c, Fraction(1))

    def point_at(self, z) -> Pt3:
        z = rat(z)
        return Pt3(self.a * z + self.b, self.c * z + self.d, z)


@dataclass(frozen=True)
class Horizontal:
    """A line in the plane ``Z = z``; stored canonically so equal lines compare equal."""
    z: Fraction
    base: Pt2
    dir: tuple
    provenance: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        z = rat(self.z)
        bx, by = rat(self.base[0]), rat(self.base[1])
        d = _normalize_leading((rat(self.dir[0]), rat(self.dir[1])))
        if d[0] != 0:
            # slide the base to x = 0
            t = -bx / d[0]
            base = Pt2(Fraction(0), by + t * d[1])
        else:
            base = Pt2(bx, Fraction(0))
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "dir", d)

    @property
    def point(self) -> Pt3:
        return Pt3(self.base.x, self.base.y, self.z)

    @property
    def direction(self) -> tuple:
        return (self.dir[0], self.dir[1], Fraction(0))

    def point_at(self, t) -> Pt3:
        t = rat(t)
        return Pt3(self.base.x + t * self.dir[0], self.base.y + t * self.dir[1], self.z)


Line3 = Union[NonHorizontal, Horizontal]


def line3(point, direction, provenance=None) -> Line3:
    """Build the canonical Line3 through ``point`` with ``direction``."""
    px, py, pz = (rat(v) for v in point)
    dx, dy, dz = (rat(v) for v in direction)
    if dz != 0:
        a, c = dx / dz, dy / dz
        return NonHorizontal(a, px - a * pz, c, py - c * pz, provenance)
    if dx == 0 and dy == 0:
        raise DegenerateInput("line direction must be nonzero")
    return Horizontal(pz, (px, py), (dx, dy), provenance)


def on_line3(line: Line3, v) -> bool:
    return is_zero(cross3(sub(v, line.point), line.direction))


class Relation(enum.Enum):
    EQUAL = "equal"
    PARALLEL = "parallel"
    SKEW = "skew"
    INTERSECT = "intersect"


class LineRelation(NamedTuple):
    kind: Relation
    point: Pt3 | None = None


def relate_lines3(l1: Line3, l2: Line3) -> LineRelation:
    if isinstance(l1, NonHorizontal) and isinstance(l2, NonHorizontal):
        return _relate_nonhorizontal(l1, l2)
    p1, d1 = l1.point, l1.direction
    p2, d2 = l2.point, l2.direction
    w = sub(p2, p1)
    n = cross3(d1, d2)
    if is_zero(n):
        if is_zero(cross3(w, d1)):
            return LineRelation(Relation.EQUAL)
        return LineRelation(Relation.PARALLEL)
    if dot(w, n) != 0:
        return LineRelation(Relation.SKEW)
    t = dot(cross3(w, d2), n) / dot(n, n)
    return LineRelation(Relation.INTERSECT, Pt3(*add(p1, scale(t, d1))))


def _relate_nonhorizontal(l1: NonHorizontal, l2: NonHorizontal) -> LineRelation:
    # a1 z + b1 = a2 z + b2 and c1 z + d1 = c2 z + d2
    da, dc = l1.a - l2.a, l1.c - l2.c
    db, dd = l2.b - l1.b, l2.d - l1.d
    if da == 0 and dc == 0:
        if db == 0 and dd == 0:
            return LineRelation(Relation.EQUAL)
        return LineRelation(Relation.PARALLEL)
    if da != 0:
        z = db / da
        if dc * z != dd:
            return LineRelation(Relation.SKEW)
    else:
        if db != 0:
            return LineRelation(Relation.SKEW)
        z = dd / dc
    return LineRelation(Relation.INTERSECT, l1.point_at(z))


class Plane3(NamedTuple):
    """``A x + B y + C z + D = 0`` with the first nonzero of (A, B, C) equal to 1."""
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction

    def contains_point(self, v) -> bool:
        return self.A * v[0] + self.B * v[1] + self.C * v[2] + self.D == 0

    def contains_line(self, line: Line3) -> bool:
        return (self.contains_point(line.point)
                and dot((self.A, self.B, self.C), line.direction) == 0)


def plane_from(point, normal) -> Plane3:
    if is_zero(normal):
        raise DegenerateInput("plane normal must be nonzero")
    A, B, C = normal
    D = -(A * point[0] + B * point[1] + C * point[2])
    return Plane3(*_normalize_leading((A, B, C, D)))


def plane_through(l1: Line3, l2: Line3) -> Plane3:
    rel = relate_lines3(l1, l2)
    if rel.kind is Relation.PARALLEL:
        normal = cross3(l1.direction, sub(l2.point, l1.point))
    elif rel.kind is Relation.INTERSECT:
        normal = cross3(l1.direction, l2.direction)
    else:
        raise NotCoplanar(f"lines are {rel.kind.value}; no unique plane")
    return plane_from(l1.point, normal)
