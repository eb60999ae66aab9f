"""Quadric surfaces through skew lines, their rulings, and the two
explicit regulus constructions built from rotation lines."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .errors import (
    ContainmentFailure,
    DegenerateFit,
    DegenerateInput,
    InconsistentPartition,
    NotSkew,
    PointNotOnLine,
)
from .esgk import rho_line, s_line
from .exact import (
    OrLine2,
    Pt2,
    Relation,
    cross3,
    is_zero,
    line3,
    on_line3,
    pt2,
    rat,
    relate_lines3,
    sub,
)
from .linalg import det, inertia, nullspace, rank

MONOMIALS = ("x2", "y2", "z2", "xy", "xz", "yz", "x", "y", "z", "1")
# exponents of (x, y, z) for each monomial, same order
_EXPONENTS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1),
              (0, 1, 1), (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0))

FIT_PARAMETERS = (0, 1, -1)


def _monomial_row(v):
    x, y, z = v
    return [x * x, y * y, z * z, x * y, x * z, y * z, x, y, z, Fraction(1)]


@dataclass(frozen=True)
class Quadric:
    coeffs: tuple  # in MONOMIALS order

    def __post_init__(self):
        c = tuple(rat(v) for v in self.coeffs)
        if len(c) != 10:
            raise ValueError("a quadric has exactly 10 coefficients")
        lead = next((v for v in c if v != 0), None)
        if lead is None:
            raise DegenerateInput("the zero polynomial is not a quadric")
        object.__setattr__(self, "coeffs", tuple(v / lead for v in c))

    @classmethod
    def from_terms(cls, **terms) -> "Quadric":
        """``Quadric.from_terms(xy=1, z=-1)``; the constant term is ``one``."""
        names = {"one": "1"}
        c = dict.fromkeys(MONOMIALS, 0)
        for k, v in terms.items():
            c[names.get(k, k)] = v
        return cls(tuple(c[k] for k in MONOMIALS))

    def as_dict(self) -> dict:
        return dict(zip(MONOMIALS, self.coeffs))

    def __call__(self, v) -> Fraction:
        return sum((c * m for c, m in zip(self.coeffs, _monomial_row(v))), Fraction(0))

    def restrict(self, line) -> tuple:
        """Coefficients ``(c0, c1, c2)`` of ``t -> f(point + t * direction)``."""
        f0 = self(line.point_at(0))
        f1 = self(line.point_at(1))
        fm = self(line.point_at(-1))
        return f0, (f1 - fm) / 2, (f1 + fm) / 2 - f0

    def quadratic_part(self):
        x2, y2, z2, xy, xz, yz = self.coeffs[:6]
        return [[x2, xy / 2, xz / 2],
                [xy / 2, y2, yz / 2],
                [xz / 2, yz / 2, z2]]

    def full_matrix(self):
        x, y, z, c = self.coeffs[6:]
        rows = [row + [lin / 2] for row, lin in zip(self.quadratic_part(), (x, y, z))]
        rows.append([x / 2, y / 2, z / 2, c])
        return rows

    def proportional_to(self, other: "Quadric") -> bool:
        # both are normalized, so proportional means equal
        return self.coeffs == other.coeffs


def quadric_contains_line(Q: Quadric, line) -> bool:
    return all(Q(line.point_at(t)) == 0 for t in FIT_PARAMETERS)


def _require_skew(lines):
    for (i, a), (j, b) in combinations(enumerate(lines), 2):
        kind = relate_lines3(a, b).kind
        if kind is not Relation.SKEW:
            raise NotSkew(f"lines {i} and {j} are not skew (relation: {kind.value})")


def fit_rows(lines) -> list:
    """The linear system for a quadric through ``lines``: three rows per line."""
    return [_monomial_row(ln.point_at(t)) for ln in lines for t in FIT_PARAMETERS]


def regulus_fit(l1, l2, l3) -> Quadric:
    """The quadric through three pairwise-skew lines.

    Each line contributes three rows (its points at parameters 0, 1, -1);
    the 9 x 10 system must have a one-dimensional nullspace.
    """
    lines = (l1, l2, l3)
    _require_skew(lines)
    basis = nullspace(fit_rows(lines), 10)
    if len(basis) != 1:
        raise DegenerateFit(f"nullspace has dimension {len(basis)}, expected 1")
    return Quadric(tuple(basis[0]))


class SurfaceClass(enum.Enum):
    HYPERBOLOID_ONE_SHEET = "hyperboloid_one_sheet"
    HYPERBOLIC_PARABOLOID = "hyperbolic_paraboloid"
    OTHER = "other"


def classify_quadric(Q: Quadric) -> SurfaceClass:
    A = Q.quadratic_part()
    full = Q.full_matrix()
    pos, neg, _ = inertia(A)
    indefinite = pos > 0 and neg > 0
    rank_a, rank_full = pos + neg, rank(full)
    if rank_a == 3 and indefinite and rank_full == 4 and det(full) > 0:
        return SurfaceClass.HYPERBOLOID_ONE_SHEET
    if rank_a == 2 and indefinite and rank_full == 4:
        return SurfaceClass.HYPERBOLIC_PARABOLOID
    return SurfaceClass.OTHER


def psi_sample(l1, l2, l3, x):
    """The line through ``x`` (on ``l1``) meeting ``l2`` and ``l3``, or None."""
    if not on_line3(l1, x):
        raise PointNotOnLine(f"{x} is not on the first line")
    _require_skew((l1, l2, l3))
    n2 = cross3(l2.direction, sub(x, l2.point))
    n3 = cross3(l3.direction, sub(x, l3.point))
    d = cross3(n2, n3)
    if is_zero(d):
        return None
    candidate = line3(x, d)
    for other in (l2, l3):
        if relate_lines3(candidate, other).kind is not Relation.INTERSECT:
            return None
    return candidate


@dataclass
class RulingPartition:
    A: list
    B: list
    exceptions: list = field(default_factory=list)  # (index in A, index in B), parallel
    intersecting: int = 0


def rulings_partition(Q: Quadric, lines) -> RulingPartition:
    for i, ln in enumerate(lines):
        if not quadric_contains_line(Q, ln):
            raise ContainmentFailure(f"line {i} is not contained in the quadric")
    cls = classify_quadric(Q)
    if cls is SurfaceClass.OTHER:
        raise InconsistentPartition("quadric is not doubly ruled")
    if not lines:
        return RulingPartition([], [])
    seed = lines[0]
    A, B = [seed], []
    for ln in lines[1:]:
        (A if relate_lines3(seed, ln).kind is Relation.SKEW else B).append(ln)
    for group in (A, B):
        for a, b in combinations(group, 2):
            if relate_lines3(a, b).kind is not Relation.SKEW:
                raise InconsistentPartition("two lines of one ruling are not skew")
    part = RulingPartition(A, B)
    for i, a in enumerate(A):
        for j, b in enumerate(B):
            kind = relate_lines3(a, b).kind
            if kind is Relation.PARALLEL:
                part.exceptions.append((i, j))
            elif kind is Relation.INTERSECT:
                part.intersecting += 1
            else:
                raise InconsistentPartition(f"cross-ruling pair ({i}, {j}) is {kind.value}")
    return part


# -- explicit constructions -------------------------------------------------

def circle_point(center, r, t) -> Pt2:
    """Rational point of the circle: ``center + r ((1 - t^2), 2 t) / (1 + t^2)``."""
    t, r = rat(t), rat(r)
    den = 1 + t * t
    return Pt2(center[0] + r * (1 - t * t) / den, center[1] + r * 2 * t / den)


@dataclass
class CircleRegulus:
    quadric: Quadric
    surface: SurfaceClass
    a_points: list
    b_points: list
    ruling1: list  # l_{p,a}, a on C(q, r)
    ruling2: list  # l_{b,q}, b on C(p, r)
    translation_pairs: list  # (i, j) with p - b_j = a_i - q
    parallel_pairs: list
    intersecting_pairs: int


def _distinct_params(ts):
    ts = [rat(t) for t in ts]
    if len(set(ts)) != len(ts) or len(ts) < 3:
        raise DegenerateInput("need at least three distinct parameters")
    return ts


def circle_regulus(p, q, r, ts) -> CircleRegulus:
    p, q, r = pt2(*p), pt2(*q), rat(r)
    if p == q or r <= 0:
        raise DegenerateInput("need p != q and r > 0")
    ts = _distinct_params(ts)
    a_pts = [circle_point(q, r, t) for t in ts]
    b_pts = [circle_point(p, r, t) for t in ts]
    ruling1 = [rho_line(p, a) for a in a_pts]
    ruling2 = [rho_line(b, q) for b in b_pts]
    Q = regulus_fit(*ruling1[:3])
    for ln in ruling1 + ruling2:
        if not quadric_contains_line(Q, ln):
            raise ContainmentFailure(f"{ln.provenance} is not on the fitted quadric")
    translations, parallel, meeting = [], [], 0
    for i, a in enumerate(a_pts):
        for j, b in enumerate(b_pts):
            if sub(p, b) == sub(a, q):
                translations.append((i, j))
            kind = relate_lines3(ruling1[i], ruling2[j]).kind
            if kind is Relation.PARALLEL:
                parallel.append((i, j))
            elif kind is Relation.INTERSECT:
                meeting += 1
            else:
                raise InconsistentPartition(f"cross pair ({i}, {j}) is {kind.value}")
    if parallel != translations:
        raise InconsistentPartition("parallel cross pairs differ from translation pairs")
    return CircleRegulus(Q, classify_quadric(Q), a_pts, b_pts, ruling1, ruling2,
                         translations, parallel, meeting)


@dataclass
class LineRegulus:
    quadric: Quadric
    surface: SurfaceClass
    a_points: list
    ruling1: list  # l_{p,a}, a on the target line
    ruling2: list  # horizontal S(l', target), l' through p


def line_regulus(p, target: OrLine2, ts, dirs) -> LineRegulus:
    p = pt2(*p)
    ts = _distinct_params(ts)
    a_pts = [target.point_at(t) for t in ts]
    ruling1 = [rho_line(p, a) for a in a_pts]
    ruling2 = [s_line(OrLine2(p, d), target) for d in dirs]
    Q = regulus_fit(*ruling1[:3])
    for k, ln in enumerate(ruling2):
        if not quadric_contains_line(Q, ln):
            raise ContainmentFailure(f"horizontal line for direction {k} is not on the fitted quadric")
    for ln in ruling1:
        if not quadric_contains_line(Q, ln):
            raise ContainmentFailure(f"{ln.provenance} is not on the fitted quadric")
    return LineRegulus(Q, classify_quadric(Q), a_pts, ruling1, ruling2)


# -- constraint polynomials for membership of l_{p,a} -----------------------

class BiPoly(NamedTuple):
    """Polynomial in (ax, ay) as a mapping ``(i, j) -> coefficient``."""
    terms: dict

    def __call__(self, ax, ay) -> Fraction:
        ax, ay = rat(ax), rat(ay)
        return sum((c * ax ** i * ay ** j for (i, j), c in self.terms.items()), Fraction(0))

    def degree(self) -> int:
        return max((i + j for (i, j), c in self.terms.items() if c != 0), default=-1)


def _pmul(f, g):
    out = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def _padd(*polys):
    out = {}
    for f in polys:
        for e, c in f.items():
            out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c != 0}


def _pconst(c):
    return {(0, 0, 0): Fraction(c)} if c != 0 else {}


class Side(enum.Enum):
    FIRST = "first"    # lines l_{p,a}
    SECOND = "second"  # lines l_{a,p}


def line_family_constraints(Q: Quadric, p, side: Side = Side.FIRST) -> tuple:
    """Three polynomials in ``a`` whose common zeros are the ``a`` with the line in Q.

    Substituting the rotation-line parametrization into Q gives a quadratic
    in z; the returned tuple holds its coefficients of z^0, z^1, z^2.
    """
    p = pt2(*p)
    half = Fraction(1, 2)
    AX, AY, Z = {(1, 0, 0): half}, {(0, 1, 0): half}, {(0, 0, 1): Fraction(1)}
    # l_{p,a}: x = (px + ax)/2 + z (ay - py)/2,  y = (py + ay)/2 + z (px - ax)/2
    sign = 1 if side is Side.FIRST else -1
    zx = _padd(_pmul(_pconst(sign), AY), _pconst(-sign * p.y / 2))
    zy = _padd(_pmul(_pconst(-sign), AX), _pconst(sign * p.x / 2))
    x = _padd(_pconst(p.x / 2), AX, _pmul(Z, zx))
    y = _padd(_pconst(p.y / 2), AY, _pmul(Z, zy))
    coords = (x, y, Z)
    f = {}
    for c, exps in zip(Q.coeffs, _EXPONENTS):
        if c == 0:
            continue
        term = _pconst(c)
        for var, k in zip(coords, exps):
            for _ in range(k):
                term = _pmul(term, var)
        f = _padd(f, term)
    out = [{}, {}, {}]
    for (i, j, k), c in f.items():
        out[k][(i, j)] = c
    return tuple(BiPoly(t) for t in out)
