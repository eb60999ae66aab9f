from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from bipdist.errors import ContainmentFailure, DegenerateInput, InconsistentPartition, NotSkew, PointNotOnLine
from bipdist.esgk import rho_line, s_line
from bipdist.exact import OrLine2, Relation, line3, on_line3, pt2, relate_lines3
from bipdist.linalg import nullspace
from bipdist.reguli import (
    Quadric,
    Side,
    SurfaceClass,
    circle_point,
    circle_regulus,
    classify_quadric,
    fit_rows,
    line_family_constraints,
    line_regulus,
    psi_sample,
    quadric_contains_line,
    regulus_fit,
    rulings_partition,
)

from conftest import points, rationals

SADDLE = Quadric.from_terms(xy=1, z=-1)
HYPERBOLOID = Quadric.from_terms(x2=1, y2=1, z2=-1, one=-1)


def saddle_line(c):
    return line3((c, 0, 0), (0, 1, c))  # {(c, t, c t)}


def hyperboloid_line(c, s, second=False):
    # through (c, s, 0) on x^2 + y^2 = 1; the two rulings lean opposite ways
    d = (s, -c, 1) if second else (-s, c, 1)
    return line3((c, s, 0), d)


def test_fit_saddle():
    lines = [saddle_line(c) for c in (0, 1, 2)]
    assert len(nullspace(fit_rows(lines), 10)) == 1
    Q = regulus_fit(*lines)
    assert Q.proportional_to(SADDLE)
    assert classify_quadric(Q) is SurfaceClass.HYPERBOLIC_PARABOLOID


def test_fit_hyperboloid():
    lines = [hyperboloid_line(1, 0), hyperboloid_line(0, 1), hyperboloid_line(-1, 0)]
    assert len(nullspace(fit_rows(lines), 10)) == 1
    Q = regulus_fit(*lines)
    assert Q.proportional_to(HYPERBOLOID)
    assert classify_quadric(Q) is SurfaceClass.HYPERBOLOID_ONE_SHEET


def test_fit_rejects_non_skew():
    with pytest.raises(NotSkew):
        regulus_fit(line3((0, 0, 0), (1, 0, 0)), line3((0, 0, 0), (0, 1, 0)),
                    line3((1, 1, 1), (0, 0, 1)))
    with pytest.raises(NotSkew):
        regulus_fit(saddle_line(0), saddle_line(0), saddle_line(1))


def test_containment_examples():
    assert quadric_contains_line(SADDLE, line3((0, 5, 0), (1, 0, 5)))
    assert quadric_contains_line(HYPERBOLOID, line3((1, 0, 0), (0, 1, 1)))
    assert not quadric_contains_line(SADDLE, line3((0, 5, 1), (1, 0, 5)))


@pytest.mark.parametrize("terms, expected", [
    (dict(x2=1, y2=1, z2=-1, one=-1), SurfaceClass.HYPERBOLOID_ONE_SHEET),
    (dict(xy=1, z=-1), SurfaceClass.HYPERBOLIC_PARABOLOID),
    (dict(x2=1, y2=-1, z=-1), SurfaceClass.HYPERBOLIC_PARABOLOID),
    (dict(x2=1, y2=1, one=-1), SurfaceClass.OTHER),            # cylinder
    (dict(x2=1, y2=1, z2=1, one=-1), SurfaceClass.OTHER),      # sphere
    (dict(x2=1, y2=1, z2=-1, one=1), SurfaceClass.OTHER),      # two sheets
    (dict(x2=1, y2=1, z2=-1), SurfaceClass.OTHER),             # cone
    (dict(x2=1, y2=1, z=-1), SurfaceClass.OTHER),              # elliptic paraboloid
    (dict(x2=-3, y2=-3, z2=3, one=3), SurfaceClass.HYPERBOLOID_ONE_SHEET),
    (dict(xy=1, yz=1, xz=1, one=-1), SurfaceClass.OTHER),      # inertia (1, 2): two sheets
    (dict(xy=1, yz=1, xz=1, one=1), SurfaceClass.HYPERBOLOID_ONE_SHEET),
])
def test_classify(terms, expected):
    assert classify_quadric(Quadric.from_terms(**terms)) is expected


def test_quadric_normalization():
    assert Quadric.from_terms(xy=3, z=-3) == SADDLE
    with pytest.raises(DegenerateInput):
        Quadric((0,) * 10)


line_parts = st.tuples(rationals(-5, 5, 3), rationals(-5, 5, 3), rationals(-5, 5, 3))


@settings(max_examples=60)
@given(st.lists(st.tuples(line_parts, line_parts), min_size=3, max_size=3))
def test_three_skew_lines_lie_on_a_doubly_ruled_quadric(specs):
    assume(all(any(d) for _, d in specs))
    lines = [line3(p, d) for p, d in specs]
    assume(all(relate_lines3(a, b).kind is Relation.SKEW
               for i, a in enumerate(lines) for b in lines[i + 1:]))
    Q = regulus_fit(*lines)
    assert all(quadric_contains_line(Q, l) for l in lines)
    assert classify_quadric(Q) is not SurfaceClass.OTHER
    # transversals through points of the first line stay on the quadric
    for t in (0, 1, F(2, 3)):
        tr = psi_sample(*lines, lines[0].point_at(t))
        if tr is not None:
            assert quadric_contains_line(Q, tr)


def test_psi_sample_saddle():
    lines = [saddle_line(c) for c in (0, 1, 2)]
    tr = psi_sample(*lines, (0, 5, 0))
    assert tr == line3((0, 5, 0), (1, 0, 5))
    with pytest.raises(PointNotOnLine):
        psi_sample(*lines, (1, 5, 0))


def test_psi_sample_hyperboloid():
    lines = [hyperboloid_line(1, 0), hyperboloid_line(0, 1), hyperboloid_line(-1, 0)]
    # through (1,0,0) the other-ruling line has direction (0,1,-1), which is
    # parallel to the third generator: no transversal meets all three
    assert psi_sample(*lines, (1, 0, 0)) is None
    tr = psi_sample(*lines, (1, 1, 1))
    assert tr == line3((1, 1, 1), (1, 0, 1))
    assert quadric_contains_line(HYPERBOLOID, tr)


def test_rulings_partition_saddle():
    xs = [saddle_line(c) for c in (0, 1, 2)]
    ys = [line3((0, c, 0), (1, 0, c)) for c in (0, 1, 2)]
    part = rulings_partition(SADDLE, xs + ys)
    assert part.A == xs and part.B == ys
    assert part.exceptions == [] and part.intersecting == 9
    single = rulings_partition(SADDLE, xs[:1])
    assert single.A == xs[:1] and single.B == []


def test_rulings_partition_counterexample():
    plus_v1 = line3((1, 0, 0), (0, 1, 1))
    minus_v1 = line3((1, 0, 0), (0, 1, -1))
    plus_v2 = line3((-1, 0, 0), (0, 1, 1))
    minus_v2 = line3((-1, 0, 0), (0, 1, -1))
    part = rulings_partition(HYPERBOLOID, [plus_v1, minus_v1, plus_v2, minus_v2])
    assert set(part.A) == {plus_v1, minus_v2}
    assert set(part.B) == {minus_v1, plus_v2}
    assert len(part.exceptions) == 2 and part.intersecting == 2


def test_rulings_partition_errors():
    with pytest.raises(ContainmentFailure):
        rulings_partition(SADDLE, [line3((0, 0, 1), (1, 0, 0))])
    cylinder = Quadric.from_terms(x2=1, y2=1, one=-1)
    with pytest.raises(InconsistentPartition):
        rulings_partition(cylinder, [line3((1, 0, 0), (0, 0, 1))])


def test_circle_point():
    assert circle_point((10, 0), 5, 0) == (15, 0)
    assert circle_point((10, 0), 5, 1) == (10, 5)
    assert circle_point((10, 0), 5, 2) == (7, 4)


TS = [0, 1, 2, -1, F(1, 2), -2, F(-1, 2), 3, F(1, 3), -3]


def test_circle_regulus():
    res = circle_regulus((0, 0), (10, 0), 5, TS)
    assert res.surface is SurfaceClass.HYPERBOLOID_ONE_SHEET
    for b in ((5, 0), (0, 5), (-3, 4)):
        assert quadric_contains_line(res.quadric, rho_line(b, (10, 0)))
    assert res.translation_pairs == res.parallel_pairs
    assert res.intersecting_pairs == len(TS) ** 2 - len(res.parallel_pairs)
    # refit from a disjoint triple of the same ruling
    refit = regulus_fit(*res.ruling1[3:6])
    assert refit.proportional_to(res.quadric)
    refit2 = regulus_fit(*res.ruling2[:3])
    assert refit2.proportional_to(res.quadric)


def test_circle_translation_pair_is_parallel():
    # a = (15, 0) pairs with b = p - (a - q) = (-5, 0), the antipode t = infinity
    l1, l2 = rho_line((0, 0), (15, 0)), rho_line((-5, 0), (10, 0))
    assert l1.direction == l2.direction == (0, F(-15, 2), 1)
    assert relate_lines3(l1, l2).kind is Relation.PARALLEL


@settings(max_examples=30)
@given(points(-10, 10, 3), points(-10, 10, 3), rationals(1, 6, 2))
def test_circle_regulus_general(p, q, r):
    assume(p != q)
    res = circle_regulus(p, q, r, TS[:8])
    assert res.surface is SurfaceClass.HYPERBOLOID_ONE_SHEET
    for i, a in enumerate(res.a_points):
        for j, b in enumerate(res.b_points):
            kind = relate_lines3(res.ruling1[i], res.ruling2[j]).kind
            translation = (p.x - b.x, p.y - b.y) == (a.x - q.x, a.y - q.y)
            assert (kind is Relation.PARALLEL) == translation
            assert kind in (Relation.PARALLEL, Relation.INTERSECT)
    part = rulings_partition(res.quadric, res.ruling1 + res.ruling2)
    assert len(part.A) == len(part.B) == 8


def test_line_regulus():
    target = OrLine2(pt2(0, 1), (1, 0))
    # the line through p with direction (-1, 0) is anti-parallel to the target;
    # direction (1, 0) would be parallel and has no rotation
    dirs = [(-1, 0), (0, 1), (3, 4), (4, -3), (5, 12)]
    res = line_regulus((0, 0), target, [0, 1, 2, -1, F(1, 2)], dirs)
    assert res.surface is SurfaceClass.HYPERBOLIC_PARABOLOID
    assert quadric_contains_line(res.quadric, rho_line((0, 0), (-1, 1)))
    assert all(quadric_contains_line(res.quadric, l) for l in res.ruling2)
    part = rulings_partition(res.quadric, res.ruling1 + res.ruling2)
    assert part.exceptions == []
    assert all(l.direction[2] == 0 for l in res.ruling2)


@settings(max_examples=30)
@given(points(-5, 5, 2), points(-5, 5, 2), st.sampled_from([(1, 0), (3, 4), (0, 1), (-5, 12)]))
def test_line_regulus_general(p, base, d):
    target = OrLine2(base, d)
    assume(target.point_at(0) != p and relate_ok(p, target))
    dirs = [v for v in [(1, 0), (0, 1), (3, 4), (-4, 3), (12, 5)]
            if v[0] * d[1] - v[1] * d[0] != 0 or v[0] * d[0] + v[1] * d[1] < 0]
    res = line_regulus(p, target, [0, 1, -1, 2], dirs)
    assert res.surface is SurfaceClass.HYPERBOLIC_PARABOLOID


def relate_ok(p, target):
    # p off the target line, otherwise the rotation lines through p meet
    return (p.x - target.base.x) * target.dir[1] - (p.y - target.base.y) * target.dir[0] != 0


def test_constraints_vanish_on_constructions():
    res = circle_regulus((0, 0), (10, 0), 5, TS)
    polys = line_family_constraints(res.quadric, (0, 0), Side.FIRST)
    assert all(f.degree() <= 2 for f in polys)
    for a in res.a_points:
        assert all(f(a.x, a.y) == 0 for f in polys)
    polys = line_family_constraints(res.quadric, (10, 0), Side.SECOND)
    for b in res.b_points:
        assert all(f(b.x, b.y) == 0 for f in polys)
    target = OrLine2(pt2(0, 1), (1, 0))
    lr = line_regulus((0, 0), target, [0, 1, 2, -1], [(0, 1)])
    polys = line_family_constraints(lr.quadric, (0, 0))
    for t in range(-5, 6):
        a = target.point_at(t)
        assert all(f(a.x, a.y) == 0 for f in polys)


@settings(max_examples=100)
@given(points(-8, 8, 3), points(-8, 8, 3), st.sampled_from([Side.FIRST, Side.SECOND]))
def test_constraint_locus_matches_containment(p, a, side):
    assume(p != a)
    Q = circle_regulus((0, 0), (10, 0), 5, TS[:4]).quadric
    polys = line_family_constraints(Q, p, side)
    line = rho_line(p, a) if side is Side.FIRST else rho_line(a, p)
    assert all(f(a.x, a.y) == 0 for f in polys) == quadric_contains_line(Q, line)


def test_constraints_detect_absence():
    polys = line_family_constraints(SADDLE, (F(1, 3), F(2, 7)))
    assert any(f(5, -1) != 0 for f in polys)
    assert not quadric_contains_line(SADDLE, rho_line((F(1, 3), F(2, 7)), (5, -1)))


def test_s_lines_meet_every_rotation_line_of_the_target():
    target = OrLine2(pt2(2, -1), (3, 4))
    s = s_line(OrLine2(pt2(0, 0), (0, 1)), target)
    for t in range(-3, 4):
        a = target.point_at(t)
        assert relate_lines3(s, rho_line((0, 0), a)).kind is Relation.INTERSECT
    assert on_line3(s, s.point_at(1))
