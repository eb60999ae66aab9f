from collections import Counter
from fractions import Fraction as F
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from bipdist.errors import HorizontalLine, IrrationalAngle, ParallelLines
from bipdist.esgk import (
    RichPointHistogram,
    apply_rotation,
    build_families,
    count_intersecting_pairs,
    line_to_pq,
    plane_census,
    rational_sqrt,
    rho_line,
    rotation_params,
    s_line,
    weighted_richpoint_sum,
)
from bipdist.exact import (
    Horizontal,
    NonHorizontal,
    OrLine2,
    Pt3,
    Relation,
    line2_key,
    line3,
    on_line3,
    plane_through,
    pt2,
    relate_lines3,
)
from bipdist.stats import PointSetPair, distance_energy

from conftest import lattice_pairs, points, rationals


def pair(P, Q):
    return PointSetPair(tuple(pt2(*p) for p in P), tuple(pt2(*q) for q in Q))


def test_rho_line_examples():
    l = rho_line((0, 0), (2, 0))
    assert l.point == (1, 0, 0) and l.direction == (0, -1, 1)
    l = rho_line((0, 0), (1, 1))
    assert l.point == (F(1, 2), F(1, 2), 0) and l.direction == (F(1, 2), F(-1, 2), 1)
    l = rho_line((1, 0), (0, 1))
    assert l.point == (F(1, 2), F(1, 2), 0) and l.direction == (F(1, 2), F(1, 2), 1)


def test_line_to_pq_examples():
    assert line_to_pq(rho_line((0, 0), (2, 0))) == ((0, 0), (2, 0))
    # a = 0, b = 1, c = -1, d = 0  ->  p = (b + c, d - a), q = (b - c, d + a)
    assert line_to_pq(NonHorizontal(0, 1, -1, 0)) == ((0, 0), (2, 0))
    p, q = (F(1, 3), F(2, 5)), (7, -1)
    assert line_to_pq(rho_line(p, q)) == (p, q)
    with pytest.raises(HorizontalLine):
        line_to_pq(Horizontal(1, (0, 0), (1, 0)))


def test_apply_rotation_examples():
    # z = cot(a/2) with the angle a read clockwise: z = 1 is a clockwise quarter turn
    assert apply_rotation((0, 0, 1), (1, 0)) == (0, -1)
    assert apply_rotation((0, 0, -1), (1, 0)) == (0, 1)
    assert apply_rotation((F(1, 2), F(1, 2), 0), (0, 0)) == (1, 1)
    for z in (0, 3, F(-2, 7)):
        assert apply_rotation((5, 7, z), (5, 7)) == (5, 7)


@given(rationals())
def test_rotation_params_on_unit_circle(z):
    c, s = rotation_params((0, 0, z))
    assert c * c + s * s == 1


@given(points(), points(), rationals())
def test_rho_line_points_take_p_to_q(p, q, t):
    if p == q:
        return
    g = rho_line(p, q).point_at(t)
    assert apply_rotation(g, p) == q


@given(points(), points())
def test_line_properties(p, q):
    if p == q:
        return
    l = rho_line(p, q)
    assert isinstance(l, NonHorizontal)
    assert line_to_pq(l) == (p, q)
    # reflection in z = 0 swaps l_{p,q} and l_{q,p}
    back = rho_line(q, p)
    for t in (0, 1, F(-5, 2)):
        x = l.point_at(t)
        assert on_line3(back, (x[0], x[1], -x[2]))


@given(points(), points(), points())
def test_same_source_lines_are_skew(p, q1, q2):
    if len({p, q1, q2}) < 3:
        return
    assert relate_lines3(rho_line(p, q1), rho_line(p, q2)).kind is Relation.SKEW
    assert relate_lines3(rho_line(q1, p), rho_line(q2, p)).kind is Relation.SKEW


def test_s_line_examples():
    x_axis = OrLine2(pt2(0, 0), (1, 0))
    y_axis = OrLine2(pt2(0, 0), (0, 1))
    s = s_line(x_axis, y_axis)
    assert s == Horizontal(-1, (0, 0), (1, -1))
    s = s_line(OrLine2(pt2(0, 0), (1, 0)), OrLine2(pt2(0, 2), (-1, 0)))
    assert s.z == 0 and line2_key(OrLine2(s.base, s.dir)) == line2_key(OrLine2(pt2(0, 1), (1, 0)))
    s = s_line(OrLine2(pt2(0, 0), (3, 4)), OrLine2(pt2(0, 0), (4, 3)))
    assert s.z == 7 and s.dir == (1, -1)
    with pytest.raises(ParallelLines):
        s_line(x_axis, OrLine2(pt2(0, 5), (2, 0)))
    with pytest.raises(IrrationalAngle):
        s_line(x_axis, OrLine2(pt2(0, 0), (1, 1)))


TRIPLES = [(1, 0), (0, 1), (3, 4), (4, 3), (5, 12), (8, 15), (-3, 4), (7, -24), (-1, 0)]


@given(st.sampled_from(TRIPLES), st.sampled_from(TRIPLES), points(), points(),
       st.integers(1, 3), st.integers(-3, 3))
def test_s_line_maps_oriented_lines(d1, d2, b1, b2, k, t):
    l1 = OrLine2(b1, (k * d1[0], k * d1[1]))
    l2 = OrLine2(b2, d2)
    if l1.is_parallel(l2) and not l1.is_antiparallel(l2):
        return
    s = s_line(l1, l2)
    g = s.point_at(t)
    img0 = apply_rotation(g, l1.point_at(0))
    img1 = apply_rotation(g, l1.point_at(1))
    assert line2_key(OrLine2(img0, (img1.x - img0.x, img1.y - img0.y))) == line2_key(l2)
    # orientation: the image direction is a positive multiple of d2
    v = (img1.x - img0.x, img1.y - img0.y)
    assert v[0] * d2[1] - v[1] * d2[0] == 0 and v[0] * d2[0] + v[1] * d2[1] > 0


def test_rational_sqrt():
    assert rational_sqrt(F(9, 4)) == F(3, 2)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-1) is None


def test_families_shapes():
    fams = build_families(pair([(0, 0)], [(1, 0)]))
    assert fams.L1 == (rho_line((0, 0), (1, 0)),) and fams.L2 == (rho_line((1, 0), (0, 0)),)
    fams = build_families(pair([(0, 0), (2, 0)], [(1, 1), (1, -1)]))
    assert len(fams.L1) == len(fams.L2) == 4
    assert all(isinstance(l, NonHorizontal) for l in fams.lines)


def brute_intersections(fams):
    """Pairwise relate over L1 x L2 plus a point histogram over all of L."""
    I = sum(1 for a, b in product(fams.L1, fams.L2)
            if relate_lines3(a, b).kind is Relation.INTERSECT)
    hist = {}
    lines = [(l, 0) for l in fams.L1] + [(l, 1) for l in fams.L2]
    for (a, sa), (b, sb) in combinations(lines, 2):
        rel = relate_lines3(a, b)
        if rel.kind is Relation.INTERSECT:
            hist.setdefault(rel.point, set()).update({(a, sa), (b, sb)})
    return I, {pt: (sum(1 for _, s in ls if s == 0), sum(1 for _, s in ls if s == 1))
               for pt, ls in hist.items()}


def test_intersection_examples():
    c = count_intersecting_pairs(build_families(pair([(0, 0)], [(1, 0)])))
    assert c.I == 1
    c = count_intersecting_pairs(build_families(pair([(0, 0)], [(1, 0), (0, 1)])))
    assert c.I == 4
    c = count_intersecting_pairs(build_families(pair([(0, 0), (2, 0)], [(1, 1), (1, -1)])))
    assert c.I == 12


@settings(max_examples=80)
@given(lattice_pairs())
def test_intersections_match_pairwise_oracle(pp):
    fams = build_families(pp)
    census = count_intersecting_pairs(fams)
    I, hist = brute_intersections(fams)
    assert census.I == I == distance_energy(pp).rot
    assert census.per_point.points == hist
    assert census.I == sum(c1 * c2 for c1, c2 in hist.values())
    assert 4 * census.I <= weighted_richpoint_sum(census.per_point)


def test_quadruple_level_accounting():
    pp = pair([(0, 0), (2, 0), (1, 3)], [(1, 1), (1, -1), (3, 1), (0, 2)])
    seen_trans = seen_rot = 0
    for p1, q1, p2, q2 in product(pp.P, pp.Q, pp.P, pp.Q):
        d1 = (p1.x - q1.x) ** 2 + (p1.y - q1.y) ** 2
        if d1 != (p2.x - q2.x) ** 2 + (p2.y - q2.y) ** 2:
            continue
        rel = relate_lines3(rho_line(p1, q2), rho_line(q1, p2))
        if (q2.x - p1.x, q2.y - p1.y) == (p2.x - q1.x, p2.y - q1.y):
            assert rel.kind is Relation.PARALLEL
            seen_trans += 1
        else:
            assert rel.kind is Relation.INTERSECT
            assert apply_rotation(rel.point, p1) == q2
            assert apply_rotation(rel.point, q1) == p2
            seen_rot += 1
    assert seen_trans > 0 and seen_rot > 0


def test_weighted_sum_examples():
    assert weighted_richpoint_sum(RichPointHistogram({Pt3(0, 0, 0): (1, 1)})) == 4
    assert weighted_richpoint_sum(RichPointHistogram({})) == 0
    assert weighted_richpoint_sum(RichPointHistogram({Pt3(0, 0, 0): (2, 1)})) == 9


def test_rich_point_levels():
    h = RichPointHistogram({Pt3(0, 0, 0): (2, 1), Pt3(1, 0, 0): (1, 1)})
    assert h.m_r == {2: 2, 3: 1}
    assert h.max_richness() == 3


def brute_plane_max(fams):
    lines = list(fams.lines)
    best = 1
    for a, b in combinations(lines, 2):
        if relate_lines3(a, b).kind in (Relation.PARALLEL, Relation.INTERSECT):
            pl = plane_through(a, b)
            best = max(best, sum(1 for l in lines if pl.contains_line(l)))
    return best


@settings(max_examples=40)
@given(lattice_pairs(max_m=3, max_n=3))
def test_plane_census_matches_oracle_and_bound(pp):
    fams = build_families(pp)
    pc = plane_census(fams)
    assert pc.max_on_plane == brute_plane_max(fams)
    assert pc.max_on_plane <= 2 * pp.m
    assert sum(1 for l in fams.lines if pc.witness.contains_line(l)) == pc.max_on_plane


def test_plane_census_small():
    assert plane_census(build_families(pair([(0, 0)], [(1, 0)]))).max_on_plane <= 2
    pp = pair([(0, 0), (1, 0), (3, 0)], [(1, 1), (2, 5), (-1, 2)])
    assert plane_census(build_families(pp)).max_on_plane <= 6


def test_general_line_input_is_canonical():
    assert line3((1, 0, 0), (0, -1, 1)) == rho_line((0, 0), (2, 0))
    assert Counter([rho_line((0, 0), (2, 0)), line3((1, -2, 2), (0, 2, -2))])[rho_line((0, 0), (2, 0))] == 2
