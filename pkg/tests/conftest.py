from fractions import Fraction

from hypothesis import strategies as st

from bipdist.exact import pt2
from bipdist.stats import PointSetPair


def rationals(lo=-20, hi=20, max_den=6):
    return st.builds(Fraction, st.integers(lo * max_den, hi * max_den),
                     st.integers(1, max_den))


def points(lo=-20, hi=20, max_den=6):
    return st.builds(pt2, rationals(lo, hi, max_den), rationals(lo, hi, max_den))


@st.composite
def point_set_pairs(draw, max_m=4, max_n=4):
    pts = draw(st.lists(points(), min_size=2, max_size=max_m + max_n, unique=True))
    k = draw(st.integers(1, min(max_m, len(pts) - 1)))
    P, Q = pts[:k], pts[k:k + max_n]
    return PointSetPair(tuple(P), tuple(Q))


@st.composite
def lattice_pairs(draw, max_m=4, max_n=4, box=3):
    """Small half-integer grids: lots of repeated distances, so rotations and
    translations both show up."""
    coord = st.integers(-2 * box, 2 * box).map(lambda v: Fraction(v, 2))
    pts = draw(st.lists(st.builds(pt2, coord, coord), min_size=2,
                        max_size=max_m + max_n, unique=True))
    k = draw(st.integers(1, min(max_m, len(pts) - 1)))
    return PointSetPair(tuple(pts[:k]), tuple(pts[k:k + max_n]))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
