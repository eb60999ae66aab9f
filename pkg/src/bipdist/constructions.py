"""Extremal point configurations and their exact distance censuses.

The circle grid keeps its second set in the integer index domain: the
point ``(i, sqrt(j))`` is stored as ``QuadPt(i, j)`` and every squared
distance to an axis point ``(a, 0)`` is the integer ``(a - i)**2 + j``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import InvalidParams
from .exact import Pt2


class QuadPt(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class CircleGrid:
    m: int
    s: int
    P: tuple  # axis abscissae a, meaning the points (a, 0)
    Q: tuple  # QuadPt

    @property
    def n(self) -> int:
        return self.m * self.s * self.s


def elekes_grid(m: int, s: int) -> CircleGrid:
    if m < 2 or s < 1:
        raise InvalidParams(f"circle grid needs m >= 2 and s >= 1, got m={m}, s={s}")
    P = tuple(range(1, m + 1))
    Q = tuple(QuadPt(i, j)
              for i in range(1, s + 1)
              for j in range(s * s + 1 - i * i, s * s + m * s - i * i + 1))
    return CircleGrid(m, s, P, Q)


def grid_sqdist(a: int, q: QuadPt) -> int:
    return (a - q.i) ** 2 + q.j


class Census(NamedTuple):
    count: int
    min: int
    max: int


def elekes_distance_census(g: CircleGrid) -> Census:
    values = {grid_sqdist(a, q) for a in g.P for q in g.Q}
    return Census(len(values), min(values), max(values))


def census_bracket(m: int, s: int) -> tuple[int, int]:
    """Value bracket ``[m^2 - 2ms + s^2 + 1, m^2 - 2m + s^2 + ms]``, valid when m <= s."""
    return m * m - 2 * m * s + s * s + 1, m * m - 2 * m + s * s + m * s


def orthogonal_pair(m: int, n: int) -> int:
    """Distinct squared distances between ``(sqrt(i), 0)`` and ``(0, sqrt(j))``: the sums i + j."""
    if m < 1 or n < 1:
        raise InvalidParams(f"orthogonal pair needs m, n >= 1, got {m}, {n}")
    return len({i + j for i in range(1, m + 1) for j in range(1, n + 1)})


class BoundsRow(NamedTuple):
    regime: str
    lower: str
    upper: str


def bounds_table(m: int, n: int) -> BoundsRow:
    """Which row of the known-bounds table applies to (m, n), with its formulas."""
    if not 1 <= m <= n:
        raise InvalidParams(f"need 1 <= m <= n, got m={m}, n={n}")
    if m == 1:
        return BoundsRow("m=1", "1", "1")
    if m ** 3 <= n:
        return BoundsRow("2<=m<=n^(1/3)", "Omega(sqrt(mn))", "O(sqrt(mn))")
    # m <= n^(1/2) / log(n)^(1/4)  <=>  m^4 log n <= n^2
    if m ** 4 * math.log(n) <= n * n:
        return BoundsRow("n^(1/3)<=m<=n^(1/2)/log^(1/4)(n)",
                         "Omega(sqrt(mn)/log(n))", "O(m^2)")
    return BoundsRow("n^(1/2)/log^(1/4)(n)<=m<=n",
                     "Omega(sqrt(mn)/log(n))", "O(n/sqrt(log(n)))")


def random_pair(m: int, n: int, seed: int, box: int = 100, max_den: int = 4):
    """Reproducible disjoint rational point sets in ``[0, box]^2``."""
    if m < 1 or n < 1:
        raise InvalidParams(f"random pair needs m, n >= 1, got {m}, {n}")
    rng = random.Random(seed)
    seen = set()
    pts = []
    while len(pts) < m + n:
        den = rng.randint(1, max_den)
        p = Pt2(Fraction(rng.randint(0, box * den), den),
                Fraction(rng.randint(0, box * den), den))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return pts[:m], pts[m:]
