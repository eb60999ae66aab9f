"""Distinct distances and bipartite distance energy for rational point sets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import EmptyEnergy, ValidationError
from .exact import Pt2, pt2, sqdist2


@dataclass(frozen=True)
class PointSetPair:
    P: tuple
    Q: tuple

    def __post_init__(self):
        P = tuple(pt2(*p) for p in self.P)
        Q = tuple(pt2(*q) for q in self.Q)
        if len(set(P)) != len(P):
            raise ValidationError("P contains duplicate points")
        if len(set(Q)) != len(Q):
            raise ValidationError("Q contains duplicate points")
        shared = set(P) & set(Q)
        if shared:
            raise ValidationError(f"P and Q must be disjoint; shared: {sorted(shared)}")
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "Q", Q)

    @property
    def m(self) -> int:
        return len(self.P)

    @property
    def n(self) -> int:
        return len(self.Q)


def histogram(pp: PointSetPair) -> Counter:
    """Squared distance -> number of (p, q) pairs realizing it."""
    return Counter(sqdist2(p, q) for p in pp.P for q in pp.Q)


class DistinctReport(NamedTuple):
    count: int
    histogram: Counter


def distinct_distances(pp: PointSetPair) -> DistinctReport:
    h = histogram(pp)
    return DistinctReport(len(h), h)


@dataclass(frozen=True)
class EnergyReport:
    total: int
    trans: int
    rot: int
    histogram: Counter


def translation_count(pp: PointSetPair) -> int:
    """Quadruples (p1, q1, p2, q2) with ``q2 - p1 = p2 - q1``.

    The identity is the same as ``p1 + p2 = q1 + q2``, and it already forces
    ``|p1 - q1| = |p2 - q2|``, so this is a match of pair-sum multisets.
    """
    psums = Counter((a.x + b.x, a.y + b.y) for a in pp.P for b in pp.P)
    qsums = Counter((a.x + b.x, a.y + b.y) for a in pp.Q for b in pp.Q)
    return sum(c * qsums[s] for s, c in psums.items() if s in qsums)


def distance_energy(pp: PointSetPair) -> EnergyReport:
    h = histogram(pp)
    total = sum(d * d for r2, d in h.items() if r2 != 0)
    trans = translation_count(pp)
    return EnergyReport(total, trans, total - trans, h)


def cs_lower_bound(rep: EnergyReport, m: int, n: int) -> Fraction:
    if rep.total <= 0:
        raise EmptyEnergy("energy is zero; the bound is undefined")
    return Fraction(m * m * n * n, rep.total)


class MaxPointDistances(NamedTuple):
    t: int
    witness: Pt2


def max_point_distances(pp: PointSetPair) -> MaxPointDistances:
    best = None
    for p in pp.P:
        k = len({sqdist2(p, q) for q in pp.Q})
        if best is None or k > best.t:
            best = MaxPointDistances(k, p)
    return best
