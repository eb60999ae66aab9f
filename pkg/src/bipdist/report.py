"""Assemble the JSON-ready reports the command line emits."""

from __future__ import annotations

from fractions import Fraction

from . import crossing, esgk, reguli, stats
from .constructions import CircleGrid, census_bracket, elekes_distance_census
from .errors import InputError
from .exact import OrLine2
from .serialize import (
    fmt_rat,
    line_to_json,
    parse_rat,
    plane_to_json,
    quadric_to_json,
    to_jsonable,
)


def distance_section(pp: stats.PointSetPair) -> dict:
    dd = stats.distinct_distances(pp)
    energy = stats.distance_energy(pp)
    best = stats.max_point_distances(pp)
    bound = stats.cs_lower_bound(energy, pp.m, pp.n)
    return {
        "m": pp.m,
        "n": pp.n,
        "distinct": dd.count,
        "histogram": {fmt_rat(k): v for k, v in sorted(dd.histogram.items())},
        "energy": {"total": energy.total, "trans": energy.trans, "rot": energy.rot},
        "cs_bound": fmt_rat(bound),
        "cs_holds": dd.count >= bound,
        "t": best.t,
        "t_witness": [fmt_rat(v) for v in best.witness],
    }


def esgk_section(pp: stats.PointSetPair, include_lines: bool = False) -> dict:
    fams = esgk.build_families(pp)
    census = esgk.count_intersecting_pairs(fams)
    planes = esgk.plane_census(fams)
    rot = stats.distance_energy(pp).rot
    hist = census.per_point
    out = {
        "I": census.I,
        "energy_rot": rot,
        "energy_identity": census.I == rot,
        "rich_points": [{"r": r, "m_r": c} for r, c in hist.m_r.items()],
        "max_point_multiplicity": hist.max_richness(),
        "weighted_richpoint_sum": esgk.weighted_richpoint_sum(hist),
        "plane_census": {"max_on_plane": planes.max_on_plane,
                         "witness": plane_to_json(planes.witness)},
        "multiplicity_bound_2m": 2 * pp.m,
    }
    if include_lines:
        out["L1"] = [line_to_json(ln) for ln in fams.L1]
        out["L2"] = [line_to_json(ln) for ln in fams.L2]
    return out


def grid_section(g: CircleGrid) -> dict:
    census = elekes_distance_census(g)
    lo, hi = census_bracket(g.m, g.s)
    out = {"m": g.m, "s": g.s, "n": g.n, "count": census.count,
           "min": census.min, "max": census.max,
           "count_bracket": [g.m * g.s, 3 * g.m * g.s]}
    if g.m <= g.s:
        out["value_bracket"] = [lo, hi]
        out["within_brackets"] = (g.m * g.s <= census.count <= 3 * g.m * g.s
                                  and lo <= census.min and census.max <= hi)
    return out


def szekely_section(data, K: int, c) -> dict:
    return to_jsonable(crossing.szekely_report(data, K, c))


# -- reguli -----------------------------------------------------------------

def _pt(v):
    return tuple(parse_rat(x) for x in v)


def fit_report(lines) -> dict:
    if len(lines) != 3:
        raise InputError(f"regulus fit needs exactly three lines, got {len(lines)}")
    Q = reguli.regulus_fit(*lines)
    return {"quadric": quadric_to_json(Q),
            "contains_inputs": [reguli.quadric_contains_line(Q, ln) for ln in lines],
            "lines": [line_to_json(ln) for ln in lines]}


def circle_report(p, q, r, ts) -> dict:
    res = reguli.circle_regulus(p, q, r, ts)
    part = reguli.rulings_partition(res.quadric, res.ruling1 + res.ruling2)
    contained = [reguli.quadric_contains_line(res.quadric, ln)
                 for ln in res.ruling1 + res.ruling2]
    return {
        "kind": "circle",
        "quadric": quadric_to_json(res.quadric),
        "ruling1": [line_to_json(ln) for ln in res.ruling1],
        "ruling2": [line_to_json(ln) for ln in res.ruling2],
        "containment": contained,
        "translation_pairs": [list(x) for x in res.translation_pairs],
        "parallel_pairs": [list(x) for x in res.parallel_pairs],
        "intersecting_pairs": res.intersecting_pairs,
        "partition": {"A": len(part.A), "B": len(part.B),
                      "exceptions": [list(x) for x in part.exceptions]},
    }


def line_report(p, base, direction, ts, dirs) -> dict:
    target = OrLine2(base, direction)
    res = reguli.line_regulus(p, target, ts, dirs)
    part = reguli.rulings_partition(res.quadric, res.ruling1 + res.ruling2)
    contained = [reguli.quadric_contains_line(res.quadric, ln)
                 for ln in res.ruling1 + res.ruling2]
    return {
        "kind": "line",
        "quadric": quadric_to_json(res.quadric),
        "ruling1": [line_to_json(ln) for ln in res.ruling1],
        "ruling2": [line_to_json(ln) for ln in res.ruling2],
        "containment": contained,
        "partition": {"A": len(part.A), "B": len(part.B),
                      "exceptions": [list(x) for x in part.exceptions]},
    }


def regulus_from_spec(spec: dict) -> dict:
    """Dispatch a JSON regulus spec: kind circle | line | fit."""
    from .serialize import line_from_json

    kind = spec.get("kind")
    try:
        if kind == "circle":
            return circle_report(_pt(spec["p"]), _pt(spec["q"]), parse_rat(spec["r"]),
                                 [parse_rat(t) for t in spec["ts"]])
        if kind == "line":
            return line_report(_pt(spec["p"]), _pt(spec["base"]), _pt(spec["dir"]),
                               [parse_rat(t) for t in spec["ts"]],
                               [_pt(d) for d in spec["dirs"]])
        if kind == "fit":
            return fit_report([line_from_json(ln) for ln in spec["lines"]])
    except KeyError as exc:
        raise InputError(f"regulus spec is missing {exc}") from exc
    raise InputError(f"unknown regulus kind {kind!r}; expected circle, line or fit")


DEFAULT_C = Fraction(1, 64)
