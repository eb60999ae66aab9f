"""JSON / CSV encodings.  Rationals travel as strings ("3", "-7/2")."""

from __future__ import annotations

import csv
import enum
import io
import json
import os
import tempfile
from collections import Counter
from dataclasses import fields, is_dataclass
from fractions import Fraction

from .constructions import CircleGrid, QuadPt
from .errors import InputError, StorageError
from .exact import Horizontal, NonHorizontal, Plane3, line3, rat
from .reguli import Quadric, classify_quadric
from .stats import PointSetPair


def fmt_rat(v) -> str:
    return str(Fraction(v))


def parse_rat(text) -> Fraction:
    try:
        return rat(text.strip() if isinstance(text, str) else text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational: {text!r}") from exc


def parse_vector(text: str, size: int | None = None) -> tuple:
    parts = [p for p in text.split(",") if p.strip()]
    vec = tuple(parse_rat(p) for p in parts)
    if size is not None and len(vec) != size:
        raise InputError(f"expected {size} comma-separated rationals, got {text!r}")
    return vec


# -- point sets -------------------------------------------------------------

def pointset_to_json(pp: PointSetPair) -> dict:
    return {"P": [[fmt_rat(p.x), fmt_rat(p.y)] for p in pp.P],
            "Q": [[fmt_rat(q.x), fmt_rat(q.y)] for q in pp.Q]}


def grid_to_json(g: CircleGrid) -> dict:
    return {"m": g.m, "s": g.s, "n": g.n,
            "P": [[a, 0] for a in g.P],
            "Q": [{"i": q.i, "j": q.j} for q in g.Q]}


def load_points(doc: dict):
    """Decode a point-set document into a PointSetPair or a CircleGrid."""
    if not isinstance(doc, dict) or "P" not in doc or "Q" not in doc:
        raise InputError("point-set document needs 'P' and 'Q'")
    if doc.get("kind") == "orthogonal":
        raise InputError("orthogonal construction has irrational coordinates (sqrt i, sqrt j); "
                         "only its integer census is supported, via `construct orthogonal`")
    Q = doc["Q"]
    if Q and isinstance(Q[0], dict):
        if not all(isinstance(q, dict) for q in Q):
            raise InputError("cannot mix (i, sqrt j) grid points with rational points")
        try:
            P = tuple(int(parse_rat(p[0])) for p in doc["P"])
            grid = CircleGrid(int(doc["m"]), int(doc["s"]), P,
                              tuple(QuadPt(int(q["i"]), int(q["j"])) for q in Q))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed circle-grid document: {exc}") from exc
        return grid
    try:
        P = [tuple(parse_rat(v) for v in p) for p in doc["P"]]
        Q = [tuple(parse_rat(v) for v in q) for q in Q]
    except TypeError as exc:
        raise InputError(f"malformed point list: {exc}") from exc
    if any(len(p) != 2 for p in P + Q):
        raise InputError("every point needs exactly two coordinates")
    return PointSetPair(tuple(P), tuple(Q))


# -- lines, planes, quadrics ------------------------------------------------

def line_to_json(line) -> dict:
    if isinstance(line, NonHorizontal):
        out = {k: fmt_rat(getattr(line, k)) for k in "abcd"}
    else:
        out = {"z": fmt_rat(line.z),
               "base": [fmt_rat(v) for v in line.base],
               "dir": [fmt_rat(v) for v in line.dir]}
    if line.provenance is not None:
        p, q = line.provenance
        out["p"] = [fmt_rat(v) for v in p]
        out["q"] = [fmt_rat(v) for v in q]
    return out


def line_from_json(doc: dict):
    try:
        if "a" in doc:
            return NonHorizontal(*(parse_rat(doc[k]) for k in "abcd"))
        if "z" in doc:
            return Horizontal(parse_rat(doc["z"]),
                              tuple(parse_rat(v) for v in doc["base"]),
                              tuple(parse_rat(v) for v in doc["dir"]))
        return line3(tuple(parse_rat(v) for v in doc["point"]),
                     tuple(parse_rat(v) for v in doc["dir"]))
    except KeyError as exc:
        raise InputError(f"line is missing field {exc}") from exc


def parse_lines_arg(text: str) -> list:
    """``"x,y,z:dx,dy,dz;..."`` -> lines through each point with each direction."""
    lines = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        if ":" not in chunk:
            raise InputError(f"line {chunk!r} must be 'x,y,z:dx,dy,dz'")
        pt, d = chunk.split(":", 1)
        lines.append(line3(parse_vector(pt, 3), parse_vector(d, 3)))
    return lines


def plane_to_json(pl: Plane3 | None):
    return None if pl is None else [fmt_rat(v) for v in pl]


def quadric_to_json(Q: Quadric) -> dict:
    return {"coeffs": {k: fmt_rat(v) for k, v in Q.as_dict().items()},
            "class": classify_quadric(Q).value}


# -- generic report encoding ------------------------------------------------

def to_jsonable(obj):
    """Recursively turn report objects into JSON-ready values."""
    if isinstance(obj, Fraction):
        return fmt_rat(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (NonHorizontal, Horizontal)):
        return line_to_json(obj)
    if isinstance(obj, Quadric):
        return quadric_to_json(obj)
    if is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, tuple) and hasattr(obj, "_asdict"):
        return {k: to_jsonable(v) for k, v in obj._asdict().items()}
    if isinstance(obj, (dict, Counter)):
        return {_key(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _key(k) -> str:
    if isinstance(k, Fraction):
        return fmt_rat(k)
    if isinstance(k, tuple):
        return ",".join(_key(v) for v in k)
    return str(k)


def dumps_json(doc) -> str:
    return json.dumps(to_jsonable(doc), indent=2) + "\n"


def flatten(doc, prefix="") -> list:
    """(dotted key, value) rows for spreadsheet-style output."""
    rows = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            rows.extend(flatten(v, f"{prefix}.{k}" if prefix else str(k)))
    elif isinstance(doc, list):
        for i, v in enumerate(doc):
            rows.extend(flatten(v, f"{prefix}.{i}" if prefix else str(i)))
    else:
        rows.append((prefix, "" if doc is None else doc))
    return rows


def dumps_csv(doc) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    w.writerows(flatten(to_jsonable(doc)))
    return buf.getvalue()


def render(doc, fmt: str) -> str:
    return dumps_csv(doc) if fmt == "csv" else dumps_json(doc)


def atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise StorageError(f"cannot write {path}: {exc}") from exc


def read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise StorageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
