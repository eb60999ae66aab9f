"""Exact-arithmetic workbench for bipartite distinct distances.

Everything outside :mod:`bipdist.plotting` computes with
:class:`fractions.Fraction` and never with floats.
"""

from .constructions import (
    CircleGrid,
    QuadPt,
    bounds_table,
    census_bracket,
    elekes_distance_census,
    elekes_grid,
    orthogonal_pair,
    random_pair,
)
from .crossing import (
    ArcMultigraph,
    bisector_pair_census,
    build_circles,
    build_multigraph,
    circle_pair_crossings,
    crossing_bounds,
    edge_multiplicity_bisector_link,
    rich_lines,
    szekely_report,
)
from .errors import (
    ContainmentFailure,
    DegenerateFit,
    DegenerateInput,
    DegeneracyError,
    EmptyEnergy,
    HorizontalLine,
    InconsistentPartition,
    InputError,
    InvalidParams,
    IrrationalAngle,
    NotCoplanar,
    NotSkew,
    ParallelLines,
    PointNotOnLine,
    StorageError,
    ValidationError,
    WorkbenchError,
)
from .esgk import (
    build_families,
    count_intersecting_pairs,
    line_to_pq,
    plane_census,
    rho_line,
    rotation_params,
    s_line,
    weighted_richpoint_sum,
)
from .exact import (
    Horizontal,
    NonHorizontal,
    OrLine2,
    Plane3,
    Pt2,
    Pt3,
    Relation,
    bisector,
    collinear_or_circle,
    line3,
    plane_through,
    pt2,
    pt3,
    rat,
    relate_lines3,
)
from .reguli import (
    Quadric,
    Side,
    SurfaceClass,
    circle_regulus,
    classify_quadric,
    line_family_constraints,
    line_regulus,
    psi_sample,
    quadric_contains_line,
    regulus_fit,
    rulings_partition,
)
from .stats import (
    PointSetPair,
    cs_lower_bound,
    distance_energy,
    distinct_distances,
    max_point_distances,
    translation_count,
)

__version__ = "0.1.0"

__all__ = [
    "ArcMultigraph",
    "CircleGrid",
    "ContainmentFailure",
    "DegeneracyError",
    "DegenerateFit",
    "DegenerateInput",
    "EmptyEnergy",
    "Horizontal",
    "HorizontalLine",
    "InconsistentPartition",
    "InputError",
    "InvalidParams",
    "IrrationalAngle",
    "NonHorizontal",
    "NotCoplanar",
    "NotSkew",
    "OrLine2",
    "ParallelLines",
    "Plane3",
    "PointNotOnLine",
    "PointSetPair",
    "Pt2",
    "Pt3",
    "QuadPt",
    "Quadric",
    "Relation",
    "Side",
    "StorageError",
    "SurfaceClass",
    "ValidationError",
    "WorkbenchError",
    "bisector",
    "bisector_pair_census",
    "bounds_table",
    "build_circles",
    "build_families",
    "build_multigraph",
    "census_bracket",
    "circle_pair_crossings",
    "circle_regulus",
    "classify_quadric",
    "collinear_or_circle",
    "count_intersecting_pairs",
    "crossing_bounds",
    "cs_lower_bound",
    "distance_energy",
    "distinct_distances",
    "edge_multiplicity_bisector_link",
    "elekes_distance_census",
    "elekes_grid",
    "line3",
    "line_family_constraints",
    "line_regulus",
    "line_to_pq",
    "max_point_distances",
    "orthogonal_pair",
    "plane_census",
    "plane_through",
    "psi_sample",
    "pt2",
    "pt3",
    "quadric_contains_line",
    "random_pair",
    "rat",
    "regulus_fit",
    "relate_lines3",
    "rho_line",
    "rich_lines",
    "rotation_params",
    "rulings_partition",
    "s_line",
    "szekely_report",
    "translation_count",
    "weighted_richpoint_sum",
]
