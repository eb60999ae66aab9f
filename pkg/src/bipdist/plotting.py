"""Static SVG figures.

The only place floats appear: coordinates are converted for drawing and
nothing drawn here is read back into a computation.  SVG output is made
byte-reproducible by fixing the id salt and dropping the date stamp.
"""

from __future__ import annotations

import math
import os
import tempfile

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Arc  # noqa: E402

from .constructions import CircleGrid  # noqa: E402
from .errors import StorageError  # noqa: E402

STYLE = {
    "svg.hashsalt": "bipdist",
    "svg.fonttype": "none",
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "figure.figsize": (5.0, 4.0),
}


def _coords(data):
    """Display coordinates of P and Q; grid points (i, sqrt j) become floats here."""
    if isinstance(data, CircleGrid):
        P = [(float(a), 0.0) for a in data.P]
        Q = [(float(q.i), math.sqrt(q.j)) for q in data.Q]
    else:
        P = [(float(p.x), float(p.y)) for p in data.P]
        Q = [(float(q.x), float(q.y)) for q in data.Q]
    return P, Q


def scatter_figure(data, title=None):
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        P, Q = _coords(data)
        ax.scatter([x for x, _ in Q], [y for _, y in Q], s=10, marker="o",
                   facecolors="none", edgecolors="tab:blue", label=f"Q (n={len(Q)})")
        ax.scatter([x for x, _ in P], [y for _, y in P], s=18, color="tab:red",
                   label=f"P (m={len(P)})")
        ax.set_aspect("equal", adjustable="datalim")
        ax.set_xlabel("x")
        ax.set_ylabel("y")
        ax.legend(loc="best", frameon=False)
        if title:
            ax.set_title(title)
    return fig


def arcs_figure(data, graph, title=None):
    """Circles that survived deletion, with each arc between consecutive points."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        P, Q = _coords(data)
        used = {e.circle for e in graph.edges}
        for ci in sorted(used):
            c = graph.circles[ci]
            cx, cy = P[c.center_index]
            r = math.sqrt(float(c.r2))
            angles = [math.degrees(math.atan2(Q[qi][1] - cy, Q[qi][0] - cx)) % 360.0
                      for qi in c.members]
            for k in range(len(angles)):
                a0, a1 = angles[k], angles[(k + 1) % len(angles)]
                if a1 <= a0:
                    a1 += 360.0
                ax.add_patch(Arc((cx, cy), 2 * r, 2 * r, theta1=a0, theta2=a1,
                                 lw=0.6, color="tab:gray"))
        ax.scatter([x for x, _ in Q], [y for _, y in Q], s=8, color="tab:blue", zorder=3)
        ax.scatter([x for x, _ in P], [y for _, y in P], s=14, color="tab:red", zorder=3)
        ax.set_aspect("equal", adjustable="datalim")
        ax.autoscale_view()
        ax.set_title(title or f"arc multigraph: {graph.post_deletion_edges} edges")
    return fig


def richpoint_figure(m_r: dict, title=None):
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        rs = sorted(m_r)
        ax.bar(rs, [m_r[r] for r in rs], color="tab:green")
        ax.set_xlabel("r")
        ax.set_ylabel("points on at least r lines")
        ax.set_title(title or "rich points")
    return fig


def save_svg(fig, path: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".svg")
        os.close(fd)
        with plt.rc_context(STYLE):
            fig.savefig(tmp, format="svg", metadata={"Date": None})
        os.replace(tmp, path)
    except OSError as exc:
        raise StorageError(f"cannot write {path}: {exc}") from exc
    finally:
        plt.close(fig)
