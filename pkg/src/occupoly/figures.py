"""Figure data for the planar occupation-polytope picture.

For each weight vector the admissible natural-occupation region at d = 3
is a polygon in the (first, second) occupation plane; the third
coordinate is fixed by the trace.  Ground ensembles of a diagonal
non-interacting Hamiltonian supply one marked minimizer per weight
vector.  The CSV is the canonical data product; the PNG is a rendered
convenience report.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import numpy as np

from .fock import ProblemDims
from .manybody import (
    OneBodyOperator,
    TwoBodyInteraction,
    build_hamiltonian,
    gamma_min,
    natural_occupations,
    one_rdm,
)
from .polytope import WeightVector, generating_vertices

ORBIT_DIM_CAP = 6


def vertex_orbit(w: WeightVector, dims: ProblemDims):
    """All distinct occupation vectors whose sort is a generating vertex.

    Materializes the full permutation orbit, so it is capped to small
    orbital counts; the polytope is their convex hull."""
    if dims.d > ORBIT_DIM_CAP:
        raise ValueError(
            f"orbit materialization is capped at d <= {ORBIT_DIM_CAP}"
        )
    points = set()
    for vertex in generating_vertices(w, dims):
        points.update(permutations(vertex))
    return sorted(points, reverse=True)


def planar_hull(points):
    """Convex hull of exact 2-d points, counterclockwise boundary order,
    collinear middle points dropped (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class FigureSeries:
    """One weight vector's polygon and its non-interacting minimizer."""

    label: str
    weights: WeightVector
    boundary: tuple[tuple[Fraction, Fraction], ...]
    minimizer: tuple[float, float]
    minimizer_occupations: tuple[float, ...]


def _default_label(w: WeightVector) -> str:
    return ",".join(format(float(v), "g") for v in w.values)


def figure_series(
    w: WeightVector,
    *,
    N: int = 2,
    d: int = 3,
    h_diag=(0.0, 1.0, 2.0),
    label: str | None = None,
) -> FigureSeries:
    dims = ProblemDims(N=N, d=d, r=w.r)
    orbit = vertex_orbit(w, dims)
    boundary = tuple(
        (p[0], p[1]) for p in planar_hull([(p[0], p[1]) for p in orbit])
    )
    h = OneBodyOperator(np.diag(np.asarray(h_diag, dtype=float)))
    H = build_hamiltonian(h, TwoBodyInteraction.zero(d), dims)
    rdm = one_rdm(gamma_min(H, w), dims)
    occ = tuple(float(v) for v in natural_occupations(rdm))
    return FigureSeries(
        label=label if label is not None else _default_label(w),
        weights=w,
        boundary=boundary,
        minimizer=(occ[0], occ[1]),
        minimizer_occupations=occ,
    )


def figure_data(
    weight_list,
    *,
    N: int = 2,
    d: int = 3,
    h_diag=(0.0, 1.0, 2.0),
) -> list[FigureSeries]:
    return [figure_series(w, N=N, d=d, h_diag=h_diag) for w in weight_list]


def write_csv(series_list, path) -> None:
    """Rows: label, kind (vertex|minimizer), index on the boundary walk,
    float coordinates, and exact coordinates for vertices."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["label", "kind", "index", "lambda1", "lambda2",
             "lambda1_exact", "lambda2_exact"]
        )
        for series in series_list:
            for i, (x, y) in enumerate(series.boundary):
                writer.writerow(
                    [series.label, "vertex", i,
                     repr(float(x)), repr(float(y)), str(x), str(y)]
                )
            writer.writerow(
                [series.label, "minimizer", 0,
                 repr(series.minimizer[0]), repr(series.minimizer[1]),
                 "", ""]
            )


def render_png(series_list, path) -> None:
    """Filled polygons plus minimizer markers, one color per series."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    colors = plt.cm.viridis(np.linspace(0.15, 0.85, max(len(series_list), 1)))
    for series, color in zip(series_list, colors):
        ring = [(float(x), float(y)) for x, y in series.boundary]
        if ring:
            ring.append(ring[0])
            xs, ys = zip(*ring)
            ax.fill(xs, ys, alpha=0.25, color=color)
            ax.plot(xs, ys, color=color, linewidth=1.2,
                    label=f"w=({series.label})")
        ax.plot(*series.minimizer, marker="o", color=color,
                markeredgecolor="black", markersize=7)
    ax.set_xlabel("occupation 1")
    ax.set_ylabel("occupation 2")
    ax.set_aspect("equal")
    ax.legend(loc="lower left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)
