"""Matplotlib renderings: a schematic of a diagram and a verification
grid summary.  Import of matplotlib is deferred so that the core library
works without it; the Agg backend keeps rendering headless."""

from __future__ import annotations

import math
from typing import Sequence

from .diagram import LOWER, UPPER, ArcKind, Diagram, VertexId

_ARC_COLORS = {
    ArcKind.UPPER_BELT: "tab:blue",
    ArcKind.LOWER_BELT: "tab:orange",
    ArcKind.DIAGONAL: "tab:green",
    ArcKind.VERTICAL: "tab:red",
}


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _vertex_xy(diagram: Diagram, vertex: VertexId) -> tuple[float, float]:
    d = diagram.params.d
    angle = 2 * math.pi * vertex.position / d
    radius = 1.0
    cx = 3.0 * vertex.cycle
    cy = 2.0 if vertex.tier == UPPER else -2.0
    return (cx + radius * math.cos(angle), cy + radius * math.sin(angle))


def render_diagram(diagram: Diagram, path: str) -> str:
    """Draw cycles as circles, vertices as dots, arcs as colored chords,
    and the vertex identification as dotted gray links."""
    plt = _pyplot()
    params = diagram.params
    fig, ax = plt.subplots(figsize=(3 + 2.5 * params.n, 6))
    for tier in (UPPER, LOWER):
        for i in range(params.n):
            cx = 3.0 * i
            cy = 2.0 if tier == UPPER else -2.0
            ax.add_patch(plt.Circle((cx, cy), 1.0, fill=False, color="lightgray"))
            ax.annotate(f"{tier} {i}", (cx, cy), ha="center", fontsize=8, color="gray")
    for vertex in diagram.vertices():
        x, y = _vertex_xy(diagram, vertex)
        ax.plot([x], [y], marker="o", markersize=2, color="black")
    for arc in diagram.arcs:
        (x0, y0), (x1, y1) = _vertex_xy(diagram, arc.start), _vertex_xy(diagram, arc.end)
        ax.plot([x0, x1], [y0, y1], color=_ARC_COLORS[arc.kind], linewidth=1.0)
    if 2 * params.n * params.d <= 120:
        for vertex in diagram.vertices():
            if vertex.tier != UPPER:
                continue
            (x0, y0) = _vertex_xy(diagram, vertex)
            (x1, y1) = _vertex_xy(diagram, diagram.partner(vertex))
            ax.plot([x0, x1], [y0, y1], color="gray", linewidth=0.4,
                    linestyle=":", alpha=0.6)
    handles = [
        plt.Line2D([0], [0], color=color, label=kind.value)
        for kind, color in _ARC_COLORS.items()
    ]
    ax.legend(handles=handles, fontsize=7, loc="upper right")
    ax.set_title(str(params))
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def render_verification_grid(reports: Sequence[dict], path: str) -> str:
    """One cell per (p, m) report, green for pass and red for fail,
    annotated with the covering-homology agreement count."""
    plt = _pyplot()
    if not reports:
        raise ValueError("no reports to render")
    p_values = sorted({rep["family"]["p"] for rep in reports})
    m_values = sorted({rep["family"]["m"] for rep in reports})
    sign = reports[0]["family"]["sign"]
    fig, ax = plt.subplots(
        figsize=(1.6 * len(p_values) + 2, 1.2 * len(m_values) + 2)
    )
    for rep in reports:
        col = p_values.index(rep["family"]["p"])
        row = m_values.index(rep["family"]["m"])
        passed = rep["verdict"] == "pass"
        color = "#b7e0b0" if passed else "#e8a0a0"
        ax.add_patch(plt.Rectangle((col, row), 1, 1, color=color, ec="white"))
        matches = sum(1 for cov in rep["coverings"] if cov.get("match"))
        ax.annotate(
            f"{rep['family']['knot']}\n{rep['verdict']} ({matches}/{len(rep['coverings'])} n)",
            (col + 0.5, row + 0.5), ha="center", va="center", fontsize=7,
        )
    ax.set_xticks([i + 0.5 for i in range(len(p_values))], [str(p) for p in p_values])
    ax.set_yticks([i + 0.5 for i in range(len(m_values))], [str(m) for m in m_values])
    ax.set_xlim(0, len(p_values))
    ax.set_ylim(0, len(m_values))
    ax.set_xlabel("p")
    ax.set_ylabel("m")
    ax.set_title(f"family verification, sign {sign}")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
