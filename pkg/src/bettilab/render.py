"""Matplotlib renderings of Betti diagrams and diagram shapes.

Figures use the same layout as the text tables: column i across, row j-i
down starting at 2, one annotated cell per nonzero entry.  Everything is
rendered off-screen (Agg) and written to files next to the delimited output.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .hochster import BettiDiagram, DiagramShape, regularity, projective_dimension


def betti_figure(diagram: BettiDiagram, title: str | None = None):
    """Annotated table of the diagram; cells shaded by log-scaled value."""
    if diagram.is_zero():
        fig, ax = plt.subplots(figsize=(3, 2))
        ax.text(0.5, 0.5, "zero ideal", ha="center", va="center")
        ax.set_axis_off()
        return fig
    cols = projective_dimension(diagram) + 1
    rows = regularity(diagram) - 1
    grid = np.zeros((rows, cols))
    for (i, j), v in diagram.entries:
        grid[j - i - 2, i] = v
    shade = np.where(grid > 0, np.log1p(grid), np.nan)

    fig, ax = plt.subplots(figsize=(max(3.5, 0.55 * cols + 1.2), max(2.2, 0.55 * rows + 1.2)))
    ax.imshow(shade, cmap="YlOrBr", aspect="equal", vmin=0)
    for r in range(rows):
        for c in range(cols):
            v = int(grid[r, c])
            if v:
                ax.text(c, r, str(v), ha="center", va="center", fontsize=8)
    ax.set_xticks(range(cols))
    ax.set_yticks(range(rows))
    ax.set_yticklabels([str(r + 2) for r in range(rows)])
    ax.set_xlabel("column i")
    ax.set_ylabel("row j - i")
    ax.set_xticks(np.arange(cols + 1) - 0.5, minor=True)
    ax.set_yticks(np.arange(rows + 1) - 0.5, minor=True)
    ax.grid(which="minor", color="0.85", linewidth=0.6)
    ax.tick_params(which="minor", length=0)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    return fig


def shape_overlay_figure(engine: DiagramShape, predicted: DiagramShape,
                         title: str | None = None):
    """Engine support against a predicted support, disagreements highlighted."""
    both = engine.support & predicted.support
    extra = engine.support - predicted.support
    missing = predicted.support - engine.support
    fig, ax = plt.subplots(figsize=(5, 3.2))
    for cells, color, label in (
        (both, "0.55", "both"),
        (extra, "tab:red", "engine only"),
        (missing, "tab:blue", "predicted only"),
    ):
        if cells:
            xs, ys = zip(*sorted(cells))
            ax.scatter(xs, ys, marker="s", s=70, color=color, label=label)
    ax.invert_yaxis()
    ax.set_xlabel("column i")
    ax.set_ylabel("row j - i")
    ax.legend(loc="best", fontsize=8)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    return fig


def save_figure(fig, path, dpi: int = 150) -> None:
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
