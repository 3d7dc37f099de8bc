"""Matplotlib figure output for sweeps and generated paths."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .errors import RenderError
from .grid import CoveringPath
from .report import BoundsRange


def save_sweep_figure(rows: list[BoundsRange], out_path: str) -> None:
    """Plot upper and lower bounds across sweep rows, in row order."""
    xs = range(len(rows))
    labels = ["x".join(map(str, r.dims)) for r in rows]
    fig, ax = plt.subplots(figsize=(max(6.0, len(rows) * 0.35), 4.5))
    ax.plot(xs, [r.upper.value for r in rows], marker="o", label="upper")
    if all(r.lower is not None for r in rows):
        ax.plot(
            xs, [r.lower.value for r in rows], marker="s", label="lower (parity)"
        )
        ax.plot(
            xs,
            [r.lower_relaxed.value for r in rows],
            marker="^",
            label="lower (relaxed)",
        )
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("segments")
    ax.set_title("covering-path bounds")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def save_path_figure(path: CoveringPath, out_path: str) -> None:
    """Draw a 2d path flat, or a 3d path on projected axes."""
    k = path.spec.k
    if k not in (2, 3):
        raise RenderError(f"can only draw 2- or 3-dimensional paths, got k={k}")
    fig = plt.figure(figsize=(6.0, 6.0))
    grid = list(path.spec.points())
    if k == 2:
        ax = fig.add_subplot()
        ax.scatter([p[1] for p in grid], [p[0] for p in grid], s=12, color="black")
        ax.plot(
            [v[1] for v in path.vertices],
            [v[0] for v in path.vertices],
            color="crimson",
        )
        ax.invert_yaxis()
        ax.set_aspect("equal")
    else:
        ax = fig.add_subplot(projection="3d")
        ax.scatter(
            [p[0] for p in grid],
            [p[1] for p in grid],
            [p[2] for p in grid],
            s=8,
            color="black",
        )
        ax.plot(
            [v[0] for v in path.vertices],
            [v[1] for v in path.vertices],
            [v[2] for v in path.vertices],
            color="crimson",
        )
    ax.set_title("x".join(map(str, path.spec.dims)))
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
