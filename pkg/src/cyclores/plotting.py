"""Figures for batch classification tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .records import OutputRecord  # noqa: E402


def plot_index_classes(records: list[OutputRecord], path: str, title: str | None = None) -> None:
    """Heat map of ind_class over (p, D); cells where classify and the oracle
    disagree are crossed out, uncovered cells are blank."""
    ps = sorted({r.p for r in records})
    ds = sorted({r.D for r in records})
    grid = np.full((len(ps), len(ds)), np.nan)
    row = {p: i for i, p in enumerate(ps)}
    col = {d: j for j, d in enumerate(ds)}
    bad = []
    for r in records:
        if r.ind_class is not None:
            grid[row[r.p], col[r.D]] = r.ind_class
        if not r.match:
            bad.append((col[r.D], row[r.p]))
    l = records[0].l if records else 3

    fig, ax = plt.subplots(figsize=(max(4, 0.3 * len(ds) + 2), max(3, 0.2 * len(ps) + 1.5)))
    cmap = plt.get_cmap("viridis", l)
    im = ax.imshow(grid, aspect="auto", cmap=cmap, vmin=-0.5, vmax=l - 0.5, interpolation="nearest")
    if bad:
        xs, ys = zip(*bad)
        ax.scatter(xs, ys, marker="x", color="red", s=30, label="mismatch")
        ax.legend(loc="upper right", fontsize=8)
    ax.set_xticks(range(len(ds)))
    ax.set_xticklabels(ds, fontsize=7, rotation=90)
    step = max(1, len(ps) // 25)
    ax.set_yticks(range(0, len(ps), step))
    ax.set_yticklabels(ps[::step], fontsize=7)
    ax.set_xlabel("D")
    ax.set_ylabel("p")
    ax.set_title(title or f"index class of D mod {l}")
    cbar = fig.colorbar(im, ax=ax, ticks=range(l))
    cbar.set_label("Ind(D) mod l")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
