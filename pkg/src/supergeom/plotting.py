"""Matplotlib renderings of cohomology and Betti tables (used by ``--figures``)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _grid(ax, values, labels, xticks, yticks, title):
    ax.imshow(values, cmap="Blues", aspect="auto", origin="lower")
    for (y, x), text in labels.items():
        ax.text(x, y, text, ha="center", va="center", fontsize=8)
    ax.set_xticks(range(len(xticks)), [str(t) for t in xticks])
    ax.set_yticks(range(len(yticks)), [str(t) for t in yticks])
    ax.set_title(title)


def cohomology_figure(table, name: str):
    """Heat map of total dimensions h^i(M(r)), cells annotated with (even,odd)."""
    twists = table.twists
    rows = list(range(table.m + 1))
    values = [[table[i, r].total for r in twists] for i in rows]
    labels = {(i, k): str(table[i, r]) for i in rows for k, r in enumerate(twists)}
    fig, ax = plt.subplots(figsize=(max(4, 0.7 * len(twists)), 1.2 + 0.6 * len(rows)))
    _grid(ax, values, labels, twists, rows, f"cohomology of {name}")
    ax.set_xlabel("twist r")
    ax.set_ylabel("i")
    fig.tight_layout()
    return fig


def betti_figure(cells: dict, name: str):
    """Betti table in Macaulay2 layout: column i, row j - i."""
    cols = sorted({i for i, _ in cells})
    shifts = sorted({j - i for i, j in cells})
    values = [[0] * len(cols) for _ in shifts]
    labels = {}
    for (i, j), (e, o) in cells.items():
        y, x = shifts.index(j - i), cols.index(i)
        values[y][x] = e + o
        labels[(y, x)] = f"({e},{o})"
    fig, ax = plt.subplots(figsize=(1.5 + 0.9 * len(cols), 1.2 + 0.6 * len(shifts)))
    _grid(ax, values, labels, cols, shifts, f"Betti table of {name}")
    ax.set_xlabel("homological degree i")
    ax.set_ylabel("j - i")
    fig.tight_layout()
    return fig
