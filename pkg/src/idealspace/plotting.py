"""Figures for the command-line reports.

Backend is forced to Agg; figures are only ever written to files.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402
from matplotlib.patches import Patch  # noqa: E402

from .continuity import NOTIONS  # noqa: E402
from .verify import ImplicationMatrix, VerificationReport  # noqa: E402

NOTION_LABELS = {
    "continuous": "continuous",
    "weak": "weak",
    "theta": r"$\theta$",
    "faint": "faint",
    "tau_theta": r"$\tau_\theta$",
}

# 0 counterexample, 1 diagonal, 2 diagram arrow, 3 finite-scale extra arrow
_COLORS = ["#f4f4f4", "#bdbdbd", "#2b8cbe", "#fdae6b"]


def _style():
    plt.rcParams.update(
        {
            "font.size": 10,
            "axes.titlesize": 11,
            "savefig.dpi": 150,
            "svg.hashsalt": "idealspace",
        }
    )


def _save(fig, path):
    # blank metadata keeps the bytes stable between runs
    meta = {
        ".png": {"Software": None},
        ".svg": {"Creator": None, "Date": None},
        ".pdf": {"Creator": None, "Producer": None, "CreationDate": None},
    }.get(Path(path).suffix.lower())
    fig.savefig(path, bbox_inches="tight", metadata=meta)
    plt.close(fig)


def plot_matrix(m: ImplicationMatrix, path) -> None:
    """Grid of premise (rows) against conclusion (columns)."""
    _style()
    k = len(NOTIONS)
    grid = [[0] * k for _ in range(k)]
    for i, p in enumerate(NOTIONS):
        for j, q in enumerate(NOTIONS):
            e = m.entries[(p, q)]
            if i == j:
                grid[i][j] = 1
            elif e.holds:
                grid[i][j] = 2 if e.in_diagram else 3
    fig, ax = plt.subplots(figsize=(5.2, 4.6))
    ax.imshow(grid, cmap=ListedColormap(_COLORS), vmin=0, vmax=3)
    labels = [NOTION_LABELS[n] for n in NOTIONS]
    ax.set_xticks(range(k), labels, rotation=30, ha="right")
    ax.set_yticks(range(k), labels)
    ax.set_xlabel("conclusion")
    ax.set_ylabel("premise")
    for i, p in enumerate(NOTIONS):
        for j, q in enumerate(NOTIONS):
            e = m.entries[(p, q)]
            if i != j and e.witness is not None:
                nx, ny = e.witness.domain_space.n, e.witness.codomain_space.n
                ax.text(j, i, f"{nx}→{ny}", ha="center", va="center", fontsize=8)
            elif i != j:
                ax.text(j, i, "✓", ha="center", va="center", fontsize=10, color="white")
    b = m.bounds
    ax.set_title(f"implications, |X| ≤ {b.max_domain_points}, |Y| ≤ {b.max_codomain_points}")
    ax.legend(
        handles=[
            Patch(color=_COLORS[2], label="holds (diagram arrow)"),
            Patch(color=_COLORS[3], label="holds (finite scale only)"),
            Patch(color=_COLORS[0], label="counterexample |X|→|Y|"),
        ],
        loc="upper left",
        bbox_to_anchor=(1.02, 1.0),
        frameon=False,
    )
    _save(fig, path)


def plot_verification(reports: list[VerificationReport], path) -> None:
    """Instances checked per theorem, coloured by outcome."""
    _style()
    names = [r.theorem for r in reports]
    counts = [max(r.instances_checked, 1) for r in reports]
    colors = ["#d7301f" if r.outcome.violated else "#2b8cbe" for r in reports]
    fig, ax = plt.subplots(figsize=(7, 0.32 * len(reports) + 1.2))
    ax.barh(range(len(reports)), counts, color=colors)
    ax.set_yticks(range(len(reports)), names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("instances checked")
    ax.legend(
        handles=[Patch(color="#2b8cbe", label="no violation"), Patch(color="#d7301f", label="violated")],
        loc="lower right",
        frameon=False,
    )
    _save(fig, path)
