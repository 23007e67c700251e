"""Distance-by-dimension figures for search reports.

Figures are built on the object-oriented matplotlib API, never pyplot,
so rendering stays headless-safe and leaves no global state behind.
"""

from __future__ import annotations

import os
from typing import Optional, Sequence, Union

from matplotlib.figure import Figure
from matplotlib.ticker import MaxNLocator

from .codes import CodeRecord


def parameter_profile_figure(
    records: Sequence[CodeRecord], title: Optional[str] = None
) -> Figure:
    """Scatter of minimum distance against dimension, with the
    Singleton bound d = n - k + 1 drawn as a guide."""
    points = [rec for rec in records if rec.d is not None]
    if not points:
        raise ValueError("nothing to plot: no record has a positive dimension")
    n = points[0].n
    fig = Figure(figsize=(6.4, 4.2))
    ax = fig.add_subplot()

    groups = {
        "closed under reversal": [rec for rec in points if rec.reversible],
        "not closed under reversal": [rec for rec in points if not rec.reversible],
    }
    markers = {"closed under reversal": "o", "not closed under reversal": "s"}
    for label, recs in groups.items():
        if not recs:
            continue
        ax.scatter(
            [rec.k for rec in recs],
            [rec.d for rec in recs],
            marker=markers[label],
            label=label,
            zorder=3,
        )
    ks = range(1, n + 1)
    ax.plot(ks, [n - k + 1 for k in ks], linestyle="--", linewidth=1, color="gray",
            label="Singleton bound")

    if title is None:
        first = points[0]
        title = f"{first.group} ({first.listing}, {first.ring}): distance by dimension"
    ax.set_title(title)
    ax.set_xlabel("dimension k")
    ax.set_ylabel("minimum distance d")
    ax.set_xlim(0, n + 1)
    ax.set_ylim(0, max(rec.d for rec in points) + 1)
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    ax.grid(True, linewidth=0.3, alpha=0.6)
    ax.legend(loc="upper right", fontsize="small")
    return fig


def save_parameter_profile(
    records: Sequence[CodeRecord],
    path: Union[str, os.PathLike],
    title: Optional[str] = None,
) -> None:
    """Render the profile to ``path``; the suffix picks the format."""
    fig = parameter_profile_figure(records, title=title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
