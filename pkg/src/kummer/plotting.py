"""Figures for scan reports.  Uses the object API only; no pyplot state."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from kummer.scanner import RegularityReport


def scan_figure(reports: Sequence[RegularityReport]) -> Figure:
    """log10 h^-(p) per prime (irregular primes highlighted) and the irregular indices k/p."""
    fig = Figure(figsize=(7.0, 6.0), constrained_layout=True)
    FigureCanvasAgg(fig)
    top, bottom = fig.subplots(2, 1, sharex=True, gridspec_kw={"height_ratios": [3, 2]})

    ps = [r.p for r in reports]
    logs = [math.log10(int(r.h_minus)) for r in reports]
    irr = [r for r in reports if not r.regular]

    top.plot(ps, logs, color="0.4", marker="o", markersize=3, linewidth=0.8, label="regular")
    top.scatter(
        [r.p for r in irr],
        [math.log10(int(r.h_minus)) for r in irr],
        color="tab:red",
        zorder=3,
        label="irregular",
    )
    for r in irr:
        top.annotate(str(r.p), (r.p, math.log10(int(r.h_minus))), textcoords="offset points", xytext=(4, -10))
    top.set_ylabel(r"$\log_{10} h^-(p)$")
    top.legend(loc="upper left", frameon=False)

    ks = [(pair[0], pair[1] / pair[0]) for r in irr for pair in r.irregular_pairs]
    if ks:
        bottom.scatter(*zip(*ks), color="tab:red", marker="s")
    bottom.set_ylim(0, 1)
    bottom.set_ylabel("k / p")
    bottom.set_xlabel("p")
    for ax in (top, bottom):
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
    return fig


def save_scan_figure(reports: Sequence[RegularityReport], path: str | Path) -> Path:
    path = Path(path)
    scan_figure(reports).savefig(path, dpi=150)
    return path
