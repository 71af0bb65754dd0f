"""Figures written next to the verification report."""
from __future__ import annotations

from math import log10
from pathlib import Path
from typing import Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .verifier import VerificationReport  # noqa: E402

STATUS_COLORS = {
    "pass": "#4c9a2a",
    "deviation": "#e0a100",
    "probed": "#3b75af",
    "bound-checked": "#7f5fa8",
    "fail": "#c0392b",
}


def plot_index_bounds(genera: Iterable[int], path: str | Path) -> Path:
    genera = list(genera)
    series = {
        r"$g^{2g+1}$ (odd $g$ quotient)": [g ** (2 * g + 1) for g in genera],
        r"$(2g)^{2g}g$ (even $g$ quotient)": [(2 * g) ** (2 * g) * g for g in genera],
        r"$(2^g)^{2g+2}$ (bound, $m$ even)": [(2 ** g) ** (2 * g + 2) for g in genera],
        r"$(3^g)^{2g}$ (bound, $m$ odd)": [(3 ** g) ** (2 * g) for g in genera],
    }
    fig, ax = plt.subplots(figsize=(6, 4))
    for (label, values), style in zip(series.items(), ("o-", "s-", "o--", "s--")):
        ax.plot(genera, [log10(v) for v in values], style, label=label, ms=4)
    ax.set_xlabel("genus $g$")
    ax.set_ylabel(r"$\log_{10}$ index")
    ax.set_xticks(genera)
    ax.grid(alpha=0.3)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_check_summary(report: VerificationReport, path: str | Path) -> Path:
    ids: list[str] = []
    for c in report.checks:
        if c.id not in ids:
            ids.append(c.id)
    statuses = list(STATUS_COLORS)
    counts = {s: [0] * len(ids) for s in statuses}
    for c in report.checks:
        counts.setdefault(c.status, [0] * len(ids))[ids.index(c.id)] += 1
    fig, ax = plt.subplots(figsize=(7, 0.3 * len(ids) + 1.2))
    left = [0] * len(ids)
    for s in statuses:
        ax.barh(ids, counts[s], left=left, color=STATUS_COLORS[s], label=s)
        left = [a + b for a, b in zip(left, counts[s])]
    ax.invert_yaxis()
    ax.set_xlabel("checks")
    ax.legend(frameon=False, fontsize=8, loc="lower right")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path)
    plt.close(fig)
    return path


def write_figures(report: VerificationReport, directory: str | Path, bound_genera=range(2, 13)) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    return [
        plot_index_bounds(bound_genera, directory / "index_bounds.png"),
        plot_check_summary(report, directory / "check_summary.png"),
    ]
