"""Matplotlib figures for benchmark reports."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .bench import RATIO_LIMIT, BenchRow  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "legend.fontsize": 8,
    "lines.linewidth": 1.2,
    "lines.markersize": 4,
    "savefig.dpi": 150,
}


def plot_bench(rows: Sequence[BenchRow], path: str, title: str | None = None) -> None:
    """Two panels: total time vs n (log-log) and ns per leaf vs n."""
    ns = [r.n for r in rows]
    with plt.rc_context(STYLE):
        fig, (ax_t, ax_p) = plt.subplots(1, 2, figsize=(7.0, 2.8))
        ax_t.loglog(ns, [r.mean_ns / 1e9 for r in rows], "o-", base=2)
        ax_t.set_xlabel("leaves n")
        ax_t.set_ylabel("phase I + II time [s]")
        ax_t.grid(True, which="both", alpha=0.3)

        per_leaf = [r.ns_per_leaf for r in rows]
        lo = min(per_leaf)
        ax_p.semilogx(ns, per_leaf, "s-", base=2, label="measured")
        ax_p.axhline(lo * RATIO_LIMIT, color="0.5", ls="--", label=f"{RATIO_LIMIT:g}x fastest")
        ax_p.set_ylim(0, max(max(per_leaf), lo * RATIO_LIMIT) * 1.1)
        ax_p.set_xlabel("leaves n")
        ax_p.set_ylabel("ns per leaf")
        ax_p.legend(frameon=False)
        ax_p.grid(True, which="both", alpha=0.3)
        if title:
            fig.suptitle(title)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
