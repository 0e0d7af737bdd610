"""Timing harness for the two coloring phases on generated cotrees."""

from __future__ import annotations

import gc
import time
from dataclasses import dataclass
from typing import Sequence

from .coloring import phase1_compute_ac, phase2_assign_colors
from .gen import GenConfig, Shape, random_cotree

RATIO_LIMIT = 3.0
LARGEST_LIMIT_S = 5.0
DEFAULT_SIZES = tuple(2 ** k for k in range(16, 21))


@dataclass(frozen=True)
class BenchRow:
    n: int
    mean_ns: float

    @property
    def ns_per_leaf(self) -> float:
        return self.mean_ns / self.n


@dataclass(frozen=True)
class BenchVerdict:
    ratio: float
    ratio_ok: bool
    largest_s: float
    largest_ok: bool


def time_phases(tree, repeats: int) -> float:
    """Mean wall-clock nanoseconds of phase I + phase II, generation excluded."""
    total = 0
    for _ in range(repeats):
        gc.collect()
        was_enabled = gc.isenabled()
        gc.disable()
        try:
            start = time.perf_counter_ns()
            stats = phase1_compute_ac(tree)
            phase2_assign_colors(tree, stats)
            total += time.perf_counter_ns() - start
        finally:
            if was_enabled:
                gc.enable()
    return total / repeats


def run_bench(sizes: Sequence[int] = DEFAULT_SIZES, shape: Shape = Shape.BALANCED,
              repeats: int = 3, seed: int = 1, join_probability: float = 0.5) -> list[BenchRow]:
    rows = []
    for n in sizes:
        tree = random_cotree(GenConfig(seed, n, join_probability, shape))
        rows.append(BenchRow(n, time_phases(tree, repeats)))
    return rows


def verdict(rows: Sequence[BenchRow]) -> BenchVerdict:
    per_leaf = [r.ns_per_leaf for r in rows]
    ratio = max(per_leaf) / min(per_leaf)
    largest = max(rows, key=lambda r: r.n)
    largest_s = largest.mean_ns / 1e9
    return BenchVerdict(ratio, ratio <= RATIO_LIMIT, largest_s, largest_s <= LARGEST_LIMIT_S)


def format_csv(rows: Sequence[BenchRow]) -> str:
    lines = ["n,mean_ns,ns_per_leaf"]
    lines.extend(f"{r.n},{r.mean_ns:.0f},{r.ns_per_leaf:.2f}" for r in rows)
    v = verdict(rows)
    lines.append(f"# ns_per_leaf max/min = {v.ratio:.3f} (limit {RATIO_LIMIT:g}) "
                 f"{'PASS' if v.ratio_ok else 'FAIL'}")
    lines.append(f"# n = {max(r.n for r in rows)} took {v.largest_s:.3f} s "
                 f"(limit {LARGEST_LIMIT_S:g} s) {'PASS' if v.largest_ok else 'FAIL'}")
    return "\n".join(lines) + "\n"
