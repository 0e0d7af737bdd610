"""Deterministic instance generators: random cotrees, named graphs, small cographs.

Random choices come from splitmix64 so that a given :class:`GenConfig` yields
the same cotree everywhere.  The exact draw protocol:

* ``next_u64``: ``state += 0x9E3779B97F4A7C15``; then
  ``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``,
  ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``, ``z ^ (z >> 31)`` (all mod 2**64);
* ``next_float``: ``(next_u64() >> 11) / 2**53``;
* ``below(k)``: ``next_u64() % k``.

Internal nodes are created children-first; each draws its label right after
its children exist: JOIN iff ``next_float() < join_probability``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache

from .cotree import JOIN, UNION, Cotree, CotreeBuilder
from .graph import Graph

_MASK = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) / 9007199254740992.0

    def below(self, k: int) -> int:
        return self.next_u64() % k


class Shape(str, enum.Enum):
    BALANCED = "balanced"
    RANDOM = "random"
    CATERPILLAR = "caterpillar"


@dataclass(frozen=True)
class GenConfig:
    seed: int
    n_leaves: int
    join_probability: float = 0.5
    shape: Shape = Shape.RANDOM

    def __post_init__(self):
        if self.n_leaves < 1:
            raise ValueError("n_leaves must be at least 1")
        if not 0.0 <= self.join_probability <= 1.0:
            raise ValueError("join_probability must lie in [0, 1]")
        object.__setattr__(self, "shape", Shape(self.shape))


def random_cotree(cfg: GenConfig) -> Cotree:
    """A binary cotree with ``cfg.n_leaves`` leaves labelled ``0..n-1``.

    BALANCED splits leaf ranges at their midpoint, CATERPILLAR chains
    ``((0, 1), 2), ...``, RANDOM repeatedly merges two subtrees picked
    uniformly from a shrinking forest.
    """
    rng = SplitMix64(cfg.seed)
    p = cfg.join_probability
    b = CotreeBuilder()
    n = cfg.n_leaves

    def internal(left: int, right: int) -> int:
        return b.add(JOIN if rng.next_float() < p else UNION, (left, right))

    if cfg.shape is Shape.CATERPILLAR:
        acc = b.add_leaf(0)
        for v in range(1, n):
            acc = internal(acc, b.add_leaf(v))
    elif cfg.shape is Shape.BALANCED:
        # iterative postorder over [lo, hi) ranges
        done: list[int] = []
        stack = [(0, n, False)]
        while stack:
            lo, hi, expanded = stack.pop()
            if hi - lo == 1:
                done.append(b.add_leaf(lo))
            elif expanded:
                right = done.pop()
                left = done.pop()
                done.append(internal(left, right))
            else:
                mid = (lo + hi) // 2
                stack.append((lo, hi, True))
                stack.append((mid, hi, False))
                stack.append((lo, mid, False))
    else:
        forest = [b.add_leaf(v) for v in range(n)]
        while len(forest) > 1:
            i = rng.below(len(forest))
            j = rng.below(len(forest) - 1)
            if j >= i:
                j += 1
            node = internal(forest[i], forest[j])
            # drop the two merged roots, keep the rest in place
            hi_idx, lo_idx = max(i, j), min(i, j)
            forest[hi_idx] = forest[-1]
            forest.pop()
            forest[lo_idx] = node
    return b.build(validate=False)


def random_graph(rng: SplitMix64, n: int, p: float = 0.5) -> Graph:
    """Erdos-Renyi ``G(n, p)`` drawing one float per pair in lexicographic order."""
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.next_float() < p])


# -- named graphs ------------------------------------------------------------------


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star(k: int) -> Graph:
    """``K_{1,k}`` with center 0."""
    return complete_bipartite(1, k)


_FIXTURES = [
    (re.compile(r"^P4$"), lambda: path(4)),
    (re.compile(r"^C4$"), lambda: cycle(4)),
    (re.compile(r"^C5$"), lambda: cycle(5)),
    (re.compile(r"^2K2$"), lambda: Graph(4, [(0, 1), (2, 3)])),
    (re.compile(r"^K_?\{?(\d+),(\d+)\}?$"), lambda a, b: complete_bipartite(int(a), int(b))),
    (re.compile(r"^K_?(\d+)$"), lambda k: complete(int(k))),
    (re.compile(r"^star_(\d+)$"), lambda k: star(int(k))),
    (re.compile(r"^path_(\d+)$"), lambda k: path(int(k))),
    (re.compile(r"^cycle_(\d+)$"), lambda k: cycle(int(k))),
]


def fixture(name: str) -> Graph:
    """Named graph: ``P4``, ``C4``, ``C5``, ``2K2``, ``K_n``, ``K_m,n``, ``star_n``, ``path_n``, ``cycle_n``."""
    for pattern, make in _FIXTURES:
        m = pattern.match(name.strip())
        if m:
            return make(*m.groups())
    raise KeyError(f"unknown fixture {name!r}")


# -- exhaustive small cographs ---------------------------------------------------------


@lru_cache(maxsize=None)
def _rooted_shapes(n: int, kind: int) -> tuple:
    """Unlabelled cotree shapes on ``n >= 2`` leaves whose canonical root is ``kind``."""
    other = JOIN if kind == UNION else UNION
    items = []  # (size, shape) for every possible child, in a fixed total order
    for size in range(1, n):
        if size == 1:
            items.append((1, "L"))
        else:
            items.extend((size, s) for s in _rooted_shapes(size, other))
    out = []

    def rec(start: int, remaining: int, chosen: list):
        if remaining == 0:
            if len(chosen) >= 2:
                out.append((kind, tuple(chosen)))
            return
        for idx in range(start, len(items)):
            size, shape = items[idx]
            if size > remaining:
                continue
            chosen.append(shape)
            rec(idx, remaining - size, chosen)
            chosen.pop()

    rec(0, n, [])
    return tuple(out)


def cograph_shapes(n: int) -> tuple:
    if n == 1:
        return ("L",)
    return _rooted_shapes(n, UNION) + _rooted_shapes(n, JOIN)


def all_cographs(n: int) -> list[Cotree]:
    """One canonical cotree per isomorphism class of cographs on ``n`` vertices."""
    trees = []
    for shape in cograph_shapes(n):
        counter = iter(range(n))

        def label(s):
            if s == "L":
                return next(counter)
            kind, kids = s
            return ("union" if kind == UNION else "join", *(label(k) for k in kids))

        trees.append(Cotree.from_nested(label(shape)))
    return trees
