"""Simple undirected graphs, vertex colorings and the three coloring verifiers.

Vertices are the dense integers ``0..n-1``.  A coloring is a sequence ``phi``
with ``phi[v] >= 1`` the color of vertex ``v``.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int]
Coloring = tuple[int, ...]


class GraphError(ValueError):
    """Structurally invalid graph (self-loop, vertex out of range)."""


class ColoringDomainError(ValueError):
    """Coloring not defined on exactly the vertex set, or a color < 1."""


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``edges`` is a frozenset of ``(u, v)`` pairs with ``u < v``; ``adjacency[v]``
    is the sorted tuple of neighbors of ``v``.  Repeated pairs in the input
    collapse to one edge.
    """

    __slots__ = ("n", "edges", "adjacency", "_adjsets")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = frozenset(norm)
        self.adjacency = tuple(tuple(sorted(a)) for a in adj)
        self._adjsets = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjsets(self) -> tuple[frozenset[int], ...]:
        if self._adjsets is None:
            self._adjsets = tuple(frozenset(a) for a in self.adjacency)
        return self._adjsets

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjsets()[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def complement(self) -> Graph:
        return Graph(self.n, ((u, v) for u in range(self.n) for v in range(u + 1, self.n)
                              if not self.has_edge(u, v)))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabelled ``0..k-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(len(vertices), ((index[u], index[v]) for u, v in self.edges
                                     if u in index and v in index))

    def disjoint_union(self, other: Graph) -> Graph:
        k = self.n
        return Graph(k + other.n, list(self.edges) + [(u + k, v + k) for u, v in other.edges])

    def join(self, other: Graph) -> Graph:
        k = self.n
        cross = [(u, k + v) for u in range(k) for v in range(other.n)]
        return Graph(k + other.n, list(self.edges) + [(u + k, v + k) for u, v in other.edges] + cross)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


class ViolationKind(str, enum.Enum):
    EDGE_MONOCHROME = "EDGE_MONOCHROME"
    BICHROMATIC_CYCLE = "BICHROMATIC_CYCLE"
    BICOLORED_P4 = "BICOLORED_P4"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    witness: tuple[int, ...]

    def confirm(self, g: Graph, phi: Sequence[int]) -> bool:
        """Re-check the witness against ``g`` and ``phi``."""
        w = self.witness
        if len(set(w)) != len(w):
            return False
        if self.kind is ViolationKind.EDGE_MONOCHROME:
            return len(w) == 2 and g.has_edge(*w) and phi[w[0]] == phi[w[1]]
        if self.kind is ViolationKind.BICHROMATIC_CYCLE:
            closed = all(g.has_edge(w[i], w[(i + 1) % len(w)]) for i in range(len(w)))
            return len(w) >= 4 and closed and len({phi[v] for v in w}) == 2
        path = all(g.has_edge(w[i], w[i + 1]) for i in range(len(w) - 1))
        return len(w) == 4 and path and len({phi[v] for v in w}) == 2


def check_domain(g: Graph, phi: Sequence[int]) -> None:
    if len(phi) != g.n:
        raise ColoringDomainError(f"coloring has {len(phi)} entries, graph has {g.n} vertices")
    for v, c in enumerate(phi):
        if not isinstance(c, int) or c < 1:
            raise ColoringDomainError(f"vertex {v} has invalid color {c!r}")


def verify_proper(g: Graph, phi: Sequence[int]) -> Violation | None:
    """Return ``None`` if no edge is monochromatic, else the first such edge."""
    check_domain(g, phi)
    for u, v in g.sorted_edges():
        if phi[u] == phi[v]:
            return Violation(ViolationKind.EDGE_MONOCHROME, (u, v))
    return None


def _bicolor_groups(g: Graph, phi: Sequence[int]) -> list[list[Edge]]:
    groups: dict[tuple[int, int], list[Edge]] = defaultdict(list)
    for u, v in g.sorted_edges():
        a, b = phi[u], phi[v]
        groups[(a, b) if a < b else (b, a)].append((u, v))
    return [groups[key] for key in sorted(groups)]


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    # rotate to the smallest vertex, walk towards its smaller cycle-neighbor
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def verify_acyclic(g: Graph, phi: Sequence[int]) -> Violation | None:
    """Return ``None`` if every two color classes induce a forest.

    Improper colorings yield their ``EDGE_MONOCHROME`` violation.  Otherwise the
    edges are grouped by color pair and fed to a union-find per group; the
    first edge closing a cycle is extended to the bichromatic cycle through the
    already-built forest.
    """
    bad = verify_proper(g, phi)
    if bad is not None:
        return bad
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for group in _bicolor_groups(g, phi):
        forest: dict[int, list[int]] = defaultdict(list)
        for u, v in group:
            ru, rv = find(u), find(v)
            if ru == rv:
                return Violation(ViolationKind.BICHROMATIC_CYCLE,
                                 _canonical_cycle(_forest_path(forest, u, v)))
            parent[ru] = rv
            forest[u].append(v)
            forest[v].append(u)
        for u, v in group:
            parent[u] = u
            parent[v] = v
    return None


def _forest_path(forest: dict[int, list[int]], src: int, dst: int) -> list[int]:
    prev = {src: src}
    stack = [src]
    while stack:
        x = stack.pop()
        if x == dst:
            break
        for y in forest[x]:
            if y not in prev:
                prev[y] = x
                stack.append(y)
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    return path[::-1]


def verify_star(g: Graph, phi: Sequence[int]) -> Violation | None:
    """Return ``None`` if every two color classes induce a disjoint union of stars.

    A bicolored subgraph is a star forest iff none of its edges has both
    endpoints of bicolored degree at least two; such an edge ``uv`` extends to
    the bicolored path ``x-u-v-y``.
    """
    bad = verify_proper(g, phi)
    if bad is not None:
        return bad
    for group in _bicolor_groups(g, phi):
        nbrs: dict[int, list[int]] = defaultdict(list)
        for u, v in group:
            nbrs[u].append(v)
            nbrs[v].append(u)
        for u, v in group:
            if len(nbrs[u]) >= 2 and len(nbrs[v]) >= 2:
                x = min(w for w in nbrs[u] if w != v)
                y = min(w for w in nbrs[v] if w != u)
                # x != y: a common neighbour would need a third color
                return Violation(ViolationKind.BICOLORED_P4, (x, u, v, y))
    return None


def normalize_colors(phi: Sequence[int]) -> Coloring:
    """Relabel colors to ``1..k`` in order of first appearance."""
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(c, len(relabel) + 1) for c in phi)


def count_colors(phi: Sequence[int]) -> int:
    """Number of distinct colors; 0 for the empty coloring."""
    return len(set(phi))


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visiting order (ties to the smallest vertex).

    The reverse of this order is a perfect elimination ordering iff ``g`` is chordal.
    """
    n = g.n
    weight = [0] * n
    buckets: list[set[int]] = [set(range(n))]
    done = [False] * n
    order = []
    top = 0
    for _ in range(n):
        while top > 0 and not buckets[top]:
            top -= 1
        v = min(buckets[top])
        buckets[top].discard(v)
        done[v] = True
        order.append(v)
        for w in g.adjacency[v]:
            if not done[w]:
                buckets[weight[w]].discard(w)
                weight[w] += 1
                if weight[w] == len(buckets):
                    buckets.append(set())
                buckets[weight[w]].add(w)
                top = max(top, weight[w])
    return order


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    """Check that each vertex's later neighbours form a clique.

    Uses the standard test: the earliest later neighbour must be adjacent to
    all other later neighbours.
    """
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    adj = g.adjsets()
    for v in order:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        first = min(later, key=pos.__getitem__)
        if any(w != first and w not in adj[first] for w in later):
            return False
    return True


def perfect_elimination_ordering(g: Graph) -> list[int] | None:
    """A perfect elimination ordering of ``g``, or ``None`` if ``g`` is not chordal."""
    order = mcs_order(g)[::-1]
    return order if is_perfect_elimination_ordering(g, order) else None
