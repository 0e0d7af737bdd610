"""Optimal acyclic (and star) coloring of a cograph from a binary cotree.

Phase I walks the cotree bottom-up and records, for every node, the number of
leaves below it and the acyclic chromatic number of the induced subgraph:

* union node: ``max(chi_left, chi_right)``
* join node: ``min(chi_left + size_right, chi_right + size_left)``

Phase II walks top-down with a running base color ``K``.  At a join node the
child ``a`` minimising ``size_a + chi_other`` is *saturated* (its leaves get the
distinct colors ``K .. K + size_a - 1``) and the other child is colored
recursively from ``K + size_a``.  Both phases are single loops over the arena.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cotree import LEAF, UNION, Cotree, recognize, to_binary
from .graph import Coloring, Graph


class NotBinaryError(ValueError):
    """Phase I and II need a binary cotree; call :func:`to_binary` first."""


class NotACographError(ValueError):
    """The input graph contains an induced P4, carried in ``certificate``."""

    def __init__(self, certificate: tuple[int, int, int, int]):
        super().__init__("graph is not a cograph; induced P4: %d %d %d %d" % certificate)
        self.certificate = certificate


@dataclass(frozen=True)
class NodeStats:
    size: int
    chi_a: int


class StatsTable:
    """Per-node ``(size, chi_a)`` for a cotree, stored as two parallel lists."""

    __slots__ = ("size", "chi_a")

    def __init__(self, size: list[int], chi_a: list[int]):
        self.size = size
        self.chi_a = chi_a

    def __len__(self) -> int:
        return len(self.size)

    def __getitem__(self, node: int) -> NodeStats:
        return NodeStats(self.size[node], self.chi_a[node])

    @property
    def root(self) -> NodeStats:
        return self[len(self.size) - 1]


def phase1_compute_ac(t: Cotree) -> StatsTable:
    kind, children = t.kind, t.children
    count = len(kind)
    size = [1] * count
    chi = [1] * count
    for v in range(count):
        k = kind[v]
        if k == LEAF:
            continue
        ch = children[v]
        if len(ch) != 2:
            raise NotBinaryError(f"node {v} has {len(ch)} children")
        l, r = ch
        sl = size[l]
        sr = size[r]
        size[v] = sl + sr
        if k == UNION:
            a = chi[l]
            b = chi[r]
            chi[v] = a if a > b else b
        else:
            a = chi[l] + sr
            b = chi[r] + sl
            chi[v] = a if a < b else b
    return StatsTable(size, chi)


def saturate(t: Cotree, tau: int, k: int, phi: list[int]) -> None:
    """Give the leaves below ``tau`` the colors ``k, k+1, ...`` left to right.

    ``phi`` uses 0 for "not yet colored"; hitting an already-colored vertex is
    an internal error.
    """
    color = k
    stack = [tau]
    kind, children, vertex = t.kind, t.children, t.vertex
    while stack:
        x = stack.pop()
        if kind[x] == LEAF:
            v = vertex[x]
            if phi[v]:
                raise AssertionError(f"vertex {v} colored twice")
            phi[v] = color
            color += 1
        else:
            stack.extend(reversed(children[x]))


def phase2_assign_colors(t: Cotree, stats: StatsTable) -> Coloring:
    if len(stats) != len(t):
        raise ValueError(f"stats cover {len(stats)} nodes, cotree has {len(t)}")
    kind, children, vertex = t.kind, t.children, t.vertex
    size, chi = stats.size, stats.chi_a
    count = len(kind)
    base = [0] * count
    # saturated[x]: x lies inside a subtree being saturated; its colors are
    # consecutive from base[x] in left-to-right leaf order, which is exactly
    # what saturate() produces
    saturated = [False] * count
    base[count - 1] = 1
    phi = [0] * t.n
    for v in range(count - 1, -1, -1):
        k = kind[v]
        K = base[v]
        if k == LEAF:
            phi[vertex[v]] = K
            continue
        ch = children[v]
        if len(ch) != 2:
            raise NotBinaryError(f"node {v} has {len(ch)} children")
        l, r = ch
        if saturated[v]:
            base[l] = K
            base[r] = K + size[l]
            saturated[l] = saturated[r] = True
        elif k == UNION:
            base[l] = base[r] = K
        elif size[l] + chi[r] <= size[r] + chi[l]:
            saturated[l] = True
            base[l] = K
            base[r] = K + size[l]
        else:
            saturated[r] = True
            base[r] = K
            base[l] = K + size[r]
    return tuple(phi)


def phase2_reference(t: Cotree, stats: StatsTable) -> Coloring:
    """Phase II as a literal top-down traversal calling :func:`saturate`.

    Slower than :func:`phase2_assign_colors` but mirrors the recursive
    formulation directly; the two must agree on every input.
    """
    if not t.is_binary():
        raise NotBinaryError("phase II needs a binary cotree")
    phi = [0] * t.n
    stack = [(t.root, 1)]
    while stack:
        tau, K = stack.pop()
        kind = t.kind[tau]
        if kind == LEAF:
            phi[t.vertex[tau]] = K
        elif kind == UNION:
            stack.extend((c, K) for c in t.children[tau])
        else:
            a, b = t.children[tau]
            if stats.size[a] + stats.chi_a[b] > stats.size[b] + stats.chi_a[a]:
                a, b = b, a
            saturate(t, a, K, phi)
            stack.append((b, K + stats.size[a]))
    return tuple(phi)


def color_cotree(t: Cotree) -> tuple[Cotree, StatsTable, Coloring]:
    """Run both phases on any cotree, binarising first if needed."""
    bt = to_binary(t)
    stats = phase1_compute_ac(bt)
    return bt, stats, phase2_assign_colors(bt, stats)


def color_cograph(g: Graph) -> tuple[Cotree, StatsTable, Coloring]:
    """Recognise ``g``, binarise its cotree and color it optimally.

    Raises :class:`NotACographError` with the P4 certificate otherwise.
    """
    res = recognize(g)
    if res.cotree is None:
        raise NotACographError(res.certificate)
    return color_cotree(res.cotree)

