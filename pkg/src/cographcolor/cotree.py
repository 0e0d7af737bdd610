"""Cotrees: construction, conversion, graph realisation and cograph recognition.

A :class:`Cotree` is stored as a flat arena.  Node ids are assigned so that
every child id is smaller than its parent id and the root is the last node,
which lets bottom-up passes run as a plain loop over ``range(len(t))`` and
top-down passes as the reverse loop.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph


class NodeKind(enum.IntEnum):
    LEAF = 0
    UNION = 1
    JOIN = 2


LEAF, UNION, JOIN = NodeKind.LEAF, NodeKind.UNION, NodeKind.JOIN


class CotreeError(ValueError):
    """Structurally invalid cotree."""


@dataclass(frozen=True)
class CotreeNode:
    kind: NodeKind
    children: tuple[int, ...]
    parent: int | None
    vertex: int | None = None


class Cotree:
    """Immutable rooted cotree over vertices ``0..n-1``.

    Parameters
    ----------
    kind, children, vertex:
        Parallel per-node sequences.  ``vertex[i]`` is the graph vertex of leaf
        ``i`` and ``-1`` for internal nodes.  Children must have smaller ids than
        their parent, and the last node is the root.
    """

    __slots__ = ("kind", "children", "vertex", "_parent", "_leaf_of")

    def __init__(self, kind: Sequence[int], children: Sequence[Sequence[int]],
                 vertex: Sequence[int], validate: bool = True):
        self.kind = tuple(NodeKind(k) for k in kind) if validate else tuple(kind)
        self.children = tuple(tuple(c) for c in children)
        self.vertex = tuple(vertex)
        self._parent = None
        self._leaf_of = None
        if validate:
            self._validate()

    def _validate(self) -> None:
        size = len(self.kind)
        if size == 0:
            raise CotreeError("empty cotree")
        if not (len(self.children) == len(self.vertex) == size):
            raise CotreeError("per-node arrays differ in length")
        has_parent = [False] * size
        leaves = []
        for i in range(size):
            ch = self.children[i]
            if self.kind[i] == LEAF:
                if ch:
                    raise CotreeError(f"leaf {i} has children")
                leaves.append(self.vertex[i])
                continue
            if len(ch) < 2:
                raise CotreeError(f"internal node {i} has fewer than 2 children")
            if self.vertex[i] != -1:
                raise CotreeError(f"internal node {i} carries a vertex")
            for c in ch:
                if not 0 <= c < i:
                    raise CotreeError(f"child {c} of node {i} violates child-before-parent order")
                if has_parent[c]:
                    raise CotreeError(f"node {c} has two parents")
                has_parent[c] = True
        if has_parent[-1] or not all(has_parent[:-1]):
            raise CotreeError("arena is not a single rooted tree")
        if sorted(leaves) != list(range(len(leaves))):
            raise CotreeError("leaf vertices must be exactly 0..n-1 without duplicates")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def leaf(cls, v: int = 0) -> Cotree:
        return cls([LEAF], [()], [v], validate=False)

    @classmethod
    def from_nested(cls, nested) -> Cotree:
        """Build from nested tuples: an int is a leaf, ``("union"|"join", *subs)`` an internal node."""
        builder = CotreeBuilder()
        result: list[int] = []
        # explicit postorder so deep caterpillars do not hit the recursion limit
        work: list = [(nested, result)]
        while work:
            item, sink = work.pop()
            if item is _CLOSE:
                label, kids, parent_sink = sink
                parent_sink.append(builder.add(label, kids))
            elif isinstance(item, int):
                sink.append(builder.add_leaf(item))
            else:
                label, *subs = item
                frame = (label, [], sink)
                work.append((_CLOSE, frame))
                work.extend((sub, frame[1]) for sub in reversed(subs))
        return builder.build()

    # -- basic accessors ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.kind)

    @property
    def root(self) -> int:
        return len(self.kind) - 1

    @property
    def n(self) -> int:
        """Number of leaves, i.e. vertices of the realised graph."""
        return self.kind.count(LEAF)

    @property
    def parent(self) -> tuple[int | None, ...]:
        if self._parent is None:
            par: list[int | None] = [None] * len(self.kind)
            for i, ch in enumerate(self.children):
                for c in ch:
                    par[c] = i
            self._parent = tuple(par)
        return self._parent

    def node(self, i: int) -> CotreeNode:
        v = self.vertex[i]
        return CotreeNode(NodeKind(self.kind[i]), self.children[i], self.parent[i],
                          v if v >= 0 else None)

    def is_binary(self) -> bool:
        return all(len(c) == 2 for k, c in zip(self.kind, self.children) if k != LEAF)

    def leaf_node(self, v: int) -> int:
        """Node id of the leaf carrying vertex ``v``."""
        if self._leaf_of is None:
            leaf_of = [0] * self.n
            for i, x in enumerate(self.vertex):
                if x >= 0:
                    leaf_of[x] = i
            self._leaf_of = tuple(leaf_of)
        return self._leaf_of[v]

    def leaf_order(self) -> list[int]:
        """Vertices in left-to-right leaf order."""
        out = []
        stack = [self.root]
        while stack:
            i = stack.pop()
            if self.kind[i] == LEAF:
                out.append(self.vertex[i])
            else:
                stack.extend(reversed(self.children[i]))
        return out

    def leaf_ranges(self) -> tuple[list[int], list[int], list[int]]:
        """Left-to-right leaf order plus each node's half-open range into it."""
        order = self.leaf_order()
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        lo = [0] * len(self)
        hi = [0] * len(self)
        for i in range(len(self)):
            if self.kind[i] == LEAF:
                lo[i] = pos[self.vertex[i]]
                hi[i] = lo[i] + 1
            else:
                ch = self.children[i]
                lo[i] = min(lo[c] for c in ch)
                hi[i] = max(hi[c] for c in ch)
        return order, lo, hi

    def subtree_vertices(self, i: int) -> list[int]:
        out = []
        stack = [i]
        while stack:
            x = stack.pop()
            if self.kind[x] == LEAF:
                out.append(self.vertex[x])
            else:
                stack.extend(reversed(self.children[x]))
        return out

    def to_nested(self):
        """Inverse of :meth:`from_nested` (recursive; intended for small trees)."""
        def rec(i):
            if self.kind[i] == LEAF:
                return self.vertex[i]
            return ("union" if self.kind[i] == UNION else "join",
                    *(rec(c) for c in self.children[i]))
        return rec(self.root)

    def relabel(self, kinds: Sequence[int]) -> Cotree:
        """Same shape with new internal labels (valid when arity is unchanged)."""
        return Cotree(kinds, self.children, self.vertex, validate=False)

    def signature(self) -> tuple[tuple[int, int], ...]:
        """Ordered-tree fingerprint: ``(kind, vertex or arity)`` per node in postorder.

        Two cotrees compare equal iff they are the same ordered labelled tree,
        regardless of how their arenas are numbered.
        """
        out = []
        stack = [(self.root, False)]
        while stack:
            i, expanded = stack.pop()
            if self.kind[i] == LEAF:
                out.append((0, self.vertex[i]))
            elif expanded:
                out.append((int(self.kind[i]), len(self.children[i])))
            else:
                stack.append((i, True))
                stack.extend((c, False) for c in reversed(self.children[i]))
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cotree):
            return NotImplemented
        if len(self) != len(other):
            return False
        return self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        if len(self) <= 64:
            return f"Cotree({self.to_nested()!r})"
        return f"Cotree(<{self.n} leaves, {len(self)} nodes>)"


_CLOSE = object()


class CotreeBuilder:
    """Incremental arena builder; children must be added before their parent."""

    def __init__(self):
        self.kind: list[int] = []
        self.children: list[tuple[int, ...]] = []
        self.vertex: list[int] = []

    def add_leaf(self, v: int) -> int:
        self.kind.append(LEAF)
        self.children.append(())
        self.vertex.append(v)
        return len(self.kind) - 1

    def add(self, kind, children: Iterable[int]) -> int:
        if isinstance(kind, str):
            kind = {"union": UNION, "join": JOIN}[kind.lower()]
        self.kind.append(kind)
        self.children.append(tuple(children))
        self.vertex.append(-1)
        return len(self.kind) - 1

    def build(self, validate: bool = True) -> Cotree:
        return Cotree(self.kind, self.children, self.vertex, validate=validate)


# -- conversions ---------------------------------------------------------------


def graph_of(t: Cotree) -> Graph:
    """The cograph realised by ``t``: at each JOIN node, all pairs across children."""
    order, lo, hi = t.leaf_ranges()
    edges = []
    for i in range(len(t)):
        if t.kind[i] != JOIN:
            continue
        ch = t.children[i]
        spans = [order[lo[c]:hi[c]] for c in ch]
        for a in range(len(spans)):
            for b in range(a + 1, len(spans)):
                edges.extend((u, v) for u in spans[a] for v in spans[b])
    return Graph(t.n, edges)


def to_binary(t: Cotree) -> Cotree:
    """Replace every k-ary node by a left-leaning chain of k-1 binary nodes."""
    if t.is_binary():
        return t
    b = CotreeBuilder()
    new_id = [0] * len(t)
    for i in range(len(t)):
        if t.kind[i] == LEAF:
            new_id[i] = b.add_leaf(t.vertex[i])
            continue
        ch = [new_id[c] for c in t.children[i]]
        acc = b.add(t.kind[i], (ch[0], ch[1]))
        for c in ch[2:]:
            acc = b.add(t.kind[i], (acc, c))
        new_id[i] = acc
    return b.build(validate=False)


def to_canonical(t: Cotree) -> Cotree:
    """Merge same-kind parent/child pairs and order children deterministically.

    Children are sorted by ``(leaf count, kind, smallest vertex in subtree)``,
    so two cotrees of the same labelled cograph produce equal results.
    """
    size = len(t)
    flat: list[list[int]] = [[] for _ in range(size)]
    count = [0] * size
    minv = [0] * size
    for i in range(size):
        if t.kind[i] == LEAF:
            count[i] = 1
            minv[i] = t.vertex[i]
            continue
        kids = flat[i]
        for c in t.children[i]:
            if t.kind[c] == t.kind[i]:
                kids.extend(flat[c])
            else:
                kids.append(c)
        count[i] = sum(count[c] for c in t.children[i])
        minv[i] = min(minv[c] for c in t.children[i])
    for i in range(size):
        flat[i].sort(key=lambda c: (count[c], int(t.kind[c]), minv[c]))

    b = CotreeBuilder()
    # postorder emission over the flattened child lists
    new_id: dict[int, int] = {}
    stack = [(t.root, False)]
    while stack:
        i, expanded = stack.pop()
        if t.kind[i] == LEAF:
            new_id[i] = b.add_leaf(t.vertex[i])
        elif expanded:
            new_id[i] = b.add(t.kind[i], (new_id[c] for c in flat[i]))
        else:
            stack.append((i, True))
            stack.extend((c, False) for c in reversed(flat[i]))
    return b.build(validate=False)


def is_skew(t: Cotree) -> bool:
    """True iff no JOIN node has two children whose subtrees contain a UNION node."""
    has_union = [False] * len(t)
    for i in range(len(t)):
        kind = t.kind[i]
        if kind == LEAF:
            continue
        flagged = sum(1 for c in t.children[i] if has_union[c])
        if kind == JOIN and flagged > 1:
            return False
        has_union[i] = kind == UNION or flagged > 0
    return True


# -- recognition ---------------------------------------------------------------


@dataclass(frozen=True)
class RecognitionResult:
    cotree: Cotree | None = None
    certificate: tuple[int, int, int, int] | None = None

    @property
    def is_cograph(self) -> bool:
        return self.cotree is not None


def is_induced_p4(g: Graph, quad: Sequence[int]) -> bool:
    a, b, c, d = quad
    if len({a, b, c, d}) != 4:
        return False
    h = g.has_edge
    return (h(a, b) and h(b, c) and h(c, d)
            and not h(a, c) and not h(a, d) and not h(b, d))


def _find_p4_within(adj: Sequence[frozenset[int]], vertices: Sequence[int]) -> tuple[int, int, int, int] | None:
    inside = set(vertices)
    for b in sorted(vertices):
        nb = adj[b] & inside
        for c in sorted(nb):
            if c < b:
                continue
            nc = adj[c] & inside
            for first, second, n1, n2 in ((b, c, nb, nc), (c, b, nc, nb)):
                ends_a = sorted(n1 - n2 - {second})
                if not ends_a:
                    continue
                ends_d = sorted(n2 - n1 - {first})
                for a in ends_a:
                    for d in ends_d:
                        if d not in adj[a]:
                            return (a, first, second, d)
    return None


def find_p4(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced path ``a-b-c-d`` in ``g``, or ``None`` if ``g`` is P4-free.

    Scans middle edges ``bc`` in lexicographic order and looks for ``a`` adjacent
    to ``b`` only and ``d`` adjacent to ``c`` only, with ``a``, ``d`` non-adjacent.
    """
    return _find_p4_within(g.adjsets(), range(g.n))


def _components(adj: Sequence[frozenset[int]], vertices: Sequence[int]) -> list[list[int]]:
    inside = set(vertices)
    seen: set[int] = set()
    comps = []
    for s in vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            for w in adj[stack.pop()]:
                if w in inside and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _co_components(adj: Sequence[frozenset[int]], vertices: Sequence[int]) -> list[list[int]]:
    # BFS in the complement: each step keeps only the unvisited vertices that
    # ARE neighbours of x, so the work is O(|S| + edges inside S)
    unvisited = set(vertices)
    comps = []
    for s in vertices:
        if s not in unvisited:
            continue
        unvisited.discard(s)
        comp = [s]
        queue = [s]
        while queue and unvisited:
            x = queue.pop()
            ax = adj[x]
            fresh = [u for u in unvisited if u not in ax]
            if fresh:
                unvisited.difference_update(fresh)
                comp.extend(fresh)
                queue.extend(fresh)
        comps.append(sorted(comp))
    return comps


def recognize(g: Graph) -> RecognitionResult:
    """Decide whether ``g`` is a cograph.

    Returns a cotree (alternating labels, children ordered by smallest vertex)
    or an induced-P4 certificate.  Decomposes by connected components and
    co-components; worst case ``O(n (n + m))``.
    """
    if g.n == 0:
        raise CotreeError("cotrees need at least one vertex")
    adj = g.adjsets()
    b = CotreeBuilder()
    result: list[int] = []
    # a frame is (kind, child ids so far, parent's child list)
    stack: list = [(list(range(g.n)), result)]
    while stack:
        verts, sink = stack.pop()
        if verts is _CLOSE:
            kind, kids, parent_sink = sink
            parent_sink.append(b.add(kind, kids))
            continue
        if len(verts) == 1:
            sink.append(b.add_leaf(verts[0]))
            continue
        parts = _components(adj, verts)
        kind = UNION
        if len(parts) == 1:
            parts = _co_components(adj, verts)
            kind = JOIN
            if len(parts) == 1:
                quad = _find_p4_within(adj, verts)
                assert quad is not None, "prime graph without induced P4"
                return RecognitionResult(certificate=quad)
        frame = (kind, [], sink)
        stack.append((_CLOSE, frame))
        stack.extend((part, frame[1]) for part in reversed(parts))
    return RecognitionResult(cotree=b.build(validate=False))
