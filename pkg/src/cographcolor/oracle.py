"""Exhaustive reference computations for small graphs.

Everything here is exponential and guarded by an :class:`OracleBudget`;
inputs over budget raise :class:`BudgetExceeded` instead of being truncated.
These routines share no code with the cotree algorithms they are used to check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import (Coloring, ColoringDomainError, Graph, perfect_elimination_ordering,
                    verify_acyclic, verify_proper, verify_star)
from .triangulate import Triangulation


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int
    max_colorings: int = 50_000_000

    def check(self, g: Graph, what: str) -> None:
        if g.n > self.max_vertices:
            raise BudgetExceeded(f"{what}: n={g.n} exceeds budget of {self.max_vertices} vertices")


COLORING_BUDGET = OracleBudget(9)
TREEWIDTH_BUDGET = OracleBudget(8)
PATHWIDTH_BUDGET = OracleBudget(7)
TRIANGULATION_BUDGET = OracleBudget(7)


# -- colorings -------------------------------------------------------------------


def proper_colorings(g: Graph, max_colors: int) -> Iterator[Coloring]:
    """All proper colorings with at most ``max_colors`` colors, one per partition.

    Colorings are restricted-growth strings (vertex 0 gets color 1, each later
    vertex at most one more than the largest color so far), so relabellings of
    the same partition are not repeated.
    """
    n = g.n
    if n == 0:
        yield ()
        return
    earlier = [[w for w in g.adjacency[v] if w < v] for v in range(n)]
    phi = [0] * n

    def rec(v: int, used: int) -> Iterator[Coloring]:
        if v == n:
            yield tuple(phi)
            return
        for c in range(1, min(used + 1, max_colors) + 1):
            if all(phi[w] != c for w in earlier[v]):
                phi[v] = c
                yield from rec(v + 1, max(used, c))
        phi[v] = 0

    yield from rec(0, 0)


def _min_colors(g: Graph, ok, budget: OracleBudget, what: str) -> int:
    budget.check(g, what)
    if g.n == 0:
        return 0
    seen = 0
    for k in range(1, g.n + 1):
        for phi in proper_colorings(g, k):
            seen += 1
            if seen > budget.max_colorings:
                raise BudgetExceeded(f"{what}: more than {budget.max_colorings} colorings")
            if max(phi) == k and ok(g, phi) is None:
                return k
    raise AssertionError("the all-distinct coloring always qualifies")


def oracle_chi(g: Graph, budget: OracleBudget = COLORING_BUDGET) -> int:
    """Ordinary chromatic number."""
    return _min_colors(g, verify_proper, budget, "chromatic number")


def oracle_chi_a(g: Graph, budget: OracleBudget = COLORING_BUDGET) -> int:
    return _min_colors(g, verify_acyclic, budget, "acyclic chromatic number")


def oracle_chi_s(g: Graph, budget: OracleBudget = COLORING_BUDGET) -> int:
    return _min_colors(g, verify_star, budget, "star chromatic number")


def simple_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every simple cycle (length >= 3) once, starting at its smallest vertex."""
    adj = g.adjacency
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def rec(x: int) -> Iterator[tuple[int, ...]]:
            for y in adj[x]:
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif y > s and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    yield from rec(y)
                    path.pop()
                    on_path.discard(y)

        yield from rec(s)


def four_vertex_paths(g: Graph) -> Iterator[tuple[int, int, int, int]]:
    """Every path on four distinct vertices (not necessarily induced), once."""
    adj = g.adjacency
    for b in range(g.n):
        for c in adj[b]:
            for a in adj[b]:
                if a == c:
                    continue
                for d in adj[c]:
                    if d != b and d != a and (a, b) < (d, c):
                        yield (a, b, c, d)


def bruteforce_is_acyclic(g: Graph, phi: Sequence[int]) -> bool:
    """Proper, and every cycle sees at least three colors."""
    if any(phi[u] == phi[v] for u, v in g.edges):
        return False
    return all(len({phi[v] for v in cyc}) >= 3 for cyc in simple_cycles(g))


def bruteforce_is_star(g: Graph, phi: Sequence[int]) -> bool:
    """Proper, and every path on four vertices sees at least three colors."""
    if any(phi[u] == phi[v] for u, v in g.edges):
        return False
    return all(len({phi[v] for v in p}) >= 3 for p in four_vertex_paths(g))


# -- widths ----------------------------------------------------------------------


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]


def _fill_neighbourhood(nbr: Sequence[int], eliminated: int, v: int) -> int:
    """Vertices outside ``eliminated | {v}`` reached from ``v`` through ``eliminated``.

    These are exactly the neighbours of ``v`` in the elimination graph once the
    set ``eliminated`` has been removed, whatever order that happened in.
    """
    seen = 1 << v
    frontier = 1 << v
    reached = 0
    while frontier:
        x = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        nb = nbr[x] & ~seen
        seen |= nb
        reached |= nb & ~eliminated
        frontier |= nb & eliminated
    return reached


def oracle_treewidth(g: Graph, budget: OracleBudget = TREEWIDTH_BUDGET) -> int:
    """Exact treewidth by dynamic programming over eliminated vertex sets.

    ``best[S]`` is the least possible maximum fill-neighbourhood size over all
    ways of eliminating ``S`` first.
    """
    budget.check(g, "treewidth")
    n = g.n
    if n == 0:
        return -1
    nbr = _masks(g)
    full = (1 << n) - 1
    best = [n] * (1 << n)
    best[0] = -1
    for s in range(1 << n):
        cur = best[s]
        if cur == n:
            continue
        rest = full & ~s
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            width = max(cur, bin(_fill_neighbourhood(nbr, s, v)).count("1"))
            t = s | (1 << v)
            if width < best[t]:
                best[t] = width
    return best[full]


def oracle_pathwidth(g: Graph, budget: OracleBudget = PATHWIDTH_BUDGET) -> int:
    """Exact pathwidth as the vertex separation number.

    Over all linear orders, minimise the largest number of vertices in a prefix
    that still have a neighbour after it.
    """
    budget.check(g, "pathwidth")
    n = g.n
    if n == 0:
        return -1
    nbr = _masks(g)
    full = (1 << n) - 1
    INF = n + 1
    best = [INF] * (1 << n)
    best[0] = 0
    for s in range(1, 1 << n):
        boundary = sum(1 for v in range(n) if s >> v & 1 and nbr[v] & ~s)
        prev = min(best[s & ~(1 << v)] for v in range(n) if s >> v & 1)
        best[s] = max(prev, boundary)
    return best[full]


def oracle_is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def has_long_induced_cycle(g: Graph, max_vertices: int = 10) -> bool:
    """Subset scan for an induced cycle on four or more vertices."""
    if g.n > max_vertices:
        raise BudgetExceeded(f"induced cycle scan: n={g.n} exceeds {max_vertices}")
    for k in range(4, g.n + 1):
        for sub in itertools.combinations(range(g.n), k):
            h = g.induced(sub)
            if h.m == k and all(len(a) == 2 for a in h.adjacency) and h.is_connected():
                return True
    return False


def max_clique_size(g: Graph) -> int:
    best = 0
    adj = g.adjsets()
    for k in range(1, g.n + 1):
        if any(all(b in adj[a] for a, b in itertools.combinations(sub, 2))
               for sub in itertools.combinations(range(g.n), k)):
            best = k
        else:
            break
    return best


# -- triangulations ----------------------------------------------------------------


def oracle_phi_triangulatable(g: Graph, phi: Sequence[int],
                              budget: OracleBudget = TRIANGULATION_BUDGET) -> Triangulation | None:
    """Exhaustively search for a chordal supergraph on which ``phi`` is proper.

    Every triangulation contains the fill graph of one of its perfect
    elimination orderings, and fill graphs are chordal, so it suffices to find
    an elimination order whose fill edges never join equal colors.  The search
    runs over sets of eliminated vertices.
    """
    budget.check(g, "phi-triangulation")
    if verify_proper(g, phi) is not None:
        raise ColoringDomainError("coloring is not proper")
    n = g.n
    nbr = _masks(g)
    full = (1 << n) - 1
    came_from: dict[int, int] = {0: -1}
    layer = [0]
    while layer and full not in came_from:
        nxt = []
        for s in layer:
            rest = full & ~s
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                t = s | (1 << v)
                if t in came_from:
                    continue
                q = _fill_neighbourhood(nbr, s, v)
                colors = [phi[w] for w in range(n) if q >> w & 1]
                if len(set(colors)) == len(colors):
                    came_from[t] = v
                    nxt.append(t)
        layer = nxt
    if full not in came_from:
        return None
    order = []
    s = full
    while s:
        v = came_from[s]
        order.append(v)
        s &= ~(1 << v)
    order.reverse()
    return _fill_triangulation(g, order)


def _fill_triangulation(g: Graph, order: Sequence[int]) -> Triangulation:
    adj = [set(a) for a in g.adjacency]
    pos = {v: i for i, v in enumerate(order)}
    added = set()
    for v in order:
        later = sorted(w for w in adj[v] if pos[w] > pos[v])
        for a, b in itertools.combinations(later, 2):
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
                added.add((a, b) if a < b else (b, a))
    result = Graph(g.n, list(g.edges) + list(added))
    return Triangulation(g, frozenset(added), result, None, tuple(order))


# -- small-graph enumeration ---------------------------------------------------------


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant key: minimal edge bitmask over degree-respecting relabellings."""
    n = g.n
    deg = [len(a) for a in g.adjacency]
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(deg[v], []).append(v)
    groups = [classes[d] for d in sorted(classes)]
    pair_bit = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            pair_bit[(i, j)] = k
            k += 1
    edges = list(g.edges)
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in groups)):
        order = [v for p in perms for v in p]
        new = {v: i for i, v in enumerate(order)}
        mask = 0
        for u, v in edges:
            a, b = new[u], new[v]
            mask |= 1 << pair_bit[(a, b) if a < b else (b, a)]
        if best is None or mask < best:
            best = mask
    return (n, tuple(sorted(deg))) + (best or 0,)


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """One representative of every isomorphism class of graphs on ``n`` vertices."""
    if n == 0:
        return [Graph(0)]
    reps = []
    seen = set()
    for h in nonisomorphic_graphs(n - 1):
        for k in range(n):
            for nbrs in itertools.combinations(range(n - 1), k):
                g = Graph(n, list(h.edges) + [(v, n - 1) for v in nbrs])
                key = canonical_form(g)
                if key not in seen:
                    seen.add(key)
                    reps.append(g)
    return reps


def find_min_nontriangulatable_examples(sizes: Sequence[int] = range(1, 7)) -> list[tuple[Graph, Coloring]]:
    """Connected graphs with an acyclic coloring that admits no compatible triangulation.

    Scans one graph per isomorphism class for each ``n`` in ``sizes`` and every
    acyclic coloring up to renaming of colors.
    """
    found = []
    for n in sizes:
        budget = OracleBudget(max(n, TRIANGULATION_BUDGET.max_vertices))
        for g in nonisomorphic_graphs(n):
            if not g.is_connected():
                continue
            for phi in proper_colorings(g, n):
                if verify_acyclic(g, phi) is None and oracle_phi_triangulatable(g, phi, budget) is None:
                    found.append((g, phi))
    return found
