"""Coloring-compatible triangulations and exact widths of cographs.

A cotree node is *saturated* by ``phi`` when the leaves below it carry
pairwise distinct colors.  For a proper coloring of a cograph the following
coincide: ``phi`` is acyclic; every join node has at most one unsaturated
child; ``phi`` stays proper on some chordal supergraph.  The supergraph is
obtained by turning every union node below a saturated node into a join.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import color_cotree
from .cotree import JOIN, LEAF, UNION, Cotree, graph_of, is_skew
from .graph import ColoringDomainError, Edge, Graph, perfect_elimination_ordering


@dataclass(frozen=True)
class Triangulation:
    base: Graph
    added_edges: frozenset[Edge]
    result: Graph
    cotree: Cotree | None
    elimination_order: tuple[int, ...]


@dataclass(frozen=True)
class WidthReport:
    chi_a: int
    treewidth: int
    pathwidth: int
    clique_number: int


def _color_sets(t: Cotree, phi: Sequence[int]) -> tuple[list[bool], bool]:
    """Saturation flag per node, and whether ``phi`` is proper on ``graph_of(t)``.

    Child color sets are merged small-to-large, ``O(n log n)`` overall.  At a
    join node the children's sets must be disjoint for ``phi`` to be proper.
    """
    if len(phi) != t.n:
        raise ColoringDomainError(f"coloring has {len(phi)} entries, cotree has {t.n} leaves")
    if any(not isinstance(c, int) or c < 1 for c in phi):
        raise ColoringDomainError("colors must be positive integers")
    count = len(t)
    sets: list[set[int] | None] = [None] * count
    leaves = [0] * count
    sat = [False] * count
    proper = True
    for i in range(count):
        if t.kind[i] == LEAF:
            sets[i] = {phi[t.vertex[i]]}
            leaves[i] = 1
            sat[i] = True
            continue
        kids = sorted(t.children[i], key=lambda c: len(sets[c]), reverse=True)
        acc = sets[kids[0]]
        total = len(acc)
        for c in kids[1:]:
            total += len(sets[c])
            acc |= sets[c]
            sets[c] = None
        sets[kids[0]] = None
        if t.kind[i] == JOIN and len(acc) != total:
            proper = False
        sets[i] = acc
        leaves[i] = sum(leaves[c] for c in t.children[i])
        sat[i] = len(acc) == leaves[i]
    return sat, proper


def saturated_nodes(t: Cotree, phi: Sequence[int]) -> list[bool]:
    return _color_sets(t, phi)[0]


def join_condition_holds(t: Cotree, sat: Sequence[bool]) -> bool:
    return all(sum(1 for c in t.children[i] if not sat[c]) <= 1
               for i in range(len(t)) if t.kind[i] == JOIN)


def _saturated_proper(t: Cotree, phi: Sequence[int]) -> list[bool]:
    sat, proper = _color_sets(t, phi)
    if not proper:
        raise ColoringDomainError("coloring is not proper on the cograph")
    return sat


def is_phi_triangulatable(t: Cotree, phi: Sequence[int]) -> bool:
    """Whether ``graph_of(t)`` has a triangulation on which ``phi`` stays proper.

    Decided on the cotree alone (no graph is built).  The condition is
    evaluated on ``t`` as given; for a k-ary join it is equivalent to the
    binary-chain form because sibling color sets are disjoint.
    """
    return join_condition_holds(t, _saturated_proper(t, phi))


def triangulated_cotree(t: Cotree, phi: Sequence[int], sat: Sequence[bool] | None = None) -> Cotree:
    """``t`` with every union node inside a saturated subtree relabelled as a join."""
    if sat is None:
        sat = _saturated_proper(t, phi)
    count = len(t)
    inside = [False] * count
    kinds = list(t.kind)
    for i in range(count - 1, -1, -1):
        flag = inside[i] or sat[i]
        if t.kind[i] == LEAF:
            continue
        if flag and kinds[i] == UNION:
            kinds[i] = JOIN
        for c in t.children[i]:
            inside[c] = flag
    return t.relabel(kinds)


def triangulate_with_coloring(t: Cotree, phi: Sequence[int]) -> Triangulation:
    sat = _saturated_proper(t, phi)
    if not join_condition_holds(t, sat):
        raise ColoringDomainError("coloring is not acyclic; no compatible triangulation exists")
    plus = triangulated_cotree(t, phi, sat)
    if not is_skew(plus):
        raise AssertionError("triangulated cotree is not skew")
    base = graph_of(t)
    result = graph_of(plus)
    order = perfect_elimination_ordering(result)
    if order is None:
        raise AssertionError("triangulation is not chordal")
    return Triangulation(base, result.edges - base.edges, result, plus, tuple(order))


def clique_number_cograph(t: Cotree) -> int:
    omega = [1] * len(t)
    for i in range(len(t)):
        kind = t.kind[i]
        if kind == UNION:
            omega[i] = max(omega[c] for c in t.children[i])
        elif kind == JOIN:
            omega[i] = sum(omega[c] for c in t.children[i])
    return omega[-1]


def width_report(t: Cotree) -> WidthReport:
    """Acyclic chromatic number, treewidth and pathwidth of ``graph_of(t)``.

    The clique number is measured on the triangulation induced by the optimal
    coloring, not assumed.
    """
    bt, stats, phi = color_cotree(t)
    chi = stats.root.chi_a
    omega = clique_number_cograph(triangulated_cotree(bt, phi))
    return WidthReport(chi_a=chi, treewidth=chi - 1, pathwidth=chi - 1, clique_number=omega)
