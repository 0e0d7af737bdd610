import itertools

import pytest
from hypothesis import given, settings

from cographcolor.cotree import find_p4, graph_of
from cographcolor.gen import all_cographs, complete, complete_bipartite, cycle, fixture, path, star
from cographcolor.graph import ColoringDomainError, Graph, verify_acyclic, verify_proper, verify_star
from cographcolor.oracle import (BudgetExceeded, OracleBudget, canonical_form,
                                 find_min_nontriangulatable_examples, four_vertex_paths,
                                 has_long_induced_cycle, max_clique_size, nonisomorphic_graphs,
                                 oracle_chi, oracle_chi_a, oracle_chi_s, oracle_is_chordal,
                                 oracle_pathwidth, oracle_phi_triangulatable, oracle_treewidth,
                                 proper_colorings, simple_cycles)

from conftest import cotrees, graphs


def test_chi_examples():
    assert oracle_chi_a(cycle(4)) == 3
    assert oracle_chi_a(complete(5)) == 5
    assert oracle_chi_a(Graph(6)) == 1
    assert oracle_chi_s(path(4)) == 3
    assert oracle_chi_s(star(5)) == 2
    assert oracle_chi(cycle(5)) == 3
    assert (oracle_chi_a(cycle(5)), oracle_chi_s(cycle(5))) == (3, 4)


def test_width_examples():
    assert oracle_treewidth(path(8)) == 1
    assert oracle_treewidth(star(6)) == 1
    assert oracle_treewidth(complete(5)) == 4
    assert oracle_treewidth(cycle(4)) == 2
    assert oracle_pathwidth(path(7)) == 1
    assert oracle_pathwidth(complete(4)) == 3
    assert oracle_treewidth(Graph(1)) == 0 and oracle_pathwidth(Graph(1)) == 0


def test_pathwidth_can_exceed_treewidth():
    # the spider with three legs of length two: a tree of pathwidth 2
    spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert oracle_treewidth(spider) == 1
    assert oracle_pathwidth(spider) == 2


def test_chordal_examples():
    assert not oracle_is_chordal(cycle(4))
    assert oracle_is_chordal(path(6))
    assert oracle_is_chordal(star(4))
    assert oracle_is_chordal(complete(5))


def test_budgets():
    with pytest.raises(BudgetExceeded):
        oracle_chi_a(path(10))
    with pytest.raises(BudgetExceeded):
        oracle_treewidth(path(9))
    with pytest.raises(BudgetExceeded):
        oracle_pathwidth(path(8))
    with pytest.raises(BudgetExceeded):
        oracle_phi_triangulatable(path(8), (1, 2) * 4)
    assert oracle_chi_a(path(10), OracleBudget(10)) == 2


def test_proper_colorings_counts():
    # partitions of 4 points into independent sets
    assert len(list(proper_colorings(Graph(4), 4))) == 15
    assert len(list(proper_colorings(complete(4), 4))) == 1
    assert len(list(proper_colorings(complete(4), 3))) == 0
    for phi in proper_colorings(cycle(5), 5):
        assert verify_proper(cycle(5), phi) is None


def test_enumerators():
    assert sum(1 for _ in simple_cycles(complete(4))) == 7
    assert sum(1 for _ in four_vertex_paths(path(4))) == 1
    assert sum(1 for _ in four_vertex_paths(cycle(4))) == 4


def test_phi_triangulation_oracle_examples():
    tri = oracle_phi_triangulatable(cycle(4), (1, 2, 1, 3))
    assert tri is not None and tri.added_edges == {(1, 3)}
    assert oracle_is_chordal(tri.result)
    assert oracle_phi_triangulatable(cycle(4), (1, 2, 1, 2)) is None
    with pytest.raises(ColoringDomainError):
        oracle_phi_triangulatable(cycle(4), (1, 1, 2, 2))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_nonisomorphic_counts(n, count):
    assert len(nonisomorphic_graphs(n)) == count


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_canonical_form_is_invariant(g):
    perm = list(reversed(range(g.n)))
    h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    assert canonical_form(h) == canonical_form(g)


def test_canonical_form_separates():
    assert canonical_form(path(4)) != canonical_form(star(3))
    assert canonical_form(cycle(6)) != canonical_form(fixture("2K2").disjoint_union(path(2)))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_chromatic_chain(g):
    assert oracle_chi_s(g) >= oracle_chi_a(g) >= oracle_chi(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_chordal_matches_induced_cycle_scan(g):
    assert oracle_is_chordal(g) == (not has_long_induced_cycle(g))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_treewidth_bounds(g):
    tw = oracle_treewidth(g)
    assert max_clique_size(g) - 1 <= tw <= oracle_pathwidth(g)
    if oracle_is_chordal(g) and g.n:
        assert tw == max_clique_size(g) - 1


@settings(max_examples=60, deadline=None)
@given(cotrees(max_leaves=7))
def test_widths_agree_on_cographs(t):
    g = graph_of(t)
    chi = oracle_chi_a(g)
    assert chi == oracle_chi_s(g) == oracle_treewidth(g) + 1 == oracle_pathwidth(g) + 1


@pytest.mark.parametrize("n", range(1, 6))
def test_every_acyclic_coloring_of_a_cograph_is_star(n):
    for t in all_cographs(n):
        g = graph_of(t)
        for phi in proper_colorings(g, 4):
            if verify_acyclic(g, phi) is None:
                assert verify_star(g, phi) is None


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=4, max_n=8))
def test_p4_coloring_separates_acyclic_from_star(g):
    quad = find_p4(g)
    if quad is None:
        return
    a, b, c, d = quad
    phi = list(range(1, g.n + 1))
    phi[c], phi[d] = phi[a], phi[b]
    assert verify_acyclic(g, phi) is None
    assert verify_star(g, phi) is not None


def test_binary_recurrences_small():
    for g1, g2 in [(path(4), cycle(4)), (cycle(5), Graph(1)), (star(3), complete(2))]:
        for f in (oracle_chi_a, oracle_chi_s):
            assert f(g1.disjoint_union(g2)) == max(f(g1), f(g2))
            assert f(g1.join(g2)) == min(f(g1) + g2.n, f(g2) + g1.n)


@pytest.fixture(scope="module")
def scan():
    return find_min_nontriangulatable_examples(range(1, 7))


def test_no_small_nontriangulatable_examples(scan):
    assert all(g.n == 6 for g, _ in scan)
    assert find_min_nontriangulatable_examples(range(1, 6)) == []


def test_six_vertex_examples_are_genuine(scan):
    assert scan
    for g, phi in scan:
        assert g.is_connected()
        assert verify_acyclic(g, phi) is None
        assert oracle_phi_triangulatable(g, phi) is None
        assert find_p4(g) is not None


def test_twin_c5_is_found(scan):
    # a 5-cycle with one vertex doubled by a non-adjacent twin
    twin = Graph(6, list(cycle(5).edges) + [(1, 5), (4, 5)])
    key = canonical_form(twin)
    hits = [phi for g, phi in scan if canonical_form(g) == key]
    assert hits
    g = next(g for g, _ in scan if canonical_form(g) == key)
    twins = [(u, v) for u, v in itertools.combinations(range(6), 2)
             if set(g.adjacency[u]) == set(g.adjacency[v])]
    assert len(twins) == 1
    c5 = canonical_form(cycle(5))
    for x in twins[0]:
        rest = [w for w in range(6) if w != x]
        assert canonical_form(g.induced(rest)) == c5


def test_cograph_scan_needs_no_search():
    for n in range(1, 6):
        for t in all_cographs(n):
            g = graph_of(t)
            for phi in proper_colorings(g, 4):
                if verify_acyclic(g, phi) is None:
                    assert oracle_phi_triangulatable(g, phi) is not None


def test_complete_bipartite_widths():
    g = complete_bipartite(2, 3)
    assert oracle_treewidth(g) == 2 == oracle_pathwidth(g)
    assert oracle_chi_a(g) == 3
