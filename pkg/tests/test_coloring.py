import pytest
from hypothesis import given, settings

from cographcolor.coloring import (NotACographError, NotBinaryError, color_cograph, color_cotree,
                                   phase1_compute_ac, phase2_assign_colors, phase2_reference,
                                   saturate)
from cographcolor.cotree import Cotree, graph_of, to_binary
from cographcolor.gen import GenConfig, Shape, complete, fixture, random_cotree
from cographcolor.graph import count_colors, verify_acyclic, verify_proper, verify_star
from cographcolor.oracle import oracle_chi_a, oracle_chi_s
from cographcolor.triangulate import join_condition_holds, saturated_nodes

from conftest import cotrees

C4_TREE = Cotree.from_nested(("join", ("union", 0, 2), ("union", 1, 3)))
K13_TREE = Cotree.from_nested(("join", 0, ("union", ("union", 1, 2), 3)))


def test_phase1_examples():
    # expected chi_a values come from the exhaustive oracle: chi_a(K_1,3)=2, chi_a(C4)=3
    assert oracle_chi_a(graph_of(K13_TREE)) == 2
    assert oracle_chi_a(graph_of(C4_TREE)) == 3
    stats = phase1_compute_ac(K13_TREE)
    assert (stats.root.size, stats.root.chi_a) == (4, 2)
    stats = phase1_compute_ac(C4_TREE)
    assert (stats.root.size, stats.root.chi_a) == (4, 3)
    leaf = phase1_compute_ac(Cotree.leaf())
    assert (leaf.root.size, leaf.root.chi_a) == (1, 1)


def test_phase1_needs_binary():
    with pytest.raises(NotBinaryError):
        phase1_compute_ac(Cotree.from_nested(("union", 0, 1, 2)))


def test_saturate():
    t = Cotree.from_nested(("union", 0, ("join", 1, 2)))
    phi = [0, 0, 0]
    saturate(t, t.root, 5, phi)
    assert phi == [5, 6, 7]
    phi = [0]
    saturate(Cotree.leaf(), 0, 1, phi)
    assert phi == [1]


def test_saturate_refuses_recoloring():
    t = Cotree.from_nested(("union", 0, 1))
    with pytest.raises(AssertionError):
        saturate(t, t.root, 1, [0, 4])


def test_phase2_examples():
    phi = phase2_assign_colors(C4_TREE, phase1_compute_ac(C4_TREE))
    assert phi == (1, 3, 2, 3)
    g = graph_of(C4_TREE)
    assert verify_acyclic(g, phi) is None and verify_star(g, phi) is None

    phi = phase2_assign_colors(K13_TREE, phase1_compute_ac(K13_TREE))
    assert phi == (1, 2, 2, 2)
    assert oracle_chi_s(graph_of(K13_TREE)) == 2

    assert phase2_assign_colors(Cotree.leaf(), phase1_compute_ac(Cotree.leaf())) == (1,)


def test_phase2_rejects_mismatched_stats():
    with pytest.raises(ValueError):
        phase2_assign_colors(C4_TREE, phase1_compute_ac(Cotree.leaf()))


def test_color_cograph_examples():
    _, _, phi = color_cograph(complete(5))
    assert sorted(phi) == [1, 2, 3, 4, 5]
    _, stats, phi = color_cograph(fixture("2K2"))
    assert count_colors(phi) == 2 == oracle_chi_a(fixture("2K2"))
    with pytest.raises(NotACographError) as err:
        color_cograph(fixture("P4"))
    assert err.value.certificate == (0, 1, 2, 3)


@settings(max_examples=300, deadline=None)
@given(cotrees(max_leaves=9))
def test_optimal_against_oracle(t):
    g = graph_of(t)
    bt, stats, phi = color_cotree(t)
    k = count_colors(phi)
    assert k == stats.root.chi_a
    assert k == oracle_chi_a(g) == oracle_chi_s(g)


@settings(max_examples=300, deadline=None)
@given(cotrees(max_leaves=40))
def test_valid_and_saturation_structure(t):
    g = graph_of(t)
    bt, stats, phi = color_cotree(t)
    assert verify_proper(g, phi) is None
    assert verify_acyclic(g, phi) is None
    assert verify_star(g, phi) is None
    assert join_condition_holds(bt, saturated_nodes(bt, phi))
    assert sorted(set(phi)) == list(range(1, stats.root.chi_a + 1))


@settings(max_examples=300, deadline=None)
@given(cotrees(max_leaves=40))
def test_fast_phase2_matches_reference(t):
    bt = to_binary(t)
    stats = phase1_compute_ac(bt)
    assert phase2_assign_colors(bt, stats) == phase2_reference(bt, stats)


def test_stats_obey_recurrences():
    t = random_cotree(GenConfig(7, 200, 0.5, Shape.RANDOM))
    stats = phase1_compute_ac(t)
    for i in range(len(t)):
        if not t.children[i]:
            assert (stats.size[i], stats.chi_a[i]) == (1, 1)
            continue
        l, r = t.children[i]
        assert stats.size[i] == stats.size[l] + stats.size[r]
        assert 1 <= stats.chi_a[i] <= stats.size[i]


@pytest.mark.parametrize("shape", list(Shape))
def test_large_trees_do_not_recurse(shape):
    t = random_cotree(GenConfig(3, 100_000, 0.5, shape))
    stats = phase1_compute_ac(t)
    phi = phase2_assign_colors(t, stats)
    assert count_colors(phi) == stats.root.chi_a
