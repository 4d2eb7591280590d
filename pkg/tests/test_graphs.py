"""Graph construction, metrics, twins, and structural profiles."""

from __future__ import annotations

import pytest

from resolvedim import (
    all_pairs_distances,
    build_graph,
    cartesian_product,
    clique_number,
    complement,
    delta_prime,
    disjoint_union,
    families,
    induced_subgraph,
    join,
    metric_profile,
    tree_profile,
    truncated_distance,
    twin_partition,
)


def test_build_graph_basics():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.m == 3
    assert g.degree(1) == 2
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 2)
    assert g.edges() == ((0, 1), (1, 2), (2, 3))


def test_build_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        build_graph(-1, [])
    with pytest.raises(ValueError):
        build_graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        build_graph(2, [(1, 1)])


def test_build_graph_dedups_edges():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_distances_path():
    g = families.path(5)
    d = all_pairs_distances(g)
    assert d.dist[0] == (0, 1, 2, 3, 4)
    assert d.dist[2] == (2, 1, 0, 1, 2)


def test_distances_disconnected_sentinel():
    g = disjoint_union(families.path(2), families.path(2))
    d = all_pairs_distances(g)
    assert d.sentinel == 4
    assert d.dist[0][2] == 4
    assert not d.is_finite(0, 3)
    assert d.is_finite(0, 1)


def test_truncated_distance_values():
    g = disjoint_union(families.path(4), families.path(1))
    d = all_pairs_distances(g)
    # reachable pair at distance 3
    assert truncated_distance(d, 0, 3, 1) == 2
    assert truncated_distance(d, 0, 3, 2) == 3
    assert truncated_distance(d, 0, 3, 5) == 3
    # unreachable pair pins at k + 1
    assert truncated_distance(d, 0, 4, 1) == 2
    assert truncated_distance(d, 0, 4, 3) == 4
    with pytest.raises(ValueError):
        truncated_distance(d, 0, 1, 0)


def test_twin_partition_star_leaves():
    g = families.star(4)
    part = twin_partition(g)
    assert set(map(frozenset, part.pairs)) == {
        frozenset(p) for p in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    }
    groups = [grp for grp in part.groups if len(grp) > 1]
    assert groups == [(1, 2, 3, 4)]
    assert part.forced_minimum() == 3


def test_twin_partition_adjacent_twins():
    g = families.complete(3)
    part = twin_partition(g)
    assert part.forced_minimum() == 2


def test_metric_profile_cycle():
    prof = metric_profile(families.cycle(6))
    assert prof.connected
    assert prof.diameter == 3
    assert prof.eccentricities == (3,) * 6
    assert prof.component_count == 1


def test_metric_profile_disconnected():
    g = disjoint_union(families.path(3), families.path(2))
    prof = metric_profile(g)
    assert not prof.connected
    assert prof.component_count == 2
    assert prof.finite_diameter == 2
    assert prof.component_ids == (0, 0, 0, 1, 1)


def test_delta_prime_values():
    # star: all leaves at distance 1 from the center
    assert delta_prime(families.star(4)) == 4
    assert delta_prime(families.path(2)) == 1
    assert delta_prime(families.cycle(5)) == 2


def test_tree_profile_path_and_spider():
    prof = tree_profile(families.path(6))
    assert prof.is_tree
    assert prof.sigma == 2
    assert prof.ex == 0
    assert prof.spider is None

    g = families.spider(3, 1)
    prof = tree_profile(g)
    assert prof.is_tree
    assert prof.sigma == 3
    assert prof.ex == 1
    assert prof.spider is not None
    assert prof.spider.center == 0
    assert prof.spider.leg_lengths == (2, 1, 1)


def test_tree_profile_two_majors():
    # two stars joined by a bridge: both centers are exterior majors
    g = build_graph(8, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (4, 7)])
    prof = tree_profile(g)
    assert prof.is_tree
    assert prof.ex == 2
    assert prof.sigma == 5
    assert prof.spider is None


def test_tree_profile_rejects_cycle():
    assert not tree_profile(families.cycle(4)).is_tree
    assert not tree_profile(disjoint_union(families.path(2), families.path(2))).is_tree


def test_complement_involution():
    g = families.random_graph(7, 0.4, seed=5)
    assert complement(complement(g)) == g
    assert complement(families.complete(4)).m == 0


def test_join_and_union_orders():
    w = join(families.cycle(5), families.complete(1))
    assert w.n == 6
    assert w.degree(5) == 5
    u = disjoint_union(families.path(3), families.cycle(3))
    assert u.n == 6
    assert u.m == 5


def test_cartesian_product_grid():
    g = cartesian_product(families.path(2), families.path(3))
    assert g.n == 6
    assert g.m == 7
    # (0,0) -> id 0 adjacent to (0,1) -> id 1 and (1,0) -> id 3
    assert g.has_edge(0, 1)
    assert g.has_edge(0, 3)
    assert not g.has_edge(0, 4)


def test_induced_subgraph_renumbers():
    g = families.cycle(5)
    h = induced_subgraph(g, [1, 2, 4])
    assert h.n == 3
    assert h.edges() == ((0, 1),)
    with pytest.raises(ValueError):
        induced_subgraph(g, [1, 1])
    with pytest.raises(ValueError):
        induced_subgraph(g, [])


def test_clique_number():
    assert clique_number(families.complete(5)) == 5
    assert clique_number(families.cycle(5)) == 2
    assert clique_number(families.empty(3)) == 1
    assert clique_number(families.wheel(5)) == 3
    assert clique_number(families.petersen()) == 2
