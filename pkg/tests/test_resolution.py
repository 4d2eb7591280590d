"""Code vectors and resolution predicates, frozen against hand oracles."""

from __future__ import annotations

import pytest

from resolvedim import (
    Broadcast,
    all_pairs_distances,
    broadcast_code,
    counting_feasible,
    disjoint_union,
    families,
    is_adjacency_resolving_set,
    is_resolving_broadcast,
    is_resolving_set,
)


def test_broadcast_dataclass():
    f = Broadcast((0, 2, 0, 1))
    assert f.cost == 3
    assert f.support == (1, 3)
    with pytest.raises(ValueError):
        is_resolving_broadcast(families.path(4), (0, 0, 0, 0))
    with pytest.raises(ValueError):
        is_resolving_broadcast(families.path(4), (1, -1, 0, 0))
    with pytest.raises(ValueError):
        is_resolving_broadcast(families.path(4), (1, 0, 0))


def test_broadcast_codes_path():
    g = families.path(5)
    d = all_pairs_distances(g)
    f = (1, 0, 1, 0, 0)
    # support (0, 2); entries are min(d, strength + 1)
    assert broadcast_code(g, d, f, 0) == (0, 2)
    assert broadcast_code(g, d, f, 1) == (1, 1)
    assert broadcast_code(g, d, f, 3) == (2, 1)
    assert broadcast_code(g, d, f, 4) == (2, 2)


def test_broadcast_codes_unreachable_pinned():
    g = disjoint_union(families.path(3), families.path(1))
    d = all_pairs_distances(g)
    f = (2, 0, 0, 0)
    # the isolated vertex sits at strength + 1, above every reachable entry
    assert broadcast_code(g, d, f, 3) == (3,)
    assert broadcast_code(g, d, f, 2) == (2,)


def test_resolving_broadcast_oracle_pair():
    g = families.path(5)
    assert is_resolving_broadcast(g, (1, 0, 1, 0, 0)).resolving
    verdict = is_resolving_broadcast(g, (1, 0, 0, 1, 0))
    assert not verdict.resolving
    assert verdict.unresolved_pair == (2, 4)


def test_verdict_reports_lex_first_pair():
    g = families.empty(4)
    verdict = is_resolving_broadcast(g, (1, 0, 0, 0))
    assert not verdict
    assert verdict.unresolved_pair == (1, 2)


def test_resolving_set_path_ends():
    g = families.path(6)
    assert is_resolving_set(g, [0])
    assert is_resolving_set(g, [5])
    assert not is_resolving_set(g, [2]).resolving
    with pytest.raises(ValueError):
        is_resolving_set(g, [])
    with pytest.raises(ValueError):
        is_resolving_set(g, [0, 6])


def test_resolving_set_disconnected():
    # a landmark inside one component separates across components via the sentinel
    g = disjoint_union(families.path(2), families.path(2))
    assert is_resolving_set(g, [0, 2])
    assert not is_resolving_set(g, [0]).resolving


def test_adjacency_resolving_set():
    g = families.path(5)
    assert not is_adjacency_resolving_set(g, [0]).resolving
    assert is_adjacency_resolving_set(g, [0, 2])
    # both far vertices look identical from {0, 1}
    assert is_adjacency_resolving_set(g, [0, 1]).unresolved_pair == (3, 4)
    # entries are capped at 2, matching a strength-1 broadcast
    h = families.cycle(8)
    f = tuple(1 if v in (0, 3, 5) else 0 for v in range(8))
    assert bool(is_adjacency_resolving_set(h, [0, 3, 5])) == bool(
        is_resolving_broadcast(h, f)
    )


def test_counting_feasible():
    g = families.path(6)
    # support {0}, strength 2: 1 + 3 < 6
    assert not counting_feasible(g, (2, 0, 0, 0, 0, 0))
    # support {0, 3}, strengths (2, 1): 2 + 6 >= 6
    assert counting_feasible(g, (2, 0, 0, 1, 0, 0))
    assert counting_feasible(g, Broadcast((1, 1, 0, 1, 0, 0)))
