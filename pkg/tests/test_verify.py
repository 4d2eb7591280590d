"""The verification harness itself: suite registry, context caching,
and the definition-direct enumerator it cross-checks against."""

import pytest

from resolvedim import families
from resolvedim.verify import SUITES, VerifyContext, naive_min_broadcasts, run_suites


def test_all_suites_pass_at_small_scale():
    ctx = VerifyContext(max_order=3, samples=3, seed=0,
                        deletion_samples=5, tree_samples=5, flatten_per_case=1)
    results = run_suites(None, ctx)
    assert len(results) == len(SUITES)
    bad = [(r.suite, r.failures[:2]) for r in results if not r.ok]
    assert not bad, bad
    assert all(r.checked > 0 for r in results)


def test_suite_selection_and_unknown_id():
    ctx = VerifyContext(max_order=3, samples=2)
    results = run_suites(["truncation", "chain"], ctx)
    assert [r.suite for r in results] == ["truncation", "chain"]
    with pytest.raises(KeyError):
        run_suites(["nonsense"], ctx)


def test_naive_enumerator_spot_values():
    cost, vectors = naive_min_broadcasts(families.path(2))
    assert cost == 1
    assert vectors == ((0, 1), (1, 0))
    cost, vectors = naive_min_broadcasts(families.path(1))
    assert cost == 1
    assert vectors == ((1,),)
    cost, vectors = naive_min_broadcasts(families.kK2(2))
    assert cost == 2
    assert len(vectors) == 4
    assert all(sum(v) == 2 for v in vectors)


def test_context_caches_solver_results():
    ctx = VerifyContext()
    g = families.petersen()
    first = ctx.result("bdim", g)
    assert ctx.result("bdim", g) is first
    assert ctx.solve("bdim", g) == first.value


def test_battery_composition():
    ctx = VerifyContext(max_order=3, samples=4)
    graphs = ctx.battery()
    # 1 + 2 + 8 labelled graphs on orders 1..3, then samples at 4 and 5
    assert len(graphs) == 11 + 2 * 4
    assert graphs is ctx.battery()
    orders = sorted({g.n for g in graphs})
    assert orders == [1, 2, 3, 4, 5]


def test_deletion_graphs_are_connected_and_seeded():
    ctx = VerifyContext(deletion_samples=6)
    first = [g.edges() for g in ctx.deletion_graphs()]
    second = [g.edges() for g in VerifyContext(deletion_samples=6).deletion_graphs()]
    assert first == second
    assert len(first) == 6
