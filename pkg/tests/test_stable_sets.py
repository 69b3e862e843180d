import pytest

from stabgraph.bitset import bit, iter_bits, mask_of, popcount
from stabgraph.graph import Graph
from stabgraph.named import complete, cycle, make_named, path, vertex_index
from stabgraph.populations import enumerate_graphs
from stabgraph.stable_sets import (
    BudgetExceededError,
    core_avoidable_pairs,
    family_core,
    is_very_well_covered,
    is_well_covered,
    max_stable_sets,
    maximal_stable_sets,
    resolve_omega_cap,
    stability_number,
)


def _alpha_in_out(graph: Graph, mask: int) -> int:
    if not mask:
        return 0
    v = next(iter_bits(mask))
    rest = mask & ~bit(v)
    return max(_alpha_in_out(graph, rest), 1 + _alpha_in_out(graph, rest & ~graph.adj[v]))


def _is_maximal(graph: Graph, stable: int) -> bool:
    return all(graph.adj[v] & stable for v in graph.vertices if not stable >> v & 1)


def test_max_stable_sets_of_c4() -> None:
    family = max_stable_sets(cycle(4))

    assert family.alpha == 2
    assert family.sets == (mask_of([0, 2]), mask_of([1, 3]))
    assert family.xi == 0
    assert family.as_frozensets() == [frozenset({0, 2}), frozenset({1, 3})]


def test_max_stable_sets_of_k4() -> None:
    family = max_stable_sets(complete(4))

    assert family.alpha == 1
    assert family.sets == (1, 2, 4, 8)
    assert family.xi == 0


def test_max_stable_sets_of_k4_plus_e() -> None:
    family = max_stable_sets(make_named("K4_PLUS_E"))
    p = vertex_index("K4_PLUS_E", "p")

    assert family.alpha == 2
    assert len(family) == 3
    assert family.core == bit(p)
    assert family.xi == 1
    assert len(family.containing(bit(p))) == 3


def test_alpha_matches_in_out_recursion() -> None:
    for n in range(2, 6):
        for graph in enumerate_graphs(n):
            family = max_stable_sets(graph)
            assert family.alpha == _alpha_in_out(graph, graph.full_mask)
            assert stability_number(graph) == family.alpha
            for s in family.sets:
                assert graph.is_stable(s)
                assert popcount(s) == family.alpha
                assert _is_maximal(graph, s)
            assert family.xi <= family.alpha
            assert list(family.sets) == sorted(family.sets)


def test_max_stable_sets_is_complete_on_small_graphs() -> None:
    for graph in enumerate_graphs(5):
        family = max_stable_sets(graph)
        expected = [
            s
            for s in range(1 << graph.n)
            if popcount(s) == family.alpha and graph.is_stable(s)
        ]
        assert list(family.sets) == expected


def test_stability_number_within_a_subset() -> None:
    assert stability_number(cycle(6), within=mask_of([0, 1, 2])) == 2


def test_budget_is_enforced() -> None:
    with pytest.raises(BudgetExceededError) as info:
        max_stable_sets(complete(4), cap=1)

    assert info.value.cap == 1


def test_budget_env_var(monkeypatch) -> None:
    monkeypatch.setenv("STABILITY_BUDGET", "3")
    assert resolve_omega_cap() == 3
    with pytest.raises(BudgetExceededError, match="STABILITY_BUDGET"):
        max_stable_sets(complete(4))

    assert resolve_omega_cap(10) == 10

    monkeypatch.setenv("STABILITY_BUDGET", "many")
    with pytest.raises(ValueError, match="STABILITY_BUDGET"):
        resolve_omega_cap()


def test_family_core_of_empty_family() -> None:
    with pytest.raises(ValueError):
        family_core([])


def test_maximal_stable_sets() -> None:
    assert maximal_stable_sets(path(3)) == (mask_of([1]), mask_of([0, 2]))
    assert len(maximal_stable_sets(cycle(6))) == 5


def test_well_covered() -> None:
    assert is_well_covered(cycle(4))
    assert is_very_well_covered(cycle(4))
    assert not is_well_covered(path(3))
    assert is_well_covered(make_named("G2"))
    assert is_very_well_covered(make_named("G2"))
    assert not is_well_covered(cycle(6))
    assert is_well_covered(cycle(5))
    assert not is_very_well_covered(cycle(5))


def test_core_avoidable_pairs() -> None:
    assert core_avoidable_pairs(cycle(5), max_stable_sets(cycle(5))).holds
    assert core_avoidable_pairs(complete(3), max_stable_sets(complete(3))).holds

    verdict = core_avoidable_pairs(cycle(4), max_stable_sets(cycle(4)))
    assert not verdict
    assert verdict.witness == (0, 1)
