import pytest

from stabgraph.encoding import to_graph6
from stabgraph.graph import GraphError, girth, is_complete, is_isomorphic, is_tree
from stabgraph.named import cycle
from stabgraph.populations import (
    canonical_form,
    enumerate_graphs,
    enumerate_min_girth,
    enumerate_trees,
    population,
    population_size,
    prufer_decode,
    random_graphs,
)


def test_labeled_enumeration_counts() -> None:
    assert len(list(enumerate_graphs(2))) == 2
    assert len(list(enumerate_graphs(3))) == 8
    assert len(list(enumerate_graphs(4))) == 64


def test_labeled_enumeration_is_exhaustive_and_distinct() -> None:
    codes = [to_graph6(g) for g in enumerate_graphs(4)]

    assert len(set(codes)) == 64


def test_enumeration_range() -> None:
    with pytest.raises(GraphError):
        list(enumerate_graphs(1))
    with pytest.raises(GraphError):
        list(enumerate_graphs(9))
    with pytest.raises(GraphError):
        list(enumerate_graphs(8, canonical=True))


def test_canonical_enumeration_counts() -> None:
    assert [len(list(enumerate_graphs(n, canonical=True))) for n in range(2, 7)] == [2, 4, 11, 34, 156]
    assert population_size(6, canonical=True) == 156 + 34 + 11 + 4 + 2


def test_canonical_enumeration_has_one_graph_per_class() -> None:
    graphs = list(enumerate_graphs(4, canonical=True))

    for i, first in enumerate(graphs):
        for second in graphs[i + 1:]:
            assert not is_isomorphic(first, second)


def test_canonical_form_is_an_isomorphism_invariant() -> None:
    classes = {to_graph6(canonical_form(g)) for g in enumerate_graphs(4)}

    assert len(classes) == 11
    assert is_isomorphic(canonical_form(cycle(5)), cycle(5))


def test_population_sizes() -> None:
    assert population_size(4) == 2 + 8 + 64
    assert sum(1 for _ in population(4)) == 74
    assert sum(1 for _ in population(4, nmin=4)) == 64


def test_random_graphs_are_reproducible() -> None:
    first = [to_graph6(g) for g in random_graphs(7, 10, 0.5, seed=42)]
    second = [to_graph6(g) for g in random_graphs(7, 10, 0.5, seed=42)]

    assert first == second
    assert all(g.n == 7 for g in random_graphs(7, 3, 0.5, seed=1))


def test_random_graph_extremes() -> None:
    assert all(g.edge_count == 0 for g in random_graphs(6, 5, 0.0, seed=0))
    assert all(is_complete(g) for g in random_graphs(6, 5, 1.0, seed=0))


def test_random_graphs_with_varying_order() -> None:
    orders = {g.n for g in random_graphs(None, 50, 0.5, seed=5, max_n=6)}

    assert orders <= set(range(2, 7))
    assert len(orders) > 1


def test_random_graphs_reject_bad_probability() -> None:
    with pytest.raises(GraphError):
        list(random_graphs(5, 1, 1.5))


def test_prufer_decode() -> None:
    star = prufer_decode((0, 0, 0))

    assert star.degree(0) == 4
    assert is_tree(prufer_decode((3, 3, 1, 0)))


def test_tree_enumeration_counts() -> None:
    counts = [len(list(enumerate_trees(n, labeled=False))) for n in range(2, 10)]

    assert counts == [1, 1, 2, 3, 6, 11, 23, 47]
    assert all(is_tree(t) for t in enumerate_trees(8, labeled=False))


def test_labeled_trees_follow_cayley() -> None:
    for n in range(2, 7):
        trees = [to_graph6(t) for t in enumerate_trees(n)]

        assert len(trees) == n ** (n - 2)
        assert len(set(trees)) == len(trees)


def test_labeled_trees_reach_nine_vertices() -> None:
    first = next(enumerate_trees(9))

    assert first.n == 9
    assert is_tree(first)
    with pytest.raises(GraphError):
        next(enumerate_trees(10))


def test_min_girth_enumeration() -> None:
    for n in range(3, 6):
        expected = sorted(to_graph6(g) for g in enumerate_graphs(n) if girth(g) >= 5)
        assert sorted(to_graph6(g) for g in enumerate_min_girth(n, 5)) == expected
