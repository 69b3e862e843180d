import pytest

from stabgraph.diagnostics import Severity
from stabgraph.encoding import parse_graph6
from stabgraph.graph import GraphError, is_cycle, is_tree
from stabgraph.suites import (
    SUITES,
    FIXTURE_EXPECTATIONS,
    PopulationKind,
    Suite,
    resolve_suite_ids,
    run_suite,
    suite_population,
)


def test_registry_covers_the_theorem_catalogue() -> None:
    expected = {
        "alpha", "th1", "th2", "th3", "cor1", "lem1", "lem2", "lem3", "lem4",
        "prop2", "prop3", "prop4", "prop5", "prop6", "prop8", "prop10", "prop11",
        "prop12", "prop13", "prop14", "six_assertions", "g0_char", "g0_components",
        "alpha2", "cycle_parity", "tree", "matching", "fixtures",
    }

    assert expected <= set(SUITES)
    assert set(FIXTURE_EXPECTATIONS) == {"K3_PLUS_E", "K4_PLUS_E", "G1", "G2"}


def test_resolve_suite_ids() -> None:
    assert resolve_suite_ids("all") == list(SUITES)
    assert resolve_suite_ids("th2, lem2") == ["th2", "lem2"]
    with pytest.raises(KeyError, match="nope"):
        resolve_suite_ids("th2,nope")


def test_th2_holds_on_labeled_graphs() -> None:
    outcome = run_suite("th2", nmax=4)

    assert outcome.holds
    assert outcome.checked == 2 + 8 + 64
    assert outcome.population == "labeled graphs 2<=n<=4"


def test_th2_over_isomorphism_classes() -> None:
    outcome = run_suite("th2", nmax=6, canonical=True)

    assert outcome.holds
    assert outcome.checked == 156 + 34 + 11 + 4 + 2


def test_cycle_parity() -> None:
    outcome = run_suite("cycle_parity")

    assert outcome.holds
    assert outcome.checked == 10


def test_lem2_over_order_six() -> None:
    assert run_suite("lem2", nmax=6, canonical=True).holds


@pytest.mark.parametrize(
    "suite_id",
    ["alpha", "prop3", "prop4", "prop8", "prop10", "p3_implied", "th1", "th3", "cor1", "matching"],
)
def test_fast_suites_hold_on_small_graphs(suite_id: str) -> None:
    assert run_suite(suite_id, nmax=4).holds


def test_fixtures_classify_as_expected() -> None:
    outcome = run_suite("fixtures")

    assert outcome.holds
    assert outcome.checked == 10


def test_alpha2_reports_the_n3_case_as_a_note() -> None:
    outcome = run_suite("alpha2", nmax=3)

    assert outcome.holds
    assert len(outcome.notes) == 3
    assert all(d.severity is Severity.INFO for d in outcome.notes)
    assert all(parse_graph6(d.graph6).edge_count == 1 for d in outcome.notes)


def test_random_graphs_extend_the_population() -> None:
    outcome = run_suite("th2", nmax=3, random_count=5, seed=1)

    assert outcome.checked == 2 + 8 + 5
    assert "5 random graphs" in outcome.population


def test_parallel_run_matches_serial_run() -> None:
    serial = run_suite("prop4", nmax=4)
    parallel = run_suite("prop4", nmax=4, jobs=2)

    assert parallel == serial


def test_suite_population_caps_the_order() -> None:
    description, graphs, size = suite_population(SUITES["prop4_exhaustive"], nmax=7)

    assert description == "labeled graphs 2<=n<=5"
    assert size == 2 + 8 + 64 + 1024
    assert sum(1 for _ in graphs) == size


def test_violations_are_sorted_and_replayable(monkeypatch) -> None:
    def always_fails(graph):
        yield (Severity.ERROR, f"C{graph.n} rejected")
        yield (Severity.ERROR, "second complaint")

    monkeypatch.setitem(
        SUITES, "always_fails", Suite("always_fails", "rejects cycles", always_fails, PopulationKind.CYCLES)
    )

    outcome = run_suite("always_fails")

    assert not outcome.holds
    assert len(outcome.violations) == 20
    codes = [d.graph6 for d in outcome.violations]
    assert codes == sorted(codes)
    assert all(is_cycle(parse_graph6(d.graph6)) for d in outcome.violations)
    assert sum(bool(d.related) for d in outcome.violations) == 10


def test_unknown_suite() -> None:
    with pytest.raises(KeyError):
        run_suite("nope")


@pytest.mark.parametrize("suite_id", sorted(SUITES))
def test_every_suite_holds_up_to_five_vertices(suite_id: str) -> None:
    outcome = run_suite(suite_id, nmax=5)

    assert outcome.holds, [str(d) for d in outcome.violations]
    assert outcome.checked > 0


def test_prop13_over_seven_vertices() -> None:
    outcome = run_suite("prop13", nmax=7)

    assert outcome.holds
    assert outcome.population == "girth>=6 labeled graphs 2<=n<=7"


def test_labeled_tree_population() -> None:
    description, trees, size = suite_population(SUITES["tree"], tree_nmax=6, labeled_trees=True)
    trees = list(trees)

    assert description == "labeled trees 2<=n<=6 (Prüfer)"
    assert size == len(trees) == 1 + 3 + 16 + 125 + 1296
    assert all(is_tree(t) for t in trees)


def test_tree_suite_over_labeled_trees() -> None:
    outcome = run_suite("tree", tree_nmax=6, labeled_trees=True)

    assert outcome.holds
    assert outcome.checked == 1 + 3 + 16 + 125 + 1296
    assert outcome.population == "labeled trees 2<=n<=6 (Prüfer)"


def test_labeled_trees_stop_at_nine_vertices() -> None:
    with pytest.raises(GraphError, match="labeled trees"):
        run_suite("tree", tree_nmax=10, labeled_trees=True)


def test_matching_suite_draws_random_graphs_up_to_sixteen_vertices() -> None:
    outcome = run_suite("matching", nmax=2, random_count=150, seed=11)

    assert outcome.holds
    assert outcome.checked == 2 + 150
    assert "150 random graphs n<=16 (seed 11)" in outcome.population


def test_other_suites_keep_the_smaller_random_cap() -> None:
    description, _, _ = suite_population(SUITES["th2"], nmax=3, random_count=3, seed=2)

    assert description.endswith("3 random graphs n<=10 (seed 2)")


@pytest.mark.parametrize("nmax", [1, 9, 12])
def test_nmax_outside_the_enumerable_range(nmax: int) -> None:
    with pytest.raises(GraphError, match="nmax must be between 2 and 8"):
        run_suite("th2", nmax=nmax)


def test_parallel_run_keeps_notes_and_counts() -> None:
    serial = run_suite("alpha2", nmax=4)
    parallel = run_suite("alpha2", nmax=4, jobs=2)

    assert parallel == serial
    assert parallel.checked == 2 + 8 + 64
    assert len(parallel.notes) == 3
