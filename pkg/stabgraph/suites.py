"""Theorem-verification suites.

Every suite is a per-graph check run over a population of graphs. A check
yields ``(Severity, message)`` findings: ``ERROR`` is a counterexample,
``INFO`` a discrepancy worth reporting without calling it a violation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator

import networkx as nx
from joblib import Parallel, delayed
from tqdm import tqdm

from stabgraph.bitset import bit, popcount
from stabgraph.classifier import (
    InvariantError,
    PlusClass,
    alpha1_g0_characterization,
    classify_full,
    core_avoidable_pairs,
    cover_criterion_p3,
    cover_criterion_plus_plus,
    exhaustive_cover,
    fast_plus_plus_bipartite,
    fast_plus_plus_ke,
    fast_plus_plus_pendant,
    g0_component_witness,
    girth6_panel,
    is_koenig_egervary,
    ke_conditions,
    oracle_alpha_plus,
    oracle_p3_plus,
    oracle_plus_plus,
    prop2_condition,
    six_assertions,
)
from stabgraph.constants import (
    DEFAULT_RANDOM_MAX_N,
    DEFAULT_SEED,
    DEFAULT_TREE_NMAX,
    DEFAULT_VERIFY_NMAX,
    ENUMERATION_MAX_N,
    MIN_VERTICES,
)
from stabgraph.diagnostics import Diagnostic, DiagnosticCollector, Severity
from stabgraph.encoding import parse_graph6, to_graph6
from stabgraph.graph import (
    Graph,
    GraphError,
    connected_components,
    has_c4,
    has_hamiltonian_path,
    induced_subgraph,
    is_bipartite,
    is_complete_minus_edge,
    is_cycle,
    is_isomorphic,
    isolated_vertices,
    remove_vertices,
    to_networkx,
)
from stabgraph.matching import (
    matching_number_brute_force,
    maximum_matching,
    maximum_matchings,
    pendant_perfect_matching,
)
from stabgraph.named import FIXTURES, cycle, make_named, p3_substitution
from stabgraph.populations import (
    LABELED_TREE_MAX_N,
    enumerate_min_girth,
    enumerate_trees,
    population,
    population_size,
    random_graphs,
)
from stabgraph.stable_sets import (
    is_very_well_covered,
    is_well_covered,
    max_stable_sets,
    stability_number,
)

logger = logging.getLogger(__name__)

Finding = tuple[Severity, str]
CheckFn = Callable[[Graph], Iterable[Finding]]

CYCLE_MIN_N = 4
CYCLE_MAX_N = 13
RANDOM_SUITE_MAX_N = 10
PARALLEL_BATCH_SIZE = 64


class PopulationKind(Enum):
    GRAPHS = "graphs"
    TREES = "trees"
    CYCLES = "cycles"
    GIRTH6 = "girth6"
    FIXTURES = "fixtures"


@dataclass(frozen=True, slots=True)
class Suite:
    suite_id: str
    title: str
    check: CheckFn
    kind: PopulationKind = PopulationKind.GRAPHS
    max_n: int | None = None
    random_max_n: int = RANDOM_SUITE_MAX_N


@dataclass(frozen=True, slots=True)
class VerificationOutcome:
    theorem_id: str
    title: str
    population: str
    checked: int
    violations: tuple[Diagnostic, ...] = ()
    notes: tuple[Diagnostic, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations


SUITES: dict[str, Suite] = {}


def _suite(
    suite_id: str,
    title: str,
    *,
    kind: PopulationKind = PopulationKind.GRAPHS,
    max_n: int | None = None,
    random_max_n: int = RANDOM_SUITE_MAX_N,
) -> Callable[[CheckFn], CheckFn]:
    def register(check: CheckFn) -> CheckFn:
        SUITES[suite_id] = Suite(suite_id, title, check, kind, max_n, random_max_n)
        return check

    return register


def _error(message: str) -> Finding:
    return (Severity.ERROR, message)


def _splits(graph: Graph) -> Iterator[int]:
    """Vertex masks of every proper nonempty induced subgraph H."""
    for mask in range(1, graph.full_mask):
        yield mask


# -- stability classes ---------------------------------------------------------------


@_suite("alpha", "alpha and Omega agree with an independent clique search")
def check_alpha(graph: Graph) -> Iterator[Finding]:
    family = max_stable_sets(graph)
    complement = nx.complement(to_networkx(graph))
    expected = max(len(clique) for clique in nx.find_cliques(complement))
    if family.alpha != expected:
        yield _error(f"alpha={family.alpha} but the largest clique of the complement has {expected}")
    for s in family.sets:
        if not graph.is_stable(s) or popcount(s) != family.alpha:
            yield _error(f"Omega member {s:#x} is not a stable set of size alpha")
        if graph.full_mask & ~s & ~graph.neighborhood(s):
            yield _error(f"Omega member {s:#x} is not maximal")
    if family.xi > family.alpha:
        yield _error(f"xi={family.xi} exceeds alpha={family.alpha}")


@_suite("th2", "alpha+ stable iff xi <= 1")
def check_th2(graph: Graph) -> Iterator[Finding]:
    plus = oracle_alpha_plus(graph).holds
    xi = max_stable_sets(graph).xi
    if plus != (xi <= 1):
        yield _error(f"alpha+ oracle says {plus} but xi={xi}")


@_suite("prop8", "alpha0+ stable implies P3 stable")
def check_prop8(graph: Graph) -> Iterator[Finding]:
    if max_stable_sets(graph).xi == 0 and not oracle_p3_plus(graph).holds:
        yield _error("xi=0 but the P3 oracle fails")


@_suite("prop10", "P3 stable and not K_n - e implies alpha+ stable")
def check_prop10(graph: Graph) -> Iterator[Finding]:
    if is_complete_minus_edge(graph):
        return
    if oracle_p3_plus(graph).holds and not oracle_alpha_plus(graph).holds:
        yield _error("P3 stable but not alpha+ stable")


@_suite("p3_implied", "alpha++ stable implies P3 stable")
def check_p3_implied(graph: Graph) -> Iterator[Finding]:
    if oracle_plus_plus(graph).holds and not oracle_p3_plus(graph).holds:
        yield _error("alpha++ stable but not P3 stable")


@_suite("lem3", "avoidable pairs imply alpha0+ and alpha++ stability")
def check_lem3(graph: Graph) -> Iterator[Finding]:
    family = max_stable_sets(graph)
    if not core_avoidable_pairs(graph, family).holds:
        return
    if family.xi != 0:
        yield _error(f"every pair is avoidable but xi={family.xi}")
    if not oracle_plus_plus(graph).holds:
        yield _error("every pair is avoidable but the alpha++ oracle fails")


@_suite("prop3", "not P3 stable iff a P3-anchored cover exists")
def check_prop3(graph: Graph) -> Iterator[Finding]:
    p3 = oracle_p3_plus(graph).holds
    witness = cover_criterion_p3(graph, max_stable_sets(graph))
    if p3 != (witness is None):
        yield _error(f"P3 oracle says {p3} but the anchored cover search found {witness}")


@_suite("prop4", "not alpha++ stable iff a pair-anchored cover exists")
def check_prop4(graph: Graph) -> Iterator[Finding]:
    plus_plus = oracle_plus_plus(graph).holds
    witness = cover_criterion_plus_plus(graph, max_stable_sets(graph))
    if plus_plus != (witness is None):
        yield _error(f"alpha++ oracle says {plus_plus} but the anchored cover search found {witness}")
    if witness is not None and min(witness.xi1, witness.xi2) < 2:
        yield _error(f"cover witness {witness} has a core smaller than 2")


@_suite("prop4_exhaustive", "anchored covers agree with an exhaustive cover search", max_n=5)
def check_prop4_exhaustive(graph: Graph) -> Iterator[Finding]:
    family = max_stable_sets(graph)
    anchored = cover_criterion_plus_plus(graph, family) is not None
    exhaustive = exhaustive_cover(family) is not None
    if anchored != exhaustive:
        yield _error(f"anchored cover found={anchored} but exhaustive search found={exhaustive}")


@_suite("alpha2", "alpha = 2 characterizations")
def check_alpha2(graph: Graph) -> Iterator[Finding]:
    family = max_stable_sets(graph)
    if family.alpha != 2 or is_complete_minus_edge(graph):
        return
    size = len(family.sets)
    plus = oracle_alpha_plus(graph).holds
    p3 = oracle_p3_plus(graph).holds
    plus_plus = oracle_plus_plus(graph).holds
    if plus != (size >= 2):
        yield _error(f"alpha+ is {plus} but |Omega|={size}")
    by_core = family.xi == 0 or (family.xi == 1 and size >= 3)
    if p3 != by_core:
        yield _error(f"P3 is {p3} but xi={family.xi}, |Omega|={size}")
    if plus_plus != (size >= 3):
        yield _error(f"alpha++ is {plus_plus} but |Omega|={size}")
    m = graph.n - 3
    substituted = m >= 1 and is_isomorphic(graph, p3_substitution(m))
    by_shape = plus and not substituted
    if p3 != by_shape:
        if m == 0:
            yield (
                Severity.INFO,
                "substitution form needs m = 0 (K1 + K2) to agree with the core-size form",
            )
        else:
            yield _error(f"P3 is {p3} but alpha+={plus}, substitution shape={substituted}")


@_suite("prop2", "alpha >= 3: alpha+ stable iff P3 stable or a unique hitting vertex")
def check_prop2(graph: Graph) -> Iterator[Finding]:
    family = max_stable_sets(graph)
    if family.alpha < 3:
        return
    plus = oracle_alpha_plus(graph).holds
    condition = prop2_condition(graph, family)
    if plus != condition:
        yield _error(f"alpha+ is {plus} but the vertex-triple condition is {condition}")


@_suite("six_assertions", "six equivalent forms of alpha++ stability")
def check_six_assertions(graph: Graph) -> Iterator[Finding]:
    panel = six_assertions(graph, max_stable_sets(graph))
    if not panel.agree(include_disjoint=not is_complete_minus_edge(graph)):
        yield _error(f"assertions disagree: {panel}")


@_suite("g0_char", "alpha1+ graphs: P3 stable iff every pair of G0 is avoidable")
def check_g0_char(graph: Graph) -> Iterator[Finding]:
    family = max_stable_sets(graph)
    verdict = alpha1_g0_characterization(graph, family)
    if verdict is None:
        return
    p3 = oracle_p3_plus(graph).holds
    if verdict.holds != p3:
        yield _error(f"G0 pair test says {verdict.holds} but the P3 oracle says {p3}")


@_suite("g0_components", "alpha1+ graphs that are not P3 stable have a witness inside one G0 component")
def check_g0_components(graph: Graph) -> Iterator[Finding]:
    family = max_stable_sets(graph)
    if family.xi != 1 or oracle_p3_plus(graph).holds:
        return
    if g0_component_witness(graph, family) is None:
        yield _error("no witness pair inside a single component of G0")


# -- König-Egerváry graphs -------------------------------------------------------------


@_suite("prop11", "three descriptions of König-Egerváry graphs agree")
def check_prop11(graph: Graph) -> Iterator[Finding]:
    conditions = ke_conditions(graph, max_stable_sets(graph))
    if not conditions.consistent:
        yield _error(f"descriptions disagree: {conditions}")


@_suite("lem4", "maximum matchings of K-E graphs cross every maximum stable set", max_n=6)
def check_lem4(graph: Graph) -> Iterator[Finding]:
    if not is_koenig_egervary(graph):
        return
    family = max_stable_sets(graph)
    for matching in maximum_matchings(graph):
        for s in family.sets:
            for u, v in matching:
                if (s >> u & 1) == (s >> v & 1):
                    yield _error(f"matching edge {u}-{v} does not cross S={s:#x}")
                    return


def _decomposes(matching: tuple[tuple[int, int], ...], mask: int) -> bool:
    return all((mask >> u & 1) == (mask >> v & 1) for u, v in matching)


@_suite("prop12", "mu is additive over splits that keep a maximum matching", max_n=6)
def check_prop12(graph: Graph) -> Iterator[Finding]:
    mu = maximum_matching(graph).mu
    matchings = maximum_matchings(graph)
    for mask in _splits(graph):
        if not any(_decomposes(m, mask) for m in matchings):
            continue
        part = induced_subgraph(graph, mask).graph
        rest = remove_vertices(graph, mask).graph
        total = maximum_matching(part).mu + maximum_matching(rest).mu
        if total != mu:
            yield _error(f"split {mask:#x}: mu(H) + mu(G-H) = {total} != {mu}")
            return


@_suite("prop14", "K-E splits that keep a maximum matching are K-E and alpha-additive", max_n=6)
def check_prop14(graph: Graph) -> Iterator[Finding]:
    if not is_koenig_egervary(graph):
        return
    alpha = stability_number(graph)
    matchings = maximum_matchings(graph)
    for mask in _splits(graph):
        if not any(_decomposes(m, mask) for m in matchings):
            continue
        part = induced_subgraph(graph, mask).graph
        rest = remove_vertices(graph, mask).graph
        if not (is_koenig_egervary(part) and is_koenig_egervary(rest)):
            yield _error(f"split {mask:#x} has a part that is not K-E")
            return
        if stability_number(part) + stability_number(rest) != alpha:
            yield _error(f"split {mask:#x}: alpha is not additive")
            return


@_suite("lem1", "alpha-additive parts of alpha++ graphs are alpha++ stable", max_n=6)
def check_lem1(graph: Graph) -> Iterator[Finding]:
    if not oracle_plus_plus(graph).holds:
        return
    alpha = stability_number(graph)
    for mask in _splits(graph):
        if stability_number(graph, within=mask) + stability_number(graph, within=graph.full_mask & ~mask) != alpha:
            continue
        part = induced_subgraph(graph, mask).graph
        if not oracle_plus_plus(part).holds:
            yield _error(f"alpha-additive part {mask:#x} is not alpha++ stable")
            return


@_suite("lem2", "order 6, Hamiltonian path and alpha = 3 imply not alpha++ stable")
def check_lem2(graph: Graph) -> Iterator[Finding]:
    if graph.n != 6 or stability_number(graph) != 3 or not has_hamiltonian_path(graph):
        return
    if oracle_plus_plus(graph).holds:
        yield _error("Hamiltonian path, alpha=3, yet alpha++ stable")


@_suite("prop5", "alpha++ stable K-E graphs have a pendant perfect matching")
def check_prop5(graph: Graph) -> Iterator[Finding]:
    if graph.n in (2, 3) and is_complete_minus_edge(graph):
        return
    if not is_koenig_egervary(graph) or not oracle_plus_plus(graph).holds:
        return
    if pendant_perfect_matching(graph) is None:
        yield _error("alpha++ stable K-E graph without a pendant perfect matching")


@_suite("prop6", "a pendant perfect matching implies P3 stability")
def check_prop6(graph: Graph) -> Iterator[Finding]:
    if pendant_perfect_matching(graph) is not None and not oracle_p3_plus(graph).holds:
        yield _error("pendant perfect matching but not P3 stable")


def _fast_path_agrees(name: str, fast: bool | None, graph: Graph) -> Iterator[Finding]:
    if fast is None:
        return
    oracle = oracle_plus_plus(graph).holds
    if fast != oracle:
        yield _error(f"{name} says {fast} but the alpha++ oracle says {oracle}")


@_suite("th1", "pendant perfect matching: alpha++ stable iff C4-free")
def check_th1(graph: Graph) -> Iterator[Finding]:
    yield from _fast_path_agrees("pendant/C4 test", fast_plus_plus_pendant(graph), graph)


@_suite("th3", "K-E graphs: alpha++ stable iff pendant perfect matching and C4-free")
def check_th3(graph: Graph) -> Iterator[Finding]:
    yield from _fast_path_agrees("K-E pendant/C4 test", fast_plus_plus_ke(graph), graph)


@_suite("cor1", "bipartite graphs: alpha++, C4-free with pendant matching, C4-free well-covered")
def check_cor1(graph: Graph) -> Iterator[Finding]:
    if not is_bipartite(graph) or isolated_vertices(graph):
        return
    yield from _fast_path_agrees("well-covered/C4 test", fast_plus_plus_bipartite(graph), graph)
    pendant = not has_c4(graph) and pendant_perfect_matching(graph) is not None
    yield from _fast_path_agrees("pendant/C4 test", pendant, graph)


@_suite("cycle_parity", "C_n is alpha++ stable iff n is odd", kind=PopulationKind.CYCLES)
def check_cycle_parity(graph: Graph) -> Iterator[Finding]:
    plus_plus = oracle_plus_plus(graph).holds
    if plus_plus != (graph.n % 2 == 1):
        yield _error(f"C{graph.n}: alpha++ oracle says {plus_plus}")


@_suite("tree", "trees: well-covered, pendant matching, very well-covered, alpha++ agree", kind=PopulationKind.TREES)
def check_tree(graph: Graph) -> Iterator[Finding]:
    values = (
        is_well_covered(graph),
        pendant_perfect_matching(graph) is not None,
        is_very_well_covered(graph),
        oracle_plus_plus(graph).holds,
    )
    if len(set(values)) != 1:
        yield _error(f"tree assertions disagree: {values}")


@_suite("prop13", "girth >= 6: five assertions agree", kind=PopulationKind.GIRTH6)
def check_prop13(graph: Graph) -> Iterator[Finding]:
    panel = girth6_panel(graph)
    if not panel.all_equal:
        yield _error(f"girth panel disagrees: {panel}")


@_suite(
    "matching",
    "blossom matching agrees with exhaustive search; bipartite graphs are K-E",
    random_max_n=DEFAULT_RANDOM_MAX_N,
)
def check_matching(graph: Graph) -> Iterator[Finding]:
    result = maximum_matching(graph)
    expected = matching_number_brute_force(graph)
    if result.mu != expected:
        yield _error(f"blossom mu={result.mu} but exhaustive search gives {expected}")
    covered = 0
    for u, v in result.matching:
        if not graph.has_edge(u, v) or covered & (bit(u) | bit(v)):
            yield _error(f"matching edge {u}-{v} is invalid")
        covered |= bit(u) | bit(v)
    if is_bipartite(graph) and not is_koenig_egervary(graph):
        yield _error("bipartite graph is not K-E")


# -- fixtures ------------------------------------------------------------------------------

FIXTURE_EXPECTATIONS: dict[str, dict[str, object]] = {
    "K3_PLUS_E": {"alpha": 2, "mu": 2, "is_ke": True, "plus": PlusClass.ALPHA1_PLUS, "p3_plus": False, "plus_plus": False},
    "K4_PLUS_E": {"alpha": 2, "mu": 2, "is_ke": False, "plus": PlusClass.ALPHA1_PLUS, "p3_plus": True, "plus_plus": True},
    "G1": {"alpha": 4, "mu": 4, "is_ke": True, "plus": PlusClass.ALPHA0_PLUS, "p3_plus": True, "plus_plus": False},
    "G2": {"alpha": 3, "mu": 3, "is_ke": True, "plus": PlusClass.ALPHA0_PLUS, "p3_plus": True, "plus_plus": True},
}


def _fixture_graphs() -> Iterator[Graph]:
    for name in sorted(FIXTURES):
        yield make_named(name)
        if FIXTURES[name].dotted:
            yield make_named(name, dotted=True)


@_suite("fixtures", "named fixtures classify as expected", kind=PopulationKind.FIXTURES)
def check_fixtures(graph: Graph) -> Iterator[Finding]:
    report = classify_full(graph)
    for name, expected in FIXTURE_EXPECTATIONS.items():
        if make_named(name) != graph:
            continue
        for key, value in expected.items():
            observed = getattr(report, key)
            if observed != value:
                yield _error(f"{name}: {key}={observed}, expected {value}")
    for name, fixture in FIXTURES.items():
        if fixture.dotted and make_named(name) == graph:
            dotted = make_named(name, dotted=True)
            if stability_number(dotted) >= report.alpha:
                yield _error(f"{name}: adding the dotted pair does not lower alpha")


# -- runner -----------------------------------------------------------------------------------


def _girth6_population(nmax: int) -> Iterator[Graph]:
    for n in range(2, nmax + 1):
        for graph in enumerate_min_girth(n, 6):
            components = connected_components(graph)
            if any(popcount(c) == 1 for c in components):
                continue
            if any(popcount(c) == 7 and is_cycle(induced_subgraph(graph, c).graph) for c in components):
                continue
            yield graph


def suite_population(
    suite: Suite,
    *,
    nmax: int = DEFAULT_VERIFY_NMAX,
    canonical: bool = False,
    tree_nmax: int = DEFAULT_TREE_NMAX,
    labeled_trees: bool = False,
    random_count: int = 0,
    seed: int = DEFAULT_SEED,
) -> tuple[str, Iterable[Graph], int | None]:
    """Describe and build the graphs a suite runs over (description, graphs, size or None)."""
    if not MIN_VERTICES <= nmax <= ENUMERATION_MAX_N:
        raise GraphError(f"nmax must be between {MIN_VERTICES} and {ENUMERATION_MAX_N}, got {nmax}")
    if suite.kind is PopulationKind.CYCLES:
        graphs = [cycle(n) for n in range(CYCLE_MIN_N, CYCLE_MAX_N + 1)]
        return f"cycles {CYCLE_MIN_N}<=n<={CYCLE_MAX_N}", graphs, len(graphs)
    if suite.kind is PopulationKind.TREES:
        if labeled_trees:
            if tree_nmax > LABELED_TREE_MAX_N:
                raise GraphError(f"labeled trees stop at n={LABELED_TREE_MAX_N}, got tree_nmax={tree_nmax}")
            size = sum(n ** (n - 2) for n in range(2, tree_nmax + 1))
            trees = _chain(*(enumerate_trees(n) for n in range(2, tree_nmax + 1)))
            return f"labeled trees 2<=n<={tree_nmax} (Prüfer)", trees, size
        unlabeled = [t for n in range(2, tree_nmax + 1) for t in enumerate_trees(n, labeled=False)]
        return f"trees 2<=n<={tree_nmax} up to isomorphism", unlabeled, len(unlabeled)
    if suite.kind is PopulationKind.FIXTURES:
        fixtures = list(_fixture_graphs())
        return "named fixtures", fixtures, len(fixtures)

    top = min(nmax, suite.max_n or nmax, ENUMERATION_MAX_N)
    if suite.kind is PopulationKind.GIRTH6:
        return f"girth>=6 labeled graphs 2<=n<={top}", _girth6_population(top), None

    label = "graphs up to isomorphism" if canonical else "labeled graphs"
    description = f"{label} 2<=n<={top}"
    graphs: Iterable[Graph] = population(top, canonical=canonical)
    size: int | None = population_size(top, canonical=canonical)
    if random_count:
        random_top = min(suite.random_max_n, suite.max_n or suite.random_max_n)
        description += f" + {random_count} random graphs n<={random_top} (seed {seed})"
        extra = random_graphs(None, random_count, seed=seed, max_n=random_top)
        graphs = _chain(graphs, extra)
        size = None if size is None else size + random_count
    return description, graphs, size


def _chain(*parts: Iterable[Graph]) -> Iterator[Graph]:
    for part in parts:
        yield from part


def _evaluate(suite_id: str, graph6: str) -> tuple[str, list[Finding]]:
    graph = parse_graph6(graph6)
    try:
        return graph6, list(SUITES[suite_id].check(graph))
    except InvariantError as exc:
        return graph6, [_error(f"invariant failed: {exc}")]


def run_suite(
    suite_id: str,
    *,
    nmax: int = DEFAULT_VERIFY_NMAX,
    canonical: bool = False,
    tree_nmax: int = DEFAULT_TREE_NMAX,
    labeled_trees: bool = False,
    random_count: int = 0,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    progress: bool = False,
) -> VerificationOutcome:
    if suite_id not in SUITES:
        raise KeyError(f"Unknown suite {suite_id!r}")
    suite = SUITES[suite_id]
    description, graphs, size = suite_population(
        suite,
        nmax=nmax,
        canonical=canonical,
        tree_nmax=tree_nmax,
        labeled_trees=labeled_trees,
        random_count=random_count,
        seed=seed,
    )
    logger.info("Running %s over %s", suite_id, description)
    codes = (to_graph6(g) for g in graphs)
    if jobs == 1:
        evaluated: Iterable[tuple[str, list[Finding]]] = (_evaluate(suite_id, g6) for g6 in codes)
    else:
        evaluated = Parallel(n_jobs=jobs, batch_size=PARALLEL_BATCH_SIZE, return_as="generator")(
            delayed(_evaluate)(suite_id, g6) for g6 in codes
        )

    collector = DiagnosticCollector()
    checked = 0
    for g6, found in tqdm(evaluated, total=size, desc=suite_id, unit="graph", disable=not progress):
        checked += 1
        for severity, message in found:
            if severity is Severity.ERROR:
                collector.add_error(suite_id, message, g6)
            else:
                collector.add_info(suite_id, message, g6)
    ordered = collector.sorted()
    outcome = VerificationOutcome(
        theorem_id=suite_id,
        title=suite.title,
        population=description,
        checked=checked,
        violations=tuple(d for d in ordered if d.severity is Severity.ERROR),
        notes=tuple(d for d in ordered if d.severity is not Severity.ERROR),
    )
    logger.info(
        "%s: %d graphs checked, %d violations", suite_id, outcome.checked, len(outcome.violations)
    )
    return outcome


def resolve_suite_ids(spec: str) -> list[str]:
    if spec.strip().lower() == "all":
        return list(SUITES)
    ids = [part.strip() for part in spec.split(",") if part.strip()]
    unknown = [suite_id for suite_id in ids if suite_id not in SUITES]
    if unknown:
        raise KeyError(f"Unknown suite id(s): {', '.join(unknown)}")
    return ids
