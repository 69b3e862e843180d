from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from stabgraph.bitset import bit, iter_bits, lowest, popcount
from stabgraph.constants import EXHAUSTIVE_COVER_MAX_SETS
from stabgraph.graph import (
    Edge,
    EdgePair,
    Graph,
    add_edge,
    add_edges,
    complement_edges,
    connected_components,
    girth,
    has_c4,
    induced_subgraph,
    is_bipartite,
    is_cycle,
    isolated_vertices,
    pendant_data,
    with_edges,
)
from stabgraph.matching import MatchingResult, maximum_matching, pendant_perfect_matching
from stabgraph.stable_sets import (
    BudgetExceededError,
    StableSetFamily,
    Verdict,
    core_avoidable_pairs,
    family_core,
    is_very_well_covered,
    is_well_covered,
    max_stable_sets,
    resolve_omega_cap,
    stability_number,
)

logger = logging.getLogger(__name__)


class PreconditionError(ValueError):
    pass


class InvariantError(RuntimeError):
    pass


class PlusClass(Enum):
    ALPHA0_PLUS = "ALPHA0_PLUS"
    ALPHA1_PLUS = "ALPHA1_PLUS"
    NOT_PLUS = "NOT_PLUS"

    @property
    def is_plus(self) -> bool:
        return self is not PlusClass.NOT_PLUS


@dataclass(frozen=True, slots=True)
class CoverWitness:
    """Two anchor pairs such that every maximum stable set contains one of them."""

    omega1_anchor: Edge
    omega2_anchor: Edge
    xi1: int
    xi2: int

    @property
    def edges(self) -> tuple[Edge, ...]:
        if self.omega1_anchor == self.omega2_anchor:
            return (self.omega1_anchor,)
        return (self.omega1_anchor, self.omega2_anchor)


@dataclass(frozen=True, slots=True)
class KEDecomposition:
    stable: int
    rest: int
    matching: tuple[Edge, ...]


@dataclass(frozen=True, slots=True)
class KEConditions:
    identity: bool
    split_maximum: bool
    split_stable: bool

    @property
    def consistent(self) -> bool:
        return self.identity == self.split_maximum == self.split_stable


@dataclass(frozen=True, slots=True)
class SixAssertions:
    plus_plus: bool
    plus_and_pairwise_meet: bool
    triple_meet: bool
    plus_and_small_cores: bool
    p3_and_no_disjoint_cover: bool
    no_cover: bool | None

    def values(self, *, include_disjoint: bool = True) -> list[bool]:
        result = [
            self.plus_plus,
            self.plus_and_pairwise_meet,
            self.triple_meet,
            self.plus_and_small_cores,
        ]
        if include_disjoint:
            result.append(self.p3_and_no_disjoint_cover)
        if self.no_cover is not None:
            result.append(self.no_cover)
        return result

    def agree(self, *, include_disjoint: bool = True) -> bool:
        return len(set(self.values(include_disjoint=include_disjoint))) == 1


@dataclass(frozen=True, slots=True)
class Girth6Panel:
    well_covered: bool
    pendant_perfect: bool
    very_well_covered: bool
    ke_alpha0_pendants: bool
    ke_plus_plus: bool

    def values(self) -> tuple[bool, ...]:
        return (
            self.well_covered,
            self.pendant_perfect,
            self.very_well_covered,
            self.ke_alpha0_pendants,
            self.ke_plus_plus,
        )

    @property
    def all_equal(self) -> bool:
        return len(set(self.values())) == 1


@dataclass(frozen=True, slots=True)
class StabilityReport:
    n: int
    alpha: int
    mu: int
    xi: int
    omega_size: int
    is_ke: bool
    plus: PlusClass
    p3_plus: bool
    plus_plus: bool
    witnesses: dict[str, tuple[Edge, ...]] = field(default_factory=dict)
    fast_paths: dict[str, tuple[str, ...]] = field(default_factory=dict)
    notes: tuple[str, ...] = ()


# -- oracles -------------------------------------------------------------------


def _drops(graph: Graph, extended: Graph, alpha: int | None = None) -> bool:
    base = stability_number(graph) if alpha is None else alpha
    return stability_number(extended) < base


def oracle_alpha_plus(graph: Graph) -> Verdict:
    alpha = stability_number(graph)
    for edge in complement_edges(graph):
        if _drops(graph, add_edge(graph, edge), alpha):
            return Verdict(False, edge)
    return Verdict(True)


def oracle_p3_plus(graph: Graph) -> Verdict:
    alpha = stability_number(graph)
    non_edges = complement_edges(graph)
    for e1, e2 in combinations(non_edges, 2):
        if not set(e1) & set(e2):
            continue
        pair = EdgePair(e1, e2)
        if _drops(graph, add_edges(graph, pair), alpha):
            return Verdict(False, pair)
    return Verdict(True)


def oracle_plus_plus(graph: Graph) -> Verdict:
    """Add every pair of distinct non-edges; with a single non-edge, add it alone.

    The witness is an EdgePair, or a single edge in the one-non-edge case.
    """
    alpha = stability_number(graph)
    non_edges = complement_edges(graph)
    if len(non_edges) == 1:
        edge = non_edges[0]
        if _drops(graph, add_edge(graph, edge), alpha):
            return Verdict(False, edge)
        return Verdict(True)
    for e1, e2 in combinations(non_edges, 2):
        pair = EdgePair(e1, e2)
        if _drops(graph, add_edges(graph, pair), alpha):
            return Verdict(False, pair)
    return Verdict(True)


def fast_alpha_plus(graph: Graph, family: StableSetFamily) -> PlusClass:
    if family.xi == 0:
        return PlusClass.ALPHA0_PLUS
    if family.xi == 1:
        return PlusClass.ALPHA1_PLUS
    return PlusClass.NOT_PLUS


# -- cover criteria --------------------------------------------------------------


def _edge_mask(edge: Edge) -> int:
    return bit(edge[0]) | bit(edge[1])


def _anchored_cover(family: StableSetFamily, first: Edge, second: Edge) -> CoverWitness | None:
    m1 = _edge_mask(first)
    m2 = _edge_mask(second)
    if not all(s & m1 == m1 or s & m2 == m2 for s in family.sets):
        return None
    omega1 = family.containing(m1) or family.containing(m2)
    omega2 = family.containing(m2) or omega1
    return CoverWitness(first, second, popcount(family_core(omega1)), popcount(family_core(omega2)))


def cover_criterion_plus_plus(graph: Graph, family: StableSetFamily) -> CoverWitness | None:
    non_edges = complement_edges(graph)
    if len(non_edges) == 1:
        return _anchored_cover(family, non_edges[0], non_edges[0])
    for first, second in combinations(non_edges, 2):
        witness = _anchored_cover(family, first, second)
        if witness is not None:
            return witness
    return None


def cover_criterion_p3(graph: Graph, family: StableSetFamily) -> CoverWitness | None:
    if family.xi < 1:
        return None
    for y in iter_bits(family.core):
        others = graph.full_mask & ~graph.closed_neighborhood(y)
        for x, z in combinations(iter_bits(others), 2):
            first = (min(x, y), max(x, y))
            second = (min(y, z), max(y, z))
            witness = _anchored_cover(family, first, second)
            if witness is not None:
                return witness
    return None


def exhaustive_cover(family: StableSetFamily) -> tuple[int, int] | None:
    """Search every two-part cover of Omega for one with both cores of size >= 2.

    Returns the index masks (over ``family.sets``) of the two parts, or None.
    """
    count = len(family.sets)
    if count > EXHAUSTIVE_COVER_MAX_SETS:
        raise BudgetExceededError(EXHAUSTIVE_COVER_MAX_SETS, "sets for an exhaustive cover search")
    everything = (1 << count) - 1
    cores = [-1] * (1 << count)
    for subset in range(1, 1 << count):
        low = lowest(subset)
        cores[subset] = cores[subset & ~bit(low)] & family.sets[low]
    for first in range(1, 1 << count):
        if popcount(cores[first]) < 2:
            continue
        # enlarging the second part only shrinks its core
        second = everything & ~first or everything
        if popcount(cores[second]) >= 2:
            return first, second
    return None


# -- König-Egerváry ---------------------------------------------------------------


def is_koenig_egervary(graph: Graph) -> bool:
    return stability_number(graph) + maximum_matching(graph).mu == graph.n


def _cross_matching(graph: Graph, stable: int) -> MatchingResult:
    cross = [(u, v) for u, v in graph.edges() if (stable >> u & 1) != (stable >> v & 1)]
    return maximum_matching(Graph.from_edges(graph.n, cross))


def ke_decompose(
    graph: Graph,
    family: StableSetFamily | None = None,
    matching: MatchingResult | None = None,
) -> KEDecomposition | None:
    family = family or max_stable_sets(graph)
    matching = matching or maximum_matching(graph)
    if family.alpha + matching.mu != graph.n:
        return None
    stable = family.sets[0]
    for u, v in matching.matching:
        if (stable >> u & 1) == (stable >> v & 1):
            raise InvariantError(
                f"Matching edge {u}-{v} does not cross the maximum stable set {stable:#x}"
            )
    return KEDecomposition(stable, graph.full_mask & ~stable, matching.matching)


def _stable_sets_at_least(graph: Graph, size: int, cap: int) -> list[int]:
    found: list[int] = []

    def extend(chosen: int, count: int, candidates: int) -> None:
        if count >= size:
            found.append(chosen)
            if len(found) > cap:
                raise BudgetExceededError(cap, "stable sets")
        for v in iter_bits(candidates):
            above = candidates & ~((bit(v) << 1) - 1)
            if count + 1 + popcount(above) < size:
                break
            extend(chosen | bit(v), count + 1, above & ~graph.adj[v])

    extend(0, 0, graph.full_mask)
    return found


def ke_conditions(
    graph: Graph, family: StableSetFamily, *, cap: int | None = None
) -> KEConditions:
    """The three equivalent descriptions of a König-Egerváry graph."""
    mu = maximum_matching(graph).mu
    identity = family.alpha + mu == graph.n
    split_maximum = any(
        graph.n - popcount(s) == mu and popcount(s) >= mu for s in family.sets
    )
    limit = resolve_omega_cap(cap)
    split_stable = False
    for stable in _stable_sets_at_least(graph, (graph.n + 1) // 2, limit):
        rest = graph.n - popcount(stable)
        if _cross_matching(graph, stable).mu == rest:
            split_stable = True
            break
    return KEConditions(identity, split_maximum, split_stable)


# -- fast paths ----------------------------------------------------------------------


def fast_plus_plus_ke(graph: Graph) -> bool | None:
    if not is_koenig_egervary(graph):
        return None
    return pendant_perfect_matching(graph) is not None and not has_c4(graph)


def fast_plus_plus_bipartite(graph: Graph) -> bool | None:
    if not is_bipartite(graph) or isolated_vertices(graph):
        return None
    return is_well_covered(graph) and not has_c4(graph)


def fast_plus_plus_pendant(graph: Graph) -> bool | None:
    if pendant_perfect_matching(graph) is None:
        return None
    return not has_c4(graph)


def alpha1_g0_characterization(graph: Graph, family: StableSetFamily) -> Verdict | None:
    """Decide P3-stability of an alpha_1^+ graph through G0 = G - N[v].

    Returns None unless the core is a single vertex v. When N[v] covers the
    whole graph no pair exists and the verdict holds vacuously.
    """
    if family.xi != 1:
        return None
    v = lowest(family.core)
    remaining = graph.full_mask & ~graph.closed_neighborhood(v)
    if not remaining:
        return Verdict(True)
    g0 = induced_subgraph(graph, remaining)
    result = core_avoidable_pairs(g0.graph, max_stable_sets(g0.graph))
    if result.holds:
        return result
    x, y = result.witness
    return Verdict(False, (g0.original(x), g0.original(y)))


def g0_component_witness(graph: Graph, family: StableSetFamily) -> tuple[int, int] | None:
    """Find x, y in one component of G0 with alpha(G + xv + yv) < alpha(G)."""
    if family.xi != 1:
        return None
    v = lowest(family.core)
    remaining = graph.full_mask & ~graph.closed_neighborhood(v)
    if not remaining:
        return None
    g0 = induced_subgraph(graph, remaining)
    for component in connected_components(g0.graph):
        for x, y in combinations(iter_bits(g0.lift(component)), 2):
            if _drops(graph, with_edges(graph, ((x, v), (y, v))), family.alpha):
                return (x, y)
    return None


def _hits_every_set(graph: Graph, family: StableSetFamily, x: int) -> bool:
    if not family.core >> x & 1:
        return False
    for y, z in combinations(iter_bits(graph.full_mask & ~bit(x)), 2):
        pair = bit(y) | bit(z)
        if all(s & pair for s in family.sets):
            return True
    return False


def prop2_condition(graph: Graph, family: StableSetFamily, *, p3_plus: bool | None = None) -> bool:
    """P3-stability, or a unique x such that every maximum stable set holds x and one of y, z."""
    if p3_plus is None:
        p3_plus = oracle_p3_plus(graph).holds
    if p3_plus:
        return True
    holders = [x for x in graph.vertices if _hits_every_set(graph, family, x)]
    return len(holders) == 1


def six_assertions(graph: Graph, family: StableSetFamily) -> SixAssertions:
    non_edges = complement_edges(graph)
    omega = set(family.sets)
    plus = oracle_alpha_plus(graph).holds
    families = {e: max_stable_sets(add_edge(graph, e)) for e in non_edges}
    extended = {e: set(f.sets) for e, f in families.items()}

    # e1 == e2 is part of the quantifier
    pairwise = True
    triple = True
    for i, e1 in enumerate(non_edges):
        for e2 in non_edges[i:]:
            meet = extended[e1] & extended[e2]
            pairwise = pairwise and bool(meet)
            triple = triple and bool(meet & omega)

    small_cores = all(f.xi <= 1 for f in families.values())

    disjoint_cover = False
    for e1, e2 in combinations(non_edges, 2):
        if set(e1) & set(e2):
            continue
        if _anchored_cover(family, e1, e2) is not None:
            disjoint_cover = True
            break

    no_cover: bool | None
    if len(family.sets) <= EXHAUSTIVE_COVER_MAX_SETS:
        no_cover = exhaustive_cover(family) is None
    else:
        no_cover = None

    return SixAssertions(
        plus_plus=oracle_plus_plus(graph).holds,
        plus_and_pairwise_meet=plus and pairwise,
        triple_meet=triple,
        plus_and_small_cores=plus and small_cores,
        p3_and_no_disjoint_cover=oracle_p3_plus(graph).holds and not disjoint_cover,
        no_cover=no_cover,
    )


def girth6_panel(graph: Graph) -> Girth6Panel:
    if graph.n < 2:
        raise PreconditionError("Girth panel needs at least two vertices")
    if girth(graph) < 6:
        raise PreconditionError(f"Girth panel needs girth >= 6, got {girth(graph)}")
    for component in connected_components(graph):
        size = popcount(component)
        if size == 1:
            raise PreconditionError("Girth panel excludes isolated vertices (K1 components)")
        if size == 7 and is_cycle(induced_subgraph(graph, component).graph):
            raise PreconditionError("Girth panel excludes C7 components")

    family = max_stable_sets(graph)
    ke = is_koenig_egervary(graph)
    pendant_edges = len(pendant_data(graph).edges)
    return Girth6Panel(
        well_covered=is_well_covered(graph),
        pendant_perfect=pendant_perfect_matching(graph) is not None,
        very_well_covered=is_very_well_covered(graph),
        ke_alpha0_pendants=ke and family.xi == 0 and pendant_edges == family.alpha,
        ke_plus_plus=ke and oracle_plus_plus(graph).holds,
    )


# -- aggregate -------------------------------------------------------------------------


def _witness_edges(witness: object) -> tuple[Edge, ...]:
    if isinstance(witness, EdgePair):
        return witness.edges
    if isinstance(witness, tuple) and len(witness) == 2 and isinstance(witness[0], int):
        return (witness,)
    raise InvariantError(f"Unexpected witness {witness!r}")


def _cross_check(flag: str, name: str, expected: bool, observed: bool | None) -> None:
    if observed is not None and observed != expected:
        raise InvariantError(f"{name} says {flag}={observed} but the oracle says {expected}")


def classify_full(graph: Graph, *, cap: int | None = None) -> StabilityReport:
    family = max_stable_sets(graph, cap=cap)
    matching = maximum_matching(graph)
    is_ke = family.alpha + matching.mu == graph.n
    notes: list[str] = []

    plus_verdict = oracle_alpha_plus(graph)
    p3_verdict = oracle_p3_plus(graph)
    pp_verdict = oracle_plus_plus(graph)

    witnesses: dict[str, tuple[Edge, ...]] = {}
    for flag, verdict in (("plus", plus_verdict), ("p3_plus", p3_verdict), ("plus_plus", pp_verdict)):
        if verdict.holds:
            continue
        edges = _witness_edges(verdict.witness)
        if stability_number(with_edges(graph, edges)) >= family.alpha:
            raise InvariantError(f"Witness {edges} for {flag} does not lower alpha")
        witnesses[flag] = edges

    fast_paths: dict[str, list[str]] = {"plus": [], "p3_plus": [], "plus_plus": []}

    by_core = fast_alpha_plus(graph, family)
    _cross_check("plus", "core size", plus_verdict.holds, by_core.is_plus)
    fast_paths["plus"].append("core_size")
    plus = by_core if plus_verdict.holds else PlusClass.NOT_PLUS

    _cross_check("p3_plus", "P3 cover", p3_verdict.holds, cover_criterion_p3(graph, family) is None)
    fast_paths["p3_plus"].append("p3_cover")
    g0 = alpha1_g0_characterization(graph, family)
    if g0 is not None:
        _cross_check("p3_plus", "G0 pairs", p3_verdict.holds, g0.holds)
        fast_paths["p3_plus"].append("g0_pairs")
        if not graph.full_mask & ~graph.closed_neighborhood(lowest(family.core)):
            notes.append("G0 is empty; the G0 pair test holds vacuously")

    _cross_check(
        "plus_plus", "pair cover", pp_verdict.holds, cover_criterion_plus_plus(graph, family) is None
    )
    fast_paths["plus_plus"].append("pair_cover")
    for name, fast in (
        ("ke_pendant_c4", fast_plus_plus_ke(graph)),
        ("bipartite_well_covered_c4", fast_plus_plus_bipartite(graph)),
        ("pendant_c4", fast_plus_plus_pendant(graph)),
    ):
        if fast is not None:
            _cross_check("plus_plus", name, pp_verdict.holds, fast)
            fast_paths["plus_plus"].append(name)

    if pp_verdict.holds and not p3_verdict.holds:
        raise InvariantError("plus_plus holds but p3_plus does not")

    logger.debug(
        "Classified n=%d alpha=%d mu=%d xi=%d plus=%s p3=%s pp=%s",
        graph.n, family.alpha, matching.mu, family.xi, plus.value, p3_verdict.holds, pp_verdict.holds,
    )
    return StabilityReport(
        n=graph.n,
        alpha=family.alpha,
        mu=matching.mu,
        xi=family.xi,
        omega_size=len(family.sets),
        is_ke=is_ke,
        plus=plus,
        p3_plus=p3_verdict.holds,
        plus_plus=pp_verdict.holds,
        witnesses=witnesses,
        fast_paths={flag: tuple(names) for flag, names in fast_paths.items()},
        notes=tuple(notes),
    )
