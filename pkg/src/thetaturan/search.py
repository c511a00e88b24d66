"""Exact brute-force extremal oracle over isomorphism classes, a randomized
edge-maximal lower-bound search, the edge-plus-weighted-clique maximizer, and
the formula-versus-search report table."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .construct import apex_turan, behrend_set, matched_bipartite, ruzsa_szemeredi
from .errors import LimitError
from .graphs import (Graph, canonical_key, count_cliques, graph6_decode,
                     graph6_encode, pad, turan)
from .subgraph import contains_k_disjoint, creates_k_disjoint_through_edge
from .theta import ThetaSpec, build_theta, is_edge_critical, turan_formula

ORACLE_MAX_N = 10
PHI_MAX_N = 9
LOWER_BOUND_MAX_N = 200
WITNESS_CAP = 100


@dataclass(frozen=True)
class ForbiddenSpec:
    """Pattern plus copy count: copies=1 forbids the pattern itself,
    copies=k forbids k pairwise vertex-disjoint copies."""

    pattern: Graph
    copies: int = 1
    label: str = ""

    def __post_init__(self):
        if self.copies < 1:
            raise ValueError("copies must be positive")

    def describe(self) -> str:
        if self.label:
            return self.label
        return f"{self.copies}x{graph6_encode(self.pattern)}"


@dataclass
class ExtremalResult:
    n: int
    objective: str
    value: object            # int, or Fraction for weighted objectives
    witnesses: list[str]     # graph6, sorted, capped at WITNESS_CAP
    witnesses_total: int
    graphs_examined: int
    pruned: int
    exact: bool
    details: dict = field(default_factory=dict)


def _enumerate_and_score(n: int, forbidden: ForbiddenSpec | None, objective):
    """Score every isomorphism class of forbidden-free graphs on n vertices.

    Levelwise edge augmentation from the empty graph with canonical-key
    deduplication per edge count; forbidden-freeness is closed under edge
    deletion, so every forbidden-free class is reached. The check after
    adding edge uv only searches embeddings through uv.

    Returns (best, attaining graph6 list, examined, pruned).
    """
    empty = Graph(n)
    best = objective(empty)
    attaining = [graph6_encode(empty)]
    examined = 1
    pruned = 0
    frontier: dict[bytes, tuple[Graph, object]] = {canonical_key(empty): (empty, best)}
    while frontier:
        nxt: dict[bytes, tuple[Graph, object]] = {}
        for key in sorted(frontier):
            g, g_score = frontier[key]
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    child = g.with_edge(u, v)
                    if forbidden is not None and creates_k_disjoint_through_edge(
                            child, forbidden.pattern, forbidden.copies, u, v):
                        pruned += 1
                        continue
                    ck = canonical_key(child)
                    if ck in nxt:
                        continue
                    score = objective(child)
                    # premise of the search: the objective never drops when an
                    # edge is added
                    assert score >= g_score, "objective not edge-monotone"
                    examined += 1
                    if score > best:
                        best = score
                        attaining = [graph6_encode(child)]
                    elif score == best:
                        attaining.append(graph6_encode(child))
                    nxt[ck] = (child, score)
        frontier = nxt
    return best, sorted(attaining), examined, pruned


def extremal_oracle(n: int, r: int, forbidden: ForbiddenSpec) -> ExtremalResult:
    """Exact maximum of the r-clique count over all forbidden-free graphs on
    n vertices, with every extremal class as a witness.

    Full enumeration is limited to n <= 10; larger n is rejected toward
    edge_maximal_lower_bound. Witnesses are re-checked forbidden-free with
    the standalone disjoint-copy search after the run.
    """
    if n > ORACLE_MAX_N:
        raise LimitError(
            f"exhaustive oracle limited to n <= {ORACLE_MAX_N}; "
            "use edge_maximal_lower_bound beyond")
    if r < 2:
        raise ValueError("r must be at least 2")
    value, witnesses, examined, pruned = _enumerate_and_score(
        n, forbidden, lambda g: count_cliques(g, r))
    _recheck_witnesses(witnesses, forbidden)
    return ExtremalResult(
        n=n, objective=f"max N_{r}", value=value,
        witnesses=witnesses[:WITNESS_CAP], witnesses_total=len(witnesses),
        graphs_examined=examined, pruned=pruned, exact=True)


def _recheck_witnesses(witnesses: list[str], forbidden: ForbiddenSpec | None) -> None:
    if forbidden is None:
        return
    for w in witnesses[:WITNESS_CAP]:
        g = graph6_decode(w)
        if contains_k_disjoint(g, forbidden.pattern, forbidden.copies) is not None:
            raise AssertionError(f"witness {w} fails the independent freeness re-check")


def phi_oracle(n: int, r: int, c: Fraction, f_spec: ThetaSpec) -> ExtremalResult:
    """Exact maximum of e(G) + c*N_r(G) over graphs avoiding the given
    edge-critical theta graph, in exact rational arithmetic.

    Reports whether the maximum equals floor(n^2/4) and whether the balanced
    complete bipartite graph is the unique witness; small n routinely beats
    the bound, which is reported, not treated as an error.
    """
    if n > PHI_MAX_N:
        raise LimitError(f"phi oracle limited to n <= {PHI_MAX_N}")
    if r < 3:
        raise ValueError("r must be at least 3")
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    if not is_edge_critical(f_spec):
        raise ValueError(f"{f_spec} is not edge-critical")
    pattern = build_theta(f_spec)
    forbidden = ForbiddenSpec(pattern, 1, str(f_spec))
    p, q = c.numerator, c.denominator
    # scale to integers: maximize q*e + p*N_r
    scaled, witnesses, examined, pruned = _enumerate_and_score(
        n, forbidden, lambda g: q * g.edge_count + p * count_cliques(g, r))
    _recheck_witnesses(witnesses, forbidden)
    value = Fraction(scaled, q)
    bound = n * n // 4
    if value > bound:
        relation = "exceeds"
    elif value == bound:
        relation = "equals"
    else:
        relation = "below"
    tkey = canonical_key(turan(2, n))
    unique_turan = (len(witnesses) == 1
                    and canonical_key(graph6_decode(witnesses[0])) == tkey)
    return ExtremalResult(
        n=n, objective=f"max e + ({p}/{q})*N_{r}", value=value,
        witnesses=witnesses[:WITNESS_CAP], witnesses_total=len(witnesses),
        graphs_examined=examined, pruned=pruned, exact=True,
        details={"bound": bound, "relation": relation,
                 "unique_turan_witness": unique_turan})


def edge_maximal_lower_bound(n: int, r: int, forbidden: ForbiddenSpec,
                             budget: int = 32, seed: int = 0,
                             theta_spec: ThetaSpec | None = None) -> ExtremalResult:
    """Certified lower bound on the extremal r-clique count for n beyond the
    exhaustive range.

    Randomized greedy edge addition until edge-maximal, best of `budget`
    restarts, seeded alongside the relevant explicit constructions (apex,
    matched bipartite, edge-disjoint triangle system) whenever those are
    forbidden-free. A rejected edge never becomes addable, so one shuffled
    pass per restart reaches an edge-maximal graph. The winner is re-checked
    forbidden-free.
    """
    if n > LOWER_BOUND_MAX_N:
        raise LimitError(f"lower-bound search limited to n <= {LOWER_BOUND_MAX_N}")
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    starts: list[tuple[str, Graph]] = []
    k = forbidden.copies
    if theta_spec is not None and is_edge_critical(theta_spec) and n >= k + 1 and k >= 2:
        starts.append(("apex_turan", apex_turan(k, n)))
    if n >= 2:
        starts.append(("matched_bipartite", matched_bipartite(n)))
    if n >= 6:
        m = n // 6
        ts = ruzsa_szemeredi(m, behrend_set(m))
        starts.append(("ruzsa_szemeredi", pad(ts.graph.to_dense(), n)))
    seeds_used = []
    best_score = -1
    best_g6 = None
    examined = 0
    for name, g in starts:
        if contains_k_disjoint(g, forbidden.pattern, forbidden.copies) is not None:
            continue
        seeds_used.append(name)
        score, g6 = _greedy_complete(g, forbidden, r, random.Random(seed))
        examined += 1
        if score > best_score or (score == best_score and g6 < best_g6):
            best_score, best_g6 = score, g6
    for i in range(max(1, budget)):
        score, g6 = _greedy_complete(Graph(n), forbidden, r,
                                     random.Random(seed * 1000003 + i + 1))
        examined += 1
        if score > best_score or (score == best_score and g6 < best_g6):
            best_score, best_g6 = score, g6
    winner = graph6_decode(best_g6)
    if contains_k_disjoint(winner, forbidden.pattern, forbidden.copies) is not None:
        raise AssertionError("lower-bound witness fails the freeness re-check")
    return ExtremalResult(
        n=n, objective=f"lower bound on max N_{r}", value=best_score,
        witnesses=[best_g6], witnesses_total=1, graphs_examined=examined,
        pruned=0, exact=False, details={"seeds": seeds_used, "budget": budget})


def _greedy_complete(g: Graph, forbidden: ForbiddenSpec, r: int,
                     rng: random.Random) -> tuple[int, str]:
    n = g.n
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if not g.has_edge(u, v)]
    rng.shuffle(non_edges)
    for u, v in non_edges:
        child = g.with_edge(u, v)
        if not creates_k_disjoint_through_edge(child, forbidden.pattern,
                                               forbidden.copies, u, v):
            g = child
    return count_cliques(g, r), graph6_encode(g)


def theorem2_report(n_values, k: int, r: int, f_spec: ThetaSpec,
                    budget: int = 16, seed: int = 0) -> dict:
    """Per-n comparison of the closed formula against the oracle (small n)
    or the heuristic lower bound, plus the complete-graph competitor on
    k|F|-1 vertices that is always k-copy free.

    Rejected unless the theta spec is edge-critical (the formula's
    hypothesis). For r >= k+2 no formula applies and rows carry only the
    search side.
    """
    if not is_edge_critical(f_spec):
        raise ValueError(f"{f_spec} is not edge-critical; the formula does not apply")
    if r < 3:
        raise ValueError("r must be at least 3")
    if k < 2:
        raise ValueError("k must be at least 2")
    pattern = build_theta(f_spec)
    forbidden = ForbiddenSpec(pattern, k, f"{k}x{f_spec}")
    fsize = pattern.n
    rows = []
    crossover = None
    for n in n_values:
        formula = None
        if r <= k + 1 and n >= k:
            formula = turan_formula(n, k, r)
        clique_competitor = comb(min(n, k * fsize - 1), r)
        if n <= ORACLE_MAX_N:
            res = extremal_oracle(n, r, forbidden)
            value, kind = res.value, "exact"
        else:
            res = edge_maximal_lower_bound(n, r, forbidden, budget=budget,
                                           seed=seed, theta_spec=f_spec)
            value, kind = res.value, "lower_bound"
        gap = None if formula is None else value - formula
        if (crossover is None and formula is not None
                and formula >= clique_competitor):
            crossover = n
        rows.append({"n": n, "formula": formula, "value": value,
                     "value_kind": kind, "clique_competitor": clique_competitor,
                     "gap": gap})
    note = None
    if r >= k + 2:
        note = "r >= k+2: subquadratic regime, no closed formula"
    return {"k": k, "r": r, "forbidden": str(f_spec), "rows": rows,
            "crossover_n": crossover, "note": note}


def all_graph_classes(n: int):
    """Every isomorphism class on n vertices, via the same levelwise
    augmentation used by the oracle (no forbidden pattern)."""
    _best, witnesses, examined, _pruned = _enumerate_and_score(
        n, None, lambda g: 0)
    assert len(witnesses) == examined
    return [graph6_decode(w) for w in witnesses]
