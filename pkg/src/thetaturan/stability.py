"""Minimum-degree peeling and near-bipartition extraction from dense graphs
that avoid a fixed edge-critical theta graph."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, induced_subgraph, is_bipartite
from .subgraph import find_embedding
from .theta import ThetaSpec, build_theta, is_edge_critical

EXACT_BIPARTITION_MAX_N = 20


@dataclass(frozen=True)
class PeelResult:
    """Outcome of density-threshold peeling.

    Every survivor has degree >= alpha*|kept| inside the survivor graph; each
    removed vertex had degree < alpha*j in the j-vertex graph it left.
    """

    kept: tuple[int, ...]
    removal_order: tuple[tuple[int, int], ...]  # (vertex, degree at removal)
    alpha: Fraction


def degree_peel(g: Graph, alpha) -> PeelResult:
    """Repeatedly remove a minimum-degree vertex while the minimum degree is
    below alpha times the current order; ties go to the lowest index.
    Comparisons are exact rational arithmetic."""
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie strictly between 0 and 1")
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    removed = []
    while alive:
        j = len(alive)
        v = min(alive, key=lambda x: (deg[x], x))
        # d < alpha*j  <=>  d*den < num*j
        if deg[v] * alpha.denominator >= alpha.numerator * j:
            break
        removed.append((v, deg[v]))
        alive.remove(v)
        for u in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
    return PeelResult(tuple(sorted(alive)), tuple(removed), alpha)


@dataclass(frozen=True)
class Bipartition:
    """Vertex split A|B with the number of edges inside the parts; part_a is
    the side containing the lowest surviving vertex."""

    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    internal_edges: int
    method: str  # "exact" or "local"


def _internal_count(g: Graph, side: list[int]) -> int:
    return sum(1 for u, v in g.edges() if side[u] == side[v])


def min_internal_bipartition(g: Graph, budget: int = 32, seed: int = 0) -> Bipartition:
    """Bipartition minimizing e(A)+e(B): exhaustive for n <= 20, otherwise
    single-vertex-move local search over `budget` random restarts plus a
    BFS two-coloring seed (so genuinely bipartite inputs score 0).

    The returned partition is 1-move-optimal; ties prefer the
    lexicographically least A.
    """
    n = g.n
    if n == 0:
        return Bipartition((), (), 0, "exact")
    if n <= EXACT_BIPARTITION_MAX_N:
        side = [0] * n
        cur = _internal_count(g, side)
        best = cur
        best_mask = 0
        best_rev = 0
        # Gray-code walk over assignments of vertices 1..n-1 (vertex 0 fixed);
        # lex-least A means preferring a 0 at the LOWEST differing mask bit,
        # i.e. comparing bit-reversed masks
        mask = 0
        for i in range(1, 1 << (n - 1)):
            gray = i ^ (i >> 1)
            v = (gray ^ mask).bit_length()  # changed bit b holds vertex b+1
            mask = gray
            same = sum(1 for u in g.neighbors(v) if side[u] == side[v])
            other = g.degree(v) - same
            cur += other - same
            side[v] ^= 1
            if cur < best:
                best = cur
                best_mask = mask
                best_rev = _reverse_bits(mask, n - 1)
            elif cur == best:
                rev = _reverse_bits(mask, n - 1)
                if rev < best_rev:
                    best_mask = mask
                    best_rev = rev
        part_a = tuple(v for v in range(n)
                       if v == 0 or not (best_mask >> (v - 1)) & 1)
        part_b = tuple(v for v in range(n) if v != 0 and (best_mask >> (v - 1)) & 1)
        return Bipartition(part_a, part_b, best, "exact")

    # local search: BFS seed first, then seeded random restarts
    seeds = []
    parts = is_bipartite(g)
    if parts is not None:
        side0 = [0] * n
        for v in parts[1]:
            side0[v] = 1
        seeds.append(side0)
    else:
        color = _bfs_two_color(g)
        seeds.append(color)
    rng = random.Random(seed)
    for _ in range(budget):
        seeds.append([rng.randint(0, 1) for _ in range(n)])
    best_side = None
    best = None
    best_key = None
    for side in seeds:
        side = _one_move_descend(g, list(side))
        val = _internal_count(g, side)
        key_a = tuple(v for v in range(n) if side[v] == side[0])
        if best is None or val < best or (val == best and key_a < best_key):
            best = val
            best_side = side
            best_key = key_a
    part_a = tuple(v for v in range(n) if best_side[v] == best_side[0])
    part_b = tuple(v for v in range(n) if best_side[v] != best_side[0])
    return Bipartition(part_a, part_b, best, "local")


def _reverse_bits(mask: int, width: int) -> int:
    out = 0
    for b in range(width):
        if (mask >> b) & 1:
            out |= 1 << (width - 1 - b)
    return out


def _bfs_two_color(g: Graph) -> list[int]:
    """BFS parity coloring; proper on bipartite graphs, a seed otherwise."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    queue.append(v)
    return color


def _one_move_descend(g: Graph, side: list[int]) -> list[int]:
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            same = sum(1 for u in g.neighbors(v) if side[u] == side[v])
            other = g.degree(v) - same
            if same > other:
                side[v] ^= 1
                improved = True
    return side


def stability_extract(g: Graph, eps, f_spec: ThetaSpec,
                      budget: int = 32, seed: int = 0) -> dict:
    """Peel at threshold 1/2 - eps, then split the survivor to minimize
    internal edges, and report every hypothesis and conclusion check
    separately (nothing is enforced; small inputs routinely fail).

    Clause checks use exact rationals. When the bipartition came from local
    search, a failed part-size or zero-internal-edge clause is reported as
    "not certified" rather than "violated".
    """
    eps = Fraction(eps)
    if not 0 < eps <= Fraction(1, 2):
        raise ValueError("eps must lie in (0, 1/2]")
    if not is_edge_critical(f_spec):
        raise ValueError(f"{f_spec} is not edge-critical")
    n = g.n
    pattern = build_theta(f_spec)
    f_free = find_embedding(g, pattern) is None
    edges_needed = Fraction(n * n, 4) - eps * eps * n * n
    edges_ok = g.edge_count >= edges_needed
    alpha = Fraction(1, 2) - eps
    peel = degree_peel(g, alpha) if alpha > 0 else PeelResult(
        tuple(range(n)), (), Fraction(0))
    survivor = induced_subgraph(g, peel.kept)
    t = survivor.n
    bip = min_internal_bipartition(survivor, budget=budget, seed=seed)
    threshold = (1 - 2 * eps) * n
    part_bound = Fraction((1 - eps) ** 2 * n, 2)
    min_deg = min((survivor.degree(v) for v in range(t)), default=0)
    survivor_ok = Fraction(t) >= threshold
    parts_ok = (min(len(bip.part_a), len(bip.part_b)) >= part_bound) if t else False
    mindeg_ok = Fraction(min_deg) >= part_bound if t else False
    bipartite_ok = bip.internal_edges == 0
    certified = bip.method == "exact"

    def _clause(ok: bool) -> str:
        if ok:
            return "pass"
        return "fail" if certified else "not_certified"

    return {
        "n": n,
        "eps": _frac_str(eps),
        "alpha": _frac_str(alpha),
        "hypothesis_ok": {"forbidden_free": f_free, "edge_count": bool(edges_ok)},
        "survivor": t,
        "survivor_vertices": list(peel.kept),
        "removed": len(peel.removal_order),
        "threshold": _frac_str(threshold),
        "internal_edges": bip.internal_edges,
        "part_a": list(bip.part_a),
        "part_b": list(bip.part_b),
        "bipartition_method": bip.method,
        "min_degree": min_deg,
        "part_bound": _frac_str(part_bound),
        "clauses": {
            "survivor_large_enough": "pass" if survivor_ok else "fail",
            "bipartite": _clause(bipartite_ok),
            "parts_large_enough": _clause(parts_ok),
            "min_degree_large_enough": "pass" if mindeg_ok else "fail",
        },
    }


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
