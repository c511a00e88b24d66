"""Explicit extremal constructions, each paired with a verifier: sphere-shell
progression-free sets, edge-disjoint tripartite triangle systems, the matched
complete bipartite graph, and the apex-over-Turan construction."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import SearchAbort
from .graphs import Graph, complete, enumerate_triangles, join, turan
from .theta import turan_formula  # noqa: F401  (re-exported alongside apex_turan)


@dataclass(frozen=True)
class APFreeSet:
    """Subset of [1, m] with no three-term arithmetic progression."""

    m: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if any(not 1 <= x <= self.m for x in self.elements):
            raise ValueError("elements must lie in [1, m]")
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError("elements must be sorted and distinct")

    def __len__(self):
        return len(self.elements)

    def to_text(self) -> str:
        return "".join(f"{x}\n" for x in self.elements)


def is_ap_free(elements) -> bool:
    """Exhaustive pair check: no a < b < c in the set with a + c = 2b."""
    elems = sorted(set(elements))
    index = set(elems)
    for i, a in enumerate(elems):
        # the immediate successor cannot host a midpoint, so start two ahead
        for c in elems[i + 2:]:
            if (a + c) % 2 == 0 and (a + c) // 2 in index:
                return False
    return True


def behrend_set(m: int) -> APFreeSet:
    """Largest progression-free subset of [1, m] found by the sphere-shell
    digit construction.

    Vectors with base-d digits below d/2 are summed against powers of d;
    digits below d/2 keep vector addition carry-free, and a fixed squared
    norm rules out x + z = 2y with x != z. The sweep covers d in 3..32 and
    dimensions up to log_d(m)+1, keeping the largest shell; the interval
    {1, 2} is included as a floor for tiny m. The winner is re-verified
    progression-free before return.
    """
    if m < 1:
        raise ValueError("m must be positive")
    best = tuple(range(1, min(m, 2) + 1))
    best_rank = (-len(best), 10 ** 9, 0, 0)
    for d in range(3, 33):
        half = (d + 1) // 2  # digits 0..half-1 are < d/2
        max_dim = 1
        p = d
        while p <= m:
            max_dim += 1
            p *= d
        for dim in range(1, max_dim + 1):
            powers = [d ** i for i in range(dim)]
            shells: dict[int, list[int]] = {}
            for vec in product(range(half), repeat=dim):
                val = sum(x * p for x, p in zip(vec, powers))
                if 1 <= val <= m:
                    shells.setdefault(sum(x * x for x in vec), []).append(val)
            for radius in sorted(shells):
                vals = shells[radius]
                rank = (-len(vals), d, dim, radius)
                if rank < best_rank:
                    best_rank = rank
                    best = tuple(sorted(vals))
    if not is_ap_free(best):
        raise SearchAbort("sphere-shell output failed the progression check")
    return APFreeSet(m, best)


@dataclass(frozen=True)
class TriangleSystem:
    """Graph together with a list of triangles meant to be edge-disjoint and
    exhaustive (every edge in exactly one listed triangle, no others)."""

    graph: Graph
    triangles: tuple[tuple[int, int, int], ...]


def ruzsa_szemeredi(m: int, s: APFreeSet) -> TriangleSystem:
    """Tripartite graph on parts of sizes m, 2m, 3m whose triangles are
    {x, x+a, x+2a} for x in [1,m] and a in the progression-free set s.

    Layout: value x sits at index x-1, y at m+(y-1), z at 3m+(z-1), so the
    same inputs always produce byte-identical graphs. Progression-freeness of
    s rules out any triangle besides the m*|s| listed ones, so every edge
    lies in exactly one triangle.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if any(not 1 <= a <= m for a in s.elements):
        raise ValueError("set elements must lie in [1, m]")
    edges = []
    triangles = []
    for x in range(1, m + 1):
        ix = x - 1
        for a in s.elements:
            iy = m + (x + a - 1)
            iz = 3 * m + (x + 2 * a - 1)
            edges.append((ix, iy))
            edges.append((iy, iz))
            edges.append((ix, iz))
            triangles.append((ix, iy, iz))
    n = 6 * m
    rep = "sparse" if n > 4096 else "dense"
    return TriangleSystem(Graph(n, edges, rep=rep), tuple(sorted(triangles)))


def verify_linear_triangle_system(ts: TriangleSystem) -> bool:
    """True iff the listed triples are exactly the triangles of the graph and
    every edge lies in exactly one of them."""
    actual = list(enumerate_triangles(ts.graph))
    if sorted(ts.triangles) != actual:
        return False
    edge_use: dict[tuple[int, int], int] = {}
    for a, b, c in ts.triangles:
        for e in ((a, b), (a, c), (b, c)):
            edge_use[e] = edge_use.get(e, 0) + 1
    if any(cnt != 1 for cnt in edge_use.values()):
        return False
    return sorted(edge_use) == ts.graph.edges()


def matched_bipartite(n: int) -> Graph:
    """Complete bipartite graph on floor(n/2)+ceil(n/2) vertices plus a
    maximum matching inside the larger part.

    The larger part occupies indices 0..ceil(n/2)-1 and the matching pairs
    consecutive indices, giving floor(ceil(n/2)/2) matched edges.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    g = turan(2, n)
    big = (n + 1) // 2
    extra = [(i, i + 1) for i in range(0, big - 1, 2)]
    return Graph(n, g.edges() + extra)


def apex_turan(k: int, n: int) -> Graph:
    """Join of a (k-1)-clique with the balanced bipartite graph on n-k+1
    vertices; apex vertices are 0..k-2."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < k + 1:
        raise ValueError("need n >= k+1")
    return join(complete(k - 1), turan(2, n - k + 1))
