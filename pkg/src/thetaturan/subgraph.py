"""Subgraph containment, disjoint-copy containment, book statistics, and the
rainbow-star / monochromatic-matching finder for edge-colored bipartite hosts."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LimitError
from .graphs import Graph, bit_rows, is_bipartite, iter_bits

PATTERN_LIMIT = 16


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern vertex i -> host vertex mapping[i]; every
    pattern edge lands on a host edge (containment is non-induced)."""

    mapping: tuple[int, ...]

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def verify(self, host: Graph, pattern: Graph) -> bool:
        m = self.mapping
        if len(set(m)) != len(m) or len(m) != pattern.n:
            return False
        return all(host.has_edge(m[u], m[v]) for u, v in pattern.edges())


def _pattern_order(pattern: Graph, seeds: tuple[int, ...]) -> list[int]:
    """Visit seeds first, then repeatedly the unvisited vertex with the most
    already-visited neighbors (ties to smallest index)."""
    n = pattern.n
    order = list(seeds)
    placed = set(seeds)
    while len(order) < n:
        best, best_score = -1, -1
        for v in range(n):
            if v in placed:
                continue
            score = sum(1 for u in pattern.neighbors(v) if u in placed)
            if score > best_score:
                best, best_score = v, score
        order.append(best)
        placed.add(best)
    return order


def _iter_maps(host_rows, host_degs, pattern, order, pre, allowed_mask):
    """Yield embedding tuples extending `pre` along `order`, candidates in
    ascending host-vertex order."""
    pn = pattern.n
    pat_nbrs = [pattern.neighbors(v) for v in range(pn)]
    pat_deg = [len(x) for x in pat_nbrs]
    pos_of = {v: i for i, v in enumerate(order)}
    # for each position, pattern neighbors already placed
    earlier = [[u for u in pat_nbrs[v] if pos_of[u] < i] for i, v in enumerate(order)]
    assign = [-1] * pn
    used = 0
    start = 0
    for v, h in pre.items():
        assign[v] = h
        used |= 1 << h
    while start < pn and assign[order[start]] != -1:
        start += 1

    def rec(i: int, used: int):
        if i == pn:
            yield tuple(assign)
            return
        v = order[i]
        cand = allowed_mask & ~used
        for u in earlier[i]:
            cand &= host_rows[assign[u]]
        need = pat_deg[v]
        for h in iter_bits(cand):
            if host_degs[h] < need:
                continue
            assign[v] = h
            yield from rec(i + 1, used | (1 << h))
        assign[v] = -1

    # verify the preassignment itself respects pattern edges
    for v, h in pre.items():
        for u in pat_nbrs[v]:
            if assign[u] != -1 and not (host_rows[h] >> assign[u]) & 1:
                return
    yield from rec(start, used)


def find_embedding(host: Graph, pattern: Graph) -> Embedding | None:
    """Lexicographically least embedding of pattern into host, or None.

    Backtracking with degree and mapped-neighborhood pruning; pattern order
    is 0..p-1 with ascending host candidates, so the first hit is the least
    mapping tuple.
    """
    if pattern.n > PATTERN_LIMIT:
        raise LimitError(f"patterns limited to {PATTERN_LIMIT} vertices")
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return None
    if is_bipartite(pattern) is None and is_bipartite(host) is not None:
        return None
    host_rows = bit_rows(host)
    host_degs = [r.bit_count() for r in host_rows]
    allowed = (1 << host.n) - 1
    order = list(range(pattern.n))
    for m in _iter_maps(host_rows, host_degs, pattern, order, {}, allowed):
        return Embedding(m)
    return None


def _iter_embedding_sets(host_rows, host_degs, pattern, allowed_mask,
                         anchor: int | None = None):
    """Yield (vertex_set_mask, mapping) pairs, deduplicated by vertex set.

    With an anchor, only embeddings whose minimum host vertex equals the
    anchor are produced (allowed_mask must already exclude smaller vertices).
    """
    pn = pattern.n
    seen: set[int] = set()
    if anchor is None:
        order = _pattern_order(pattern, ())
        for m in _iter_maps(host_rows, host_degs, pattern, order, {}, allowed_mask):
            mask = 0
            for h in m:
                mask |= 1 << h
            if mask not in seen:
                seen.add(mask)
                yield mask, m
        return
    for p0 in range(pn):
        order = _pattern_order(pattern, (p0,))
        for m in _iter_maps(host_rows, host_degs, pattern, order,
                            {p0: anchor}, allowed_mask):
            mask = 0
            for h in m:
                mask |= 1 << h
            if mask not in seen:
                seen.add(mask)
                yield mask, m


def _mask_is_bipartite(host_rows, mask: int) -> bool:
    """Whether the induced subgraph on the mask's vertices is bipartite."""
    color: dict[int, int] = {}
    for root in iter_bits(mask):
        if root in color:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v in iter_bits(host_rows[u] & mask):
                if v not in color:
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def contains_k_disjoint(host: Graph, pattern: Graph, k: int):
    """k pairwise vertex-disjoint embeddings of pattern in host, or None.

    Copies are searched in increasing order of their minimum host vertex,
    which breaks the k! orderings of any disjoint family. A non-bipartite
    pattern cannot land in a bipartite remainder, and remainders only lose
    vertices as the anchor grows, so that test cuts whole anchor ranges.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if pattern.n > PATTERN_LIMIT:
        raise LimitError(f"patterns limited to {PATTERN_LIMIT} vertices")
    if k * pattern.n > host.n:
        return None
    host_rows = bit_rows(host)
    host_degs = [r.bit_count() for r in host_rows]
    full = (1 << host.n) - 1
    pattern_odd = is_bipartite(pattern) is None

    def rec(used: int, min_anchor: int, remaining: int):
        if remaining == 0:
            return []
        for anchor in range(min_anchor, host.n - pattern.n * remaining + 1):
            if (used >> anchor) & 1:
                continue
            allowed = full & ~used & ~((1 << anchor) - 1)
            if pattern_odd and _mask_is_bipartite(host_rows, allowed):
                return None
            for mask, m in _iter_embedding_sets(host_rows, host_degs, pattern,
                                                allowed, anchor):
                rest = rec(used | mask, anchor + 1, remaining - 1)
                if rest is not None:
                    return [Embedding(m)] + rest
        return None

    return rec(0, 0, k)


def creates_k_disjoint_through_edge(host: Graph, pattern: Graph, k: int,
                                    u: int, v: int) -> bool:
    """Whether host contains k disjoint copies of pattern with some copy using
    edge uv. If host minus considerations of uv was k-copy free, this decides
    k-copy freeness of host."""
    host_rows = bit_rows(host)
    host_degs = [r.bit_count() for r in host_rows]
    full = (1 << host.n) - 1
    pattern_odd = is_bipartite(pattern) is None
    seen: set[int] = set()
    for (a, b) in pattern.edges():
        for pa, pb in ((a, b), (b, a)):
            order = _pattern_order(pattern, (pa, pb))
            for m in _iter_maps(host_rows, host_degs, pattern, order,
                                {pa: u, pb: v}, full):
                mask = 0
                for h in m:
                    mask |= 1 << h
                if mask in seen:
                    continue
                seen.add(mask)
                if k == 1:
                    return True
                if _disjoint_rest(host_rows, host_degs, pattern, full & ~mask,
                                  host.n, k - 1, 0, pattern_odd):
                    return True
    return False


def _disjoint_rest(host_rows, host_degs, pattern, allowed, host_n, remaining,
                   min_anchor, pattern_odd):
    if remaining == 0:
        return True
    for anchor in range(min_anchor, host_n):
        if not (allowed >> anchor) & 1:
            continue
        sub_allowed = allowed & ~((1 << anchor) - 1)
        if pattern_odd and _mask_is_bipartite(host_rows, sub_allowed):
            return False
        for mask, _m in _iter_embedding_sets(host_rows, host_degs, pattern,
                                             sub_allowed, anchor):
            if _disjoint_rest(host_rows, host_degs, pattern, allowed & ~mask,
                              host_n, remaining - 1, anchor + 1, pattern_odd):
                return True
    return False


# ---------------------------------------------------------------------------
# Book statistics

def edge_book_degree(g: Graph, e: tuple[int, int]) -> int:
    """Number of triangles containing edge e = common neighbors of its ends."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    if g._rows is not None:
        return (g.row(u) & g.row(v)).bit_count()
    return len(set(g.neighbors(u)) & set(g.neighbors(v)))


def max_book(g: Graph) -> int:
    """Largest number of triangles sharing one edge (0 for triangle-free)."""
    best = 0
    if g._rows is not None:
        rows = g._rows
        for u in range(g.n):
            ru = rows[u] >> (u + 1)
            for v in iter_bits(ru):
                v += u + 1
                c = (rows[u] & rows[v]).bit_count()
                if c > best:
                    best = c
    else:
        sets = [set(g.neighbors(x)) for x in range(g.n)]
        for u, v in g.edges():
            c = len(sets[u] & sets[v])
            if c > best:
                best = c
    return best


# ---------------------------------------------------------------------------
# Edge colorings of bipartite hosts

class EdgeColoring:
    """Edge coloring of a bipartite host with a declared bipartition.

    Every edge must cross the declared parts and carry exactly one color.
    """

    def __init__(self, host: Graph, part_a, part_b, colors: dict):
        part_a = tuple(sorted(part_a))
        part_b = tuple(sorted(part_b))
        if sorted(part_a + part_b) != list(range(host.n)):
            raise ValueError("parts must partition the vertex set")
        in_a = set(part_a)
        norm = {}
        for (u, v), c in colors.items():
            key = (u, v) if u < v else (v, u)
            norm[key] = c
        for u, v in host.edges():
            if (u in in_a) == (v in in_a):
                raise ValueError(f"edge ({u},{v}) does not cross the bipartition")
            if (u, v) not in norm:
                raise ValueError(f"edge ({u},{v}) has no color")
        if len(norm) != host.edge_count:
            raise ValueError("coloring mentions non-edges")
        self.host = host
        self.part_a = part_a
        self.part_b = part_b
        self._colors = norm
        # cached neighbor tuples and scan order: sweeping many colorings of
        # one host is the hot use
        self._nbrs = [host.neighbors(v) for v in range(host.n)]
        self._scan_order = part_a + part_b

    def color(self, u: int, v: int):
        return self._colors[(u, v) if u < v else (v, u)]

    def set_color(self, u: int, v: int, c) -> None:
        """Recolor one existing edge (handy for sweeping many colorings)."""
        key = (u, v) if u < v else (v, u)
        if key not in self._colors:
            raise ValueError(f"({u},{v}) is not an edge")
        self._colors[key] = c


def read_edge_coloring(text: str) -> EdgeColoring:
    """Parse the 'u v color_id' one-edge-per-line format; the host and its
    bipartition are inferred (host must be bipartite)."""
    edges = []
    colors = {}
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {ln}: expected 'u v color_id'")
        u, v, c = int(parts[0]), int(parts[1]), int(parts[2])
        edges.append((u, v))
        colors[(u, v) if u < v else (v, u)] = c
    n = max((max(u, v) for u, v in edges), default=-1) + 1
    host = Graph(n, edges)
    parts = is_bipartite(host)
    if parts is None:
        raise ValueError("coloring host is not bipartite")
    return EdgeColoring(host, parts[0], parts[1], colors)


RAINBOW_STAR = "RainbowStar"
MONO_MATCHING = "MonochromaticMatching"
NOT_FOUND = "NotFound"


@dataclass
class ColoredWitness:
    variant: str
    center: int | None = None
    star: tuple[tuple[int, int], ...] = ()    # (leaf, color) pairs
    color: int | None = None
    matching: tuple[tuple[int, int], ...] = ()

    def verify(self, coloring: EdgeColoring, k: int) -> bool:
        colors = coloring._colors
        if self.variant == RAINBOW_STAR:
            if len(self.star) != k:
                return False
            cols = {c for _, c in self.star}
            if len(cols) != k:
                return False
            v = self.center
            for leaf, c in self.star:
                key = (v, leaf) if v < leaf else (leaf, v)
                if colors.get(key) != c:  # membership doubles as the edge check
                    return False
            return True
        if self.variant == MONO_MATCHING:
            if len(self.matching) != k + 1:
                return False
            touched = {x for e in self.matching for x in e}
            if len(touched) != 2 * (k + 1):
                return False
            for u, v in self.matching:
                if colors.get((u, v) if u < v else (v, u)) != self.color:
                    return False
            return True
        return self.variant == NOT_FOUND


def _rainbow_at(coloring: EdgeColoring, v: int, k: int) -> ColoredWitness | None:
    seen: dict = {}
    colors = coloring._colors
    for u in coloring._nbrs[v]:
        c = colors[(v, u) if v < u else (u, v)]
        if c not in seen:
            seen[c] = u
            if len(seen) == k:
                star = tuple(sorted(((leaf, col) for col, leaf in seen.items())))
                return ColoredWitness(RAINBOW_STAR, center=v, star=star)
    return None


def rainbow_or_matching(coloring: EdgeColoring, k: int) -> ColoredWitness:
    """Find a rainbow star with k leaves or a monochromatic matching of size
    k+1 in an edge-colored bipartite host.

    Procedure: scan A then B for a rainbow center; otherwise keep each
    A-vertex's largest one-color star and assemble a matching inside each
    color class. On complete bipartite hosts with both parts of size >= k^3
    one of the two structures always exists; smaller hosts may yield
    NotFound.
    """
    if k < 1:
        raise ValueError("k must be positive")
    for v in coloring._scan_order:
        w = _rainbow_at(coloring, v, k)
        if w is not None:
            assert w.verify(coloring, k)
            return w
    # every vertex is now incident to < k distinct colors
    stars: dict = {}
    for a in coloring.part_a:
        counts: dict = {}
        leaves: dict = {}
        for b in coloring._nbrs[a]:
            c = coloring.color(a, b)
            counts[c] = counts.get(c, 0) + 1
            leaves.setdefault(c, []).append(b)
        if not counts:
            continue
        c_best = min(counts, key=lambda c: (-counts[c], c))
        stars.setdefault(c_best, []).append((a, leaves[c_best]))
    for c in sorted(stars):
        if len(stars[c]) < k + 1:
            continue
        used: set[int] = set()
        picked = []
        for a, leaves in stars[c]:
            for b in leaves:
                if b not in used:
                    used.add(b)
                    picked.append((min(a, b), max(a, b)))
                    break
            if len(picked) == k + 1:
                w = ColoredWitness(MONO_MATCHING, color=c,
                                   matching=tuple(sorted(picked)))
                assert w.verify(coloring, k)
                return w
    return ColoredWitness(NOT_FOUND)
