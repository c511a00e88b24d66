"""Graph core: bit-row graphs, standard generators, clique counting,
canonical keys, and graph6 interchange."""

from __future__ import annotations

import random
from itertools import combinations

from .errors import Graph6Error, LimitError

# Dense bit rows are kept up to this order; beyond it graphs are stored as
# sorted neighbor lists.
DENSE_LIMIT = 4096

CANONICAL_LIMIT = 16
GRAPH6_MAX_N = 62


def _check_pair(u: int, v: int, n: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"edge ({u},{v}) out of range for n={n}")
    if u == v:
        raise ValueError(f"self-loop at vertex {u} not allowed")


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Dense graphs keep one bit row per vertex (bit v of row u set iff uv is an
    edge); sparse graphs keep sorted neighbor tuples. Both forms describe the
    same value and compare equal.
    """

    __slots__ = ("n", "rep", "_rows", "_nbrs", "_m")

    def __init__(self, n: int, edges=(), rep: str = "auto"):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if rep == "auto":
            rep = "dense" if n <= DENSE_LIMIT else "sparse"
        m = 0
        if rep == "dense":
            if n > DENSE_LIMIT:
                raise LimitError(f"dense representation limited to n <= {DENSE_LIMIT}")
            rows = [0] * n
            for u, v in edges:
                _check_pair(u, v, n)
                if not (rows[u] >> v) & 1:
                    m += 1
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
            self._rows = rows
            self._nbrs = None
        elif rep == "sparse":
            nbrs = [set() for _ in range(n)]
            for u, v in edges:
                _check_pair(u, v, n)
                if v not in nbrs[u]:
                    m += 1
                    nbrs[u].add(v)
                    nbrs[v].add(u)
            self._nbrs = [tuple(sorted(s)) for s in nbrs]
            self._rows = None
        else:
            raise ValueError(f"unknown representation {rep!r}")
        self.n = n
        self.rep = rep
        self._m = m

    @property
    def edge_count(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        _check_pair(u, v, self.n)
        if self._rows is not None:
            return bool((self._rows[u] >> v) & 1)
        return v in self._nbrs[u]

    def degree(self, v: int) -> int:
        if self._rows is not None:
            return self._rows[v].bit_count()
        return len(self._nbrs[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._nbrs is not None:
            return self._nbrs[v]
        return tuple(iter_bits(self._rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in self.neighbors(u):
                if v > u:
                    out.append((u, v))
        return out

    def row(self, v: int) -> int:
        if self._rows is None:
            raise LimitError("bit rows unavailable for sparse graphs; convert with to_dense()")
        return self._rows[v]

    def to_dense(self) -> "Graph":
        if self.rep == "dense":
            return self
        return Graph(self.n, self.edges(), rep="dense")

    def to_sparse(self) -> "Graph":
        if self.rep == "sparse":
            return self
        return Graph(self.n, self.edges(), rep="sparse")

    def with_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge uv added (dense fast path)."""
        if self._rows is not None:
            g = Graph.__new__(Graph)
            rows = list(self._rows)
            had = (rows[u] >> v) & 1
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            g.n = self.n
            g.rep = "dense"
            g._rows = rows
            g._nbrs = None
            g._m = self._m + (0 if had else 1)
            return g
        return Graph(self.n, self.edges() + [(u, v)], rep="sparse")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if self.n != other.n or self._m != other._m:
            return False
        if self._rows is not None and other._rows is not None:
            return self._rows == other._rows
        return set(self.edges()) == set(other.edges())

    __hash__ = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m}, rep={self.rep!r})"


def from_rows(rows: list[int]) -> Graph:
    """Wrap precomputed bit rows (must already be symmetric, loop-free)."""
    g = Graph.__new__(Graph)
    g.n = len(rows)
    g.rep = "dense"
    g._rows = list(rows)
    g._nbrs = None
    g._m = sum(r.bit_count() for r in rows) // 2
    return g


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_rows(g: Graph) -> list[int]:
    """Bit rows of g, materializing from a sparse form if needed."""
    if g._rows is not None:
        return g._rows
    if g.n > DENSE_LIMIT:
        raise LimitError(f"bit rows limited to n <= {DENSE_LIMIT}")
    rows = [0] * g.n
    for u in range(g.n):
        for v in g._nbrs[u]:
            rows[u] |= 1 << v
    return rows


# ---------------------------------------------------------------------------
# Generators

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle length must be at least 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be nonnegative")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def turan(r: int, n: int) -> Graph:
    """Complete balanced r-partite graph T_r(n).

    Parts are ordered largest-first and occupy consecutive index blocks, so
    the same (r, n) always yields the identical labeled graph.
    """
    if r < 1:
        raise ValueError("turan graph needs r >= 1")
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    q, s = divmod(n, r)
    sizes = [q + 1] * s + [q] * (r - s)
    bounds = []
    start = 0
    for size in sizes:
        bounds.append((start, start + size))
        start += size
    edges = []
    for i, (a0, a1) in enumerate(bounds):
        for b0, b1 in bounds[i + 1:]:
            edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return Graph(n, edges)


def book(t: int) -> Graph:
    """t triangles sharing the spine edge 0-1; page vertices are 2..t+1."""
    if t < 1:
        raise ValueError("book needs at least 1 page")
    edges = [(0, 1)]
    for p in range(2, t + 2):
        edges.append((0, p))
        edges.append((1, p))
    return Graph(t + 2, edges)


_GENERATORS = {
    "complete": (1, lambda p: complete(p[0])),
    "path": (1, lambda p: path_graph(p[0])),
    "cycle": (1, lambda p: cycle_graph(p[0])),
    "complete_bipartite": (2, lambda p: complete_bipartite(p[0], p[1])),
    "turan": (2, lambda p: turan(p[0], p[1])),
    "book": (1, lambda p: book(p[0])),
    "empty": (1, lambda p: empty_graph(p[0])),
}


def build_standard(kind: str, params: list[int]) -> Graph:
    """Build one of the named standard graphs; invalid params are rejected."""
    if kind not in _GENERATORS:
        raise ValueError(f"unknown generator kind {kind!r}; choose from {sorted(_GENERATORS)}")
    arity, fn = _GENERATORS[kind]
    if len(params) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return fn(params)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between; g1's indices precede g2's."""
    n1, n2 = g1.n, g2.n
    n = n1 + n2
    if n <= DENSE_LIMIT and g1.rep == "dense" and g2.rep == "dense":
        mask2 = ((1 << n2) - 1) << n1
        mask1 = (1 << n1) - 1
        rows = [g1._rows[u] | mask2 for u in range(n1)]
        rows += [(g2._rows[v] << n1) | mask1 for v in range(n2)]
        return from_rows(rows)
    edges = g1.edges()
    edges += [(u + n1, v + n1) for u, v in g2.edges()]
    edges += [(u, n1 + v) for u in range(n1) for v in range(n2)]
    return Graph(n, edges)


def disjoint_copies(g: Graph, k: int) -> Graph:
    if k < 1:
        raise ValueError("need at least one copy")
    edges = []
    base = g.edges()
    for c in range(k):
        off = c * g.n
        edges.extend((u + off, v + off) for u, v in base)
    return Graph(k * g.n, edges)


def pad(g: Graph, n_total: int) -> Graph:
    """g plus isolated vertices up to n_total."""
    if n_total < g.n:
        raise ValueError("cannot shrink a graph by padding")
    return Graph(n_total, g.edges(), rep=g.rep if n_total <= DENSE_LIMIT else "sparse")


def induced_subgraph(g: Graph, vertices) -> Graph:
    verts = sorted(vertices)
    index = {v: i for i, v in enumerate(verts)}
    keep = set(verts)
    edges = [(index[u], index[v]) for u, v in g.edges() if u in keep and v in keep]
    return Graph(len(verts), edges)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Relabel: vertex v becomes perm[v]."""
    return Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges()), rep=g.rep)


# ---------------------------------------------------------------------------
# Clique counting

def count_cliques(g: Graph, r: int) -> int:
    """Exact number of r-vertex cliques; r=1 counts vertices, r=2 edges."""
    if r < 1:
        raise ValueError("clique order must be >= 1")
    if r == 1:
        return g.n
    if r == 2:
        return g.edge_count
    if g.n > DENSE_LIMIT:
        if r == 3:
            return sum(1 for _ in enumerate_triangles(g))
        raise LimitError(f"clique counting beyond triangles needs n <= {DENSE_LIMIT}")
    rows = bit_rows(g)

    def rec(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            if c.bit_count() < need - 1:
                break
            sub = c & rows[v]
            if sub.bit_count() >= need - 1:
                total += rec(sub, need - 1)
        return total

    return rec((1 << g.n) - 1, r)


def enumerate_cliques(g: Graph, r: int) -> list[tuple[int, ...]]:
    """All r-cliques as ascending tuples, in lexicographic order."""
    if r < 1:
        raise ValueError("clique order must be >= 1")
    if r == 1:
        return [(v,) for v in range(g.n)]
    rows = bit_rows(g)
    out: list[tuple[int, ...]] = []
    prefix = []

    def rec(cand: int, need: int):
        if need == 0:
            out.append(tuple(prefix))
            return
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            if need > 1 and c.bit_count() < need - 1:
                break
            prefix.append(v)
            rec(c & rows[v], need - 1)
            prefix.pop()

    rec((1 << g.n) - 1, r)
    return out


def enumerate_triangles(g: Graph):
    """Yield triangles as ascending triples, in lexicographic order."""
    if g._rows is not None:
        rows = g._rows
        for u in range(g.n):
            ru = rows[u] >> (u + 1)
            for v in iter_bits(ru):
                v += u + 1
                for w in iter_bits((rows[u] & rows[v]) >> (v + 1)):
                    yield (u, v, w + v + 1)
    else:
        nbrs = g._nbrs
        for u in range(g.n):
            above_u = [v for v in nbrs[u] if v > u]
            set_u = set(above_u)
            for v in above_u:
                for w in nbrs[v]:
                    if w > v and w in set_u:
                        yield (u, v, w)


def degree_sequence(g: Graph) -> list[int]:
    return [g.degree(v) for v in range(g.n)]


def is_bipartite(g: Graph):
    """Two-coloring by BFS; returns (part_a, part_b) or None.

    part_a is the side containing the smallest vertex of each component.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    part_a = tuple(v for v in range(g.n) if color[v] == 0)
    part_b = tuple(v for v in range(g.n) if color[v] == 1)
    return part_a, part_b


# ---------------------------------------------------------------------------
# Canonical keys

def _refine_colors(nbr_lists, colors: list[int]) -> list[int]:
    """Iterated neighborhood refinement to a fixpoint; color values are
    renumbered by sorted signature, so they are relabeling-invariant."""
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbr_lists[v])))
                for v in range(len(colors))]
        renum = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [renum[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_key(g: Graph) -> bytes:
    """Isomorphism-invariant key: minimal adjacency column string over the
    vertex orderings produced by individualization plus neighborhood
    refinement, with interchangeable (twin) branches collapsed.

    Exact for any graph; practical up to n = 16 (rejected beyond).
    """
    n = g.n
    if n > CANONICAL_LIMIT:
        raise LimitError(f"canonical_key limited to n <= {CANONICAL_LIMIT}")
    if n == 0:
        return b"\x00"
    rows = bit_rows(g)
    nbr_lists = [tuple(iter_bits(rows[v])) for v in range(n)]
    best: list[int] | None = None

    def leaf(order: list[int]):
        nonlocal best
        cols = []
        for i, v in enumerate(order):
            rv = rows[v]
            col = 0
            for j in range(i):
                col = (col << 1) | ((rv >> order[j]) & 1)
            cols.append(col)
        if best is None or cols < best:
            best = cols

    def rec(colors: list[int]):
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            leaf([cells[c][0] for c in sorted(cells)])
            return
        tried: list[int] = []
        for v in target:
            # a twin of an explored candidate yields the same strings
            if any((rows[u] & ~(1 << u) & ~(1 << v))
                   == (rows[v] & ~(1 << u) & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            indiv = [(2 * c + 1 if w == v else 2 * c + 2)
                     for w, c in enumerate(colors)]
            rec(_refine_colors(nbr_lists, indiv))

    rec(_refine_colors(nbr_lists, [0] * n))
    assert best is not None
    return bytes([n]) + b"".join(c.to_bytes(2, "big") for c in best)


# ---------------------------------------------------------------------------
# graph6

def graph6_encode(g: Graph) -> str:
    """Short-header graph6: byte 63+n, then upper-triangle bits column-major
    packed six per byte, each +63, zero-padded."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise LimitError(f"short-header graph6 supports n <= {GRAPH6_MAX_N}")
    out = [chr(63 + n)]
    acc = 0
    nb = 0
    if g._rows is not None:
        rows = g._rows
        adj = lambda i, j: (rows[i] >> j) & 1
    else:
        es = set(g.edges())
        adj = lambda i, j: 1 if (i, j) in es else 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | adj(i, j)
            nb += 1
            if nb == 6:
                out.append(chr(63 + acc))
                acc = 0
                nb = 0
    if nb:
        acc <<= 6 - nb
        out.append(chr(63 + acc))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode short-header graph6; malformed input raises Graph6Error with
    the offending byte offset."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    c0 = ord(s[0])
    if c0 == 126:
        raise Graph6Error("long-form header not supported", 0)
    if not 63 <= c0 <= 63 + GRAPH6_MAX_N:
        raise Graph6Error(f"bad header byte {s[0]!r}", 0)
    n = c0 - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        raise Graph6Error(f"expected {nbytes} payload bytes, got {len(s) - 1}",
                          min(len(s), 1 + nbytes))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    edges = []
    bitpos = 0
    for idx in range(1, len(s)):
        val = ord(s[idx]) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"byte {s[idx]!r} outside graph6 alphabet", idx)
        for b in range(5, -1, -1):
            bit = (val >> b) & 1
            if bitpos < nbits:
                if bit:
                    edges.append(pairs[bitpos])
            elif bit:
                raise Graph6Error("nonzero padding bits", idx)
            bitpos += 1
    return Graph(n, edges)


def graph6_lines(graphs) -> str:
    """Newline-delimited graph6 for bulk I/O."""
    return "".join(graph6_encode(g) + "\n" for g in graphs)


def read_graph6_lines(text: str) -> list[Graph]:
    return [graph6_decode(line) for line in text.splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# k-trees and the treewidth-2 test

def random_k_tree(k: int, n: int, seed: int) -> Graph:
    """k-tree grown by joining each new vertex to a uniformly random existing
    k-clique; deterministic for a fixed seed."""
    if k < 1:
        raise ValueError("k must be positive")
    if n < k:
        raise ValueError("need n >= k")
    rng = random.Random(seed)
    edges = list(combinations(range(k), 2))
    cliques = [tuple(range(k))]
    for v in range(k, n):
        q = cliques[rng.randrange(len(cliques))]
        edges.extend((u, v) for u in q)
        for drop in q:
            cliques.append(tuple(sorted((set(q) - {drop}) | {v})))
    return Graph(n, edges)


def has_treewidth_at_most_2(g: Graph) -> bool:
    """Series-parallel reduction: repeatedly delete degree<=1 vertices and
    contract degree-2 vertices into an edge between their neighbors."""
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    work = [v for v in adj if len(adj[v]) <= 2]
    while work:
        v = work.pop()
        if v not in adj or len(adj[v]) > 2:
            continue
        nbrs = sorted(adj[v])
        del adj[v]
        for u in nbrs:
            adj[u].discard(v)
        if len(nbrs) == 2:
            a, b = nbrs
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
        # only the (former) neighbors' degrees changed
        work.extend(u for u in nbrs if len(adj[u]) <= 2)
    return not adj
