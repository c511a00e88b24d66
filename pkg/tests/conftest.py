"""Shared brute-force oracles, deliberately independent of the library's own
algorithms: permutation-based canonicalization and matching, combination-based
triangle counting, BFS two-coloring."""

from __future__ import annotations

from itertools import combinations, permutations

from thetaturan import Graph


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices, as edge lists."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]


def brute_canonical(n: int, edges) -> tuple:
    """Minimum relabeled edge list over all n! permutations."""
    best = None
    for perm in permutations(range(n)):
        relab = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or relab < best:
            best = relab
    return (n, best)


def brute_embedding_exists(host: Graph, pattern: Graph) -> bool:
    """Try every injective map from pattern vertices to host vertices."""
    pe = pattern.edges()
    for image in permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[u], image[v]) for u, v in pe):
            return True
    return False


def brute_all_embeddings(host: Graph, pattern: Graph):
    pe = pattern.edges()
    out = []
    for image in permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[u], image[v]) for u, v in pe):
            out.append(image)
    return out


def naive_triangle_list(n: int, edge_set) -> list:
    es = {tuple(sorted(e)) for e in edge_set}
    return [t for t in combinations(range(n), 3)
            if (t[0], t[1]) in es and (t[0], t[2]) in es and (t[1], t[2]) in es]


def has_two_disjoint_triangles(n: int, edge_set) -> bool:
    tris = naive_triangle_list(n, edge_set)
    for i, t1 in enumerate(tris):
        s1 = set(t1)
        for t2 in tris[i + 1:]:
            if not s1 & set(t2):
                return True
    return False


def has_book2(n: int, edge_set) -> bool:
    """Two triangles sharing an edge."""
    es = {tuple(sorted(e)) for e in edge_set}
    for u, v in es:
        common = sum(1 for w in range(n)
                     if w not in (u, v)
                     and tuple(sorted((u, w))) in es
                     and tuple(sorted((v, w))) in es)
        if common >= 2:
            return True
    return False


def two_colorable(n: int, edges) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    color = [-1] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if color[y] == -1:
                    color[y] = color[x] ^ 1
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def edge_critical_by_deletion(g: Graph) -> bool:
    """Definition-level oracle: some edge's deletion drops the chromatic
    number (for these graphs, from 3 to 2)."""
    edges = g.edges()
    if two_colorable(g.n, edges):
        return False
    return any(two_colorable(g.n, [e for e in edges if e != drop])
               for drop in edges)


def theta_length_multisets(total_max: int) -> list[tuple[int, ...]]:
    """All valid theta length multisets with sum <= total_max."""
    out: list[tuple[int, ...]] = []

    def rec(rest: int, minp: int, cur: list[int]):
        if len(cur) >= 2:
            out.append(tuple(cur))
        for p in range(minp, rest + 1):
            if p == 1 and 1 in cur:
                continue
            cur.append(p)
            rec(rest - p, p, cur)
            cur.pop()

    rec(total_max, 1, [])
    return sorted(set(out))
