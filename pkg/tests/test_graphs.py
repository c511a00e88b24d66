import random

import pytest

from conftest import all_labeled_graphs, brute_canonical
from thetaturan import (Graph, Graph6Error, LimitError, ThetaSpec, book,
                        build_standard, build_theta, canonical_key, complete,
                        complete_bipartite, count_cliques, cycle_graph,
                        disjoint_copies, empty_graph, enumerate_cliques,
                        enumerate_triangles, graph6_decode, graph6_encode,
                        has_treewidth_at_most_2, is_bipartite, join, pad,
                        path_graph, random_k_tree, relabel, turan)
from thetaturan.graphs import graph6_lines, read_graph6_lines

from math import comb


def test_generator_examples():
    assert turan(2, 8).edge_count == 16
    assert turan(2, 8) == complete_bipartite(4, 4)
    b2 = book(2)
    assert (b2.n, b2.edge_count) == (4, 5)
    assert turan(3, 7).edge_count == 16
    assert turan(3, 7).degree(0) == 4  # first part has 3 vertices


def test_generator_validation():
    with pytest.raises(ValueError):
        build_standard("cycle", [2])
    with pytest.raises(ValueError):
        build_standard("nonsense", [3])
    with pytest.raises(ValueError):
        build_standard("turan", [3])
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 5)])


def test_build_standard_dispatch():
    assert build_standard("complete", [5]).edge_count == 10
    assert build_standard("path", [4]).edge_count == 3
    assert build_standard("empty", [7]).edge_count == 0
    assert build_standard("complete_bipartite", [2, 3]).edge_count == 6
    assert build_standard("book", [3]).n == 5


def test_join_examples():
    g = join(empty_graph(1), turan(2, 8))
    assert (g.n, g.edge_count) == (9, 24)
    g2 = join(complete(2), turan(2, 4))
    assert (g2.n, g2.edge_count) == (6, 13)
    assert join(empty_graph(2), empty_graph(2)) == complete_bipartite(2, 2)


def test_join_is_symmetric_relation():
    g = join(path_graph(3), cycle_graph(3))
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                assert g.has_edge(u, v) == g.has_edge(v, u)


def test_disjoint_copies():
    c3 = cycle_graph(3)
    g = disjoint_copies(c3, 2)
    assert (g.n, g.edge_count) == (6, 6)
    assert disjoint_copies(c3, 1) == c3
    assert disjoint_copies(book(2), 3).edge_count == 15
    # no edges between copies
    assert not any(g.has_edge(u, v) for u in range(3) for v in range(3, 6))


def test_count_cliques_examples():
    assert count_cliques(complete(5), 3) == 10
    assert count_cliques(turan(2, 6), 3) == 0
    assert count_cliques(join(complete(2), turan(2, 4)), 3) == 12
    assert count_cliques(complete(6), 1) == 6
    assert count_cliques(cycle_graph(5), 2) == 5


def test_count_cliques_binomial_join_identity():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 10)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                      if rng.random() < 0.4])
        a = rng.randint(1, 4)
        joined = join(complete(a), g)
        for r in range(2, 6):
            lhs = count_cliques(joined, r)
            rhs = comb(a, r)
            for i in range(max(1, r - a), r + 1):
                rhs += comb(a, r - i) * count_cliques(g, i)
            assert lhs == rhs


def test_turan2_counts_up_to_200():
    for n in range(2, 201):
        g = turan(2, n)
        assert count_cliques(g, 3) == 0
        assert count_cliques(g, 2) == n * n // 4


def test_enumerate_triangles():
    assert list(enumerate_triangles(complete(4))) == [
        (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert list(enumerate_triangles(cycle_graph(5))) == []
    tris = list(enumerate_triangles(book(3)))
    assert len(tris) == 3
    assert all(t[0] == 0 and t[1] == 1 for t in tris)  # all share the spine
    # sparse form agrees
    sp = book(3).to_sparse()
    assert list(enumerate_triangles(sp)) == tris


def test_enumerate_cliques():
    assert enumerate_cliques(complete(4), 3) == list(enumerate_triangles(complete(4)))
    assert enumerate_cliques(turan(2, 4), 2) == turan(2, 4).edges()
    assert enumerate_cliques(complete(5), 5) == [(0, 1, 2, 3, 4)]


def test_dense_sparse_equivalence():
    g = turan(3, 8)
    sp = g.to_sparse()
    assert sp == g and g == sp
    assert sp.to_dense() == g
    assert sp.edge_count == g.edge_count
    assert sp.neighbors(0) == g.neighbors(0)


def test_graph6_fixed_values():
    assert graph6_encode(empty_graph(1)) == "@"
    assert graph6_encode(complete(2)) == "A_"
    assert graph6_decode("A_") == complete(2)


def test_graph6_roundtrip_randomized():
    rng = random.Random(123)
    for _ in range(1000):
        n = rng.randint(0, 20)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.5]
        g = Graph(n, edges)
        assert graph6_decode(graph6_encode(g)) == g


def test_graph6_streams():
    gs = [complete(3), cycle_graph(5), empty_graph(2)]
    text = graph6_lines(gs)
    assert read_graph6_lines(text) == gs


def test_graph6_malformed():
    with pytest.raises(Graph6Error) as exc:
        graph6_decode("")
    assert exc.value.offset == 0
    with pytest.raises(Graph6Error) as exc:
        graph6_decode("~??")  # long form
    assert exc.value.offset == 0
    with pytest.raises(Graph6Error):
        graph6_decode("D")  # truncated payload
    with pytest.raises(Graph6Error) as exc:
        graph6_decode("A" + chr(30))
    assert exc.value.offset == 1
    # nonzero padding bits
    with pytest.raises(Graph6Error):
        graph6_decode("A" + chr(63 + 1))
    with pytest.raises(LimitError):
        graph6_encode(empty_graph(63))


def test_canonical_key_relabeling():
    rng = random.Random(5)
    c5 = cycle_graph(5)
    perm = list(range(5))
    rng.shuffle(perm)
    assert canonical_key(c5) == canonical_key(relabel(c5, perm))
    assert canonical_key(c5) != canonical_key(path_graph(5))
    for _ in range(30):
        n = rng.randint(1, 9)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                      if rng.random() < 0.5])
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_key(g) == canonical_key(relabel(g, perm))


def test_canonical_key_class_counts_vs_brute_oracle():
    # class counts computed by the permutation oracle, then compared
    for n in range(1, 6):
        brute_classes = set()
        key_classes = set()
        for edges in all_labeled_graphs(n):
            brute_classes.add(brute_canonical(n, edges))
            key_classes.add(canonical_key(Graph(n, edges)))
        assert len(brute_classes) == len(key_classes)
    # the n=4 count is the classic 11
    keys4 = {canonical_key(Graph(4, e)) for e in all_labeled_graphs(4)}
    assert len(keys4) == 11


def test_canonical_key_limit():
    with pytest.raises(LimitError):
        canonical_key(empty_graph(17))


def test_random_k_tree():
    assert random_k_tree(2, 5, 3).edge_count == 7
    t = random_k_tree(1, 6, 9)
    assert t.edge_count == 5
    assert random_k_tree(2, 2, 0) == complete(2)
    assert random_k_tree(3, 9, 4) == random_k_tree(3, 9, 4)  # deterministic
    for seed in range(5):
        g = random_k_tree(2, 10, seed)
        assert g.edge_count == 2 * 10 - 3
        assert has_treewidth_at_most_2(g)


def test_treewidth_two():
    assert has_treewidth_at_most_2(cycle_graph(7))
    assert not has_treewidth_at_most_2(complete(4))
    assert has_treewidth_at_most_2(build_theta(ThetaSpec([1, 2, 3, 5])))
    assert has_treewidth_at_most_2(empty_graph(0))
    assert not has_treewidth_at_most_2(join(empty_graph(3), cycle_graph(4)))


def test_is_bipartite():
    assert is_bipartite(turan(2, 9)) is not None
    assert is_bipartite(cycle_graph(5)) is None
    a, b = is_bipartite(complete_bipartite(3, 4))
    assert a == (0, 1, 2) and b == (3, 4, 5, 6)


def test_pad_and_induced():
    from thetaturan import induced_subgraph
    g = pad(complete(3), 5)
    assert (g.n, g.edge_count) == (5, 3)
    sub = induced_subgraph(join(complete(2), empty_graph(2)), [0, 2, 3])
    assert sub.edge_count == 2
