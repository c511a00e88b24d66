import pytest

from thetaturan import (APFreeSet, ThetaSpec, apex_turan, behrend_set, book,
                        build_theta, complete, count_cliques, find_embedding,
                        is_ap_free, matched_bipartite, max_book,
                        ruzsa_szemeredi, turan_formula,
                        verify_linear_triangle_system)
from thetaturan.construct import TriangleSystem
from thetaturan.graphs import enumerate_triangles


def test_is_ap_free():
    assert is_ap_free([1, 2])
    assert is_ap_free([1, 3, 4])
    assert not is_ap_free([1, 2, 3])
    assert not is_ap_free([2, 5, 8])
    assert is_ap_free([])


def test_behrend_tiny():
    assert behrend_set(1).elements == (1,)
    assert behrend_set(2).elements == (1, 2)


def test_behrend_verified_and_growing():
    sizes = {}
    for m in (10, 100, 1000, 10000):
        s = behrend_set(m)
        assert is_ap_free(s.elements)
        assert all(1 <= x <= m for x in s.elements)
        sizes[m] = len(s)
    assert sizes[10] <= sizes[100] <= sizes[1000] <= sizes[10000]
    assert sizes[100] < sizes[1000] < sizes[10000]


def test_behrend_deterministic():
    assert behrend_set(500).elements == behrend_set(500).elements


def test_apfreeset_validation():
    with pytest.raises(ValueError):
        APFreeSet(5, (1, 7))
    with pytest.raises(ValueError):
        APFreeSet(5, (3, 1))
    assert APFreeSet(5, (1, 3)).to_text() == "1\n3\n"


def test_rs_small():
    ts = ruzsa_szemeredi(3, APFreeSet(3, (1, 2)))
    g = ts.graph
    assert (g.n, g.edge_count, len(ts.triangles)) == (18, 18, 6)
    assert verify_linear_triangle_system(ts)
    assert max_book(g) == 1


def test_rs_single():
    ts = ruzsa_szemeredi(1, APFreeSet(1, (1,)))
    assert ts.graph.n == 6
    assert len(ts.triangles) == 1
    assert verify_linear_triangle_system(ts)


def test_rs_134():
    ts = ruzsa_szemeredi(5, APFreeSet(5, (1, 3, 4)))
    assert verify_linear_triangle_system(ts)
    assert len(ts.triangles) == 15


def test_rs_rejects_bad_set():
    with pytest.raises(ValueError):
        ruzsa_szemeredi(2, APFreeSet(5, (1, 4)))


def test_rs_with_behrend_200():
    s = behrend_set(200)
    ts = ruzsa_szemeredi(200, s)
    assert len(ts.triangles) == 200 * len(s)
    assert verify_linear_triangle_system(ts)
    assert max_book(ts.graph) == 1
    # tripartite by the three index blocks
    m = 200
    blocks = ((0, m), (m, 3 * m), (3 * m, 6 * m))
    for u, v in ts.graph.edges():
        assert not any(lo <= u < hi and lo <= v < hi for lo, hi in blocks)


def test_verify_rejects_non_linear_system():
    k4 = complete(4)
    listing = tuple(enumerate_triangles(k4))
    assert not verify_linear_triangle_system(TriangleSystem(k4, listing))
    # incomplete listing also fails
    ts = ruzsa_szemeredi(3, APFreeSet(3, (1, 2)))
    assert not verify_linear_triangle_system(
        TriangleSystem(ts.graph, ts.triangles[1:]))


def test_matched_bipartite():
    g = matched_bipartite(8)
    assert g.edge_count == 16 + 2
    assert count_cliques(g, 3) == 8
    assert find_embedding(g, build_theta(ThetaSpec([1, 2, 2, 3]))) is None
    g2 = matched_bipartite(2)
    assert (g2.edge_count, count_cliques(g2, 3)) == (1, 0)
    with pytest.raises(ValueError):
        matched_bipartite(1)


def test_matched_bipartite_triangle_bound():
    for n in range(2, 501):
        g = matched_bipartite(n)
        big = (n + 1) // 2
        expected = (big // 2) * (n // 2)
        assert count_cliques(g, 3) == expected
        assert expected >= 2 * (n // 4) ** 2


def test_matched_bipartite_avoids_theta1223_sample():
    pattern = build_theta(ThetaSpec([1, 2, 2, 3]))
    for n in (6, 9, 11, 14):
        assert find_embedding(matched_bipartite(n), pattern) is None


def test_apex_turan():
    g = apex_turan(2, 9)
    assert count_cliques(g, 3) == 16 == turan_formula(9, 2, 3)
    with pytest.raises(ValueError):
        apex_turan(1, 9)
    with pytest.raises(ValueError):
        apex_turan(3, 3)


def test_apex_turan_formula_range():
    for k in range(2, 7):
        for r in range(3, k + 2):
            for n in range(k + 1, 61):
                assert count_cliques(apex_turan(k, n), r) == turan_formula(n, k, r)


def test_apex_turan_book_free_of_big_books():
    # every page of a book in the apex construction either uses an apex or
    # sits across the bipartition
    assert max_book(apex_turan(2, 9)) == 4  # spine apex-x, pages = other part
