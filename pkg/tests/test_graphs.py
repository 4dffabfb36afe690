import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbow3 import (
    GraphError,
    all_pairs_distances,
    bfs_tree,
    build_graph,
    complete_graph,
    components_minus,
    cycle_graph,
    diameter,
    french_windmill,
    gstar,
    path_graph,
    read_edge_list,
    sdiam3,
    sdiam3_with_triple,
    star_graph,
    steiner_distance3,
    write_edge_list,
)
from conftest import connected_graphs, oracle_steiner3


def test_build_path_degrees():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert [g.degree(v) for v in range(3)] == [1, 2, 1]


def test_self_loop_rejected():
    with pytest.raises(GraphError, match=r"\(0, 0\)"):
        build_graph(2, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(GraphError, match=r"\(1, 3\)"):
        build_graph(3, [(1, 3)])


def test_k4_min_degree():
    g = build_graph(4, itertools.combinations(range(4), 2))
    assert g.min_degree() == 3
    assert g.m == 6


def test_duplicates_collapsed():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges == ((0, 1),)


@given(st.permutations([(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]))
def test_build_graph_canonical_under_permutation(perm):
    a = build_graph(4, perm)
    b = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)])
    assert a == b


def test_components_windmill():
    g = french_windmill(3).graph
    comps = components_minus(g, {0})
    assert comps == [(1, 2, 3), (4, 5, 6), (7, 8, 9)]


def test_components_full_dominating_set():
    g = complete_graph(4)
    assert components_minus(g, range(4)) == []


def test_components_c6():
    g = cycle_graph(6)
    assert components_minus(g, {0, 3}) == [(1, 2), (4, 5)]


def test_bfs_star_all_leaves_height_one():
    g = star_graph(5)
    t = bfs_tree(g, range(5), 0)
    assert all(t.height[v] == 1 for v in range(1, 5))
    assert t.first_level == (1, 2, 3, 4)


def test_bfs_path_heights():
    g = path_graph(4)
    t = bfs_tree(g, range(4), 0)
    assert [t.height[v] for v in range(4)] == [0, 1, 2, 3]


def test_bfs_c4_heights_and_cross_edge():
    g = cycle_graph(4)
    t = bfs_tree(g, range(4), 0)
    assert [t.height[v] for v in range(4)] == [0, 1, 2, 1]
    tree_edges = {(min(v, t.parent[v]), max(v, t.parent[v])) for v in range(1, 4)}
    non_tree = [e for e in g.edges if e not in tree_edges]
    assert len(non_tree) == 1
    u, v = non_tree[0]
    assert {t.height[u], t.height[v]} == {1, 2}


def test_bfs_root_outside_component():
    g = cycle_graph(6)
    with pytest.raises(GraphError, match="root"):
        bfs_tree(g, {1, 2}, 0)


def test_bfs_subtree_types():
    g = star_graph(4)
    t = bfs_tree(g, range(4), 0)
    assert t.subtree_label(0) == ("root", None)
    assert t.subtree_label(1) == ("I", 0)
    assert t.subtree_label(3) == ("II", None)
    assert t.is_type_two(3) and not t.is_type_two(1)


@given(connected_graphs(min_n=2, max_n=9))
@settings(max_examples=60)
def test_bfs_edges_never_skip_a_level(g):
    t = bfs_tree(g, range(g.n), 0)
    for u, v in g.edges:
        assert abs(t.height[u] - t.height[v]) <= 1
    # parent/height consistency
    for v in range(1, g.n):
        assert t.height[v] == t.height[t.parent[v]] + 1
    assert t.height[0] == 0


def test_apsp_k4():
    dist = all_pairs_distances(complete_graph(4))
    assert all(dist[u][v] == 1 for u in range(4) for v in range(4) if u != v)
    assert diameter(complete_graph(4)) == 1


def test_apsp_path5():
    assert diameter(path_graph(5)) == 4


def test_apsp_gstar_diam_8():
    g = gstar(3, 1).graph
    assert g.n == 14
    assert diameter(g) == 8


def test_apsp_disconnected_names_vertices():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError, match="0 and 2"):
        all_pairs_distances(g)


def test_steiner_path():
    g = path_graph(3)
    assert steiner_distance3(g, {0, 1, 2}) == 2


def test_steiner_star_leaves():
    g = star_graph(4)
    assert steiner_distance3(g, {1, 2, 3}) == 3


def test_steiner_c5():
    g = cycle_graph(5)
    assert oracle_steiner3(g, {0, 2, 4}) == 3
    assert steiner_distance3(g, {0, 2, 4}) == 3


def test_steiner_needs_three_distinct():
    with pytest.raises(GraphError):
        steiner_distance3(path_graph(4), {0, 1})


@given(connected_graphs(min_n=3, max_n=7))
@settings(max_examples=40)
def test_steiner_matches_subset_enumeration(g):
    for s in itertools.combinations(range(g.n), 3):
        assert steiner_distance3(g, s) == oracle_steiner3(g, s)


def test_sdiam_complete():
    assert sdiam3(complete_graph(4)) == 2
    assert sdiam3(complete_graph(6)) == 2


def test_sdiam_path4():
    assert sdiam3(path_graph(4)) == 3


def test_sdiam_gstar_at_least_diam():
    g = gstar(3, 1).graph
    assert sdiam3(g) >= diameter(g) == 8


def test_sdiam_extremal_triple_is_consistent():
    g = path_graph(5)
    val, triple = sdiam3_with_triple(g)
    assert val == 4
    assert steiner_distance3(g, triple) == val


def test_sdiam_needs_three_vertices():
    with pytest.raises(GraphError):
        sdiam3(path_graph(2))


@given(connected_graphs(min_n=3, max_n=9))
@settings(max_examples=60)
def test_diameter_at_most_sdiam3(g):
    assert diameter(g) <= sdiam3(g)


def test_edge_list_roundtrip():
    g = french_windmill(2).graph
    text = write_edge_list(g)
    assert read_edge_list(text) == g


def test_edge_list_comments_ignored():
    text = "# a graph\n3 2  # header\n0 1\n1 2\n"
    g = read_edge_list(text)
    assert g.edges == ((0, 1), (1, 2))


def test_edge_list_bad_header():
    with pytest.raises(GraphError):
        read_edge_list("x y\n")
    with pytest.raises(GraphError, match="endpoint tokens"):
        read_edge_list("3 2\n0 1\n")
