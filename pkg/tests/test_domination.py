import pytest
from hypothesis import given, settings

from rainbow3 import (
    CONNECTED,
    GraphError,
    LimitError,
    PLAIN,
    cds_heuristic,
    check_domination,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    feet,
    french_windmill,
    interval_dominating_path,
    interval_graph,
    k_dominating,
    k_way,
    min_connected_dominating_set,
    min_connected_k_dominating_set,
    path_graph,
    random_min_degree,
    star_graph,
    three_way_dominating_set,
    threshold_example,
)
from conftest import (
    graphs_with_subsets,
    connected_graphs,
    oracle_connected,
    oracle_min_connected_dominating,
    oracle_min_connected_k_dominating,
)


def test_check_k4_single_vertex_connected():
    assert check_domination(complete_graph(4), {0}, CONNECTED)


def test_check_c6_disconnected_inside():
    g = cycle_graph(6)
    assert check_domination(g, {0, 3}, PLAIN)
    assert not check_domination(g, {0, 3}, CONNECTED)


def test_check_windmill_hub_three_way():
    g = french_windmill(3).graph
    assert check_domination(g, {0}, k_way(3))
    assert not check_domination(g, {0}, k_dominating(3))


def test_check_rejects_out_of_range():
    assert not check_domination(complete_graph(3), {5}, PLAIN)


@given(graphs_with_subsets())
@settings(max_examples=80)
def test_k_dominating_implies_k_way(drawn):
    g, dset, k = drawn
    if check_domination(g, dset, k_dominating(k)):
        assert check_domination(g, dset, k_way(k))


@given(graphs_with_subsets())
@settings(max_examples=120)
def test_check_domination_matches_plain_set_logic(drawn):
    g, dset, k = drawn

    def oracle(kind):
        for v in range(g.n):
            if v in dset:
                continue
            if kind.k_way and g.degree(v) < kind.k_way:
                return False
            if sum(1 for w in g.adj[v] if w in dset) < kind.k_dominating:
                return False
        if kind.connected and not oracle_connected(dset, g.edges):
            return False
        return True

    for kind in (PLAIN, CONNECTED, k_way(k), k_dominating(k),
                 k_way(k, connected=False), k_dominating(k, connected=False)):
        assert check_domination(g, dset, kind) == oracle(kind)


def test_min_cds_complete():
    assert min_connected_dominating_set(complete_graph(5)).vertices == {0}


def test_min_cds_path5():
    assert min_connected_dominating_set(path_graph(5)).vertices == {1, 2, 3}


def test_min_cds_c6():
    assert min_connected_dominating_set(cycle_graph(6)).size == 4


def test_min_cds_limit():
    g = random_min_degree(30, 3, seed=1)
    with pytest.raises(LimitError, match="heuristic"):
        min_connected_dominating_set(g, limit=24)


@given(connected_graphs(min_n=2, max_n=8))
@settings(max_examples=40)
def test_min_cds_matches_enumeration_oracle(g):
    ours = min_connected_dominating_set(g)
    truth = oracle_min_connected_dominating(g)
    assert ours.size == len(truth)
    assert check_domination(g, ours.vertices, CONNECTED)


def test_min_cds_oracle_up_to_twelve_vertices():
    for n, seed in [(10, 0), (11, 1), (12, 2), (12, 3), (11, 4), (12, 5)]:
        g = random_min_degree(n, 3, seed=seed)
        ours = min_connected_dominating_set(g)
        assert ours.size == len(oracle_min_connected_dominating(g))


def test_heuristic_star():
    assert cds_heuristic(star_graph(6)).vertices == {0}


def test_heuristic_k4():
    assert cds_heuristic(complete_graph(4)).size == 1


def test_heuristic_valid_on_random_graph():
    g = random_min_degree(30, 3, seed=7)
    dom = cds_heuristic(g)
    assert dom.provenance == "heuristic"
    assert check_domination(g, dom.vertices, CONNECTED)


@given(connected_graphs(min_n=2, max_n=8))
@settings(max_examples=40)
def test_heuristic_never_beats_exact(g):
    assert cds_heuristic(g).size >= min_connected_dominating_set(g).size


def test_three_way_windmill_is_hub():
    g = french_windmill(3).graph
    dom = three_way_dominating_set(g)
    assert dom.vertices == {0}
    assert dom.provenance == "exact"


def test_three_way_high_degree_graph_equals_cds():
    g = random_min_degree(12, 3, seed=3)
    dom = three_way_dominating_set(g)
    assert dom.size == min_connected_dominating_set(g).size


def test_three_way_path3_takes_everything():
    assert three_way_dominating_set(path_graph(3)).vertices == {0, 1, 2}


@given(connected_graphs(min_n=3, max_n=9))
@settings(max_examples=40)
def test_three_way_output_checks(g):
    dom = three_way_dominating_set(g)
    assert check_domination(g, dom.vertices, k_way(3))


def test_min_k_dominating_k4():
    dom = min_connected_k_dominating_set(complete_graph(4), 3)
    assert dom.size == 3


def test_min_k_dominating_k33():
    g = complete_bipartite(3, 3)
    dom = min_connected_k_dominating_set(g, 3)
    assert dom.size == 4
    assert dom.size == len(oracle_min_connected_k_dominating(g, 3))


def test_min_k_dominating_threshold_picks_the_ys():
    made = threshold_example(5)
    dom = min_connected_k_dominating_set(made.graph, 3)
    ys = {made.labels["y1"], made.labels["y2"], made.labels["y3"]}
    assert dom.vertices == ys


@given(connected_graphs(min_n=3, max_n=7))
@settings(max_examples=25)
def test_min_k_dominating_matches_oracle(g):
    ours = min_connected_k_dominating_set(g, 2)
    assert ours.size == len(oracle_min_connected_k_dominating(g, 2))


def test_feet_accessor():
    g = french_windmill(2).graph
    assert feet(g, {0}, 1) == (0,)
    assert feet(g, {0, 2}, 1) == (0, 2)


def test_interval_path_all_overlapping():
    assert interval_dominating_path([(0, 10), (1, 9), (2, 8)]) == [0]


def test_interval_path_staircase_dominates():
    intervals = [(0.0, 2.0), (1.0, 3.0), (2.0, 4.0), (3.0, 5.0)]
    path = interval_dominating_path(intervals)
    g = interval_graph(intervals)
    assert check_domination(g, path, PLAIN)
    for a, b in zip(path, path[1:]):
        assert g.has_edge(a, b)


def test_interval_path_complete_system():
    assert len(interval_dominating_path([(0, 5)] * 4)) == 1


def test_interval_path_disconnected():
    with pytest.raises(GraphError, match="disconnected"):
        interval_dominating_path([(0, 1), (5, 6)])


def test_read_intervals():
    from rainbow3 import read_intervals

    text = "# staircase\n0 2\n1.5 3  # overlaps\n\n2.5 4\n"
    assert read_intervals(text) == [(0.0, 2.0), (1.5, 3.0), (2.5, 4.0)]
    with pytest.raises(GraphError):
        read_intervals("1 2 3\n")
