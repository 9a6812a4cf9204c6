import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowindex import (
    GenerationError,
    Graph,
    ParseError,
    bfs_distances,
    complete_graph,
    cycle_graph,
    diameter,
    distance,
    format_edge_list,
    generate,
    gnp_connected_graph,
    k_step_neighborhood,
    parse_edge_list,
    path_graph,
    petersen_graph,
    set_distance,
    steiner_distance,
    steiner_diameter,
)


@st.composite
def connected_graphs(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    # random spanning tree first, then extra edges
    tree = []
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        tree.append((u, v))
    all_pairs = list(itertools.combinations(range(n), 2))
    extra = draw(st.sets(st.sampled_from(all_pairs), max_size=len(all_pairs)))
    return Graph.build(n, set(tree) | extra)


# ---------------------------------------------------------------------------
# Parsing


def test_parse_path_on_three():
    g = parse_edge_list("3 2\n0 1\n1 2")
    assert g.n == 3 and g.edges == frozenset({(0, 1), (1, 2)})


def test_parse_triangle():
    g = parse_edge_list("3 3\n0 1\n1 2\n0 2")
    assert g == complete_graph(3)


def test_parse_rejects_loop():
    with pytest.raises(ParseError, match="loop"):
        parse_edge_list("2 1\n0 0")


def test_parse_rejects_out_of_range():
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("2 1\n0 5")


def test_parse_rejects_malformed_line():
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("2 1\n0 x")


def test_parse_rejects_wrong_count():
    with pytest.raises(ParseError, match="declared 2"):
        parse_edge_list("3 2\n0 1")


def test_parse_collapses_duplicates_with_warning():
    with pytest.warns(UserWarning, match="duplicate"):
        g = parse_edge_list("3 3\n0 1\n1 0\n1 2")
    assert g.m == 2


def test_parse_ignores_comments_and_blanks():
    g = parse_edge_list("# a path\n3 2\n\n0 1\n# middle\n1 2\n")
    assert g.m == 2


def test_format_round_trip():
    g = petersen_graph()
    assert parse_edge_list(format_edge_list(g)) == g


# ---------------------------------------------------------------------------
# Generators


def test_complete_graph_k4():
    assert complete_graph(4).m == 6


def test_cycle_all_degree_two():
    g = cycle_graph(5)
    assert all(g.degree(v) == 2 for v in range(5))


def test_petersen_shape():
    g = petersen_graph()
    assert g.n == 10 and g.m == 15
    assert all(g.degree(v) == 3 for v in range(10))
    assert diameter(g) == 2


def test_gnp_deterministic():
    a = gnp_connected_graph(20, 0.5, seed=7)
    b = gnp_connected_graph(20, 0.5, seed=7)
    assert a == b and a.is_connected


def test_gnp_retry_cap():
    with pytest.raises(GenerationError):
        gnp_connected_graph(5, 0.0, seed=1)


def test_generate_dispatch_and_param_errors():
    assert generate("cycle", n=6) == cycle_graph(6)
    with pytest.raises(ValueError):
        generate("gnp", n=5, p=1.5)
    with pytest.raises(ValueError):
        generate("cycle", n=2)
    with pytest.raises(ValueError):
        generate("nonsense", n=3)


# ---------------------------------------------------------------------------
# Distances and neighborhoods


def test_distance_examples():
    c6 = cycle_graph(6)
    assert distance(c6, 0, 3) == 3
    assert distance(c6, 2, 2) == 0
    p4 = path_graph(4)
    assert distance(p4, 0, 3) == 3


def test_distance_unreachable_is_none():
    g = Graph.build(4, [(0, 1), (2, 3)])
    assert distance(g, 0, 3) is None


def test_set_distance_examples():
    c6 = cycle_graph(6)
    assert set_distance(c6, [0], [3]) == 3
    assert set_distance(c6, [0, 1], [1, 2]) == 0
    p7 = path_graph(7)
    assert set_distance(p7, [0, 1], [5, 6]) == 4
    with pytest.raises(ValueError):
        set_distance(c6, [], [1])


def test_k_step_neighborhood_examples():
    c6 = cycle_graph(6)
    assert k_step_neighborhood(c6, [0], 2) == (2, 4)
    k4 = complete_graph(4)
    assert k_step_neighborhood(k4, [0], 2) == ()
    p7 = path_graph(7)
    assert k_step_neighborhood(p7, [0, 6], 3) == (3,)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.data())
def test_step_levels_partition_ball(g, data):
    dom = data.draw(
        st.sets(st.integers(0, g.n - 1), min_size=1, max_size=g.n)
    )
    j = data.draw(st.integers(1, 4))
    dist = bfs_distances(g, dom)
    levels = [set(k_step_neighborhood(g, dom, i)) for i in range(1, j + 1)]
    for a, b in itertools.combinations(levels, 2):
        assert not a & b
    union = set(dom).union(*levels)
    ball = {v for v in range(g.n) if dist[v] is not None and dist[v] <= j}
    assert union == ball


# ---------------------------------------------------------------------------
# Steiner distance and diameter


def test_steiner_complete_is_star():
    k5 = complete_graph(5)
    d, w = steiner_distance(k5, [0, 2, 4])
    assert d == 2 and w.is_valid_for(k5)


def test_steiner_path_endpoints():
    p4 = path_graph(4)
    d, w = steiner_distance(p4, [0, 3])
    assert d == 3 and w.edges == frozenset({(0, 1), (1, 2), (2, 3)})


def test_steiner_c6_alternating_terminals():
    # frozen via the vertex-superset enumeration: no 4-vertex superset of
    # {0, 2, 4} induces a connected subgraph of C6, so the minimum is 5
    # vertices, 4 edges
    c6 = cycle_graph(6)
    d, w = steiner_distance(c6, [0, 2, 4])
    assert d == 4 and w.is_valid_for(c6)


def test_steiner_rejects_disconnected():
    g = Graph.build(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        steiner_distance(g, [0, 3])


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=8), st.data())
def test_steiner_dp_agrees_with_enumeration(g, data):
    k = data.draw(st.integers(2, min(4, g.n)))
    terms = data.draw(
        st.sets(st.integers(0, g.n - 1), min_size=k, max_size=k)
    )
    d_dp, w_dp = steiner_distance(g, terms, method="dp")
    d_en, w_en = steiner_distance(g, terms, method="enumerate")
    assert d_dp == d_en
    assert w_dp.is_valid_for(g) and w_dp.size == d_dp
    assert w_en.is_valid_for(g) and w_en.size == d_en


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=8), st.data())
def test_steiner_pair_equals_distance(g, data):
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    if u == v:
        return
    d, _ = steiner_distance(g, [u, v])
    assert d == distance(g, u, v)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=7), st.data())
def test_steiner_monotone_under_terminal_growth(g, data):
    small = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=g.n - 1))
    extra = data.draw(st.integers(0, g.n - 1))
    big = set(small) | {extra}
    d_small, _ = steiner_distance(g, small)
    d_big, _ = steiner_distance(g, big)
    assert d_small <= d_big


def test_steiner_diameter_examples():
    for n in (4, 5, 6):
        for k in range(2, n + 1):
            assert steiner_diameter(complete_graph(n), k) == k - 1
    assert steiner_diameter(path_graph(6), 2) == 5
    assert steiner_diameter(cycle_graph(6), 3) == 4


def test_steiner_diameter_two_is_diameter():
    for g in (cycle_graph(7), petersen_graph(), path_graph(5)):
        assert steiner_diameter(g, 2) == diameter(g)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=7), st.data())
def test_steiner_diameter_chain(g, data):
    k = data.draw(st.integers(2, g.n))
    sd = steiner_diameter(g, k)
    assert k - 1 <= sd <= g.n - 1


def test_steiner_diameter_rejects_bad_k():
    with pytest.raises(ValueError):
        steiner_diameter(cycle_graph(5), 1)
    with pytest.raises(ValueError):
        steiner_diameter(cycle_graph(5), 6)
