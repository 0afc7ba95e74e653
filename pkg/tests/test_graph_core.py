import networkx as nx
import pytest
from hypothesis import given, strategies as st

from brookscolor.errors import GreedyStuck, ParseError, ValidationError
from brookscolor.families import cycle_graph, complete_graph, petersen_graph, to_networkx
from brookscolor.formats import (from_dimacs, from_edge_list, from_graph6, parse, sniff,
                                 to_dimacs, to_edge_list, to_graph6)
from brookscolor.graph import (Graph, bfs_distances, bits, blocks_and_cutvertices, components,
                               cycle_order, greedy_color, is_connected, is_proper, max_clique,
                               max_independent_set, order_by_decreasing_distance, two_coloring)

from strategies import graphs


# ---------------------------------------------------------------- formats

def test_c5_graph6_matches_networkx():
    # frozen from networkx.to_graph6_bytes(header=False)
    assert to_graph6(cycle_graph(5)) == b"Dhc"
    assert from_graph6(b"Dhc") == cycle_graph(5)


@given(graphs(max_n=12))
def test_graph6_agrees_with_networkx(g):
    h = to_networkx(g)
    assert to_graph6(g).strip() == nx.to_graph6_bytes(h, header=False).strip()


@given(graphs(max_n=10))
def test_roundtrips(g):
    assert from_graph6(to_graph6(g)) == g
    assert from_dimacs(to_dimacs(g)) == g
    assert from_edge_list(to_edge_list(g)) == g


@pytest.mark.parametrize("data,fmt", [(b"Dhc", "graph6"), (b">>graph6<<Dhc", "graph6"),
                                      (b"p edge 3 1\ne 1 2\n", "dimacs_col"),
                                      (b"0 1\n1 2\n", "edge_list")])
def test_sniff(data, fmt):
    assert sniff(data) == fmt


@pytest.mark.parametrize("data,err", [
    (b"p edge 3\n", ParseError),
    (b"p edge 3 1\ne 1 1\n", ValidationError),
    (b"p edge 3 2\ne 1 2\ne 2 1\n", ValidationError),
    (b"0 1\n1 x\n", ParseError),
    (b"0 0\n", ValidationError),
])
def test_malformed_input(data, err):
    with pytest.raises(err):
        parse(data)


def test_parse_error_carries_offset():
    with pytest.raises(ParseError) as exc:
        parse(b"0 1\n1 x\n")
    assert exc.value.offset == 4


# ------------------------------------------------------------- structure

@given(graphs(max_n=9))
def test_components_match_networkx(g):
    mine = sorted(sorted(bits(c)) for c in components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(to_networkx(g)))
    assert mine == theirs


@given(graphs(max_n=9))
def test_blocks_match_networkx(g):
    h = to_networkx(g)
    bct = blocks_and_cutvertices(g)
    mine = sorted(sorted(b) for b in bct.blocks if len(b) >= 2)
    theirs = sorted(sorted(b) for b in nx.biconnected_components(h))
    assert mine == theirs
    assert set(bct.cutvertices) == set(nx.articulation_points(h))


@given(graphs(max_n=9))
def test_clique_and_independence_match_networkx(g):
    h = to_networkx(g)
    w = max((len(c) for c in nx.find_cliques(h)), default=0)
    assert len(max_clique(g)) == w
    comp = nx.complement(h)
    a = max((len(c) for c in nx.find_cliques(comp)), default=0)
    assert len(max_independent_set(g)) == a


@given(graphs(max_n=9))
def test_two_coloring_iff_bipartite(g):
    c = two_coloring(g)
    assert (c is not None) == nx.is_bipartite(to_networkx(g))
    if c is not None:
        assert is_proper(g, c)


@given(graphs(max_n=9), st.randoms())
def test_greedy_uses_at_most_delta_plus_one(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    c = greedy_color(g, order)
    assert is_proper(g, c)
    assert max(c, default=0) <= g.max_degree + 1


@given(graphs(min_n=1, max_n=9, connected=True))
def test_order_toward_target_ends_at_target(g):
    order = order_by_decreasing_distance(g, [0])
    assert order[-1] == 0 and sorted(order) == list(range(g.n))
    dist = bfs_distances(g, 1)
    assert all(dist[a] >= dist[b] for a, b in zip(order, order[1:]))
    # every vertex but the target has a later neighbour, so Delta colors suffice if d(0) < Delta
    for i, v in enumerate(order[:-1]):
        assert any(g.has_edge(v, u) for u in order[i + 1:])


def test_greedy_stuck_reports_vertex():
    with pytest.raises(GreedyStuck) as exc:
        greedy_color(complete_graph(4), range(4), max_colors=3)
    assert exc.value.vertex == 3


def test_cycle_order_walks_cycle():
    g = cycle_graph(7)
    order = cycle_order(g)
    assert all(g.has_edge(order[i], order[(i + 1) % 7]) for i in range(7))


def test_petersen_basics():
    g = petersen_graph()
    assert g.n == 10 and g.num_edges() == 15 and g.max_degree == g.min_degree == 3
    assert is_connected(g) and len(max_clique(g)) == 2 and len(max_independent_set(g)) == 4


def test_graph_rejects_bad_edges():
    with pytest.raises(ValidationError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValidationError):
        Graph(3, (0, 0))
