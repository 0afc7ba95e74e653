import collections
import random

import networkx as nx
import pytest
from hypothesis import given

from brookscolor.brooks import (KEMPE_DEPTH, _free_colors, check_partition, color_brooks,
                                find_good_p3, find_obstruction_free_partition, good_p3_triples,
                                kempe_repair, shortest_cycle, tverberg_select)
from brookscolor.errors import InvariantViolation, PreconditionError
from brookscolor.families import (complete_bipartite, complete_graph, cycle_graph, fig7_right,
                                  from_networkx, petersen_graph, power, prism_graph)
from brookscolor.graph import (Graph, bits, is_complete, is_independent, is_odd_cycle, is_proper,
                               is_two_connected, max_clique)
from brookscolor.report import STRATEGIES, brooks_bound

from strategies import graphs


@pytest.mark.parametrize("strategy", STRATEGIES)
@given(g=graphs(min_n=1, max_n=8, connected=True))
def test_strategy_colors_within_bound(strategy, g):
    rep = color_brooks(g, strategy)
    exceptional = is_complete(g) or is_odd_cycle(g)
    assert (rep.outcome == "exceptional") == exceptional
    if not exceptional:
        assert is_proper(g, rep.coloring)
        assert rep.palette_size <= brooks_bound(g)


@pytest.mark.parametrize("strategy", STRATEGIES)
@given(g=graphs(max_n=9))
def test_strategy_on_disconnected_input(strategy, g):
    rep = color_brooks(g, strategy)
    if rep.outcome == "colored":
        assert is_proper(g, rep.coloring)
        assert rep.palette_size <= brooks_bound(g)
    else:
        comp = rep.exception.data["component"]
        sub, _ = g.induced(sum(1 << v for v in comp))
        assert is_complete(sub) or is_odd_cycle(sub)


@pytest.mark.parametrize("strategy", STRATEGIES)
@pytest.mark.parametrize("g", [petersen_graph(), prism_graph(), power(cycle_graph(8), 2),
                               fig7_right(), complete_bipartite(3, 3)], ids=repr)
def test_strategy_uses_delta_colors_on_regular_graphs(strategy, g):
    rep = color_brooks(g, strategy)
    assert rep.outcome == "colored" and rep.palette_size <= g.max_degree


def test_exceptional_certificates():
    rep = color_brooks(complete_graph(4), "kempe")
    assert rep.to_json()["exception"] == "complete_graph"
    rep = color_brooks(cycle_graph(7), "lovasz")
    assert rep.to_json()["exception"] == "odd_cycle"


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_single_vertex(strategy):
    rep = color_brooks(Graph.empty(1), strategy)
    assert rep.outcome == "exceptional" and rep.coloring == (1,)
    assert color_brooks(Graph.empty(0), strategy).coloring == ()


def test_exceptional_reports_carry_delta_plus_one_coloring():
    for g in (complete_graph(5), cycle_graph(9)):
        rep = color_brooks(g, "kernel")
        assert is_proper(g, rep.coloring) and rep.palette_size == g.max_degree + 1


def test_unknown_strategy():
    with pytest.raises(ValueError):
        color_brooks(cycle_graph(4), "nope")


# ------------------------------------------------------------------ good P3

@given(graphs(min_n=4, max_n=8, connected=True))
def test_good_p3_is_among_brute_force_triples(g):
    if not is_two_connected(g) or g.min_degree < 3 or is_complete(g):
        with pytest.raises(PreconditionError):
            find_good_p3(g)
        return
    assert find_good_p3(g) in good_p3_triples(g)


def test_good_p3_when_2_connected_only():
    # two K4 minus an edge glued at a 2-cut
    g = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5),
                             (3, 4), (3, 5), (4, 5)])
    u, v, w = find_good_p3(g)
    assert (u, v, w) in good_p3_triples(g)


# ------------------------------------------------------------------- Kempe

def _tight_colorings(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.choice([3, 3, 4])
        n = rng.choice([8, 10, 12])
        g = from_networkx(nx.random_regular_graph(d, n, seed=rng.randrange(10 ** 9)))
        if not is_two_connected(g) or is_complete(g):
            continue
        order = list(range(1, g.n))
        rng.shuffle(order)
        col = [0] * g.n
        for x in order:
            free = [c for c in range(1, d + 1) if c not in {col[y] for y in bits(g.adj[x])}]
            if not free:
                break
            col[x] = rng.choice(free)
        else:
            if len({col[x] for x in bits(g.adj[0])}) == d and \
                    not any(_free_colors(g, col, x, d) for x in bits(g.adj[0])):
                out.append((g, d, col))
    return out


def test_kempe_cascade_on_tight_colorings():
    rules = collections.Counter()
    for g, d, col in _tight_colorings(7, 40):
        trace = []
        out = kempe_repair(g, 0, col, d, trace)
        assert is_proper(g, out) and max(out) <= d
        steps = trace[0]["rules"]
        assert len(steps) <= KEMPE_DEPTH
        assert sum(s["rule"] == "R4" for s in steps) <= 1
        rules.update(s["rule"] for s in steps)
    assert rules["R1"] and rules["R2"]


def test_kempe_rejects_bad_start():
    g = petersen_graph()
    with pytest.raises(PreconditionError):
        kempe_repair(g, 0, [1] * 10, 3)


def test_kempe_free_color_shortcut():
    g = cycle_graph(4)
    trace = []
    out = kempe_repair(g, 0, [0, 1, 2, 1], 3, trace)
    assert is_proper(g, out) and out[0] in (2, 3)


# ------------------------------------------------------------------ cubic

def test_shortest_cycle():
    assert len(shortest_cycle(petersen_graph())) == 5
    assert len(shortest_cycle(prism_graph())) == 3
    with pytest.raises(PreconditionError):
        shortest_cycle(Graph.from_edges(3, [(0, 1), (1, 2)]))


# ----------------------------------------------------------------- k-trees

@given(graphs(min_n=4, max_n=8, connected=True))
def test_tverberg_selection(g):
    k = g.max_degree
    try:
        sel = tverberg_select(g, k)
    except PreconditionError:
        return
    assert is_independent(g, sel.removed)
    for comp, deg in sel.components:
        assert deg < k
    left = set(range(g.n)) - set(sel.removed)
    assert left == {v for comp, _ in sel.components for v in comp}


def test_tverberg_refuses_ktree():
    # two triangles joined by an edge between degree-2 vertices
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    with pytest.raises(PreconditionError):
        tverberg_select(g, 3)


# --------------------------------------------------------------- partition

@given(graphs(min_n=4, max_n=8, connected=True))
def test_partition_passes_checker(g):
    if g.max_degree < 3 or len(max_clique(g)) > g.max_degree:
        with pytest.raises(PreconditionError):
            find_obstruction_free_partition(g)
        return
    p = find_obstruction_free_partition(g, allow_fallback=False)
    assert check_partition(g, p) == []
    assert not p.fallback_used and p.obstructions == []


def test_partition_checker_catches_errors():
    g = petersen_graph()
    p = find_obstruction_free_partition(g)
    bad = type(p)(p.v2, p.v1, p.phi, [], [], False)
    assert check_partition(g, bad)


def test_partition_refuses_clique():
    with pytest.raises(PreconditionError) as exc:
        find_obstruction_free_partition(complete_graph(4))
    assert exc.value.certificate == {"clique": [0, 1, 2, 3]}
