import itertools

import pytest
from hypothesis import given

from brookscolor.choosability import kernel_orient, kernel_whittle
from brookscolor.digraph import Digraph
from brookscolor.errors import ScaleRefusal
from brookscolor.families import (complete_bipartite, complete_graph, cycle_graph, petersen_graph,
                                  prism_graph)
from brookscolor.graph import Graph, to_mask
from brookscolor.oracle import chi_exact, chi_list_exact
from brookscolor.paintability import (chi_paint_exact, defeats_all_adversaries, degeneracy_orientation,
                                      maximal_independent_subsets, optimal_painter,
                                      paint_game_solve, painter_kernel_strategy, play)

from strategies import graphs


@given(graphs(min_n=1, max_n=5))
def test_chi_chain(g):
    c = chi_exact(g)[0]
    assert c <= chi_list_exact(g, lower=c) <= chi_paint_exact(g)


@pytest.mark.parametrize("g,expected", [
    (cycle_graph(4), 2), (cycle_graph(5), 3), (complete_graph(4), 4),
    (complete_bipartite(2, 3), 2), (complete_bipartite(3, 3), 3),
])
def test_paint_numbers(g, expected):
    assert chi_paint_exact(g) == expected


def test_theta_224_separates_choice_and_paint():
    # three a-b paths of lengths 2, 2, 4
    g = Graph.from_edges(7, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 6), (6, 1)])
    assert chi_list_exact(g) == 2
    assert chi_paint_exact(g) == 3


def test_maximal_independent_subsets():
    g = cycle_graph(5)
    subs = maximal_independent_subsets(g.adj, 0b11111)
    assert sorted(subs) == sorted({0b00101, 0b01001, 0b01010, 0b10010, 0b10100})


def test_table_is_winning():
    g = cycle_graph(4)
    res = paint_game_solve(g, [2] * 4, with_table=True)
    assert res.winner == "painter" and res.table
    assert res.to_json()["strategy"][0].keys() == {"uncolored", "tokens", "reveal", "response"}


def test_kernel_painter_beats_every_adversary():
    for g in (prism_graph(), petersen_graph()):
        core = kernel_whittle(g)
        d = kernel_orient(g, core)
        sub, _ = g.induced(to_mask(core.h))
        f = [sub.degree(v) for v in range(sub.n)]
        ok, line = defeats_all_adversaries(sub, f, painter_kernel_strategy(d, f))
        assert ok, line


def test_weak_painter_loses():
    g = cycle_graph(3)
    lazy = lambda u, s: 1 << (s & -s).bit_length() - 1
    ok, line = defeats_all_adversaries(g, [2, 2, 2], lazy)
    assert not ok and line


def test_kernel_strategy_checks_tokens():
    d = Digraph.from_arcs(3, [(0, 1), (0, 2)])
    with pytest.raises(ValueError):
        painter_kernel_strategy(d, [1, 1, 1])


def test_play_with_optimal_painter():
    g = cycle_graph(5)
    out = play(g, [3] * 5, optimal_painter(g, [3] * 5), [[0, 1, 2, 3, 4]] * 5)
    assert out["winner"] == "painter"
    out = play(g, [2] * 5, optimal_painter(g, [2] * 5), [[0, 1, 2, 3, 4], [1, 3, 4], [2, 3, 4]])
    assert out["winner"] in ("adversary", "undecided")


def test_paint_scale_refusal():
    with pytest.raises(ScaleRefusal):
        paint_game_solve(cycle_graph(12), [2] * 12)


def _degeneracy(g):
    live, best = g.vertex_mask, 0
    while live:
        v = min((x for x in range(g.n) if live >> x & 1), key=lambda x: (g.adj[x] & live).bit_count())
        best = max(best, (g.adj[v] & live).bit_count())
        live &= ~(1 << v)
    return best


@given(graphs(min_n=1, max_n=6, connected=False))
def test_degeneracy_orientation_feeds_kernel_painter(g):
    d = degeneracy_orientation(g)
    assert d.underlying().adj == g.adj
    assert max(d.outdegree(v) for v in range(g.n)) == _degeneracy(g)
    f = [d.outdegree(v) + 1 for v in range(g.n)]
    ok, line = defeats_all_adversaries(g, f, painter_kernel_strategy(d, f))
    assert ok, line


def test_kernel_painter_rejects_short_tokens():
    d = degeneracy_orientation(complete_graph(4))
    with pytest.raises(ValueError):
        painter_kernel_strategy(d, [2, 2, 2, 2])
