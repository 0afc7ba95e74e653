import random

import pytest
from hypothesis import assume, given, strategies as st

from brookscolor.choosability import (ForestExtension, brooks_list_color, cycle_list_color,
                                      degree_choose_color, find_independency_tree,
                                      gallai_bad_lists, is_even_cycle_with_at_most_one_chord,
                                      is_independency_tree, kernel_color, kernel_orient,
                                      kernel_whittle, rubin_even_cycle, stiebitz_color)
from brookscolor.errors import PreconditionError
from brookscolor.families import (bowtie_graph, complete_bipartite, complete_graph, cycle_graph,
                                  fig7_left, gallai_random, path_graph, petersen_graph,
                                  prism_graph, regular_graphs)
from brookscolor.graph import (Graph, bits, is_complete, is_connected, is_proper,
                               is_two_connected, max_clique, to_mask)
from brookscolor.oracle import ham_path_in_cycle_property, is_kernel_perfect_exact, is_list_colorable
from brookscolor.report import Certificate, brooks_bound
from brookscolor.structure import StructureClass, block_kind, is_gallai_tree

from strategies import graphs


# ----------------------------------------------------------------- cycles

@given(st.integers(3, 9), st.randoms())
def test_cycle_list_color_two_lists(n, rnd):
    g = cycle_graph(n)
    lists = [set(rnd.sample(range(1, 4), 2)) for _ in range(n)]
    res = cycle_list_color(g, lists)
    colorable = is_list_colorable(g, lists)[0]
    if isinstance(res, Certificate):
        assert not colorable and n % 2 == 1 and len({frozenset(x) for x in lists}) == 1
    else:
        assert colorable and is_proper(g, res, lists)


def test_odd_cycle_identical_lists():
    res = cycle_list_color(cycle_graph(5), [{1, 2}] * 5)
    assert res.kind == "odd_cycle_identical_lists" and res.data["list"] == [1, 2]
    assert is_proper(cycle_graph(5), cycle_list_color(cycle_graph(5), [{1, 2, 3}] * 5))


# ---------------------------------------------------------------- Gallai

@given(st.integers(1, 9), st.integers(0, 10 ** 6))
def test_bad_lists_are_bad(n, seed):
    g = gallai_random(n, seed=seed)
    lists = gallai_bad_lists(g)
    assert [len(x) for x in lists] == [g.degree(v) for v in range(g.n)]
    assert not is_list_colorable(g, lists)[0]


def test_bad_lists_refuse_non_gallai():
    with pytest.raises(PreconditionError):
        gallai_bad_lists(cycle_graph(4))


# ----------------------------------------------------------------- Rubin

def _non_gallai_2conn(g):
    return is_two_connected(g) and block_kind(g, range(g.n)) == "other"


@pytest.mark.parametrize("method", ["enumerate", "cutset"])
@given(g=graphs(min_n=4, max_n=8, connected=True))
def test_rubin_cycle(method, g):
    if not _non_gallai_2conn(g):
        with pytest.raises(PreconditionError):
            rubin_even_cycle(g, method)
        return
    h = rubin_even_cycle(g, method)
    assert is_even_cycle_with_at_most_one_chord(g, to_mask(h))


def test_rubin_examples():
    assert sorted(rubin_even_cycle(cycle_graph(6))) == list(range(6))
    assert len(rubin_even_cycle(complete_bipartite(3, 3), "cutset")) == 4


# ----------------------------------------------------- degree-choosability

@given(graphs(min_n=1, max_n=8, connected=True), st.randoms())
def test_degree_choose_color(g, rnd):
    lists = [set(rnd.sample(range(1, 10), g.degree(v))) for v in range(g.n)]
    res = degree_choose_color(g, lists)
    if isinstance(res, StructureClass):
        assert res.tag == "gallai_tree"
    else:
        assert is_gallai_tree(g).tag != "gallai_tree"
        assert is_proper(g, res, lists)


def test_degree_choose_rejects_short_lists():
    with pytest.raises(PreconditionError):
        degree_choose_color(cycle_graph(4), [{1}] * 4)


# ---------------------------------------------------------------- kernels

def _regular_cases():
    out = []
    for n in range(4, 9):
        for d in range(3, n):
            out += [g for g in regular_graphs(n, d) if len(max_clique(g)) <= d]
    return out + [petersen_graph()]


@pytest.mark.parametrize("g", _regular_cases(), ids=repr)
def test_whittle_and_orient(g):
    core = kernel_whittle(g)
    assert core.h and set(core.cross_degree.values()) == {2}
    d = kernel_orient(g, core)
    assert is_kernel_perfect_exact(d)[0]
    keep = d.labels
    sub, _ = g.induced(to_mask(core.h))
    for i, v in enumerate(keep):
        assert d.outdegree(i) <= g.degree(v) - 1
    assert d.underlying() == sub


def test_whittle_preconditions():
    with pytest.raises(PreconditionError):
        kernel_whittle(complete_graph(4))
    with pytest.raises(PreconditionError):
        kernel_whittle(cycle_graph(6))
    with pytest.raises(PreconditionError):
        kernel_whittle(path_graph(4))


@given(graphs(min_n=1, max_n=9), st.randoms())
def test_brooks_list_color(g, rnd):
    need = brooks_bound(g)
    lists = [set(rnd.sample(range(1, need + 4), need)) for _ in range(g.n)]
    assert is_proper(g, brooks_list_color(g, lists), lists)


def test_kernel_color_rejects_short_lists():
    g = prism_graph()
    d = kernel_orient(g, kernel_whittle(g))
    with pytest.raises(PreconditionError):
        kernel_color(d, [{1}] * d.n)


# ------------------------------------------------------- independency trees

@given(graphs(min_n=1, max_n=7, connected=True))
def test_independency_tree_exists_unless_ham_property(g):
    t = find_independency_tree(g, shortcut=False)
    if isinstance(t, StructureClass):
        assert ham_path_in_cycle_property(g)
        assert t.tag in ("complete", "odd_cycle", "even_cycle", "balanced_complete_bipartite")
    else:
        assert not ham_path_in_cycle_property(g)
        assert is_independency_tree(g, t)
    t2 = find_independency_tree(g)
    assert isinstance(t2, StructureClass) == isinstance(t, StructureClass)


def test_independency_tree_examples():
    assert find_independency_tree(cycle_graph(5)).tag == "odd_cycle"
    assert find_independency_tree(complete_bipartite(3, 3)).tag == "balanced_complete_bipartite"
    t = find_independency_tree(fig7_left())
    assert is_independency_tree(fig7_left(), t)


def test_forest_extension_checks():
    g = cycle_graph(4)
    ext = ForestExtension(g, 0b0011, (1, 2, 0, 0), (0b0010, 0b0001, 0, 0), 3)
    assert any("condition 2" in p for p in ext.problems())
    with pytest.raises(PreconditionError):
        stiebitz_color(ForestExtension(g, 0, (0,) * 4, g.adj, 2))


def test_stiebitz_extends_leaf_coloring():
    g = bowtie_graph()
    star = (0b11110, 1, 1, 1, 1)
    col = stiebitz_color(ForestExtension(g, 0b00010, (0, 3, 0, 0, 0), star, 4))
    assert is_proper(g, col) and max(col) <= 4 and col[1] == 3
    with pytest.raises(PreconditionError):
        stiebitz_color(ForestExtension(g, 0b00110, (0, 1, 2, 0, 0), g.adj, 4))
