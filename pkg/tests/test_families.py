import networkx as nx
import pytest
from hypothesis import given, strategies as st

from brookscolor.errors import InvariantViolation, ValidationError
from brookscolor.families import (FamilySpec, bk_five_triangles, bounds_report, catlin,
                                  connected_labeled_graphs, cycle_graph, fig7_left, fig7_right,
                                  gallai_random, generate, join, complete_graph, regular_graphs,
                                  to_networkx, unlabeled_graphs)
from brookscolor.graph import is_connected, is_regular, max_clique, max_independent_set
from brookscolor.oracle import chi_exact
from brookscolor.structure import classify, is_gallai_tree, is_paper_ktree, verify_structure

from strategies import graphs


def test_catlin_3():
    g = catlin(3)
    assert g.n == 15 and g.max_degree == g.min_degree == 8
    assert len(max_clique(g)) == 6 and chi_exact(g)[0] == 8


def test_five_triangles_shares_catlin_parameters():
    a, b = catlin(3), bk_five_triangles()
    assert sorted(a.degrees()) == sorted(b.degrees())
    assert len(max_clique(a)) == len(max_clique(b))
    assert chi_exact(a)[0] == chi_exact(b)[0]
    assert nx.is_isomorphic(to_networkx(a), to_networkx(b))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_join_c5_km(m):
    g = generate(FamilySpec("join", m=m))
    assert len(max_clique(g)) == g.max_degree - 2
    assert chi_exact(g)[0] == g.max_degree - 1


@pytest.mark.parametrize("g", [fig7_left(), fig7_right()], ids=["left", "right"])
def test_fig7_graphs(g):
    d = g.max_degree
    assert is_regular(g) and len(max_clique(g)) < d
    assert len(max_independent_set(g)) * d == g.n


@given(st.integers(1, 12), st.integers(0, 10 ** 6))
def test_gallai_random_is_gallai_and_deterministic(n, seed):
    g = gallai_random(n, seed=seed)
    assert g.n == n and is_connected(g)
    sc = is_gallai_tree(g)
    assert sc.tag == "gallai_tree" and verify_structure(g, sc)
    assert gallai_random(n, seed=seed) == g


def test_generate_rejects_unknown_family():
    with pytest.raises(ValidationError):
        generate(FamilySpec("nope"))


def test_enumeration_counts():
    # OEIS A001349 and A000088 partial sums; A002851 and A006820 entries
    assert sum(1 for _ in connected_labeled_graphs(4)) == 1 + 1 + 4 + 38
    assert len(list(unlabeled_graphs(6))) == 143
    assert len(list(unlabeled_graphs(6, connected=False))) == 208
    assert len(regular_graphs(8, 3)) == 5
    assert len(regular_graphs(8, 4)) == 6
    assert len(regular_graphs(6, 3)) == 2
    with pytest.raises(ValidationError):
        list(unlabeled_graphs(8))


def test_bounds_report_catlin_tight():
    rep = bounds_report(catlin(3))
    assert rep.reed_bound == 8 == rep.chi and rep.reed_holds
    assert not rep.bk_applicable


def test_bounds_report_five_triangles():
    rep = bounds_report(bk_five_triangles())
    assert rep.max_degree == 8 and not rep.bk_applicable


def test_lemma8_skipped_for_odd_cycles():
    rep = bounds_report(cycle_graph(7))
    assert not rep.lemma8_applicable and rep.alpha == 3


@given(graphs(max_n=7))
def test_bounds_never_raise(g):
    rep = bounds_report(g)
    assert rep.reed_holds and not rep.findings


# -------------------------------------------------------------- structure

@given(graphs(min_n=1, max_n=8, connected=True))
def test_classify_witness_verifies(g):
    sc = classify(g)
    assert verify_structure(g, sc)


def test_classify_examples():
    assert classify(complete_graph(5)).tag == "complete"
    assert classify(cycle_graph(7)).tag == "odd_cycle"
    assert classify(cycle_graph(8)).tag == "even_cycle"
    assert classify(join(cycle_graph(5), complete_graph(2))).tag == "other"


def test_paper_ktree():
    tri2 = cycle_graph(3)
    g = type(tri2).from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    assert is_paper_ktree(g, 3).tag == "paper_ktree"
    k4s = type(tri2).from_edges(8, [(a, b) for a in range(4) for b in range(a + 1, 4)]
                                + [(a, b) for a in range(4, 8) for b in range(a + 1, 8)] + [(3, 4)])
    assert is_paper_ktree(k4s, 4).tag == "paper_ktree"
    assert is_paper_ktree(k4s, 3).tag != "paper_ktree"
