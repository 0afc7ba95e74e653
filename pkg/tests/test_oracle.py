import itertools

import pytest
from hypothesis import given, strategies as st

from brookscolor.digraph import Digraph, find_kernel, is_kernel
from brookscolor.errors import ScaleRefusal
from brookscolor.families import (catlin, complete_bipartite, complete_graph, cycle_graph,
                                  path_graph, petersen_graph)
from brookscolor.graph import Graph, is_independent, is_proper, max_clique
from brookscolor.oracle import (chi_exact, chi_list_exact, ham_path_in_cycle_property,
                                hamiltonian_endpoint_pairs, hitting_set_exact, is_f_choosable,
                                is_kernel_perfect_exact, is_list_colorable, maximum_cliques,
                                oracle_report)

from strategies import graphs


def brute_chi(g):
    for k in range(0 if g.n == 0 else 1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges()):
                return k
    return 0


def brute_list_colorable(g, lists):
    return any(all(c[u] != c[v] for u, v in g.edges())
               for c in itertools.product(*[sorted(x) for x in lists]))


def brute_f_choosable(g, f):
    universe = range(sum(f))
    choices = [list(itertools.combinations(universe, k)) for k in f]
    return all(brute_list_colorable(g, ls) for ls in itertools.product(*choices))


@given(graphs(max_n=6))
def test_chi_matches_brute_force(g):
    chi, col = chi_exact(g)
    assert chi == brute_chi(g)
    assert is_proper(g, col) and max(col, default=0) == chi


@given(graphs(max_n=6), st.randoms())
def test_list_colorable_matches_brute_force(g, rnd):
    lists = [set(rnd.sample(range(1, 5), rnd.randint(1, 3))) for _ in range(g.n)]
    ok, col = is_list_colorable(g, lists)
    assert ok == brute_list_colorable(g, lists)
    if ok:
        assert is_proper(g, col, lists)


@given(graphs(max_n=4), st.lists(st.integers(1, 2), min_size=4, max_size=4))
def test_f_choosable_matches_brute_force(g, f):
    f = f[:g.n]
    ok, bad = is_f_choosable(g, f)
    assert ok == brute_f_choosable(g, f)
    if not ok:
        assert [len(x) for x in bad] == f
        assert not brute_list_colorable(g, bad)


@pytest.mark.parametrize("g,expected", [
    (cycle_graph(4), 2), (cycle_graph(5), 3), (complete_bipartite(2, 3), 2),
    (complete_bipartite(2, 4), 3), (complete_bipartite(3, 3), 3), (complete_graph(4), 4),
    (Graph.from_edges(6, [(a, b) for a in range(6) for b in range(a + 1, 6) if a // 2 != b // 2]), 3),
])
def test_choice_numbers(g, expected):
    assert chi_list_exact(g) == expected


def test_known_chromatic_numbers():
    assert chi_exact(petersen_graph())[0] == 3
    assert chi_exact(cycle_graph(7))[0] == 3
    assert chi_exact(complete_graph(6))[0] == 6
    assert chi_exact(catlin(3))[0] == 8


@given(graphs(min_n=1, max_n=7))
def test_hamiltonian_pairs_match_permutations(g):
    pairs = set()
    for p in itertools.permutations(range(g.n)):
        if all(g.has_edge(a, b) for a, b in zip(p, p[1:])):
            pairs.add((min(p[0], p[-1]), max(p[0], p[-1])))
    assert {tuple(sorted(x)) for x in hamiltonian_endpoint_pairs(g)} == pairs


def test_ham_path_property_on_named_graphs():
    assert ham_path_in_cycle_property(cycle_graph(6))
    assert ham_path_in_cycle_property(complete_graph(5))
    assert ham_path_in_cycle_property(complete_bipartite(3, 3))
    assert not ham_path_in_cycle_property(path_graph(4))
    assert not ham_path_in_cycle_property(petersen_graph())


@given(graphs(min_n=1, max_n=7))
def test_hitting_set_is_minimum(g):
    cliques = maximum_cliques(g)
    hs = hitting_set_exact(g)
    best = None
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            m = sum(1 << v for v in s)
            if is_independent(g, s) and all(c & m for c in cliques):
                best = k
                break
        if best is not None:
            break
    if best is None:
        assert hs is None
    else:
        assert hs is not None and len(hs) == best


@given(st.integers(1, 5), st.data())
def test_kernel_perfect_matches_brute_force(n, data):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=10)) if pairs else []
    d = Digraph.from_arcs(n, sorted(chosen))
    brute = True
    for mask in range(1, 1 << n):
        if not any(is_kernel(d, mask, k) for k in range(1 << n) if k & ~mask == 0):
            brute = False
            break
    ok, _ = is_kernel_perfect_exact(d)
    assert ok == brute
    if find_kernel(d, (1 << n) - 1) is not None:
        assert is_kernel(d, (1 << n) - 1, find_kernel(d, (1 << n) - 1))


def test_directed_odd_cycle_has_no_kernel():
    d = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert find_kernel(d, 0b111) is None
    assert not is_kernel_perfect_exact(d)[0]


def test_scale_refusals():
    big = cycle_graph(60)
    with pytest.raises(ScaleRefusal):
        chi_exact(big)
    with pytest.raises(ScaleRefusal):
        is_f_choosable(cycle_graph(12), [2] * 12)
    with pytest.raises(ScaleRefusal):
        hamiltonian_endpoint_pairs(cycle_graph(30))


def test_oracle_report_catlin():
    rep = oracle_report(catlin(3))
    assert (rep.chi, rep.max_degree, rep.omega) == (8, 8, 6)
    assert len(max_clique(catlin(3))) == 6
