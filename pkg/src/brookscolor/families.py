"""Named graph constructions, exhaustive enumerators, and bound checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .errors import InvariantViolation, ValidationError
from .graph import Graph, bits, is_connected, max_clique, max_independent_set

FAMILIES = ("cycle", "complete", "complete_bipartite", "join", "catlin",
            "bk_five_triangles", "fig7_left", "fig7_right", "gallai_random")


# ------------------------------------------------------------------ basics


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValidationError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def prism_graph() -> Graph:
    """Triangular prism, the cartesian product of K3 and K2."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def bowtie_graph() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges)


def power(g: Graph, k: int) -> Graph:
    """Vertices at distance 1..k become adjacent."""
    from .graph import bfs_distances
    edges = []
    for u in range(g.n):
        d = bfs_distances(g, 1 << u)
        edges += [(u, v) for v in range(u + 1, g.n) if 0 < d[v] <= k]
    return Graph.from_edges(g.n, edges)


def lexicographic_product(g: Graph, t: int) -> Graph:
    """Blow each vertex of g up into a clique K_t; adjacent vertices become complete to each other."""
    def idx(v, i):
        return v * t + i
    edges = [(idx(v, i), idx(v, j)) for v in range(g.n) for i, j in combinations(range(t), 2)]
    edges += [(idx(u, i), idx(v, j)) for u, v in g.edges() for i in range(t) for j in range(t)]
    return Graph.from_edges(g.n * t, edges)


# ------------------------------------------------------------- named graphs


def catlin(t: int) -> Graph:
    """Line graph of the multigraph obtained from C5 by replacing each edge with t parallel edges.

    Vertex ``(i, c)``, with ``i`` the slot of the cycle edge ``i(i+1)`` and
    ``c`` the copy index, becomes ``t*i + c``.  Two vertices are adjacent
    when their edges share an endpoint.
    """
    if t < 1:
        raise ValidationError("t must be positive")
    edges = []
    slots = [(i, c) for i in range(5) for c in range(t)]
    for (i, c), (j, e) in combinations(slots, 2):
        if i == j or (j - i) % 5 in (1, 4):
            edges.append((t * i + c, t * j + e))
    return Graph.from_edges(5 * t, edges)


def bk_five_triangles() -> Graph:
    """Five disjoint triangles D_0..D_4, complete between D_i and D_j when |i-j| = 1 mod 5."""
    return lexicographic_product(cycle_graph(5), 3)


def fig7_left() -> Graph:
    """Square of the 8-cycle."""
    return power(cycle_graph(8), 2)


def fig7_right() -> Graph:
    """Two 5-cycles a_i and b_i with a_i adjacent to b_i, b_{i+1} and b_{i+4}."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + (i + s) % 5) for i in range(5) for s in (0, 1, 4)]
    return Graph.from_edges(10, edges)


def gallai_random(n: int, seed: int = 0, max_block: int | None = None) -> Graph:
    """Random connected Gallai tree on exactly ``n`` vertices.

    Blocks (cliques or odd cycles) are glued one at a time onto a uniformly
    chosen existing vertex.
    """
    if n < 1:
        raise ValidationError("n must be positive")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    size = 1
    max_block = max_block or n
    while size < n:
        room = n - size
        extra = rng.randint(1, min(room, max_block - 1))
        attach = rng.randrange(size)
        new = list(range(size, size + extra))
        verts = [attach] + new
        if extra + 1 >= 5 and (extra + 1) % 2 == 1 and rng.random() < 0.5:
            k = len(verts)
            edges += [(verts[i], verts[(i + 1) % k]) for i in range(k)]
        else:
            edges += list(combinations(verts, 2))
        size += extra
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------- FamilySpec


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int | None = None
    m: int | None = None
    t: int | None = None
    seed: int = 0


def _check(cond: bool, what: str):
    if not cond:
        raise InvariantViolation(f"generator parameter check failed: {what}")


def generate(spec: FamilySpec, check: bool = True) -> Graph:
    """Build the graph named by ``spec`` and re-verify its published parameters.

    Parameter checks recompute every quantity from the graph; a failure is a
    generator bug and raises :class:`InvariantViolation`.
    """
    from .oracle import chi_exact
    fam = spec.family
    if fam == "cycle":
        g = cycle_graph(spec.n)
    elif fam == "complete":
        g = complete_graph(spec.n)
    elif fam == "complete_bipartite":
        g = complete_bipartite(spec.n, spec.m if spec.m is not None else spec.n)
    elif fam == "join":
        m = spec.m
        g = join(cycle_graph(5), complete_graph(m))
        if check:
            w = len(max_clique(g))
            _check(w == m + 2 and g.max_degree == m + 4, "join clique/degree")
            _check(chi_exact(g)[0] == m + 3, "join chromatic number")
    elif fam == "catlin":
        t = spec.t
        g = catlin(t)
        if check:
            _check(g.max_degree == 3 * t - 1 and len(max_clique(g)) == 2 * t, "catlin degree/clique")
            if t == 3:
                _check(chi_exact(g)[0] == (5 * t + 1) // 2, "catlin chromatic number")
    elif fam == "bk_five_triangles":
        g = bk_five_triangles()
        if check:
            _check(g.n == 15 and g.max_degree == g.min_degree == 8, "five triangles regularity")
            _check(len(max_clique(g)) == 6 and chi_exact(g)[0] == 8, "five triangles clique/chi")
    elif fam in ("fig7_left", "fig7_right"):
        g = fig7_left() if fam == "fig7_left" else fig7_right()
        if check:
            d = g.max_degree
            _check(len(max_clique(g)) < d, "K_Delta-free")
            _check(len(max_independent_set(g)) * d == g.n, "alpha = |G|/Delta")
    elif fam == "gallai_random":
        g = gallai_random(spec.n, spec.seed)
        if check:
            from .structure import is_gallai_tree
            _check(is_gallai_tree(g).tag == "gallai_tree", "gallai tree shape")
    else:
        raise ValidationError(f"unknown family {fam!r}")
    return g


# -------------------------------------------------------------- enumeration


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def connected_labeled_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        for g in all_labeled_graphs(n):
            if is_connected(g):
                yield g


def from_networkx(h) -> Graph:
    nodes = list(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(pos[a], pos[b]) for a, b in h.edges()])


def to_networkx(g: Graph):
    import networkx as nx
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def unlabeled_graphs(max_n: int, min_n: int = 1, connected: bool = True) -> Iterator[Graph]:
    """One graph per isomorphism class on min_n..max_n vertices (max_n <= 7)."""
    import networkx as nx
    if max_n > 7:
        raise ValidationError("the graph atlas stops at 7 vertices")
    for h in nx.graph_atlas_g():
        k = h.number_of_nodes()
        if k < min_n or k > max_n:
            continue
        if connected and (k == 0 or not nx.is_connected(h)):
            continue
        yield from_networkx(h)


def _regular_labeled(n: int, d: int) -> Iterator[Graph]:
    """d-regular graphs on n vertices with N(0) = {1..d}, by edge backtracking.

    Every d-regular graph has a relabelling of this shape, so the output
    meets every isomorphism class.
    """
    adj = [0] * n
    deg = [0] * n
    if d:
        adj[0] = ((1 << (d + 1)) - 1) & ~1
        deg[0] = d
        for w in range(1, d + 1):
            adj[w] = 1
            deg[w] = 1

    def rec(v: int):
        while v < n and deg[v] == d:
            v += 1
        if v == n:
            yield Graph(n, tuple(adj))
            return
        need = d - deg[v]
        cands = [w for w in range(v + 1, n) if deg[w] < d and not adj[v] >> w & 1]
        for combo in combinations(cands, need):
            for w in combo:
                adj[v] |= 1 << w
                adj[w] |= 1 << v
                deg[w] += 1
            deg[v] = d
            yield from rec(v + 1)
            deg[v] -= need
            for w in combo:
                adj[v] &= ~(1 << w)
                adj[w] &= ~(1 << v)
                deg[w] -= 1

    yield from rec(0)


def regular_graphs(n: int, d: int, connected: bool = True) -> list[Graph]:
    """Isomorphism classes of d-regular graphs on n vertices (desk scale)."""
    import networkx as nx
    if n * d % 2 or d >= n:
        return []
    if 2 * d > n - 1 and d != n - 1:
        # use complements, whose degree is smaller
        out = [g.complement() for g in regular_graphs(n, n - 1 - d, connected=False)]
        return [g for g in out if not connected or is_connected(g)]
    reps: dict = {}
    for g in _regular_labeled(n, d):
        if connected and not is_connected(g):
            continue
        h = to_networkx(g)
        key = nx.weisfeiler_lehman_graph_hash(h)
        bucket = reps.setdefault(key, [])
        if not any(nx.is_isomorphic(h, other) for _, other in bucket):
            bucket.append((g, h))
    return [g for bucket in reps.values() for g, _ in bucket]


# ------------------------------------------------------------------- bounds


@dataclass
class BoundsReport:
    n: int
    omega: int
    max_degree: int
    alpha: int
    chi: int | None
    reed_bound: int
    reed_holds: bool | None
    bk_applicable: bool
    bk_holds: bool | None
    fajtlowicz_lhs: int
    fajtlowicz_rhs: Fraction
    lemma8_applicable: bool
    lemma8_lhs: int
    lemma8_rhs: Fraction | None
    findings: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n, "omega": self.omega, "Delta": self.max_degree, "alpha": self.alpha,
            "chi": self.chi, "reed_bound": self.reed_bound, "reed_holds": self.reed_holds,
            "bk_applicable": self.bk_applicable, "bk_holds": self.bk_holds,
            "fajtlowicz_lhs": self.fajtlowicz_lhs, "fajtlowicz_rhs": str(self.fajtlowicz_rhs),
            "lemma8_applicable": self.lemma8_applicable, "lemma8_lhs": self.lemma8_lhs,
            "lemma8_rhs": None if self.lemma8_rhs is None else str(self.lemma8_rhs),
            "findings": self.findings,
        }


def bounds_report(g: Graph, with_chi: bool = True) -> BoundsReport:
    """Evaluate the clique/degree bounds on one graph, recomputing everything.

    The independence bounds are theorems, so a violation raises
    :class:`InvariantViolation`.  The Reed and Borodin-Kostochka inequalities
    are conjectures; a violation is recorded in ``findings`` instead.

    The |G|/Delta bound is only checked for Delta >= 3: odd cycles are
    K_3-free with Delta = 2 and have independence number below |G|/2.
    """
    from .oracle import chi_exact
    n = g.n
    omega = len(max_clique(g)) if n else 0
    delta = g.max_degree
    alpha = len(max_independent_set(g)) if n else 0
    chi = chi_exact(g)[0] if with_chi else None
    reed = -(-(omega + delta + 1) // 2)
    bk_app = delta >= 9 and omega <= delta - 1
    faj_rhs = Fraction(2 * n, omega + delta + 1)
    l8_app = delta >= 3 and omega <= delta
    l8_rhs = Fraction(n, delta) if delta else None
    rep = BoundsReport(n, omega, delta, alpha, chi, reed, None if chi is None else chi <= reed,
                       bk_app, None if chi is None or not bk_app else chi <= delta - 1,
                       alpha, faj_rhs, l8_app, alpha, l8_rhs)
    if alpha < faj_rhs:
        raise InvariantViolation(f"independence bound 2n/(omega+Delta+1) violated: {alpha} < {faj_rhs}")
    if l8_app and alpha < l8_rhs:
        raise InvariantViolation(f"independence bound n/Delta violated: {alpha} < {l8_rhs}")
    if rep.reed_holds is False:
        rep.findings.append(f"REED VIOLATION: chi={chi} > {reed}")
    if rep.bk_holds is False:
        rep.findings.append(f"BORODIN-KOSTOCHKA VIOLATION: chi={chi} > Delta-1={delta - 1}")
    return rep
