"""List coloring: cycles, Gallai trees, kernels and spanning-forest extension.

The pieces here build on each other:

* :func:`cycle_list_color` colors a cycle from 2-lists unless the cycle is
  odd and every list is the same.
* :func:`gallai_bad_lists` builds degree-size lists that defeat a Gallai
  tree, and :func:`degree_choose_color` colors every other connected graph
  from degree-size lists, starting from an induced even cycle with at most
  one chord (:func:`rubin_even_cycle`).
* :func:`kernel_whittle`, :func:`kernel_orient` and :func:`kernel_color`
  make up the kernel pipeline behind :func:`brooks_list_color`, which
  colors any graph from lists of size max{3, omega, Delta}.
* :func:`find_independency_tree` and :func:`stiebitz_color` extend a
  coloring of an induced subgraph along a spanning forest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .digraph import Digraph, find_kernel, is_kernel
from .errors import InvariantViolation, PreconditionError, ValidationError
from .graph import (Graph, bfs_distances, bits, blocks_and_cutvertices, component_of,
                    components, cycle_order, greedy_color, is_complete, is_connected,
                    is_cycle, is_independent, is_proper, is_regular, is_two_connected,
                    lowest, max_clique, max_independent_set, order_by_decreasing_distance,
                    to_mask, two_coloring)
from .report import Certificate, StrategyReport, brooks_bound, run_strategy
from .structure import StructureClass, balanced_bipartite_parts, classify, is_gallai_tree

# ------------------------------------------------------------------ cycles


def cycle_list_color(c: Graph, lists) -> tuple[int, ...] | Certificate:
    """Color a cycle from lists of size >= 2.

    Returns a coloring, or a certificate when the cycle is odd and all
    lists are equal (and of size 2, the only size where that is fatal).

    Examples
    --------
    >>> from brookscolor.families import cycle_graph
    >>> cycle_list_color(cycle_graph(4), [{1, 2}] * 4)
    (1, 2, 1, 2)
    >>> cycle_list_color(cycle_graph(5), [{1, 2}] * 5).kind
    'odd_cycle_identical_lists'
    """
    if not is_cycle(c):
        raise ValidationError("input is not a cycle")
    lists = [frozenset(x) for x in lists]
    if any(len(x) < 2 for x in lists):
        raise ValidationError("every list needs at least two colors")
    order = cycle_order(c)
    n = len(order)
    # adjacent pair (a, b) where a has a color b lacks
    start = None
    for i in range(n):
        a, b = order[i], order[i - 1]
        if lists[a] - lists[b]:
            start = (i, -1)
            break
        if lists[b] - lists[a]:
            start = (i - 1, 1)
            break
    col = [0] * c.n
    if start is None:
        common = sorted(lists[0])
        if n % 2 == 0:
            for i, v in enumerate(order):
                col[v] = common[i % 2]
            return tuple(col)
        if len(common) == 2:
            return Certificate("odd_cycle_identical_lists",
                               {"cycle": order, "list": common})
        return greedy_color(c, order, lists=lists)
    i, step = start
    # walk from v1 = order[i] away from v_n = order[i + step]
    seq = [order[(i - step * t) % n] for t in range(n)]
    v1, vn = seq[0], seq[-1]
    col[v1] = min(lists[v1] - lists[vn])
    res = greedy_color(c, seq, col, lists=lists)
    if not is_proper(c, res, lists):
        raise InvariantViolation("cycle list coloring is improper")
    return res


# ------------------------------------------------------------------ Gallai trees


def gallai_bad_lists(g: Graph) -> list[frozenset]:
    """Degree-size lists with no proper coloring, for a Gallai tree.

    Each block gets its own colors: two for an odd cycle, k for a
    K_{k+1}.  A vertex's list is the union over its blocks.

    Examples
    --------
    >>> from brookscolor.families import bowtie_graph
    >>> [sorted(x) for x in gallai_bad_lists(bowtie_graph())]
    [[1, 2, 3, 4], [1, 2], [1, 2], [3, 4], [3, 4]]
    """
    sc = is_gallai_tree(g)
    if sc.tag != "gallai_tree":
        raise PreconditionError("graph is not a Gallai tree", sc.to_json())
    lists = [set() for _ in range(g.n)]
    nxt = 1
    for blk in sc.witness["blocks"]:
        verts = blk["vertices"]
        size = 2 if blk["kind"] == "odd_cycle" else len(verts) - 1
        colors = set(range(nxt, nxt + size))
        nxt += size
        for v in verts:
            lists[v] |= colors
    out = [frozenset(x) for x in lists]
    for v in range(g.n):
        if len(out[v]) != g.degree(v):
            raise InvariantViolation(f"vertex {v} got {len(out[v])} colors for degree {g.degree(v)}")
    return out


# ------------------------------------------------------------------ Rubin


def is_even_cycle_with_at_most_one_chord(g: Graph, mask: int) -> bool:
    sub, _ = g.induced(mask)
    s = sub.n
    if s < 4 or s % 2:
        return False
    m = sub.num_edges()
    if m == s:
        return is_cycle(sub)
    if m != s + 1:
        return False
    three = [v for v in range(s) if sub.degree(v) == 3]
    if len(three) != 2 or any(sub.degree(v) not in (2, 3) for v in range(s)):
        return False
    a, b = three
    if not sub.has_edge(a, b):
        return False
    adj = list(sub.adj)
    adj[a] &= ~(1 << b)
    adj[b] &= ~(1 << a)
    return is_cycle(Graph(s, tuple(adj)))


def _rubin_pre(g: Graph):
    if g.n < 3 or not is_two_connected(g):
        raise PreconditionError("graph is not 2-connected",
                                {"cutvertices": sorted(blocks_and_cutvertices(g).cutvertices)})
    if is_complete(g):
        raise PreconditionError("graph is complete", {"tag": "complete", "n": g.n})
    if is_cycle(g) and g.n % 2:
        raise PreconditionError("graph is an odd cycle", {"tag": "odd_cycle", "n": g.n})


def rubin_even_cycle(g: Graph, method: str = "enumerate") -> frozenset:
    """Induced even cycle with at most one chord in a 2-connected graph.

    ``method="enumerate"`` scans vertex sets by increasing size;
    ``method="cutset"`` follows the constructive argument through a minimum
    vertex cut.  Either way the answer is re-checked structurally.

    Examples
    --------
    >>> from brookscolor.families import cycle_graph
    >>> sorted(rubin_even_cycle(cycle_graph(6)))
    [0, 1, 2, 3, 4, 5]
    """
    _rubin_pre(g)
    if method == "enumerate":
        h = _rubin_enumerate(g)
    elif method == "cutset":
        h = _rubin_cutset(g)
    else:
        raise ValueError(f"unknown method {method!r}")
    if not is_even_cycle_with_at_most_one_chord(g, h):
        raise InvariantViolation(f"{sorted(bits(h))} is not an even cycle with at most one chord")
    return frozenset(bits(h))


def _rubin_enumerate(g: Graph) -> int:
    for size in range(4, g.n + 1, 2):
        for combo in itertools.combinations(range(g.n), size):
            mask = to_mask(combo)
            if is_even_cycle_with_at_most_one_chord(g, mask):
                return mask
    raise InvariantViolation("no induced even cycle with at most one chord")


def _shortest_path(g: Graph, a: int, b: int, allowed: int) -> list[int] | None:
    """Shortest a-b path inside ``allowed`` not using the edge ab."""
    parent = {a: -1}
    queue = [a]
    for x in queue:
        for y in bits(g.adj[x] & allowed):
            if y in parent or (x == a and y == b):
                continue
            parent[y] = x
            if y == b:
                path = [b]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(y)
    return None


def _rubin_cutset(g: Graph) -> int:
    full = g.vertex_mask
    cut = None
    for size in range(2, g.n - 1):
        for combo in itertools.combinations(range(g.n), size):
            m = to_mask(combo)
            if len(components(g, full & ~m)) >= 2:
                cut = m
                break
        if cut:
            break
    if cut is None:
        raise InvariantViolation("non-complete 2-connected graph without a vertex cut")
    u, v = sorted(bits(cut))[:2]
    comps = components(g, full & ~cut)
    paths = []
    for comp in comps[:2]:
        p = _shortest_path(g, u, v, comp | 1 << u | 1 << v)
        if p is None:
            raise InvariantViolation("minimum cut vertex misses a component")
        paths.append(p)
    cyc = paths[0] + paths[1][-2:0:-1]
    cmask = to_mask(cyc)
    if len(cyc) % 2 == 0:
        return cmask
    if g.has_edge(u, v):
        p = next(p for p in paths if (len(p) - 1) % 2 == 1)
        return to_mask(p)
    # cmask is now an induced odd cycle
    order = cycle_order(g, cmask)
    pos = {x: i for i, x in enumerate(order)}
    n = len(order)

    def arc(i: int, j: int) -> list[int]:
        out = [order[i]]
        while i != j:
            i = (i + 1) % n
            out.append(order[i])
        return out

    for w in range(g.n):
        if cmask >> w & 1:
            continue
        nbrs = sorted(bits(g.adj[w] & cmask), key=lambda x: pos[x])
        if len(nbrs) < 2:
            continue
        k = len(nbrs)
        segs = [arc(pos[nbrs[i]], pos[nbrs[(i + 1) % k]]) for i in range(k)]
        for s in segs:
            if (len(s) - 1) % 2 == 0:
                return to_mask(s) | 1 << w
        if k > 3:
            return to_mask(segs[0]) | to_mask(segs[1]) | 1 << w
        # k == 3: skip a segment of length >= 3
        for i in range(3):
            if len(segs[i]) - 1 >= 3:
                return to_mask(segs[(i + 1) % 3]) | to_mask(segs[(i + 2) % 3]) | 1 << w
        raise InvariantViolation("three short segments around an odd cycle")
    # every outside vertex sees at most one cycle vertex: use a shortest ear
    best = None
    for a in order:
        for s in bits(g.adj[a] & ~cmask):
            dist = bfs_distances(g, 1 << s, full & ~cmask)
            for t in range(g.n):
                if dist[t] < 0:
                    continue
                for b in bits(g.adj[t] & cmask):
                    if b == a:
                        continue
                    key = (dist[t], a, b, s, t)
                    if best is None or key < best:
                        best = key
    if best is None:
        raise InvariantViolation("no ear attaches to the odd cycle")
    _, a, b, s, t = best
    inner = _shortest_path(g, s, t, full & ~cmask) if s != t else [s]
    ear = [a] + inner + [b]
    three = [arc(pos[a], pos[b]), arc(pos[b], pos[a])[::-1], ear]
    for p, q in itertools.combinations(three, 2):
        if (len(p) - 1) % 2 == (len(q) - 1) % 2:
            return to_mask(p) | to_mask(q)
    raise InvariantViolation("no two ear paths of equal parity")


# ------------------------------------------------------------------ degree lists


def _non_gallai_block(g: Graph) -> frozenset | None:
    for blk in blocks_and_cutvertices(g).blocks:
        mask = to_mask(blk)
        sub, _ = g.induced(mask)
        if not is_complete(sub) and not (is_cycle(sub) and sub.n % 2):
            return blk
    return None


def find_rubin_cycle_in(g: Graph, method: str = "enumerate") -> frozenset | None:
    """An induced even cycle with at most one chord inside some non-Gallai block."""
    blk = _non_gallai_block(g)
    if blk is None:
        return None
    sub, keep = g.induced(to_mask(blk))
    return frozenset(keep[x] for x in rubin_even_cycle(sub, method))


def degree_choose_color(g: Graph, lists) -> tuple[int, ...] | StructureClass:
    """Color a connected graph from lists with |L(v)| >= d(v).

    Returns the Gallai-tree certificate when ``g`` is a Gallai tree (the
    given lists might still be colorable, but not every such assignment).

    Examples
    --------
    >>> from brookscolor.families import cycle_graph
    >>> degree_choose_color(cycle_graph(4), [{1, 2}] * 4)
    (1, 2, 1, 2)
    """
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    lists = [frozenset(x) for x in lists]
    short = [v for v in range(g.n) if len(lists[v]) < g.degree(v)]
    if short:
        raise PreconditionError("list-size mismatch", {"vertices": short})
    sc = is_gallai_tree(g)
    if sc.tag == "gallai_tree":
        return sc
    h = to_mask(find_rubin_cycle_in(g))
    order = order_by_decreasing_distance(g, h)
    col = list(greedy_color(g, order[: g.n - h.bit_count()], lists=lists))
    sub, keep = g.induced(h)
    sub_lists = []
    for i, v in enumerate(keep):
        rest = sorted(lists[v] - {col[w] for w in bits(g.adj[v] & ~h)})
        need = sub.degree(i)
        if len(rest) < need:
            raise InvariantViolation(f"vertex {v} kept {len(rest)} colors, needs {need}")
        sub_lists.append(frozenset(rest[:need]))
    if sub.num_edges() == sub.n:
        res = cycle_list_color(sub, sub_lists)
        if isinstance(res, Certificate):
            raise InvariantViolation("even cycle reported uncolorable")
    else:
        a, b = [x for x in range(sub.n) if sub.degree(x) == 3]
        adj = list(sub.adj)
        adj[a] &= ~(1 << b)
        adj[b] &= ~(1 << a)
        ring = cycle_order(Graph(sub.n, tuple(adj)))
        i = ring.index(a)
        seq = ring[i:] + ring[:i]  # v1 = a, v_n = seq[-1] is a ring neighbor of a
        vn = seq[-1]
        part = [0] * sub.n
        part[a] = min(sub_lists[a] - sub_lists[vn])
        res = greedy_color(sub, seq, part, lists=sub_lists)
    for i, v in enumerate(keep):
        col[v] = res[i]
    col = tuple(col)
    if not is_proper(g, col, lists):
        raise InvariantViolation("degree-list coloring is improper")
    return col


# ------------------------------------------------------------------ kernels


@dataclass(frozen=True)
class KernelCore:
    h: frozenset
    a_h: frozenset
    b_h: frozenset
    cross_degree: dict
    steps: tuple = ()

    def to_json(self) -> dict:
        return {"H": sorted(self.h), "A_H": sorted(self.a_h), "B_H": sorted(self.b_h),
                "cross_degree": {str(v): d for v, d in sorted(self.cross_degree.items())},
                "steps": list(self.steps)}


def _cross_degrees(g: Graph, h: int, a: int) -> dict:
    return {v: (g.adj[v] & h & (~a if a >> v & 1 else a)).bit_count() for v in bits(h)}


def kernel_whittle(g: Graph, a=None) -> KernelCore:
    """Shrink V(G) to a set H where every vertex has exactly two cross edges.

    Cross edges join A (a maximum independent set) to the rest.  The loop
    deletes a vertex with cross degree <= 1, else a vertex of minimum cross
    degree when degrees differ, else the lowest vertex when the common
    degree exceeds 2.  The count of cross edges never drops below |H|.
    """
    if not is_connected(g) or g.n == 0:
        raise PreconditionError("graph is not connected")
    if not is_regular(g) or g.max_degree < 3:
        raise PreconditionError("graph must be regular with degree at least 3",
                                {"max_degree": g.max_degree, "min_degree": g.min_degree})
    delta = g.max_degree
    clique = max_clique(g)
    if len(clique) > delta:
        raise PreconditionError(f"graph contains K_{delta + 1}", {"clique": sorted(clique)})
    amask = to_mask(max_independent_set(g)) if a is None else (a if isinstance(a, int) else to_mask(a))
    if not is_independent(g, amask):
        raise PreconditionError("A is not independent")
    if amask.bit_count() * delta < g.n:
        raise PreconditionError("alpha * Delta < |G|: the graph contains a large clique",
                                {"clique": sorted(clique), "alpha": amask.bit_count()})
    h = g.vertex_mask
    steps = []
    while True:
        deg = _cross_degrees(g, h, amask)
        cross = sum(d for v, d in deg.items() if amask >> v & 1)
        if cross < h.bit_count():
            raise InvariantViolation(f"cross edges {cross} < |H| = {h.bit_count()}", steps)
        values = set(deg.values())
        if values == {2}:
            break
        low = [v for v, d in deg.items() if d <= 1]
        if low:
            v, why = low[0], "cross_degree_at_most_1"
        elif len(values) > 1:
            m = min(values)
            v, why = min(u for u, d in deg.items() if d == m), "minimum_cross_degree"
        else:
            v, why = lowest(h), "common_degree_above_2"
        steps.append({"delete": v, "rule": why})
        h &= ~(1 << v)
        if not h:
            raise InvariantViolation("whittling emptied H", steps)
    return KernelCore(frozenset(bits(h)), frozenset(bits(h & amask)), frozenset(bits(h & ~amask)),
                      deg, tuple(steps))


def kernel_orient(g: Graph, core: KernelCore) -> Digraph:
    """Orientation of G[H]: B-B edges both ways, cross cycles oriented consistently.

    The result is relabelled to 0..|H|-1 (``labels`` maps back) and carries
    the A side in ``part_a``.
    """
    hmask = to_mask(core.h)
    amask = to_mask(core.a_h)
    sub, keep = g.induced(hmask)
    pos = {v: i for i, v in enumerate(keep)}
    a_sub = to_mask(pos[v] for v in core.a_h)
    arcs = []
    cross_adj = [sub.adj[x] & (~a_sub if a_sub >> x & 1 else a_sub) for x in range(sub.n)]
    seen = 0
    for s in range(sub.n):
        if seen >> s & 1:
            continue
        prev, cur = -1, s
        while True:
            seen |= 1 << cur
            nxt = [y for y in bits(cross_adj[cur]) if y != prev]
            step = min(nxt) if prev == -1 else nxt[0]
            arcs.append((cur, step))
            prev, cur = cur, step
            if cur == s:
                break
    for x in range(sub.n):
        if a_sub >> x & 1:
            continue
        for y in bits(sub.adj[x] & ~a_sub):
            arcs.append((x, y))
    d = Digraph.from_arcs(sub.n, arcs, labels=keep, part_a=a_sub)
    for x in range(sub.n):
        if d.outdegree(x) > sub.degree(x) - 1:
            raise InvariantViolation(f"vertex {keep[x]} has out-degree {d.outdegree(x)}")
    if d.underlying() != sub:
        raise InvariantViolation("orientation does not cover G[H]")
    del amask
    return d


def lemma9_kernel(d: Digraph, s: int) -> int:
    """Kernel of D[S] when A is independent and B-B edges are bidirected."""
    a = d.part_a
    inn = d.inn
    kernel = 0
    while s:
        a_s = s & a
        bad = [v for v in bits(s & ~a) if not d.out[v] & a_s]
        if not bad:
            kernel |= a_s
            break
        v = bad[0]
        kernel |= 1 << v
        s &= ~(1 << v) & ~d.out[v] & ~inn[v]
    return kernel


def kernel_color(d: Digraph, lists) -> tuple[int, ...]:
    """Color a kernel-perfect digraph from lists with |L(v)| >= d+(v) + 1.

    Each round picks the smallest color c still in some list and colors a
    kernel of the uncolored vertices whose lists hold c.
    """
    lists = [set(x) for x in lists]
    for v in range(d.n):
        if len(lists[v]) < d.outdegree(v) + 1:
            raise PreconditionError(f"vertex {v} has {len(lists[v])} colors but out-degree {d.outdegree(v)}")
    col = [0] * d.n
    unc = (1 << d.n) - 1
    while unc:
        c = min(x for v in bits(unc) for x in lists[v])
        hc = to_mask(v for v in bits(unc) if c in lists[v])
        k = lemma9_kernel(d, hc) if d.part_a else find_kernel(d, hc)
        if k is None or not is_kernel(d, hc, k):
            raise InvariantViolation(f"kernel construction failed on {sorted(bits(hc))}")
        for v in bits(k):
            col[v] = c
        unc &= ~k
        for v in bits(hc & ~k):
            lists[v].discard(c)
            if not lists[v]:
                raise InvariantViolation(f"vertex {v} ran out of colors")
    return tuple(col)


def brooks_list_color(g: Graph, lists) -> tuple[int, ...]:
    """Color ``g`` from lists of size at least max{3, omega, Delta}.

    Examples
    --------
    >>> from brookscolor.families import petersen_graph
    >>> c = brooks_list_color(petersen_graph(), [{1, 2, 3}] * 10)
    >>> is_proper(petersen_graph(), c)
    True
    """
    lists = [frozenset(x) for x in lists]
    if len(lists) != g.n:
        raise PreconditionError("one list per vertex is required")
    need = brooks_bound(g)
    short = [v for v in range(g.n) if len(lists[v]) < need]
    if short:
        raise PreconditionError(f"lists must have at least {need} colors", {"vertices": short})
    col = _blc(g, lists, need)
    if not is_proper(g, col, lists):
        raise InvariantViolation("list coloring is improper")
    return col


def _blc(g: Graph, lists, need: int) -> tuple[int, ...]:
    col = [0] * g.n
    for comp in components(g):
        sub, keep = g.induced(comp)
        sl = [lists[v] for v in keep]
        if sub.max_degree < need:
            c = greedy_color(sub, range(sub.n), lists=sl)
        elif not is_regular(sub):
            v = min(range(sub.n), key=lambda u: (sub.degree(u), u))
            c = greedy_color(sub, order_by_decreasing_distance(sub, [v]), lists=sl)
        else:
            core = kernel_whittle(sub)
            d = kernel_orient(sub, core)
            hmask = to_mask(core.h)
            rest, rkeep = sub.without(hmask)
            rc = _blc(rest, [sl[v] for v in rkeep], need) if rest.n else ()
            c = [0] * sub.n
            for i, v in enumerate(rkeep):
                c[v] = rc[i]
            hl = []
            for v in d.labels:
                hl.append(sl[v] - {c[w] for w in bits(sub.adj[v] & ~hmask)})
            kc = kernel_color(d, hl)
            for i, v in enumerate(d.labels):
                c[v] = kc[i]
        for i, v in enumerate(keep):
            col[v] = c[i]
    return tuple(col)


def _kernel_core(g: Graph, k: int, trace: list, recurse) -> tuple[int, ...]:
    core = kernel_whittle(g)
    trace.append({"step": "kernel_whittle", "k": k, "H": sorted(core.h)})
    return brooks_list_color(g, [frozenset(range(1, k + 1))] * g.n)


def strategy_kernel(g: Graph) -> StrategyReport:
    return run_strategy(g, "kernel", _kernel_core)


# ------------------------------------------------------------------ independency trees


@dataclass(frozen=True)
class IndependencyTree:
    edges: tuple[tuple[int, int], ...]
    leaves: frozenset
    order: tuple[int, ...]

    def to_json(self) -> dict:
        return {"edges": [list(e) for e in self.edges], "leaves": sorted(self.leaves),
                "order": list(self.order)}

    def adjacency(self, n: int) -> tuple[int, ...]:
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)


def _exceptional_structure(g: Graph) -> StructureClass | None:
    if g.n == 0:
        return None
    if is_complete(g):
        return StructureClass("complete", {"n": g.n})
    if is_cycle(g):
        return StructureClass("odd_cycle" if g.n % 2 else "even_cycle", {"n": g.n})
    parts = balanced_bipartite_parts(g)
    if parts:
        return StructureClass("balanced_complete_bipartite", {"parts": [parts[0], parts[1]]})
    return None


def is_independency_tree(g: Graph, t: IndependencyTree) -> bool:
    if len(t.edges) != g.n - 1 or any(not g.has_edge(u, v) for u, v in t.edges):
        return False
    adj = t.adjacency(g.n)
    tg = Graph(g.n, adj)
    if not is_connected(tg):
        return False
    leaves = frozenset(v for v in range(g.n) if adj[v].bit_count() == 1)
    return leaves == t.leaves and is_independent(g, to_mask(leaves))


def find_independency_tree(g: Graph, shortcut: bool = True) -> IndependencyTree | StructureClass:
    """A DFS spanning tree whose leaves are pairwise nonadjacent, or a certificate.

    The search backtracks over the neighbor chosen at each DFS step.  When
    it is exhausted the graph is a cycle, a complete graph or a balanced
    complete bipartite graph, and the matching structure class is returned.
    With ``shortcut`` those three families are recognised up front.

    Examples
    --------
    >>> from brookscolor.families import path_graph, cycle_graph
    >>> find_independency_tree(path_graph(4)).leaves
    frozenset({0, 3})
    >>> find_independency_tree(cycle_graph(5)).tag
    'odd_cycle'
    """
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if shortcut:
        exc = _exceptional_structure(g)
        if exc is not None:
            return exc
    adj = g.adj
    full = g.vertex_mask

    def search(stack, visited, leaves, edges, order):
        if visited == full:
            root = stack[0] if stack else order[0]
            r = order[0]
            kids = sum(1 for u, v in edges if u == r)
            lv = leaves | (1 << r if kids == 1 else 0)
            if kids == 1 and adj[r] & leaves:
                return None
            return IndependencyTree(tuple(edges), frozenset(bits(lv)), tuple(order))
        while stack and not adj[stack[-1]] & ~visited:
            stack = stack[:-1]
        x = stack[-1]
        for w in bits(adj[x] & ~visited):
            nv = visited | 1 << w
            nl = leaves
            if not adj[w] & ~nv:
                if adj[w] & leaves:
                    continue
                nl |= 1 << w
            r = search(stack + [w], nv, nl, edges + [(x, w)], order + [w])
            if r is not None:
                return r
        return None

    if g.n <= 2:
        exc = _exceptional_structure(g)
        return exc
    for s in range(g.n):
        t = search([s], 1 << s, 0, [], [s])
        if t is not None:
            if not is_independency_tree(g, t):
                raise InvariantViolation("DFS search returned an invalid independency tree")
            return t
    exc = _exceptional_structure(g)
    if exc is None:
        raise InvariantViolation("no independency tree, yet the graph is not exceptional")
    return exc


# ------------------------------------------------------------------ forest extension


@dataclass
class ForestExtension:
    """G, an induced subgraph H with a k-coloring, and a spanning forest F of G."""

    g: Graph
    h: int
    coloring: tuple[int, ...]
    forest: tuple[int, ...]
    k: int

    def problems(self) -> list[str]:
        g, f = self.g, self.forest
        out = []
        if any(f[v] & ~g.adj[v] for v in range(g.n)):
            out.append("F uses a non-edge")
        fg = Graph(g.n, tuple(f))
        if fg.num_edges() != g.n - len(components(fg)):
            out.append("F is not a forest")
        for comp in components(g, self.h):
            if fg.edges_within(comp) != comp.bit_count() - 1 or not is_connected(fg, comp):
                out.append(f"condition 1 fails on H-component {sorted(bits(comp))}")
        for v in bits(g.vertex_mask & ~self.h):
            if g.degree(v) > f[v].bit_count() + self.k - 2:
                out.append(f"condition 2 fails at vertex {v}")
        col = self.coloring
        for v in bits(self.h):
            if not 1 <= col[v] <= self.k:
                out.append(f"H-vertex {v} has color {col[v]}")
        if not is_proper(g, [col[v] if self.h >> v & 1 else 0 for v in range(g.n)]):
            out.append("coloring of H is improper")
        return out


def _swap_in(col: list, comp: int, a: int, b: int):
    if a == b:
        return
    for x in bits(comp):
        if col[x] == a:
            col[x] = b
        elif col[x] == b:
            col[x] = a


def stiebitz_color(ext: ForestExtension, trace: list | None = None) -> tuple[int, ...]:
    """Extend the coloring of H to all of G with at most k colors.

    Examples
    --------
    >>> from brookscolor.families import star_graph
    >>> g = star_graph(3)
    >>> ext = ForestExtension(g, 0b1110, (0, 1, 1, 1), g.adj, 3)
    >>> stiebitz_color(ext)
    (2, 1, 1, 1)
    """
    if ext.k < 3:
        raise PreconditionError("k must be at least 3")
    probs = ext.problems()
    if probs:
        raise PreconditionError("; ".join(probs))
    trace = [] if trace is None else trace
    col = _stiebitz(ext.g, ext.h, list(ext.coloring), list(ext.forest), ext.k, trace)
    if not is_proper(ext.g, col) or max(col, default=0) > ext.k or 0 in col:
        raise InvariantViolation("forest extension produced a bad coloring", trace)
    return tuple(col)


def _stiebitz(g: Graph, h: int, col: list, f: list, k: int, trace: list) -> list:
    ext = ForestExtension(g, h, tuple(col), tuple(f), k)
    probs = ext.problems()
    if probs:
        raise InvariantViolation("; ".join(probs), trace)
    full = g.vertex_mask
    while h != full:
        outside = full & ~h
        # (a) a vertex with no neighbor in H joins H
        lone = next((v for v in bits(outside) if not g.adj[v] & h), None)
        if lone is not None:
            col[lone] = 1
            h |= 1 << lone
            trace.append({"step": "absorb_isolated", "vertex": lone})
            continue
        hcomps = components(g, h)
        comp_of = {x: c for c in hcomps for x in bits(c)}
        fg = Graph(g.n, tuple(f))
        # (b) Claim 1 configuration: contract and recurse
        for v in bits(outside):
            # one H-component per component of F - v that v sees
            rest = full & ~(1 << v)
            touching, seen_f = [], set()
            for c in hcomps:
                if g.adj[v] & c:
                    fc = component_of(fg, lowest(c), rest)
                    if fc not in seen_f:
                        seen_f.add(fc)
                        touching.append(c)
            s = len(touching)
            if g.degree(v) > s + k - 2:
                continue
            zs = [lowest(g.adj[v] & c) for c in touching]
            trace.append({"step": "contract", "vertex": v, "identified": zs})
            base = col[zs[0]]
            for c, z in zip(touching, zs):
                _swap_in(col, c, col[z], base)
            sub = _contract(g, h, col, f, v, zs)
            g2, h2, col2, f2, back = sub
            res = _stiebitz(g2, h2, col2, f2, k, trace)
            out = [0] * g.n
            for x in range(g.n):
                if x != v:
                    out[x] = res[back[x]]
            used = {out[w] for w in bits(g.adj[v])}
            free = [c for c in range(1, k + 1) if c not in used]
            if not free:
                raise InvariantViolation(f"vertex {v} sees all {k} colors after contraction", trace)
            out[v] = free[0]
            return out
        # (c) Claim 3: a leaf of an (F - H)-component that is nearly a leaf of the contracted forest
        v = _claim3_vertex(g, h, f, hcomps, comp_of, trace)
        fnb = f[v] & h
        tcomps = [c for c in hcomps if fnb & c]
        gcomps = [c for c in hcomps if g.adj[v] & c]
        if set(gcomps) != set(tcomps):
            raise InvariantViolation(f"claim 4 fails at {v}", trace)
        for c in tcomps:
            others = [u for u in bits(outside) if u != v and f[u] & c]
            if others:
                raise InvariantViolation(f"claim 3 fails at {v}: component also meets {others}", trace)
        if (f[v] & outside).bit_count() != 1:
            raise InvariantViolation(f"claim 2/3 fails at {v}", trace)
        targets = [lowest(fnb & c) for c in tcomps]
        if targets:
            base = col[targets[0]]
            for c, z in zip(tcomps, targets):
                _swap_in(col, c, col[z], base)
        used = {col[w] for w in bits(g.adj[v] & h)}
        free = [c for c in range(1, k + 1) if c not in used]
        if not free:
            raise InvariantViolation(f"vertex {v} has no free color", trace)
        col[v] = free[0]
        h |= 1 << v
        trace.append({"step": "absorb_leaf", "vertex": v, "color": free[0]})
        probs = ForestExtension(g, h, tuple(col), tuple(f), k).problems()
        if probs:
            raise InvariantViolation("; ".join(probs), trace)
    return col


def _claim3_vertex(g: Graph, h: int, f: list, hcomps, comp_of, trace) -> int:
    outside = g.vertex_mask & ~h
    fg = Graph(g.n, tuple(f))
    fh_comps = components(fg, outside)
    # degree of each H-component in the contracted forest
    hdeg = {}
    for c in hcomps:
        hdeg[c] = sum(1 for a in fh_comps if any(f[x] & c for x in bits(a)))
    for a in fh_comps:
        nbr_h = [c for c in hcomps if any(f[x] & c for x in bits(a))]
        big = [c for c in nbr_h if hdeg[c] >= 2]
        if len(big) > 1:
            continue
        b = big[0] if big else 0
        for v in bits(a):
            if (f[v] & a).bit_count() <= 1 and not f[v] & b:
                return v
    raise InvariantViolation("no component fits claim 3", trace)


def _contract(g: Graph, h: int, col: list, f: list, v: int, zs: list[int]):
    """Delete v and identify the vertices of ``zs``; return the new instance and a label map."""
    z0 = zs[0]
    back = {}
    idx = 0
    for x in range(g.n):
        if x == v or (x in zs and x != z0):
            continue
        back[x] = idx
        idx += 1
    for z in zs[1:]:
        back[z] = back[z0]
    n2 = idx
    adj = [0] * n2
    fadj = [0] * n2
    for x in range(g.n):
        if x == v:
            continue
        for y in bits(g.adj[x]):
            if y == v or back[x] == back[y]:
                continue
            adj[back[x]] |= 1 << back[y]
        for y in bits(f[x]):
            if y == v or back[x] == back[y]:
                continue
            fadj[back[x]] |= 1 << back[y]
    h2 = 0
    col2 = [0] * n2
    for x in bits(h):
        h2 |= 1 << back[x]
        col2[back[x]] = col[x]
    return Graph(n2, tuple(adj)), h2, col2, fadj, back


def _independency_core(g: Graph, k: int, trace: list, recurse) -> tuple[int, ...]:
    t = find_independency_tree(g, shortcut=False)
    if isinstance(t, StructureClass):
        if t.tag == "balanced_complete_bipartite":
            trace.append({"step": "bipartite_direct", "parts": t.witness["parts"]})
            return two_coloring(g)
        raise InvariantViolation(f"core received an exceptional graph: {t.tag}", trace)
    trace.append({"step": "independency_tree", **t.to_json()})
    h = to_mask(t.leaves)
    col = tuple(1 if h >> v & 1 else 0 for v in range(g.n))
    return stiebitz_color(ForestExtension(g, h, col, t.adjacency(g.n), k), trace)


def strategy_independency(g: Graph) -> StrategyReport:
    return run_strategy(g, "independency", _independency_core)
