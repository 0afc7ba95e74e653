"""Five Delta-coloring strategies, each extracted from a different argument.

All strategies share the outer shell in :mod:`brookscolor.report`; what
differs is the *core*, which receives a connected k-regular 2-connected
non-complete graph with k >= 3 and must color it with k colors.

lovasz
    Find an induced path u-v-w with G - {u, w} connected, give u and w
    color 1, then color greedily toward v.
kempe
    Color G - v greedily, then repair with a bounded cascade of Kempe chain
    swaps and single-vertex recolorings until v has a free color.
cubic
    For k = 3 remove an induced diamond or an induced cycle, recurse, and
    finish with two-color lists on the cycle.  For k >= 4 peel a maximal
    independent set and recurse with one color fewer.
ktree
    Select an independent set of degree-k vertices whose removal leaves no
    bridge-joined tree of units, then color the rest with k - 1 colors.
partition
    Search for a two-part partition with V1 independent and V2 free of
    K_k (and of odd cycles when k = 3); V2 gets k - 1 colors, V1 one more.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import InvariantViolation, PreconditionError, ScaleRefusal
from .graph import (Graph, bfs_distances, bits, blocks_and_cutvertices, components,
                    extend_to_maximal_independent, greedy_color, is_complete, is_connected,
                    is_independent, is_proper, is_two_connected, lowest, max_clique,
                    order_by_decreasing_distance, to_mask)
from .report import STRATEGIES, StrategyReport, color_at_most, run_strategy
from .structure import is_paper_ktree

# ------------------------------------------------------------------ good P3


def _check_p3_preconditions(g: Graph):
    if not is_connected(g) or not is_two_connected(g):
        raise PreconditionError("graph is not 2-connected", {"cutvertices": sorted(blocks_and_cutvertices(g).cutvertices)})
    if g.min_degree < 3:
        v = min(range(g.n), key=lambda u: (g.degree(u), u))
        raise PreconditionError("minimum degree is below 3", {"vertex": v, "degree": g.degree(v)})
    if is_complete(g):
        raise PreconditionError("graph is complete", {"n": g.n})


def _is_good_triple(g: Graph, u: int, v: int, w: int) -> bool:
    if not (g.has_edge(u, v) and g.has_edge(v, w)) or g.has_edge(u, w) or u == w:
        return False
    return is_connected(g, g.vertex_mask & ~(1 << u) & ~(1 << w))


def good_p3_triples(g: Graph) -> list[tuple[int, int, int]]:
    """Every induced path (u, v, w), u < w, with G - {u, w} connected.  Brute force."""
    out = []
    for v in range(g.n):
        for u, w in itertools.combinations(bits(g.adj[v]), 2):
            if _is_good_triple(g, u, v, w):
                out.append((u, v, w))
    return out


def find_good_p3(g: Graph) -> tuple[int, int, int]:
    """Induced path u-v-w such that G - {u, w} is connected.

    If G is 3-connected the lowest induced P3 works.  Otherwise take the
    lowest v for which G - v has a cutvertex; v has a non-cut neighbor in
    each endblock of G - v, and two of them from different endblocks serve
    as u and w.

    Examples
    --------
    >>> from brookscolor.families import prism_graph
    >>> u, v, w = find_good_p3(prism_graph())
    >>> _is_good_triple(prism_graph(), u, v, w)
    True
    """
    _check_p3_preconditions(g)
    for v in range(g.n):
        rest = g.vertex_mask & ~(1 << v)
        bct = blocks_and_cutvertices(g, rest)
        if not bct.cutvertices:
            continue
        ends = [bct.blocks[i] for i in bct.endblocks()]
        picks = []
        for blk in ends[:2]:
            inner = [x for x in sorted(blk) if x not in bct.cutvertices and g.has_edge(v, x)]
            if not inner:
                raise InvariantViolation(f"endblock {sorted(blk)} has no non-cut neighbor of {v}")
            picks.append(inner[0])
        u, w = sorted(picks)
        if not _is_good_triple(g, u, v, w):
            raise InvariantViolation(f"triple {(u, v, w)} fails the connectivity check")
        return u, v, w
    # 3-connected: any induced P3 will do
    for v in range(g.n):
        for u, w in itertools.combinations(bits(g.adj[v]), 2):
            if not g.has_edge(u, w):
                if not _is_good_triple(g, u, v, w):
                    raise InvariantViolation(f"triple {(u, v, w)} fails in a 3-connected graph")
                return u, v, w
    raise InvariantViolation("non-complete connected graph without an induced P3")


def _lovasz_core(g: Graph, k: int, trace: list, recurse) -> tuple[int, ...]:
    u, v, w = find_good_p3(g)
    trace.append({"step": "good_p3", "u": u, "v": v, "w": w, "k": k})
    partial = [0] * g.n
    partial[u] = partial[w] = 1
    order = order_by_decreasing_distance(g, [v], g.vertex_mask & ~(1 << u) & ~(1 << w))
    return greedy_color(g, order, partial, max_colors=k)


# ------------------------------------------------------------------ Kempe

KEMPE_DEPTH = 6


def _chain(g: Graph, col, start: int, i: int, j: int) -> int:
    """The {i, j}-colored component containing ``start``."""
    allowed = 0
    for x in range(g.n):
        if col[x] in (i, j):
            allowed |= 1 << x
    seen = 1 << start
    frontier = 1 << start
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= g.adj[x] & allowed
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _free_colors(g: Graph, col, x: int, k: int) -> list[int]:
    used = {col[y] for y in bits(g.adj[x])}
    return [c for c in range(1, k + 1) if c not in used and c != col[x]]


def _kempe_core(g: Graph, k: int, trace: list, recurse) -> tuple[int, ...]:
    v = 0
    order = [x for x in order_by_decreasing_distance(g, [v]) if x != v]
    col = greedy_color(g, order, max_colors=k)
    return kempe_repair(g, v, col, k, trace)


def kempe_repair(g: Graph, v: int, coloring, k: int, trace: list | None = None) -> tuple[int, ...]:
    """Extend a proper k-coloring of G - v to G by the R0-R4 repair cascade.

    ``g`` must be k-regular, 2-connected and not complete; ``coloring[v]``
    is ignored.  Every step is appended to ``trace`` under one
    ``{"step": "kempe"}`` record.
    """
    trace = [] if trace is None else trace
    col = list(coloring)
    col[v] = 0
    if not is_proper(g, col) or any(not 1 <= col[x] <= k for x in range(g.n) if x != v):
        raise PreconditionError("starting coloring of G - v is not a proper k-coloring")
    rules: list[dict] = []
    entry = {"step": "kempe", "center": v, "k": k, "rules": rules}
    trace.append(entry)

    def check():
        if not is_proper(g, col):
            raise InvariantViolation("Kempe repair produced an improper coloring", trace)

    for _ in range(KEMPE_DEPTH + 1):
        check()
        on_nbrs = {col[x]: x for x in bits(g.adj[v])}
        missing = [c for c in range(1, k + 1) if c not in on_nbrs]
        if missing:
            col[v] = missing[0]
            rules.append({"rule": "R0", "color": missing[0]})
            check()
            return tuple(col)
        nb = {c: on_nbrs[c] for c in range(1, k + 1)}
        # R0 variant: some v_i can move to another color
        done = False
        for i in range(1, k + 1):
            free = _free_colors(g, col, nb[i], k)
            if free:
                col[nb[i]] = free[0]
                col[v] = i
                rules.append({"rule": "R0", "recolor": nb[i], "to": free[0], "color": i})
                done = True
                break
        if done:
            check()
            return tuple(col)
        chains = {}
        for i, j in itertools.permutations(range(1, k + 1), 2):
            chains[i, j] = _chain(g, col, nb[i], i, j)
        step = None
        # R1: v_j is not in C_{i,j}
        for (i, j), c in chains.items():
            if not c >> nb[j] & 1:
                for x in bits(c):
                    col[x] = j if col[x] == i else i
                step = {"rule": "R1", "colors": [i, j]}
                break
        # R2: C_{i,j} is not a path; recolor its first branch vertex
        if step is None:
            for (i, j), c in chains.items():
                prev, cur, seen = -1, nb[i], 0
                while True:
                    seen |= 1 << cur
                    cn = g.adj[cur] & c
                    if cn.bit_count() >= 3:
                        break
                    nxt = [y for y in bits(cn & ~seen) if y != prev]
                    if not nxt:
                        cur = -1
                        break
                    prev, cur = cur, nxt[0]
                if cur != -1:
                    free = _free_colors(g, col, cur, k)
                    if not free:
                        raise InvariantViolation(f"branch vertex {cur} has no free color", trace)
                    col[cur] = free[0]
                    step = {"rule": "R2", "colors": [i, j], "vertex": cur, "to": free[0]}
                    break
        # R3: a vertex other than v_i lies on C_{i,j} and C_{i,l}
        if step is None:
            for i in range(1, k + 1):
                for j, l in itertools.combinations([c for c in range(1, k + 1) if c != i], 2):
                    common = chains[i, j] & chains[i, l] & ~(1 << nb[i])
                    if common:
                        u = lowest(common)
                        free = _free_colors(g, col, u, k)
                        if not free:
                            raise InvariantViolation(f"chain crossing {u} has no free color", trace)
                        col[u] = free[0]
                        step = {"rule": "R3", "colors": [i, j, l], "vertex": u, "to": free[0]}
                        break
                if step:
                    break
        # R4: swap C_{a,c} for nonadjacent v_a, v_b
        if step is None:
            pair = next(((a, b) for a, b in itertools.combinations(range(1, k + 1), 2)
                         if not g.has_edge(nb[a], nb[b])), None)
            if pair is None:
                raise InvariantViolation("neighborhood of the center is a clique", trace)
            a, b = pair
            c = min(x for x in range(1, k + 1) if x not in pair)
            for x in bits(chains[a, c]):
                col[x] = c if col[x] == a else a
            step = {"rule": "R4", "colors": [a, b, c]}
        rules.append(step)
    raise InvariantViolation(f"Kempe cascade exceeded depth {KEMPE_DEPTH}", trace)


# ------------------------------------------------------------------ cubic


def _find_diamond(g: Graph):
    for a, b in g.edges():
        common = g.adj[a] & g.adj[b]
        if common.bit_count() == 2:
            c, d = bits(common)
            if not g.has_edge(c, d):
                return a, b, c, d
    return None


def shortest_cycle(g: Graph) -> list[int]:
    """A shortest cycle in cyclic order; the lexicographically least vertex set wins ties."""
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = [s]
        for x in queue:
            for y in bits(g.adj[x]):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
        for x, y in g.edges():
            if parent[x] == y or parent[y] == x or dist[x] < 0:
                continue
            px, py = [x], [y]
            while parent[px[-1]] >= 0:
                px.append(parent[px[-1]])
            while parent[py[-1]] >= 0:
                py.append(parent[py[-1]])
            cyc = px[:-1] + [s] + py[-2::-1]
            if len(set(cyc)) != len(cyc):
                continue
            key = (len(cyc), sorted(cyc))
            if best is None or key < best[0]:
                best = (key, cyc)
    if best is None:
        raise PreconditionError("graph is a forest")
    from .graph import cycle_order
    return cycle_order(g, to_mask(best[1]))


def _cubic_core(g: Graph, k: int, trace: list, recurse) -> tuple[int, ...]:
    from .choosability import cycle_list_color
    from .report import Certificate

    if k >= 4:
        v = next(x for x in range(g.n) if any(not g.has_edge(u, w)
                                              for u, w in itertools.combinations(bits(g.adj[x]), 2)))
        u, w = next((u, w) for u, w in itertools.combinations(bits(g.adj[v]), 2) if not g.has_edge(u, w))
        sub, keep = g.without(1 << v)
        c = recurse(sub, k)
        col = [0] * g.n
        for i, x in enumerate(keep):
            col[x] = c[i]
        used = {col[x] for x in bits(g.adj[v])}
        free = [x for x in range(1, k + 1) if x not in used]
        if free:
            col[v] = free[0]
            trace.append({"step": "cubic_free_color", "v": v, "k": k})
            return tuple(col)
        cls = min(x for x in range(1, k + 1) if x not in (col[u], col[w]))
        ind = extend_to_maximal_independent(g, to_mask(x for x in range(g.n) if col[x] == cls))
        trace.append({"step": "cubic_peel", "p3": [u, v, w], "class": cls,
                      "independent": sorted(bits(ind)), "k": k})
        sub, keep = g.without(ind)
        c = recurse(sub, k - 1)
        col = [k] * g.n
        for i, x in enumerate(keep):
            col[x] = c[i]
        return tuple(col)

    diamond = _find_diamond(g)
    if diamond is not None:
        a, b, c1, d1 = diamond
        dmask = to_mask(diamond)
        sub, keep = g.without(dmask)
        c = recurse(sub, 3)
        col = [0] * g.n
        for i, x in enumerate(keep):
            col[x] = c[i]
        blocked = {col[y] for y in bits(g.adj[c1] | g.adj[d1]) if not dmask >> y & 1}
        tip = min(x for x in (1, 2, 3) if x not in blocked)
        col[c1] = col[d1] = tip
        rest = [x for x in (1, 2, 3) if x != tip]
        col[a], col[b] = rest
        trace.append({"step": "cubic_diamond", "diamond": [a, b, c1, d1]})
        return tuple(col)

    cyc = shortest_cycle(g)
    cmask = to_mask(cyc)
    outside = {x: lowest(g.adj[x] & ~cmask) for x in cyc}
    pair = next(((p, q) for p, q in itertools.combinations(sorted(cyc), 2)
                 if outside[p] != outside[q]), None)
    if pair is None:
        raise InvariantViolation("all cycle vertices share one outside neighbor", trace)
    x, y = outside[pair[0]], outside[pair[1]]
    sub, keep = g.without(cmask)
    pos = {old: i for i, old in enumerate(keep)}
    sub = sub.with_edge(pos[x], pos[y])
    trace.append({"step": "cubic_cycle", "cycle": cyc, "x": x, "y": y})
    c = recurse(sub, 3)
    col = [0] * g.n
    for i, z in enumerate(keep):
        col[z] = c[i]
    csub, ckeep = g.induced(cmask)
    lists = [frozenset({1, 2, 3} - {col[outside[z]]}) for z in ckeep]
    res = cycle_list_color(csub, lists)
    if isinstance(res, Certificate):
        raise InvariantViolation("cycle lists turned out identical on an odd cycle", trace)
    for i, z in enumerate(ckeep):
        col[z] = res[i]
    return tuple(col)


# ------------------------------------------------------------------ k-trees


@dataclass(frozen=True)
class TverbergSelection:
    removed: tuple[int, ...]
    components: tuple[tuple[tuple[int, ...], int], ...]

    def to_json(self) -> dict:
        return {"removed": list(self.removed),
                "components": [{"vertices": list(c), "max_degree": d} for c, d in self.components]}


def _sub_max_degree(g: Graph, mask: int) -> int:
    return max(((g.adj[v] & mask).bit_count() for v in bits(mask)), default=0)


def _is_ktree_mask(g: Graph, mask: int, k: int) -> bool:
    sub, _ = g.induced(mask)
    return is_paper_ktree(sub, k).tag == "paper_ktree"


def tverberg_select(g: Graph, k: int | None = None) -> TverbergSelection:
    """Remove degree-k vertices one at a time until every component has Delta < k.

    Each removed vertex is chosen (lowest index first) so that no component
    left behind is a bridge-joined tree of units.

    Examples
    --------
    >>> from brookscolor.families import complete_bipartite
    >>> sel = tverberg_select(complete_bipartite(3, 3), 3)
    >>> len(sel.removed) >= 1
    True
    """
    k = g.max_degree if k is None else k
    if k < 3 or k != g.max_degree:
        raise PreconditionError(f"k must equal the maximum degree and be at least 3 (got k={k})")
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    kt = is_paper_ktree(g, k)
    if kt.tag == "paper_ktree":
        raise PreconditionError("graph is itself a k-tree", kt.witness)
    if g.n == k + 1 and is_complete(g):
        raise PreconditionError(f"graph is K_{k + 1}", {"clique": list(range(g.n))})
    removed: list[int] = []
    work = [g.vertex_mask]
    done = []
    while work:
        comp = work.pop(0)
        if _sub_max_degree(g, comp) < k:
            done.append(comp)
            continue
        chosen = None
        for v in bits(comp):
            if (g.adj[v] & comp).bit_count() != k:
                continue
            rest = components(g, comp & ~(1 << v))
            if not any(_is_ktree_mask(g, r, k) for r in rest):
                chosen = v
                break
        if chosen is None:
            raise InvariantViolation(f"no admissible degree-{k} vertex in component {sorted(bits(comp))}")
        removed.append(chosen)
        work.extend(components(g, comp & ~(1 << chosen)))
    if not is_independent(g, removed):
        raise InvariantViolation(f"selected vertices {removed} are not independent")
    done.sort(key=lowest)
    return TverbergSelection(tuple(removed),
                             tuple((tuple(bits(c)), _sub_max_degree(g, c)) for c in done))


def _ktree_core(g: Graph, k: int, trace: list, recurse) -> tuple[int, ...]:
    sel = tverberg_select(g, k)
    trace.append({"step": "tverberg_select", "k": k, **sel.to_json()})
    imask = to_mask(sel.removed)
    sub, keep = g.without(imask)
    c = recurse(sub, k - 1)
    col = [k] * g.n
    for i, x in enumerate(keep):
        col[x] = c[i]
    return tuple(col)


# ------------------------------------------------------------------ partition


@dataclass
class Partition2:
    v1: frozenset
    v2: frozenset
    phi: int
    obstructions: list = field(default_factory=list)
    moves: list = field(default_factory=list)
    fallback_used: bool = False

    def to_json(self) -> dict:
        return {"V1": sorted(self.v1), "V2": sorted(self.v2), "phi": self.phi,
                "obstructions": [sorted(o) for o in self.obstructions],
                "moves": self.moves, "fallback_used": self.fallback_used}


class _PartitionState:
    def __init__(self, g: Graph, delta: int):
        self.g = g
        self.delta = delta

    def phi(self, v1: int) -> int:
        v2 = self.g.vertex_mask & ~v1
        return (self.delta - 1) * self.g.edges_within(v1) + self.g.edges_within(v2)

    def pcomponents(self, v1: int) -> list[int]:
        v2 = self.g.vertex_mask & ~v1
        return components(self.g, v1) + components(self.g, v2)

    def is_obstruction(self, comp: int, v1: int) -> bool:
        g, delta = self.g, self.delta
        size = comp.bit_count()
        if comp & v1:
            return size == 2
        if is_complete(g, comp) and size == delta:
            return True
        if delta == 3 and size % 2 == 1 and size >= 3:
            return all((g.adj[x] & comp).bit_count() == 2 for x in bits(comp))
        return False

    def obstructions(self, v1: int) -> list[int]:
        return [c for c in self.pcomponents(v1) if self.is_obstruction(c, v1)]

    def settle(self, v1: int) -> int:
        """Apply phi-decreasing single moves, lowest vertex first."""
        g, w1 = self.g, self.delta - 1
        changed = True
        while changed:
            changed = False
            for v in range(g.n):
                in1 = v1 >> v & 1
                d1 = (g.adj[v] & v1).bit_count()
                d2 = g.adj[v].bit_count() - d1
                gain = (w1 * d1 - d2) if in1 else (d2 - w1 * d1)
                if gain > 0:
                    v1 ^= 1 << v
                    changed = True
                    break
        return v1

    def shortest_maximal_path(self, v1: int):
        """Shortest maximal P-acceptable path (lexicographically least among them)."""
        g = self.g
        comp_of = {}
        for i, c in enumerate(self.pcomponents(v1)):
            for x in bits(c):
                comp_of[x] = i
        starts = sorted(x for o in self.obstructions(v1) for x in bits(o))
        if not starts:
            return None
        layer = [[s] for s in starts]
        while layer:
            for path in layer:
                used = {comp_of[x] for x in path}
                if all(comp_of[y] in used for y in bits(g.adj[path[-1]])):
                    return path
            nxt = []
            for path in layer:
                used = {comp_of[x] for x in path}
                for y in bits(g.adj[path[-1]]):
                    if comp_of[y] not in used:
                        nxt.append(path + [y])
            layer = nxt
        raise InvariantViolation("acceptable path search ran out of paths")

    def measure(self, v1: int):
        path = self.shortest_maximal_path(v1)
        return (self.phi(v1), len(self.obstructions(v1)), len(path) if path else 0), path

    def candidates(self, v1: int, path: list[int]):
        """Move sets from the obstruction argument, in the order the argument tries them."""
        g = self.g
        pcs = self.pcomponents(v1)
        comp = {x: c for c in pcs for x in bits(c)}
        vk, first = path[-1], path[0]
        a = comp[first]
        xs = sorted(bits(g.adj[vk] & a))
        out = [("move_v1", [first])]
        for x in xs:
            out.append(("move_x", [x]))
        for x in xs:
            if x != vk:
                out.append(("move_x_vk", [x, vk]))
        for x1, x2 in itertools.combinations(xs, 2):
            if not g.has_edge(x1, x2):
                out.append(("move_x1_vk_x2", [x1, vk, x2]))
        b = comp[vk]
        for x in xs:
            ys = sorted(bits(g.adj[x] & b))
            for y1, y2 in itertools.combinations(ys, 2):
                if g.has_edge(y1, y2):
                    continue
                for x2 in xs:
                    if x2 != x:
                        out.append(("move_x_y1_x2_y2", [x, y1, x2, y2]))
        out.append(("move_path", list(path)))
        if a.bit_count() == 2:
            for x in xs:
                if x != first:
                    out.append(("move_x_then_path", [x] + list(reversed(path))))
        return out


def _exhaustive_partition(g: Graph, st: _PartitionState) -> int:
    if g.n > 20:
        raise ScaleRefusal("exhaustive partition search", g.n, 20)
    best = None
    for v1 in range(1 << g.n):
        if st.obstructions(v1):
            continue
        if not is_independent(g, v1) or _sub_max_degree(g, g.vertex_mask & ~v1) > st.delta - 1:
            continue
        key = (st.phi(v1), v1)
        if best is None or key < best:
            best = key
    if best is None:
        raise InvariantViolation("no obstruction-free partition exists")
    return best[1]


def find_obstruction_free_partition(g: Graph, allow_fallback: bool = True) -> Partition2:
    """Two-part partition with V1 independent and no obstruction in V2.

    The search starts from a greedy maximal independent V1, settles it with
    single moves that lower phi = (Delta-1)*e(V1) + e(V2), and then, while
    obstructions remain, tries the moves of the obstruction argument on a
    shortest maximal acceptable path.  A move is accepted when it lowers
    (phi, #obstructions, path length) lexicographically.

    Examples
    --------
    >>> from brookscolor.families import complete_bipartite
    >>> p = find_obstruction_free_partition(complete_bipartite(3, 3))
    >>> p.obstructions, p.fallback_used
    ([], False)
    """
    delta = g.max_degree
    if delta < 3:
        raise PreconditionError(f"maximum degree {delta} is below 3")
    clique = max_clique(g)
    if len(clique) >= delta + 1:
        raise PreconditionError(f"graph contains K_{delta + 1}", {"clique": sorted(clique)})
    st = _PartitionState(g, delta)
    v1 = st.settle(extend_to_maximal_independent(g, 0))
    moves: list[dict] = []
    mu, path = st.measure(v1)
    fallback = False
    while mu[1]:
        accepted = False
        for name, verts in st.candidates(v1, path):
            trial = v1
            for x in verts:
                trial ^= 1 << x
            trial = st.settle(trial)
            mu2, path2 = st.measure(trial)
            if mu2 < mu:
                moves.append({"move": name, "vertices": verts, "measure": list(mu2)})
                if not (mu2[:2] <= mu[:2]):
                    raise InvariantViolation("partition move raised (phi, obstructions)", moves)
                v1, mu, path = trial, mu2, path2
                accepted = True
                break
        if not accepted:
            if not allow_fallback:
                raise InvariantViolation("no move of the repertoire lowers the measure", moves)
            v1 = _exhaustive_partition(g, st)
            fallback = True
            moves.append({"move": "exhaustive_fallback", "vertices": sorted(bits(v1))})
            break
    obs = st.obstructions(v1)
    p = Partition2(frozenset(bits(v1)), frozenset(bits(g.vertex_mask & ~v1)), st.phi(v1),
                   [frozenset(bits(o)) for o in obs], moves, fallback)
    problems = check_partition(g, p)
    if problems:
        raise InvariantViolation("; ".join(problems), moves)
    return p


def check_partition(g: Graph, p: Partition2) -> list[str]:
    """Independent checker: recompute every property of an obstruction-free partition."""
    delta = g.max_degree
    v1, v2 = to_mask(p.v1), to_mask(p.v2)
    probs = []
    if v1 & v2 or v1 | v2 != g.vertex_mask:
        probs.append("parts do not partition V")
    if not is_independent(g, v1):
        probs.append("V1 is not independent")
    if _sub_max_degree(g, v2) > delta - 1:
        probs.append("a vertex of V2 has too many neighbors in V2")
    for comp in components(g, v2):
        size = comp.bit_count()
        if size == delta and is_complete(g, comp):
            probs.append(f"K_{delta} component in V2: {sorted(bits(comp))}")
        if delta == 3 and size % 2 == 1 and size >= 3 and all(
                (g.adj[x] & comp).bit_count() == 2 for x in bits(comp)):
            probs.append(f"odd cycle component in V2: {sorted(bits(comp))}")
    phi = (delta - 1) * g.edges_within(v1) + g.edges_within(v2)
    if phi != p.phi:
        probs.append("recorded phi is wrong")
    return probs


def _partition_core(g: Graph, k: int, trace: list, recurse) -> tuple[int, ...]:
    p = find_obstruction_free_partition(g)
    trace.append({"step": "partition", "k": k, "V1": sorted(p.v1), "moves": p.moves,
                  "fallback_used": p.fallback_used})
    sub, keep = g.induced(to_mask(p.v2))
    c = recurse(sub, k - 1)
    col = [k] * g.n
    for i, x in enumerate(keep):
        col[x] = c[i]
    return tuple(col)


# ------------------------------------------------------------------ dispatch

CORES = {
    "lovasz": _lovasz_core,
    "kempe": _kempe_core,
    "cubic": _cubic_core,
    "ktree": _ktree_core,
    "partition": _partition_core,
}


def strategy_lovasz(g: Graph) -> StrategyReport:
    return run_strategy(g, "lovasz", _lovasz_core)


def strategy_kempe(g: Graph) -> StrategyReport:
    return run_strategy(g, "kempe", _kempe_core)


def strategy_cubic(g: Graph) -> StrategyReport:
    return run_strategy(g, "cubic", _cubic_core)


def strategy_ktree(g: Graph) -> StrategyReport:
    return run_strategy(g, "ktree", _ktree_core)


def strategy_partition(g: Graph) -> StrategyReport:
    return run_strategy(g, "partition", _partition_core)


def color_brooks(g: Graph, strategy: str = "lovasz") -> StrategyReport:
    """Color ``g`` with at most max{3, omega, Delta} colors using the named strategy.

    Examples
    --------
    >>> from brookscolor.families import complete_graph, petersen_graph
    >>> color_brooks(complete_graph(4), "kempe").outcome
    'exceptional'
    >>> color_brooks(petersen_graph(), "cubic").palette_size <= 3
    True
    """
    if strategy in CORES:
        return run_strategy(g, strategy, CORES[strategy])
    if strategy == "independency":
        from .choosability import strategy_independency
        return strategy_independency(g)
    if strategy == "kernel":
        from .choosability import strategy_kernel
        return strategy_kernel(g)
    raise ValueError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
