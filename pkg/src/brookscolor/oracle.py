"""Exact exponential-time ground truth for every strategy in the package.

Every routine here is exhaustive search with bounded input size.  Exceeding
the bound raises :class:`~brookscolor.errors.ScaleRefusal` instead of
silently approximating.  Default bounds can be overridden per call or
through the environment variables ``BROOKSCOLOR_CHI_LIMIT``,
``BROOKSCOLOR_CHOOSE_LIMIT`` and ``BROOKSCOLOR_KERNEL_LIMIT``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .digraph import Digraph, find_kernel
from .errors import ScaleRefusal
from .graph import (Graph, bits, components, is_independent, lowest, max_clique,
                    max_independent_set, to_mask)


def _limit(name: str, default: int) -> int:
    return int(os.environ.get(name, default))


CHI_LIMIT = _limit("BROOKSCOLOR_CHI_LIMIT", 24)
LIST_LIMIT = _limit("BROOKSCOLOR_LIST_LIMIT", 40)
CHOOSE_LIMIT = _limit("BROOKSCOLOR_CHOOSE_LIMIT", 9)
KERNEL_LIMIT = _limit("BROOKSCOLOR_KERNEL_LIMIT", 16)
HAM_LIMIT = _limit("BROOKSCOLOR_HAM_LIMIT", 10)


# ------------------------------------------------------------ chromatic number


def _k_colorable(g: Graph, k: int, pinned: list[int]) -> list[int] | None:
    """DSATUR-ordered backtracking; ``pinned`` vertices get colors 1, 2, ... first."""
    n = g.n
    col = [0] * n
    for i, v in enumerate(pinned):
        col[v] = i + 1
    if len(pinned) > k:
        return None
    adj = g.adj
    # forbidden[v] is a bitset over colors (bit c) used by neighbours
    forb = [0] * n
    for v in pinned:
        for w in bits(adj[v]):
            forb[w] |= 1 << col[v]
    full = ((1 << (k + 1)) - 1) & ~1
    uncolored = g.vertex_mask & ~to_mask(pinned)

    def rec(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        best, best_key = -1, None
        for v in bits(uncolored):
            free = full & ~forb[v]
            if not free:
                return False
            key = (-(forb[v] & full).bit_count(), -(adj[v] & uncolored).bit_count())
            if best_key is None or key < best_key:
                best, best_key = v, key
        v = best
        free = full & ~forb[v]
        limit = min(k, used + 1)
        for c in range(1, limit + 1):
            if not free >> c & 1:
                continue
            col[v] = c
            touched = []
            for w in bits(adj[v] & uncolored):
                if not forb[w] >> c & 1:
                    forb[w] |= 1 << c
                    touched.append(w)
            if rec(uncolored & ~(1 << v), max(used, c)):
                return True
            for w in touched:
                forb[w] &= ~(1 << c)
            col[v] = 0
        return False

    if rec(uncolored, len(pinned)):
        return col
    return None


def chi_exact(g: Graph, limit: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Chromatic number and an optimal coloring.

    Iterative deepening from the lower bound ``max(omega, ceil(n/alpha))``;
    the vertices of a maximum clique are pinned to colors 1..omega.

    Examples
    --------
    >>> from brookscolor.families import cycle_graph
    >>> chi_exact(cycle_graph(7))[0]
    3
    """
    limit = CHI_LIMIT if limit is None else limit
    if g.n > limit:
        raise ScaleRefusal("chi_exact", g.n, limit)
    if g.n == 0:
        return 0, ()
    clique = sorted(max_clique(g))
    alpha = len(max_independent_set(g))
    k = max(len(clique), -(-g.n // alpha))
    while True:
        col = _k_colorable(g, k, clique)
        if col is not None:
            return k, tuple(col)
        k += 1


def is_k_colorable(g: Graph, k: int) -> bool:
    if g.n == 0:
        return True
    clique = sorted(max_clique(g))
    return _k_colorable(g, k, clique) is not None


# -------------------------------------------------------------- list coloring


def is_list_colorable(g: Graph, lists, limit: int | None = None):
    """Decide whether ``g`` has a proper coloring from ``lists``.

    Returns ``(True, coloring)`` or ``(False, None)``.  Search picks the
    vertex with the fewest surviving colors first.
    """
    limit = LIST_LIMIT if limit is None else limit
    if g.n > limit:
        raise ScaleRefusal("is_list_colorable", g.n, limit)
    avail = [set(lists[v]) for v in range(g.n)]
    col = [0] * g.n
    adj = g.adj

    def rec(uncolored: int) -> bool:
        if not uncolored:
            return True
        v = min(bits(uncolored), key=lambda u: (len(avail[u]), u))
        if not avail[v]:
            return False
        for c in sorted(avail[v]):
            col[v] = c
            hit = [w for w in bits(adj[v] & uncolored) if c in avail[w]]
            for w in hit:
                avail[w].discard(c)
            if all(avail[w] for w in hit) and rec(uncolored & ~(1 << v)):
                return True
            for w in hit:
                avail[w].add(c)
        col[v] = 0
        return False

    if rec(g.vertex_mask):
        return True, tuple(col)
    return False, None


# ---------------------------------------------------------------- choosability
#
# Why a universe of sum(f) colors suffices: an f-assignment is determined up
# to renaming colors by the family of color classes S_c = {v : c in L(v)}.
# There are at most sum(f) nonempty classes, so every assignment is
# isomorphic to one over colors 1..sum(f).  The search below enumerates
# these class families directly, one canonical representative per
# isomorphism type, rather than enumerating labelled lists.
#
# Two reductions shrink the search once every G - v is already known to be
# f-choosable:  a class in which some vertex u has no neighbour can always
# be used on u, so bad assignments never contain such a class; in
# particular every class has at least two vertices.


@dataclass
class _ChooseStats:
    nodes: int = 0


def _fresh_extend(n: int, keep: tuple[int, ...], sub_lists, f, removed) -> list[frozenset]:
    """Lift lists on an induced subgraph back to n vertices with fresh colors."""
    lists: list[frozenset] = [frozenset()] * n
    top = 0
    for i, v in enumerate(keep):
        lists[v] = frozenset(sub_lists[i])
        top = max([top, *sub_lists[i]])
    for v in removed:
        lists[v] = frozenset(range(top + 1, top + 1 + f[v]))
        top += f[v]
    return lists


def _degenerate_ok(adj, mask: int, r) -> bool:
    """Greedy sufficient test: peel vertices with more tokens than live neighbours."""
    changed = True
    while mask and changed:
        changed = False
        for v in bits(mask):
            if r[v] > (adj[v] & mask).bit_count():
                mask &= ~(1 << v)
                changed = True
    return mask == 0


class _Chooser:
    def __init__(self):
        self.memo: dict = {}
        self.stats = _ChooseStats()

    def solve(self, g: Graph, f: tuple[int, ...]):
        """Return None if g is f-choosable, else a bad list assignment."""
        key = (g.adj, f)
        if key in self.memo:
            return self.memo[key]
        res = self._solve(g, f)
        self.memo[key] = res
        return res

    def _solve(self, g: Graph, f):
        n = g.n
        if n == 0:
            return None
        for v in range(n):
            if f[v] <= 0:
                return _bad_with_empty(n, f, v)
        # peel vertices whose tokens exceed their degree
        mask = g.vertex_mask
        changed = True
        while changed:
            changed = False
            for v in bits(mask):
                if f[v] > (g.adj[v] & mask).bit_count():
                    mask &= ~(1 << v)
                    changed = True
        if mask == 0:
            return None
        if mask != g.vertex_mask:
            sub, keep = g.induced(mask)
            bad = self.solve(sub, tuple(f[v] for v in keep))
            if bad is None:
                return None
            return _fresh_extend(n, keep, bad, f, [v for v in range(n) if v not in keep])
        comps = components(g)
        if len(comps) > 1:
            for c in comps:
                sub, keep = g.induced(c)
                bad = self.solve(sub, tuple(f[v] for v in keep))
                if bad is not None:
                    return _fresh_extend(n, keep, bad, f, [v for v in range(n) if v not in keep])
            return None
        for v in range(n):
            sub, keep = g.without(1 << v)
            bad = self.solve(sub, tuple(f[w] for w in keep))
            if bad is not None:
                return _fresh_extend(n, keep, bad, f, [v])
        # few-token vertices first: their classes are decided early, which
        # makes the prefix pruning bite much sooner
        perm = sorted(range(n), key=lambda v: (f[v], g.degree(v), v))
        if perm != list(range(n)):
            pos = {v: i for i, v in enumerate(perm)}
            h = Graph.from_edges(n, [(pos[a], pos[b]) for a, b in g.edges()])
            bad = self._search(h, tuple(f[v] for v in perm))
            return None if bad is None else [bad[pos[v]] for v in range(n)]
        return self._search(g, f)

    def _search(self, g: Graph, f):
        n = g.n
        adj = g.adj
        # candidate classes grouped by their lowest vertex
        cands = [[] for _ in range(n)]
        for m in range(1, 1 << n):
            if m.bit_count() < 2:
                continue
            if any(not adj[u] & m for u in bits(m)):
                continue
            cands[lowest(m)].append(m)
        # big classes first: identical-list style witnesses surface early
        for c in cands:
            c.sort(key=lambda m: (-m.bit_count(), m))
        r = list(f)
        classes: list[int] = []
        found: list = []

        def lists_of():
            return [frozenset(i + 1 for i, m in enumerate(classes) if m >> v & 1) for v in range(n)]

        def prefix_prune(v: int) -> str:
            # vertices 0..v are finished.  "bad": some completion is bad.
            # "prune": every completion is colorable.  "go": keep searching.
            done = (1 << (v + 1)) - 1
            lists = lists_of()
            sub, keep = g.induced(done)
            ok, col = is_list_colorable(sub, [lists[u] for u in keep])
            if not ok:
                return "bad"
            # colors of the finished prefix, then grow U greedily
            colour = [0] * n
            for i, u in enumerate(keep):
                colour[u] = col[i]
            used = done
            for w in range(v + 1, n):
                for c in sorted(lists[w]):
                    if all(colour[x] != c for x in bits(adj[w] & used)):
                        colour[w] = c
                        used |= 1 << w
                        break
            rest = g.vertex_mask & ~used
            if _degenerate_ok(adj, rest, r):
                return "prune"
            if rest.bit_count() < n:
                sub, keep = g.induced(rest)
                if self.solve(sub, tuple(r[u] for u in keep)) is None:
                    return "prune"
            return "go"

        def rec(v: int, start: int) -> bool:
            self.stats.nodes += 1
            if r[v] == 0:
                while v < n and r[v] == 0:
                    v += 1
                start = 0
                state = prefix_prune(v - 1)
                if state == "bad":
                    lists = lists_of()
                    top = len(classes)
                    for w in range(n):
                        if r[w]:
                            lists[w] = lists[w] | frozenset(range(top + 1, top + 1 + r[w]))
                            top += r[w]
                    found.append(lists)
                    return True
                if state == "prune" or v >= n:
                    return False
            allowed = 0
            for w in range(v, n):
                if r[w] > 0:
                    allowed |= 1 << w
            opts = cands[v]
            for i in range(start, len(opts)):
                m = opts[i]
                if m & ~allowed:
                    continue
                for w in bits(m):
                    r[w] -= 1
                classes.append(m)
                if rec(v, i):
                    return True
                classes.pop()
                for w in bits(m):
                    r[w] += 1
            return False

        if rec(0, 0):
            return found[0]
        return None


def _bad_with_empty(n, f, v):
    lists = []
    top = 0
    for w in range(n):
        k = max(f[w], 0) if w != v else 0
        lists.append(frozenset(range(top + 1, top + 1 + k)))
        top += k
    return lists


def is_f_choosable(g: Graph, f, limit: int | None = None):
    """Decide f-choosability exactly.

    Returns ``(True, None)`` or ``(False, lists)`` where ``lists`` is an
    f-assignment with no proper coloring.

    Examples
    --------
    >>> from brookscolor.families import complete_bipartite
    >>> is_f_choosable(complete_bipartite(3, 3), [2] * 6)[0]
    False
    """
    limit = CHOOSE_LIMIT if limit is None else limit
    if g.n > limit:
        raise ScaleRefusal("is_f_choosable", g.n, limit)
    f = tuple(int(x) for x in f)
    bad = _Chooser().solve(g, f)
    if bad is None:
        return True, None
    return False, [sorted(L) for L in bad]


def chi_list_exact(g: Graph, limit: int | None = None, lower: int | None = None) -> int:
    """Choice number: least k such that g is k-choosable."""
    if g.n == 0:
        return 0
    chooser = _Chooser()
    limit = CHOOSE_LIMIT if limit is None else limit
    if g.n > limit:
        raise ScaleRefusal("chi_list_exact", g.n, limit)
    k = lower if lower is not None else chi_exact(g)[0]
    while chooser.solve(g, (k,) * g.n) is not None:
        k += 1
    return k


# ------------------------------------------------------------------- kernels


def is_kernel_perfect_exact(d: Digraph, limit: int | None = None):
    """Check every induced subdigraph for a kernel.

    Returns ``(True, None)`` or ``(False, mask)`` with ``mask`` the vertex set
    of a kernel-free induced subdigraph.
    """
    limit = KERNEL_LIMIT if limit is None else limit
    if d.n > limit:
        raise ScaleRefusal("is_kernel_perfect_exact", d.n, limit)
    for mask in range(1, 1 << d.n):
        if find_kernel(d, mask) is None:
            return False, mask
    return True, None


# -------------------------------------------------------------- hitting sets


def maximum_cliques(g: Graph) -> list[int]:
    """All maximum cliques as bitsets."""
    if g.n == 0:
        return []
    w = len(max_clique(g))
    out = []

    def rec(clique: int, size: int, cand: int):
        if size == w:
            out.append(clique)
            return
        if size + cand.bit_count() < w:
            return
        for v in bits(cand):
            rec(clique | 1 << v, size + 1, cand & g.adj[v] & ~((1 << (v + 1)) - 1))

    rec(0, 0, g.vertex_mask)
    return out


def hitting_set_exact(g: Graph, limit: int | None = None) -> frozenset | None:
    """Smallest (then lexicographically least) independent set meeting every maximum clique."""
    limit = CHI_LIMIT if limit is None else limit
    if g.n > limit:
        raise ScaleRefusal("hitting_set_exact", g.n, limit)
    cliques = maximum_cliques(g)
    if not cliques:
        return frozenset()
    for size in range(1, len(cliques) + 1):
        for combo in combinations(range(g.n), size):
            m = to_mask(combo)
            if all(c & m for c in cliques) and is_independent(g, m):
                return frozenset(combo)
    return None


# ---------------------------------------------------------- hamiltonian paths


def hamiltonian_endpoint_pairs(g: Graph, limit: int | None = None) -> set[tuple[int, int]]:
    """Unordered endpoint pairs of all Hamiltonian paths (bitmask DP)."""
    limit = HAM_LIMIT if limit is None else limit
    if g.n > limit:
        raise ScaleRefusal("hamiltonian_endpoint_pairs", g.n, limit)
    n = g.n
    full = g.vertex_mask
    pairs = set()
    for s in range(n):
        # reach[mask] = bitset of possible end vertices of a path from s covering mask
        reach = {1 << s: 1 << s}
        for size in range(1, n):
            nxt: dict[int, int] = {}
            for mask, ends in reach.items():
                for e in bits(ends):
                    for w in bits(g.adj[e] & ~mask):
                        m2 = mask | 1 << w
                        nxt[m2] = nxt.get(m2, 0) | 1 << w
            reach = nxt
        for e in bits(reach.get(full, 0)):
            pairs.add((min(s, e), max(s, e)))
    return pairs


def ham_path_in_cycle_property(g: Graph, limit: int | None = None) -> bool:
    """True iff g has a Hamiltonian path and every one closes to a Hamiltonian cycle.

    The one-vertex graph counts as satisfying the property.
    """
    if g.n == 1:
        return True
    pairs = hamiltonian_endpoint_pairs(g, limit)
    return bool(pairs) and all(g.has_edge(a, b) for a, b in pairs)


# --------------------------------------------------------------------- report


@dataclass
class OracleReport:
    chi: int
    omega: int
    alpha: int
    max_degree: int
    coloring: tuple[int, ...]
    clique: tuple[int, ...]
    independent_set: tuple[int, ...]
    chi_list: int | None = None
    chi_paint: int | None = None

    def to_json(self) -> dict:
        out = {
            "chi": self.chi, "omega": self.omega, "alpha": self.alpha,
            "max_degree": self.max_degree,
            "coloring": {str(v): c for v, c in enumerate(self.coloring)},
            "clique": list(self.clique), "independent_set": list(self.independent_set),
        }
        if self.chi_list is not None:
            out["chi_list"] = self.chi_list
        if self.chi_paint is not None:
            out["chi_paint"] = self.chi_paint
        return out


def oracle_report(g: Graph, choice: bool = False, paint: bool = False) -> OracleReport:
    chi, col = chi_exact(g)
    clique = tuple(sorted(max_clique(g)))
    ind = tuple(sorted(max_independent_set(g)))
    rep = OracleReport(chi, len(clique), len(ind), g.max_degree, col, clique, ind)
    if choice:
        rep.chi_list = chi_list_exact(g, lower=chi)
    if paint:
        from .paintability import chi_paint_exact
        rep.chi_paint = chi_paint_exact(g, lower=rep.chi_list or chi)
    assert rep.omega <= rep.chi <= rep.max_degree + 1
    return rep
