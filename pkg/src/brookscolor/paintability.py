"""Online list coloring (the painting game).

Each round the adversary reveals a nonempty set ``S`` of uncolored
vertices, which costs every revealed vertex one token; the painter then
colors an independent subset of ``S``.  The adversary wins once some
vertex runs out of tokens while still uncolored.

A game position is ``(U, tokens)`` with ``U`` the bitset of uncolored
vertices.  Two standard reductions keep the memo table small:

* a vertex with more tokens than uncolored neighbours can be ignored, since
  the painter can always color it on one of its remaining reveals;
* the game splits over the components of ``G[U]``.

The painter only ever needs maximal independent subsets of ``S``: coloring
more vertices never hurts her.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable

from .digraph import Digraph, find_kernel
from .errors import InvariantViolation, ScaleRefusal
from .graph import Graph, bits, component_of, is_independent, lowest

PAINT_LIMIT = int(os.environ.get("BROOKSCOLOR_PAINT_LIMIT", 9))


def maximal_independent_subsets(adj, s: int) -> list[int]:
    """All maximal independent subsets of the vertex set ``s`` (Bron-Kerbosch on the complement)."""
    out = []

    def rec(chosen: int, cand: int, excl: int):
        if not cand and not excl:
            out.append(chosen)
            return
        for v in bits(cand):
            nb = adj[v]
            rec(chosen | 1 << v, cand & ~nb & ~(1 << v), excl & ~nb)
            cand &= ~(1 << v)
            excl |= 1 << v

    rec(0, s, 0)
    return out


def _nonempty_subsets(mask: int):
    s = mask
    while s:
        yield s
        s = (s - 1) & mask


@dataclass
class PaintResult:
    winner: str
    table: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        moves = []
        for (u, toks, s), move in sorted(self.table.items()):
            moves.append({"uncolored": sorted(bits(u)), "tokens": list(toks),
                          "reveal": sorted(bits(s)), "response": sorted(bits(move))})
        return {"winner": self.winner, "strategy": moves}


class _Solver:
    def __init__(self, g: Graph):
        self.g = g
        self.memo: dict = {}
        self.mis_cache: dict = {}

    def _reduce(self, u: int, toks) -> int:
        adj = self.g.adj
        changed = True
        while changed:
            changed = False
            for v in bits(u):
                if toks[v] > (adj[v] & u).bit_count():
                    u &= ~(1 << v)
                    changed = True
        return u

    def _mis(self, s: int):
        r = self.mis_cache.get(s)
        if r is None:
            r = maximal_independent_subsets(self.g.adj, s)
            self.mis_cache[s] = r
        return r

    def painter_wins(self, u: int, toks: tuple[int, ...]) -> bool:
        u = self._reduce(u, toks)
        if not u:
            return True
        while u:
            c = component_of(self.g, lowest(u), u)
            if not self._component(c, tuple(t if c >> i & 1 else 0 for i, t in enumerate(toks))):
                return False
            u &= ~c
        return True

    def _component(self, u: int, toks) -> bool:
        key = (u, toks)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        res = True
        for s in _nonempty_subsets(u):
            if self.respond(u, toks, s) is None:
                res = False
                break
        self.memo[key] = res
        return res

    def respond(self, u: int, toks, s: int) -> int | None:
        """A winning painter answer to reveal ``s``, or None."""
        for ind in self._mis(s):
            nt = list(toks)
            dead = False
            for v in bits(s & ~ind):
                nt[v] -= 1
                if nt[v] == 0:
                    dead = True
                    break
            if dead:
                continue
            rest = u & ~ind
            for v in bits(ind):
                nt[v] = 0
            if self.painter_wins(rest, tuple(nt)):
                return ind
        return None


def paint_game_solve(g: Graph, f, limit: int | None = None, with_table: bool = False) -> PaintResult:
    """Solve the painting game on ``g`` with token counts ``f``.

    Returns the winner and, with ``with_table``, the painter's response to
    every reveal from every winning position reached under optimal play
    (or the adversary's winning reveals otherwise).

    Examples
    --------
    >>> from brookscolor.families import cycle_graph
    >>> paint_game_solve(cycle_graph(5), [2] * 5).winner
    'adversary'
    >>> paint_game_solve(cycle_graph(5), [3] * 5).winner
    'painter'
    """
    limit = PAINT_LIMIT if limit is None else limit
    if g.n > limit:
        raise ScaleRefusal("paint_game_solve", g.n, limit)
    toks = tuple(min(max(int(x), 0), g.n) for x in f)
    solver = _Solver(g)
    if any(t <= 0 for t in toks) and g.n:
        return PaintResult("adversary")
    wins = solver.painter_wins(g.vertex_mask, toks)
    res = PaintResult("painter" if wins else "adversary")
    if with_table:
        _fill_table(solver, g.vertex_mask, toks, wins, res.table)
    return res


def _fill_table(solver: _Solver, u: int, toks, painter: bool, table: dict):
    seen = set()
    stack = [(u, toks)]
    while stack:
        u, toks = stack.pop()
        if (u, toks) in seen or not u:
            continue
        seen.add((u, toks))
        for s in _nonempty_subsets(u):
            ind = solver.respond(u, toks, s)
            if painter:
                if ind is None:
                    raise InvariantViolation("painter table hit a losing reveal")
                table[(u, toks, s)] = ind
                nt = list(toks)
                for v in bits(s & ~ind):
                    nt[v] -= 1
                for v in bits(ind):
                    nt[v] = 0
                stack.append((u & ~ind, tuple(nt)))
            elif ind is None:
                table[(u, toks, s)] = 0
                break


def chi_paint_exact(g: Graph, limit: int | None = None, lower: int = 1) -> int:
    """Least k such that the painter wins with k tokens everywhere."""
    if g.n == 0:
        return 0
    k = max(lower, 1)
    while paint_game_solve(g, [k] * g.n, limit).winner != "painter":
        k += 1
    return k


def optimal_painter(g: Graph, f, limit: int | None = None) -> Callable[[int, int], int]:
    """Painter move function backed by the exact game solver.

    The returned function keeps its own token count, so it must be called
    once per round in play order.  From a lost position it still answers
    with some maximal independent subset of the reveal.
    """
    limit = PAINT_LIMIT if limit is None else limit
    if g.n > limit:
        raise ScaleRefusal("optimal_painter", g.n, limit)
    solver = _Solver(g)
    toks = [int(x) for x in f]

    def move(uncolored: int, reveal: int) -> int:
        s = reveal & uncolored
        ind = solver.respond(uncolored, tuple(toks), s) if all(t > 0 for t in toks) else None
        if ind is None:
            ind = solver._mis(s)[0] if s else 0
        for v in bits(s & ~ind):
            toks[v] -= 1
        return ind

    return move


# ------------------------------------------------------------- kernel painter


def degeneracy_orientation(g: Graph) -> Digraph:
    """Acyclic orientation along a smallest-last order.

    Each vertex points to the neighbours still present when it was peeled,
    so out-degrees are at most the degeneracy.  Acyclic digraphs are
    kernel-perfect, which makes this a valid input for the kernel painter.
    """
    live = g.vertex_mask
    arcs = []
    while live:
        v = min(bits(live), key=lambda x: ((g.adj[x] & live).bit_count(), x))
        live &= ~(1 << v)
        arcs.extend((v, w) for w in bits(g.adj[v] & live))
    return Digraph.from_arcs(g.n, sorted(arcs))


def painter_kernel_strategy(d: Digraph, f=None) -> Callable[[int, int], int]:
    """Painter move function for a kernel-perfect orientation.

    Given the uncolored set ``U`` and a reveal ``S``, color a kernel of the
    subdigraph induced on ``S & U``.  Every revealed vertex left uncolored
    has an arc into the colored kernel, so its out-degree among uncolored
    vertices drops together with its token count.
    """
    if f is not None:
        for v in range(d.n):
            if f[v] < d.outdegree(v) + 1:
                raise ValueError(f"vertex {v} has {f[v]} tokens but out-degree {d.outdegree(v)}")
    g = d.underlying()

    def move(uncolored: int, reveal: int) -> int:
        s = reveal & uncolored
        k = find_kernel(d, s)
        if k is None:
            raise InvariantViolation(f"no kernel on revealed set {sorted(bits(s))}")
        if k & ~s or not is_independent(g, k):
            raise InvariantViolation("kernel move is not an independent subset of the reveal")
        return k

    return move


def defeats_all_adversaries(g: Graph, f, move: Callable[[int, int], int]):
    """Exhaustive adversary search against a fixed painter move function.

    Returns ``(True, None)`` if the painter survives every adversary, else
    ``(False, line)`` with a losing sequence of ``(reveal, response)`` rounds.
    """
    memo: dict = {}

    def lose_line(u: int, toks) -> list | None:
        if not u:
            return None
        key = (u, toks)
        if key in memo:
            return memo[key]
        memo[key] = None
        for s in _nonempty_subsets(u):
            ind = move(u, s)
            nt = list(toks)
            died = False
            for v in bits(s & ~ind):
                nt[v] -= 1
                died |= nt[v] == 0
            if died:
                memo[key] = [(s, ind)]
                return memo[key]
            for v in bits(ind):
                nt[v] = 0
            sub = lose_line(u & ~ind, tuple(nt))
            if sub is not None:
                memo[key] = [(s, ind)] + sub
                return memo[key]
        return None

    toks = tuple(int(x) for x in f)
    if any(t <= 0 for t in toks):
        return False, []
    line = lose_line(g.vertex_mask, toks)
    if line is None:
        return True, None
    return False, [(sorted(bits(s)), sorted(bits(i))) for s, i in line]


def play(g: Graph, f, move: Callable[[int, int], int], reveals) -> dict:
    """Play a scripted adversary against ``move`` and record every round."""
    toks = [int(x) for x in f]
    u = g.vertex_mask
    rounds = []
    for r in reveals:
        s = (r if isinstance(r, int) else sum(1 << v for v in r)) & u
        if not s:
            continue
        ind = move(u, s)
        for v in bits(s & ~ind):
            toks[v] -= 1
        u &= ~ind
        rounds.append({"reveal": sorted(bits(s)), "response": sorted(bits(ind)),
                       "tokens": [toks[v] if u >> v & 1 else 0 for v in range(g.n)]})
        if any(toks[v] <= 0 for v in bits(u)):
            return {"rounds": rounds, "winner": "adversary"}
        if not u:
            break
    return {"rounds": rounds, "winner": "painter" if not u else "undecided"}


def certificate_is_paintable(g: Graph, orientation: Digraph, limit: int | None = None) -> bool:
    """Consumer check for orientation certificates: is g online (d+ + 1)-choosable?"""
    f = [orientation.outdegree(v) + 1 for v in range(g.n)]
    return paint_game_solve(g, f, limit).winner == "painter"
