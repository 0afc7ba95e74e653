"""Strategy reports, certificates and the shared per-component driver.

Every coloring strategy has the same outer shell.  The input is split into
components; a component that is K_{Delta+1}, or an odd cycle when
Delta = 2, makes the whole run exceptional.  The remaining components are
reduced by two easy steps before a strategy's own machinery runs:

* a component that is not regular is colored greedily toward a vertex of
  low degree;
* a component with a cutvertex is split there, each piece is colored on
  its own, and the colors are permuted to agree on the cutvertex.

What reaches a strategy core is therefore connected, k-regular with
k >= 3, 2-connected and not complete.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import InvariantViolation
from .graph import (Graph, blocks_and_cutvertices, bits, components, greedy_color,
                    is_complete, is_odd_cycle, is_proper, is_regular, max_clique,
                    order_by_decreasing_distance, two_coloring)

STRATEGIES = ("lovasz", "kempe", "cubic", "ktree", "partition", "independency", "kernel")


@dataclass(frozen=True)
class Certificate:
    """A witness that something cannot be done (or need not be)."""

    kind: str
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, **self.data}


@dataclass
class StrategyReport:
    strategy: str
    outcome: str  # "colored" or "exceptional"
    coloring: tuple[int, ...] | None = None
    exception: Certificate | None = None
    trace: list = field(default_factory=list)

    @property
    def palette_size(self) -> int:
        return max(self.coloring, default=0) if self.coloring else 0

    def to_json(self) -> dict:
        out = {"strategy": self.strategy, "outcome": self.outcome, "trace": self.trace}
        if self.coloring is not None:
            out["coloring"] = {str(v): c for v, c in enumerate(self.coloring)}
            out["palette_size"] = self.palette_size
        if self.exception is not None:
            out["exception"] = self.exception.kind
            out["witness"] = self.exception.data
        return out


def brooks_bound(g: Graph) -> int:
    """max{3, omega, Delta}."""
    if g.n == 0:
        return 0
    return max(3, len(max_clique(g)), g.max_degree)


def exceptional_component(g: Graph) -> Certificate | None:
    """Certificate for a K_{Delta+1} component, or an odd-cycle component when Delta = 2."""
    delta = g.max_degree
    for comp in components(g):
        sub, keep = g.induced(comp)
        if sub.n == delta + 1 and is_complete(sub):
            return Certificate("complete_graph", {"component": list(keep), "max_degree": delta})
        if delta == 2 and is_odd_cycle(sub):
            return Certificate("odd_cycle", {"component": list(keep), "max_degree": delta})
    return None


# Core signature: core(g, k, trace, recurse) -> coloring with colors <= k.
# recurse(h, k2) colors any graph h with Delta(h) <= k2 and no K_{k2+1}.
Core = Callable[[Graph, int, list, Callable], tuple]


def color_at_most(g: Graph, k: int, core: Core, trace: list) -> tuple[int, ...]:
    """Color ``g`` with colors 1..k, given Delta(g) <= k and no K_{k+1} component.

    For k = 2 every component must also be bipartite.
    """
    col = [0] * g.n

    def recurse(h: Graph, k2: int) -> tuple[int, ...]:
        return color_at_most(h, k2, core, trace)

    for comp in components(g):
        sub, keep = g.induced(comp)
        c = _color_component(sub, k, core, trace, recurse)
        if not is_proper(sub, c) or max(c, default=0) > k:
            raise InvariantViolation(f"component coloring exceeds {k} colors or is improper", trace)
        for i, v in enumerate(keep):
            col[v] = c[i]
    return tuple(col)


def _color_component(g: Graph, k: int, core: Core, trace: list, recurse) -> tuple[int, ...]:
    if g.max_degree < k:
        return greedy_color(g, range(g.n))
    if k <= 2:
        c = two_coloring(g)
        if c is None:
            raise InvariantViolation("odd cycle where 2 colors were promised", trace)
        return c
    if is_complete(g):
        raise InvariantViolation(f"K_{k + 1} where {k} colors were promised", trace)
    if not is_regular(g):
        v = min(range(g.n), key=lambda u: (g.degree(u), u))
        trace.append({"step": "greedy_toward", "vertex": v, "k": k})
        return greedy_color(g, order_by_decreasing_distance(g, [v]), max_colors=k)
    cuts = blocks_and_cutvertices(g).cutvertices
    if cuts:
        v = min(cuts)
        trace.append({"step": "cutvertex_split", "vertex": v, "k": k})
        col = [0] * g.n
        for piece in components(g, g.vertex_mask & ~(1 << v)):
            sub, keep = g.induced(piece | 1 << v)
            c = list(recurse(sub, k))
            cv = c[keep.index(v)]
            # swap colors so that v gets color 1 in every piece
            c = [1 if x == cv else cv if x == 1 else x for x in c]
            for i, u in enumerate(keep):
                col[u] = c[i]
        return tuple(col)
    return core(g, k, trace, recurse)


def run_strategy(g: Graph, name: str, core: Core) -> StrategyReport:
    """Shared outer shell: exceptional check, then per-component coloring."""
    trace: list = []
    if g.n == 0:
        return StrategyReport(name, "colored", (), None, trace)
    exc = exceptional_component(g)
    if exc is not None:
        # Brooks does not apply; still hand back a (Delta + 1)-coloring
        col = greedy_color(g, range(g.n))
        return StrategyReport(name, "exceptional", col, exc, trace)
    col = [0] * g.n
    for comp in components(g):
        sub, keep = g.induced(comp)
        k = sub.max_degree
        if k <= 2 or is_complete(sub) or is_odd_cycle(sub):
            c = two_coloring(sub) if k <= 2 and two_coloring(sub) else greedy_color(sub, range(sub.n))
        else:
            c = color_at_most(sub, k, core, trace)
        for i, v in enumerate(keep):
            col[v] = c[i]
    col = tuple(col)
    bound = brooks_bound(g)
    if not is_proper(g, col) or max(col) > bound:
        raise InvariantViolation(f"{name}: coloring is improper or uses more than {bound} colors", trace)
    return StrategyReport(name, "colored", col, None, trace)
