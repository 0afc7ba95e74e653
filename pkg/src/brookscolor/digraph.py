"""Directed graphs with bitset out-neighbourhoods, plus kernel search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ValidationError
from .graph import Graph, bits, lowest


@dataclass(frozen=True)
class Digraph:
    """Orientation of a simple graph, possibly with opposite arc pairs.

    ``out[v]`` is the bitset of heads of arcs leaving ``v``.  A pair of
    opposite arcs ``u->v``, ``v->u`` models a bidirected edge.  ``labels``
    maps vertices to the vertices of a host graph, and ``part_a`` marks the
    vertices on the independent side when the digraph comes from the
    kernel construction.
    """

    n: int
    out: tuple[int, ...]
    labels: tuple[int, ...] | None = None
    part_a: int = 0

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]], labels=None, part_a: int = 0) -> "Digraph":
        out = [0] * n
        for a in arcs:
            u, v = int(a[0]), int(a[1])
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValidationError(f"bad arc ({u}, {v})")
            if out[u] >> v & 1:
                raise ValidationError(f"duplicate arc ({u}, {v})")
            out[u] |= 1 << v
        return cls(n, tuple(out), tuple(labels) if labels is not None else None, part_a)

    @property
    def inn(self) -> tuple[int, ...]:
        inn = [0] * self.n
        for u in range(self.n):
            for v in bits(self.out[u]):
                inn[v] |= 1 << u
        return tuple(inn)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.out[u])]

    def num_arcs(self) -> int:
        return sum(o.bit_count() for o in self.out)

    def outdegree(self, v: int) -> int:
        return self.out[v].bit_count()

    def indegree(self, v: int) -> int:
        return self.inn[v].bit_count()

    def bidirected_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in self.arcs() if u < v and self.out[v] >> u & 1]

    def underlying(self) -> Graph:
        inn = self.inn
        return Graph(self.n, tuple(self.out[v] | inn[v] for v in range(self.n)))

    def reversed(self) -> "Digraph":
        return Digraph(self.n, self.inn, self.labels, self.part_a)

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.arcs()],
                "bidirected": [list(p) for p in self.bidirected_pairs()]}


def is_kernel(d: Digraph, mask: int, kernel: int) -> bool:
    """``kernel`` is independent and absorbs every other vertex of ``mask``."""
    if kernel & ~mask:
        return False
    for v in bits(kernel):
        if d.out[v] & kernel:
            return False
    for v in bits(mask & ~kernel):
        if not d.out[v] & kernel:
            return False
    return True


def find_kernel(d: Digraph, mask: int) -> int | None:
    """Some kernel of the subdigraph induced by ``mask`` (lowest-first search)."""
    inn = d.inn
    nbr = [(d.out[v] | inn[v]) & mask for v in range(d.n)]

    def search(chosen: int, excluded: int) -> int | None:
        undecided = mask & ~chosen & ~excluded
        for x in bits(excluded):
            if not d.out[x] & chosen and not d.out[x] & undecided:
                return None
        if not undecided:
            return chosen
        u = lowest(undecided)
        r = search(chosen | 1 << u, excluded | (nbr[u] & undecided))
        if r is not None:
            return r
        return search(chosen, excluded | 1 << u)

    return search(0, 0)
