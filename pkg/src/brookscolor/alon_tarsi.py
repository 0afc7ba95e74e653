"""Orientations toward an even cycle and Eulerian subgraph parity counts.

An orientation certifies that G is L-colorable from lists with
|L(v)| >= d+(v) + 1 whenever the numbers of even and odd Eulerian
subgraphs differ.  Orienting every edge forward along an order that starts
with an induced even cycle H (with at most one chord) leaves every vertex
with an in-arc and confines every Eulerian subgraph to H.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .digraph import Digraph
from .errors import InvariantViolation, PreconditionError, ScaleRefusal
from .graph import Graph, bfs_distances, bits, cycle_order, is_connected, to_mask
from .choosability import find_rubin_cycle_in, is_even_cycle_with_at_most_one_chord
from .structure import is_gallai_tree

ARC_LIMIT = int(os.environ.get("BROOKSCOLOR_ARC_LIMIT", 48))
BRUTE_LIMIT = 22


@dataclass(frozen=True)
class EulerianCounts:
    ee: int
    eo: int

    def to_json(self) -> dict:
        return {"ee": self.ee, "eo": self.eo}


def at_orient_toward(g: Graph, h, chord_rule: str = "as_cycle") -> Digraph:
    """Orient ``g`` forward along an order that starts around the cycle of ``h``.

    The cycle edges of H follow the cycle; the chord, if any, runs from
    the earlier to the later cycle position (``as_cycle``) or the other way
    (``reversed``).  The remaining vertices follow by distance to H, then
    index.

    Examples
    --------
    >>> from brookscolor.families import cycle_graph
    >>> at_orient_toward(cycle_graph(4), range(4)).arcs()
    [(0, 1), (1, 2), (2, 3), (3, 0)]
    """
    if chord_rule not in ("as_cycle", "reversed"):
        raise ValueError("chord_rule must be 'as_cycle' or 'reversed'")
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    hmask = h if isinstance(h, int) else to_mask(h)
    if not is_even_cycle_with_at_most_one_chord(g, hmask):
        raise PreconditionError("H is not an induced even cycle with at most one chord",
                                {"H": sorted(bits(hmask))})
    sub, keep = g.induced(hmask)
    chord = None
    adj = list(sub.adj)
    if sub.num_edges() == sub.n + 1:
        a, b = [x for x in range(sub.n) if sub.degree(x) == 3]
        adj[a] &= ~(1 << b)
        adj[b] &= ~(1 << a)
        chord = (keep[a], keep[b])
    ring = [keep[x] for x in cycle_order(Graph(sub.n, tuple(adj)))]
    dist = bfs_distances(g, hmask)
    rest = sorted((v for v in range(g.n) if not hmask >> v & 1), key=lambda v: (dist[v], v))
    sigma = ring + rest
    pos = {v: i for i, v in enumerate(sigma)}
    arcs = []
    m = len(ring)
    cyc_edges = {frozenset((ring[i], ring[(i + 1) % m])) for i in range(m)}
    for i in range(m):
        arcs.append((ring[i], ring[(i + 1) % m]))
    for u, v in g.edges():
        e = frozenset((u, v))
        if e in cyc_edges:
            continue
        if chord and e == frozenset(chord):
            a, b = sorted((u, v), key=lambda x: pos[x])
            arcs.append((a, b) if chord_rule == "as_cycle" else (b, a))
            continue
        arcs.append((u, v) if pos[u] < pos[v] else (v, u))
    d = Digraph.from_arcs(g.n, sorted(arcs))
    inn = d.inn
    for v in range(g.n):
        if g.degree(v) and not inn[v]:
            raise InvariantViolation(f"vertex {v} has no in-arc")
    return d


def eulerian_subgraphs(d: Digraph, limit: int | None = None):
    """Yield every Eulerian arc subset as a bitmask over ``d.arcs()`` order."""
    arcs = d.arcs()
    limit = ARC_LIMIT if limit is None else limit
    if len(arcs) > limit:
        raise ScaleRefusal("eulerian_counts", len(arcs), limit)
    m = len(arcs)
    last = {}
    for i, (u, v) in enumerate(arcs):
        last[u] = i
        last[v] = i
    closes = [[] for _ in range(m)]
    for v, i in last.items():
        closes[i].append(v)
    bal = [0] * d.n

    def rec(i: int, chosen: int):
        if i == m:
            yield chosen
            return
        u, v = arcs[i]
        for take in (0, 1):
            if take:
                bal[u] += 1
                bal[v] -= 1
            if all(bal[x] == 0 for x in closes[i]):
                yield from rec(i + 1, chosen | (take << i))
            if take:
                bal[u] -= 1
                bal[v] += 1

    yield from rec(0, 0)


def eulerian_counts(d: Digraph, limit: int | None = None) -> EulerianCounts:
    """Counts of Eulerian subgraphs with an even and with an odd number of arcs.

    Examples
    --------
    >>> eulerian_counts(Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    EulerianCounts(ee=2, eo=0)
    """
    ee = eo = 0
    for s in eulerian_subgraphs(d, limit):
        if s.bit_count() % 2:
            eo += 1
        else:
            ee += 1
    return EulerianCounts(ee, eo)


def eulerian_counts_bruteforce(d: Digraph) -> EulerianCounts:
    """Reference count over all 2^m arc subsets."""
    arcs = d.arcs()
    if len(arcs) > BRUTE_LIMIT:
        raise ScaleRefusal("eulerian_counts_bruteforce", len(arcs), BRUTE_LIMIT)
    ee = eo = 0
    for s in range(1 << len(arcs)):
        bal = [0] * d.n
        for i in bits(s):
            u, v = arcs[i]
            bal[u] += 1
            bal[v] -= 1
        if not any(bal):
            if s.bit_count() % 2:
                eo += 1
            else:
                ee += 1
    return EulerianCounts(ee, eo)


@dataclass
class ATCertificate:
    orientation: Digraph
    h: frozenset
    ee: int
    eo: int
    certified: bool

    def to_json(self) -> dict:
        return {"orientation": self.orientation.to_json(), "H": sorted(self.h),
                "ee": self.ee, "eo": self.eo, "certified": self.certified,
                "outdegree": [self.orientation.outdegree(v) for v in range(self.orientation.n)]}


def at_certify_degree_choosable(g: Graph, chord_rule: str = "as_cycle") -> ATCertificate:
    """Certificate that a connected non-Gallai graph is degree-choosable.

    Examples
    --------
    >>> from brookscolor.families import cycle_graph
    >>> c = at_certify_degree_choosable(cycle_graph(6))
    >>> (c.ee, c.eo, c.certified)
    (2, 0, True)
    """
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    sc = is_gallai_tree(g)
    if sc.tag == "gallai_tree":
        raise PreconditionError("graph is a Gallai tree", sc.to_json())
    h = find_rubin_cycle_in(g)
    hmask = to_mask(h)
    d = at_orient_toward(g, hmask, chord_rule)
    inside = 0
    for i, (u, v) in enumerate(d.arcs()):
        if hmask >> u & 1 and hmask >> v & 1:
            inside |= 1 << i
    ee = eo = 0
    for s in eulerian_subgraphs(d):
        if s & ~inside:
            raise InvariantViolation("an Eulerian subgraph leaves H")
        if s.bit_count() % 2:
            eo += 1
        else:
            ee += 1
    for v in range(g.n):
        if d.outdegree(v) > g.degree(v) - 1:
            raise InvariantViolation(f"vertex {v} has out-degree {d.outdegree(v)}")
    return ATCertificate(d, frozenset(h), ee, eo, ee != eo)
