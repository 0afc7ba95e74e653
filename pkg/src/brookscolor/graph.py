"""Simple undirected graphs on vertices 0..n-1 with bitset adjacency.

A vertex set is a Python ``int`` used as a bitset; ``adj[v]`` is the set of
neighbours of ``v``.  Colorings are tuples of ints indexed by vertex, colors
are positive integers and ``0`` marks an uncolored vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DisconnectedError, GreedyStuck, ScaleRefusal, ValidationError

DEFAULT_CLIQUE_LIMIT = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValidationError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValidationError("adjacency length does not match n")

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adj), default=0)

    def induced(self, vertices) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph induced by ``vertices`` (iterable or bitset), relabelled.

        Returns the new graph and the tuple mapping new labels to old ones.
        """
        mask = vertices if isinstance(vertices, int) else to_mask(vertices)
        old = tuple(bits(mask))
        pos = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            a = 0
            for w in bits(self.adj[v] & mask):
                a |= 1 << pos[w]
            adj.append(a)
        return Graph(len(old), tuple(adj)), old

    def without(self, vertices) -> tuple["Graph", tuple[int, ...]]:
        mask = vertices if isinstance(vertices, int) else to_mask(vertices)
        return self.induced(self.vertex_mask & ~mask)

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v or self.has_edge(u, v):
            return self
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def edges_within(self, mask: int) -> int:
        return sum((self.adj[v] & mask).bit_count() for v in bits(mask)) // 2


# ---------------------------------------------------------------- connectivity


def component_of(g: Graph, v: int, allowed: int | None = None) -> int:
    allowed = g.vertex_mask if allowed is None else allowed
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, allowed: int | None = None) -> list[int]:
    """Connected components (as bitsets) of the subgraph induced by ``allowed``."""
    rest = g.vertex_mask if allowed is None else allowed
    out = []
    while rest:
        c = component_of(g, lowest(rest), rest)
        out.append(c)
        rest &= ~c
    return out


def is_connected(g: Graph, allowed: int | None = None) -> bool:
    allowed = g.vertex_mask if allowed is None else allowed
    if not allowed:
        return True
    return component_of(g, lowest(allowed), allowed) == allowed


def bfs_distances(g: Graph, sources: int, allowed: int | None = None) -> list[int]:
    """Distances from the bitset ``sources`` within ``allowed``; -1 if unreachable."""
    allowed = g.vertex_mask if allowed is None else allowed
    dist = [-1] * g.n
    frontier = sources & allowed
    seen = frontier
    d = 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            dist[v] = d
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
        d += 1
    return dist


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[frozenset, ...]
    cutvertices: frozenset
    incidence: tuple[tuple[int, int], ...]  # (block index, cutvertex)

    def endblocks(self) -> list[int]:
        """Indices of blocks that are leaves of the block forest."""
        count = [0] * len(self.blocks)
        for b, _ in self.incidence:
            count[b] += 1
        return [i for i, c in enumerate(count) if c <= 1]

    def to_json(self) -> dict:
        return {
            "blocks": [sorted(b) for b in self.blocks],
            "cutvertices": sorted(self.cutvertices),
            "incidence": [list(p) for p in self.incidence],
        }


def blocks_and_cutvertices(g: Graph, allowed: int | None = None) -> BlockCutTree:
    """Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and cutvertices.

    Iterative Hopcroft-Tarjan over the subgraph induced by ``allowed``.
    """
    allowed = g.vertex_mask if allowed is None else allowed
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset] = []
    t = 0
    for root in bits(allowed):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        if not g.adj[root] & allowed:
            blocks.append(frozenset((root,)))
            continue
        stack = [(root, -1, bits(g.adj[root] & allowed))]
        edge_stack: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            pushed = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, bits(g.adj[w] & allowed)))
                    pushed = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if pushed:
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                comp = set()
                while True:
                    e = edge_stack.pop()
                    comp.update(e)
                    if e == (u, v):
                        break
                blocks.append(frozenset(comp))
    blocks.sort(key=lambda b: sorted(b))
    membership: dict[int, int] = {}
    for b in blocks:
        for v in b:
            membership[v] = membership.get(v, 0) + 1
    cut = frozenset(v for v, c in membership.items() if c >= 2)
    incidence = tuple((i, v) for i, b in enumerate(blocks) for v in sorted(b & cut))
    return BlockCutTree(tuple(blocks), cut, incidence)


def is_two_connected(g: Graph) -> bool:
    """True for connected graphs on >= 3 vertices without a cutvertex."""
    if g.n < 3 or not is_connected(g):
        return False
    return not blocks_and_cutvertices(g).cutvertices


def cutvertices(g: Graph, allowed: int | None = None) -> frozenset:
    return blocks_and_cutvertices(g, allowed).cutvertices


# ------------------------------------------------------------------ recognition


def is_complete(g: Graph, mask: int | None = None) -> bool:
    mask = g.vertex_mask if mask is None else mask
    return all((g.adj[v] & mask) | (1 << v) == mask for v in bits(mask))


def is_regular(g: Graph) -> bool:
    return g.n == 0 or g.max_degree == g.min_degree


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(a.bit_count() == 2 for a in g.adj) and is_connected(g)


def is_odd_cycle(g: Graph) -> bool:
    return g.n % 2 == 1 and is_cycle(g)


def two_coloring(g: Graph, allowed: int | None = None) -> tuple[int, ...] | None:
    """Proper 2-coloring (colors 1/2) of ``allowed``, or None if not bipartite."""
    allowed = g.vertex_mask if allowed is None else allowed
    col = [0] * g.n
    for start in bits(allowed):
        if col[start]:
            continue
        col[start] = 1
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in bits(g.adj[v] & allowed):
                if not col[w]:
                    col[w] = 3 - col[v]
                    queue.append(w)
                elif col[w] == col[v]:
                    return None
    return tuple(col)


def cycle_order(g: Graph, mask: int | None = None) -> list[int]:
    """Vertices of a 2-regular connected (sub)graph in cyclic order, from the lowest."""
    mask = g.vertex_mask if mask is None else mask
    start = lowest(mask)
    order = [start]
    prev, cur = -1, start
    while True:
        nbrs = [w for w in bits(g.adj[cur] & mask) if w != prev]
        nxt = nbrs[0] if prev != -1 else min(nbrs)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > mask.bit_count():
            raise ValidationError("vertex set does not induce a cycle")
    return order


# ---------------------------------------------------------------- orders/greedy


def order_by_decreasing_distance(g: Graph, targets, allowed: int | None = None) -> tuple[int, ...]:
    """Vertices of ``allowed`` sorted by decreasing distance to ``targets``; targets last.

    Ties are broken by lowest index, so each non-target vertex is followed
    later in the order by a neighbour strictly closer to the targets.
    """
    allowed = g.vertex_mask if allowed is None else allowed
    tmask = (targets if isinstance(targets, int) else to_mask(targets)) & allowed
    dist = bfs_distances(g, tmask, allowed)
    unreachable = [v for v in bits(allowed) if dist[v] < 0]
    if unreachable:
        raise DisconnectedError(f"vertices {unreachable} cannot reach the targets", unreachable)
    rest = sorted((v for v in bits(allowed & ~tmask)), key=lambda v: (-dist[v], v))
    return tuple(rest) + tuple(bits(tmask))


def greedy_color(g: Graph, order: Iterable[int], partial=None, lists=None,
                 max_colors: int | None = None) -> tuple[int, ...]:
    """Color the vertices of ``order`` greedily with the smallest free color.

    ``partial`` is a pre-coloring (0 = uncolored) that is kept; with ``lists``
    each vertex takes the smallest free color of its list.  Raises
    :class:`GreedyStuck` if a vertex has no admissible color (or would need a
    color above ``max_colors``).
    """
    col = list(partial) if partial is not None else [0] * g.n
    for v in order:
        if col[v]:
            continue
        used = {col[w] for w in bits(g.adj[v])}
        if lists is not None:
            free = [c for c in sorted(lists[v]) if c not in used]
            if not free:
                raise GreedyStuck(v, used - {0})
            c = free[0]
        else:
            c = 1
            while c in used:
                c += 1
        if max_colors is not None and c > max_colors:
            raise GreedyStuck(v, used - {0})
        col[v] = c
    return tuple(col)


def is_proper(g: Graph, coloring: Sequence[int], lists=None) -> bool:
    """Adjacent colored vertices differ; with ``lists``, colors come from the lists."""
    for u in range(g.n):
        cu = coloring[u]
        if not cu:
            continue
        if lists is not None and cu not in lists[u]:
            return False
        for w in bits(g.adj[u]):
            if coloring[w] == cu:
                return False
    return True


def is_total(coloring: Sequence[int]) -> bool:
    return all(c > 0 for c in coloring)


def palette_size(coloring: Sequence[int]) -> int:
    """Largest color used (0 for the empty coloring)."""
    return max(coloring, default=0)


# ---------------------------------------------------------------------- cliques


def _color_sort(adj, cand):
    order = []
    bounds = []
    color = 0
    rest = cand
    while rest:
        color += 1
        q = rest
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~(1 << v) & ~adj[v]
            rest &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique_mask(adj, cand) -> int:
    best = [0, 0]  # size, mask

    def expand(clique, size, cand):
        order, bounds = _color_sort(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best[0]:
                return
            v = order[i]
            new = cand & adj[v]
            if new:
                expand(clique | 1 << v, size + 1, new)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, clique | 1 << v
            cand &= ~(1 << v)

    if cand:
        expand(0, 0, cand)
    return best[1]


def max_clique(g: Graph, limit: int = DEFAULT_CLIQUE_LIMIT, allowed: int | None = None) -> frozenset:
    """A maximum clique, by branch and bound with greedy-coloring bounds."""
    if g.n > limit:
        raise ScaleRefusal("max_clique", g.n, limit)
    allowed = g.vertex_mask if allowed is None else allowed
    return frozenset(bits(_max_clique_mask(g.adj, allowed)))


def max_independent_set(g: Graph, limit: int = DEFAULT_CLIQUE_LIMIT,
                        allowed: int | None = None) -> frozenset:
    if g.n > limit:
        raise ScaleRefusal("max_independent_set", g.n, limit)
    return max_clique(g.complement(), limit, allowed)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def independence_number(g: Graph) -> int:
    return len(max_independent_set(g))


def is_independent(g: Graph, vertices) -> bool:
    mask = vertices if isinstance(vertices, int) else to_mask(vertices)
    return all(not g.adj[v] & mask for v in bits(mask))


def extend_to_maximal_independent(g: Graph, vertices, allowed: int | None = None) -> int:
    """Add vertices (lowest index first) until the independent set is maximal."""
    allowed = g.vertex_mask if allowed is None else allowed
    ind = vertices if isinstance(vertices, int) else to_mask(vertices)
    for v in bits(allowed & ~ind):
        if not g.adj[v] & ind:
            ind |= 1 << v
    return ind
