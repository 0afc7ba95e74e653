"""Recognition of the special graph classes that the coloring theorems single out."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DisconnectedError, ValidationError
from .graph import (Graph, bits, blocks_and_cutvertices, is_complete, is_connected,
                    is_cycle, to_mask, two_coloring)

TAGS = ("complete", "odd_cycle", "even_cycle", "balanced_complete_bipartite",
        "gallai_tree", "paper_ktree", "other")


@dataclass(frozen=True)
class StructureClass:
    """A class tag plus the parameters needed to re-check it.

    Call :func:`verify_structure` to confirm the tag from the witness alone.
    """

    tag: str
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"tag": self.tag, "witness": self.witness}


def block_kind(g: Graph, block) -> str:
    mask = to_mask(block)
    size = len(block)
    if is_complete(g, mask):
        return "complete"
    if size >= 3 and size % 2 == 1 and all((g.adj[v] & mask).bit_count() == 2 for v in block):
        return "odd_cycle"
    return "other"


def _require_connected(g: Graph):
    if not is_connected(g):
        from .graph import components
        comps = components(g)
        raise DisconnectedError("graph is not connected", list(bits(g.vertex_mask & ~comps[0])))


def is_gallai_tree(g: Graph) -> StructureClass:
    """Tag ``gallai_tree`` iff every block is complete or an odd cycle.

    Examples
    --------
    >>> from brookscolor.families import path_graph
    >>> is_gallai_tree(path_graph(4)).tag
    'gallai_tree'
    """
    _require_connected(g)
    bct = blocks_and_cutvertices(g)
    listing = [{"vertices": sorted(b), "kind": block_kind(g, b)} for b in bct.blocks]
    bad = [b for b in listing if b["kind"] == "other"]
    if bad or g.n == 0:
        return StructureClass("other", {"blocks": listing, "offending_block": bad[0]["vertices"] if bad else []})
    return StructureClass("gallai_tree", {"blocks": listing})


def is_paper_ktree(g: Graph, k: int) -> StructureClass:
    """Recognise the bridge-joined units of odd cycles (k = 3) or K_k (k >= 4).

    Every block must be a unit or a bridge, every vertex must lie in exactly
    one unit, and each vertex may carry at most one bridge (so its degree is
    k-1 before the bridge is added).
    """
    if k < 3:
        raise ValidationError("k must be at least 3")
    _require_connected(g)
    bct = blocks_and_cutvertices(g)
    units, bridges = [], []
    for b in bct.blocks:
        kind = block_kind(g, b)
        if len(b) == 2 and k != 2:
            bridges.append(tuple(sorted(b)))
        elif k == 3 and kind == "odd_cycle" or (k == 3 and len(b) == 3 and kind == "complete"):
            units.append(sorted(b))
        elif k >= 4 and kind == "complete" and len(b) == k:
            units.append(sorted(b))
        else:
            return StructureClass("other", {"reason": "block is neither a unit nor a bridge",
                                            "block": sorted(b)})
    unit_of = {}
    for i, u in enumerate(units):
        for v in u:
            if v in unit_of:
                return StructureClass("other", {"reason": "vertex in two units", "vertex": v})
            unit_of[v] = i
    if len(unit_of) != g.n or not units:
        return StructureClass("other", {"reason": "vertex outside every unit"})
    used = set()
    for a, b in bridges:
        for v in (a, b):
            if v in used:
                return StructureClass("other", {"reason": "vertex carries two bridges", "vertex": v})
            used.add(v)
    return StructureClass("paper_ktree", {"k": k, "units": units, "bridges": [list(e) for e in bridges]})


def balanced_bipartite_parts(g: Graph):
    """Return the parts if ``g`` is K_{m,m} with m >= 1, else None."""
    if g.n < 2 or g.n % 2:
        return None
    col = two_coloring(g)
    if col is None:
        return None
    a = [v for v in range(g.n) if col[v] == 1]
    b = [v for v in range(g.n) if col[v] == 2]
    if len(a) != len(b):
        return None
    if g.num_edges() != len(a) * len(b):
        return None
    return a, b


def classify(g: Graph) -> StructureClass:
    """Most specific tag for a connected graph (complete before gallai_tree etc.)."""
    _require_connected(g)
    if is_complete(g):
        return StructureClass("complete", {"n": g.n})
    if is_cycle(g):
        return StructureClass("odd_cycle" if g.n % 2 else "even_cycle", {"n": g.n})
    parts = balanced_bipartite_parts(g)
    if parts:
        return StructureClass("balanced_complete_bipartite", {"parts": [parts[0], parts[1]]})
    k = g.max_degree
    if k >= 3:
        kt = is_paper_ktree(g, k)
        if kt.tag == "paper_ktree":
            return kt
    gt = is_gallai_tree(g)
    if gt.tag == "gallai_tree":
        return gt
    return StructureClass("other", {"n": g.n})


def verify_structure(g: Graph, sc: StructureClass) -> bool:
    """Re-check a tag against the graph using only its witness."""
    w = sc.witness
    if sc.tag == "complete":
        return w.get("n") == g.n and is_complete(g)
    if sc.tag in ("odd_cycle", "even_cycle"):
        return is_cycle(g) and (g.n % 2 == 1) == (sc.tag == "odd_cycle")
    if sc.tag == "balanced_complete_bipartite":
        a, b = w["parts"]
        if len(a) != len(b) or set(a) | set(b) != set(range(g.n)) or set(a) & set(b):
            return False
        return all(g.has_edge(x, y) for x in a for y in b) and g.num_edges() == len(a) * len(b)
    if sc.tag == "gallai_tree":
        covered = set()
        for blk in w["blocks"]:
            kind = block_kind(g, blk["vertices"])
            if kind == "other" or kind != blk["kind"]:
                return False
            covered |= {e for e in g.edges() if e[0] in blk["vertices"] and e[1] in blk["vertices"]}
        return covered == set(g.edges())
    if sc.tag == "paper_ktree":
        k = w["k"]
        seen = set()
        mask_edges = set()
        for u in w["units"]:
            if seen & set(u):
                return False
            seen |= set(u)
            kind = block_kind(g, u)
            if k == 3 and kind not in ("odd_cycle", "complete") or (k == 3 and len(u) not in (3,) and kind == "complete"):
                return False
            if k >= 4 and (kind != "complete" or len(u) != k):
                return False
            mask_edges |= {e for e in g.edges() if e[0] in u and e[1] in u}
        ends = [v for e in w["bridges"] for v in e]
        if len(ends) != len(set(ends)) or seen != set(range(g.n)):
            return False
        mask_edges |= {tuple(sorted(e)) for e in w["bridges"]}
        return mask_edges == set(g.edges()) and len(w["bridges"]) == len(w["units"]) - 1 and is_connected(g)
    return sc.tag == "other"
