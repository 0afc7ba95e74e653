"""Reading and writing graphs: graph6, DIMACS ``.col`` and plain edge lists."""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph

FORMATS = ("graph6", "dimacs_col", "edge_list")
_G6_HEADER = b">>graph6<<"


def _as_bytes(data) -> bytes:
    return data.encode("ascii") if isinstance(data, str) else bytes(data)


# ---------------------------------------------------------------------- graph6


def _g6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> bytes:
    """graph6 encoding without header or trailing newline."""
    out = bytearray(_g6_size(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(data) -> Graph:
    raw = _as_bytes(data)
    start = 0
    if raw.startswith(_G6_HEADER):
        start = len(_G6_HEADER)
    body = raw[start:].rstrip(b"\r\n")
    if not body:
        raise ParseError("empty graph6 string", start)
    for i, c in enumerate(body):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c!r} outside graph6 range", start + i)
    pos = 0
    if body[0] != 126:
        n = body[0] - 63
        pos = 1
    elif len(body) >= 2 and body[1] == 126:
        if len(body) < 8:
            raise ParseError("truncated graph6 size field", start + len(body))
        n = 0
        for c in body[2:8]:
            n = (n << 6) | (c - 63)
        pos = 8
    else:
        if len(body) < 4:
            raise ParseError("truncated graph6 size field", start + len(body))
        n = 0
        for c in body[1:4]:
            n = (n << 6) | (c - 63)
        pos = 4
    need = (n * (n - 1) // 2 + 5) // 6
    data_bytes = body[pos:]
    if len(data_bytes) != need:
        off = start + pos + min(len(data_bytes), need)
        raise ParseError(f"graph6 body has {len(data_bytes)} bytes, expected {need}", off)
    adj = [0] * n
    k = 0
    total = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            byte = data_bytes[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if total % 6:
        pad = (data_bytes[-1] - 63) & ((1 << (6 - total % 6)) - 1)
        if pad:
            raise ParseError("nonzero padding bits in graph6 body", start + pos + need - 1)
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------- DIMACS


def _lines_with_offsets(raw: bytes):
    off = 0
    for line in raw.split(b"\n"):
        yield off, line.rstrip(b"\r")
        off += len(line) + 1


def _ints(tokens, off, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer token in {what}", off) from None


def from_dimacs(data) -> Graph:
    raw = _as_bytes(data)
    n = None
    edges = []
    for off, line in _lines_with_offsets(raw):
        toks = line.split()
        if not toks or toks[0] == b"c":
            continue
        if toks[0] == b"p":
            if n is not None:
                raise ParseError("second problem line", off)
            if len(toks) != 4 or toks[1] not in (b"edge", b"col"):
                raise ParseError("problem line must read 'p edge N M'", off)
            n, m = _ints(toks[2:], off, "problem line")
            if n < 0 or m < 0:
                raise ParseError("negative size in problem line", off)
        elif toks[0] == b"e":
            if n is None:
                raise ParseError("edge line before problem line", off)
            if len(toks) != 3:
                raise ParseError("edge line must read 'e U V'", off)
            u, v = _ints(toks[1:], off, "edge line")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge endpoint out of range 1..{n}", off)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {toks[0].decode(errors='replace')!r}", off)
    if n is None:
        raise ParseError("missing problem line", len(raw))
    return Graph.from_edges(n, edges)


def to_dimacs(g: Graph) -> bytes:
    lines = [f"p edge {g.n} {g.num_edges()}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return ("\n".join(lines) + "\n").encode("ascii")


# ------------------------------------------------------------------- edge list


def from_edge_list(data) -> Graph:
    """Whitespace edge list, 0-indexed, one ``u v`` pair per line.

    A line with a single integer declares a (possibly isolated) vertex;
    ``#`` starts a comment.
    """
    raw = _as_bytes(data)
    edges = []
    n = 0
    for off, line in _lines_with_offsets(raw):
        line = line.split(b"#", 1)[0]
        toks = line.split()
        if not toks:
            continue
        if len(toks) > 2:
            raise ParseError("expected 'u v' or a single vertex", off)
        vals = _ints(toks, off, "edge list")
        if min(vals) < 0:
            raise ParseError("negative vertex index", off)
        n = max(n, max(vals) + 1)
        if len(vals) == 2:
            edges.append(tuple(vals))
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> bytes:
    lines = [f"{u} {v}" for u, v in g.edges()]
    if g.n and (not lines or g.degree(g.n - 1) == 0):
        lines.append(str(g.n - 1))
    return ("\n".join(lines) + "\n").encode("ascii")


# ---------------------------------------------------------------- entry points


def sniff(data) -> str:
    """Guess the format of ``data``."""
    raw = _as_bytes(data).lstrip()
    if raw.startswith(_G6_HEADER):
        return "graph6"
    for line in raw.split(b"\n"):
        toks = line.split()
        if toks and toks[0] in (b"p", b"c", b"e"):
            return "dimacs_col"
    stripped = raw.strip()
    if stripped and b"\n" not in stripped and b" " not in stripped:
        if all(63 <= c <= 126 for c in stripped) and not stripped.isdigit():
            return "graph6"
    return "edge_list"


def parse(data, fmt: str | None = None) -> Graph:
    """Parse ``data`` (bytes or str) in the given format, sniffing if ``fmt`` is None."""
    fmt = fmt or sniff(data)
    if fmt == "graph6":
        return from_graph6(_as_bytes(data).strip())
    if fmt in ("dimacs", "dimacs_col"):
        return from_dimacs(data)
    if fmt == "edge_list":
        return from_edge_list(data)
    raise ValueError(f"unknown format {fmt!r}")


def serialize(g: Graph, fmt: str = "graph6") -> bytes:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt in ("dimacs", "dimacs_col"):
        return to_dimacs(g)
    if fmt == "edge_list":
        return to_edge_list(g)
    raise ValueError(f"unknown format {fmt!r}")
