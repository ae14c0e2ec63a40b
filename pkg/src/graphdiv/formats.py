"""graph6, DIMACS ``.col`` and plain edge-list readers and writers."""

from __future__ import annotations

from .graph import Graph, from_edge_list

HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def encode_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != nchars:
        raise GraphFormatError(f"expected {nchars} data characters for n={n}, got {len(body)}")
    pad = nchars * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if n is not None:
                    raise GraphFormatError(f"line {lineno}: duplicate problem line")
                if len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise GraphFormatError(f"line {lineno}: expected 'p edge n m'")
                n = int(parts[2])
            elif parts[0] == "e":
                if n is None:
                    raise GraphFormatError(f"line {lineno}: edge before problem line")
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise GraphFormatError(f"line {lineno}: unknown record {parts[0]!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphFormatError("missing problem line")
    try:
        return from_edge_list(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def encode_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines()]
    rows = [r for r in rows if r and not r[0].startswith("#")]
    if not rows:
        raise GraphFormatError("empty edge list")
    try:
        n = int(rows[0][0])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
        return from_edge_list(n, edges)
    except (ValueError, IndexError) as exc:
        raise GraphFormatError(f"bad edge list: {exc}") from None


def encode_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


FORMATS = {
    "g6": (parse_graph6, lambda g: encode_graph6(g) + "\n"),
    "dimacs": (parse_dimacs, encode_dimacs),
    "edges": (parse_edge_list, encode_edge_list),
}


def read_graphs(text: str, fmt: str = "g6") -> list[Graph]:
    """Parse ``text``; graph6 holds one graph per non-blank line, the others one graph."""
    if fmt == "g6":
        graphs = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if line.strip():
                try:
                    graphs.append(parse_graph6(line))
                except GraphFormatError as exc:
                    raise GraphFormatError(f"line {lineno}: {exc}") from None
        return graphs
    if fmt not in FORMATS:
        raise GraphFormatError(f"unknown format {fmt!r}")
    return [FORMATS[fmt][0](text)]


def write_graph(g: Graph, fmt: str = "g6") -> str:
    return FORMATS[fmt][1](g)
