"""Text formats: graph6, plain edge lists, DIMACS CNF, certificate / role-map JSON."""
import json

from .exceptions import GraphFormatError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
_BIAS = 63


def _size_bytes(n):
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"graph6 cannot encode n={n}")


def emit_graph6(g, header=False):
    """Encode ``g`` as a graph6 string (no trailing newline)."""
    out = [b + _BIAS for b in _size_bytes(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.bits[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + _BIAS)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + _BIAS)
    text = bytes(out).decode("ascii")
    return GRAPH6_HEADER + text if header else text


def parse_graph6(text):
    """Decode one graph6 string; an optional ``>>graph6<<`` header is skipped."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.rstrip("\r\n")
    start = len(GRAPH6_HEADER) if text.startswith(GRAPH6_HEADER) else 0
    data = text[start:]
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ch!r} outside graph6 range 63..126", start + k)
    if not data:
        raise GraphFormatError("empty graph6 string", start)
    vals = [ord(ch) - _BIAS for ch in data]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated 8-byte size header", start + len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated 4-byte size header", start + len(vals))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = vals[pos:]
    if len(payload) < need:
        raise GraphFormatError(
            f"truncated bit stream: {need} data bytes needed, {len(payload)} present", start + len(vals)
        )
    if len(payload) > need:
        raise GraphFormatError("trailing bytes after graph6 payload", start + pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if payload[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need and nbits % 6:
        pad = payload[-1] & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise GraphFormatError("non-zero padding bits", start + pos + need - 1)
    return Graph(n, edges)


def read_graph6_file(path):
    graphs = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(parse_graph6(line))
    return graphs


def write_graph6_file(path, graphs):
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + "\n")


def parse_edge_list(text):
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based); ``#`` starts a comment."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not rows:
        raise GraphFormatError("empty edge list")
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head.split())
    except ValueError:
        raise GraphFormatError(f"bad header {head!r}, expected 'n m'", lineno) from None
    edges = []
    for lineno, ln in rows[1:]:
        try:
            u, v = (int(x) for x in ln.split())
        except ValueError:
            raise GraphFormatError(f"bad edge line {ln!r}", lineno) from None
        edges.append((u, v))
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def emit_edge_list(g):
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path):
    """Load a single graph from a graph6 file or an edge-list file (sniffed)."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.strip()
    first = stripped.splitlines()[0].strip() if stripped else ""
    if first and (first.startswith(GRAPH6_HEADER) or len(first.split()) == 1):
        return parse_graph6(first)
    return parse_edge_list(text)


def certificate_to_json(cert):
    return {
        "d": cert.d,
        "red": sorted(cert.red),
        "blue": sorted(cert.blue),
        "cut_edges": [list(e) for e in cert.cut_edges],
    }


def certificate_from_json(obj):
    from .colouring import DCutCertificate

    try:
        return DCutCertificate(
            red=frozenset(obj["red"]),
            blue=frozenset(obj["blue"]),
            cut_edges=tuple(tuple(sorted(e)) for e in obj["cut_edges"]),
            d=int(obj["d"]),
        )
    except (KeyError, TypeError) as exc:
        raise GraphFormatError(f"malformed certificate JSON: {exc}") from None


def edge_colouring_to_json(ec):
    return {f"{u}-{v}": colour for (u, v), colour in sorted(ec.items())}


def edge_colouring_from_json(obj):
    out = {}
    for key, colour in obj.items():
        u, v = (int(x) for x in key.split("-"))
        out[(min(u, v), max(u, v))] = colour
    return out


def dump_json(obj, path):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def load_json(path):
    with open(path) as fh:
        return json.load(fh)
