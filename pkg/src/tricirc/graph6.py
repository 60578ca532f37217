"""Standard graph6 encoding and decoding for simple undirected graphs.

The format packs the upper triangle of the adjacency matrix, read column by
column, into 6-bit chunks offset by 63, after a size header N(n): one byte
n+63 for n <= 62, byte 126 plus three 6-bit bytes for n <= 258047, and two
bytes 126 plus six 6-bit bytes up to 2^36 - 1.
"""

from __future__ import annotations

from .graphs import SimpleGraph

_HEADER = b">>graph6<<"
_MAX_N = (1 << 36) - 1


class Graph6Error(ValueError):
    """Malformed graph6 data."""


def encode_graph6(g: SimpleGraph) -> bytes:
    """Encode a graph as a graph6 byte string (no trailing newline).

    Vertices are emitted in their construction order.
    """
    n = g.n
    if n > _MAX_N:
        raise ValueError(f"graph6 only supports n <= {_MAX_N}")
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        for shift in (12, 6, 0):
            out.append(((n >> shift) & 63) + 63)
    else:
        out.extend((126, 126))
        for shift in (30, 24, 18, 12, 6, 0):
            out.append(((n >> shift) & 63) + 63)
    bits = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    return bytes(out)


def _read_size(data: bytes) -> tuple[int, int]:
    """Parse the N(n) header; return (n, bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 data")
    if data[0] != 126:
        n = data[0] - 63
        if not 0 <= n <= 62:
            raise Graph6Error("malformed size header")
        return n, 1
    if len(data) >= 2 and data[1] == 126:
        chunk = data[2:8]
        if len(chunk) != 6:
            raise Graph6Error("truncated size header")
        n = 0
        for byte in chunk:
            if not 63 <= byte <= 126:
                raise Graph6Error("invalid byte in size header")
            n = (n << 6) | (byte - 63)
        if n <= 258047:
            raise Graph6Error("non-canonical size header")
        return n, 8
    chunk = data[1:4]
    if len(chunk) != 3:
        raise Graph6Error("truncated size header")
    n = 0
    for byte in chunk:
        if not 63 <= byte <= 126:
            raise Graph6Error("invalid byte in size header")
        n = (n << 6) | (byte - 63)
    if n <= 62:
        raise Graph6Error("non-canonical size header")
    return n, 4


def decode_graph6(blob) -> SimpleGraph:
    """Decode a graph6 byte or text string into a SimpleGraph.

    Validates the exact body length and that padding bits are zero. The
    optional ">>graph6<<" prefix and surrounding whitespace are accepted.
    """
    if isinstance(blob, str):
        blob = blob.encode("ascii", errors="replace")
    data = blob.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):].lstrip()
    n, used = _read_size(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"body length {len(body)} does not match n={n}"
        )
    edges = []
    for byte in body:
        if not 63 <= byte <= 126:
            raise Graph6Error("invalid byte in graph6 body")
    # Column-major upper triangle: bit index t covers pair (i, j).
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    for t, (i, j) in enumerate(pairs):
        byte = body[t // 6] - 63
        if (byte >> (5 - t % 6)) & 1:
            edges.append((i, j))
    if nbits:
        pad = body[-1] - 63
        extra = expected * 6 - nbits
        if extra and pad & ((1 << extra) - 1):
            raise Graph6Error("nonzero padding bits")
    return SimpleGraph(n, edges)
