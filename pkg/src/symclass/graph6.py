"""graph6 codec (McKay's format).

A graph is one line of printable ASCII: N(n) encodes the vertex count, then
the upper triangle of the adjacency matrix in column order, packed six bits
per byte, every byte offset by 63. This implementation caps n at 258047
(one- and four-byte size headers).
"""

from __future__ import annotations

from .errors import Graph6Error
from .graphs import Graph

_MAX_N = 258047


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    if g.n > _MAX_N:
        raise Graph6Error(f"vertex count {g.n} exceeds the supported cap {_MAX_N}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    chars = []
    for pos in range(0, len(bits), 6):
        chunk = bits[pos:pos + 6]
        chunk += [0] * (6 - len(chunk))
        value = 0
        for bit in chunk:
            value = (value << 1) | bit
        chars.append(chr(value + 63))
    return _encode_size(g.n) + "".join(chars)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    data = []
    for pos, ch in enumerate(s):
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise Graph6Error(f"invalid graph6 byte {ch!r} at position {pos}")
        data.append(value)
    if data[0] == 63:  # '~' prefix: 18-bit size
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size header")
        if data[1] == 63:
            raise Graph6Error(f"vertex counts above {_MAX_N} are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
        body_start = 4
    else:
        n = data[0]
        body = data[1:]
        body_start = 1
    if n > _MAX_N:
        raise Graph6Error(f"vertex count {n} exceeds the supported cap {_MAX_N}")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"body has {len(body)} bytes, expected {expected} for {n} vertices")
    bits = []
    for value in body:
        for shift in range(5, -1, -1):
            bits.append((value >> shift) & 1)
    if any(bits[nbits:]):
        bad = nbits // 6 + body_start
        raise Graph6Error(f"nonzero padding bits in byte at position {bad}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, edges)


def decode_graph6_lines(text: str) -> list[Graph]:
    """Decode a newline-separated stream of graph6 strings."""
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(decode_graph6(line))
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
    return graphs
