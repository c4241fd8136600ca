"""graph6 encoding and decoding.

The format: an order header (one byte ``n + 63`` for ``n < 63``, ``~`` plus
three bytes up to 258047, ``~~`` plus six bytes beyond), followed by the
upper triangle of the adjacency matrix in column-major order
``x(0,1), x(0,2), x(1,2), x(0,3), ...``, zero-padded to a multiple of six
bits, six bits per byte, each byte offset by 63.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error(f"order {n} too large for graph6")


def _decode_sextets(data: str) -> list[int]:
    out = []
    for ch in data:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {ch!r} outside the printable graph6 range")
        out.append(c - 63)
    return out


def to_graph6(g: Graph) -> str:
    n = g.order
    bits = [1 if i in g.adjacency[j] else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        body.append(chr(value + 63))
    return _encode_order(n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` prefix is accepted."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    values = _decode_sextets(s)

    if values[0] != 63:
        n, body = values[0], values[1:]
    elif len(values) >= 2 and values[1] == 63:
        if len(values) < 8:
            raise Graph6Error("truncated 8-byte order header")
        n = 0
        for v in values[2:8]:
            n = (n << 6) | v
        body = values[8:]
    else:
        if len(values) < 4:
            raise Graph6Error("truncated 4-byte order header")
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        body = values[4:]

    if n < 1:
        raise Graph6Error("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for order {n}, got {len(body)}")

    adj: list[set[int]] = [set() for _ in range(n)]
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (body[pos // 6] >> (5 - pos % 6)) & 1:
                adj[i].add(j)
                adj[j].add(i)
            pos += 1
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(frozenset(a) for a in adj))
