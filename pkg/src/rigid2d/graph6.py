"""graph6 encoding and decoding.

The format stores the vertex count (one byte for n <= 62, four bytes up
to 258047, eight above) followed by the upper triangle of the adjacency
matrix read column by column, packed into 6-bit groups offset by 63.
All data bytes therefore lie in the printable range 63..126.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

_HEADER = ">>graph6<<"
_MAX_SHORT = 62
_MAX_MEDIUM = 258047


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` prefix is allowed)."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ascii character", exc.start) from None
    if not data:
        raise Graph6Error("empty input", 0)
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside graph6 range 63..126", off)
    n, pos = _decode_order(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated bit vector: need {nbytes} bytes for n={n}, found {len(body)}",
            pos + len(body),
        )
    if len(body) > nbytes:
        raise Graph6Error("unexpected trailing bytes", pos + nbytes)
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6] - 63
            if byte >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    for k in range(bit, nbytes * 6):
        if (body[k // 6] - 63) >> (5 - k % 6) & 1:
            raise Graph6Error("nonzero padding bits", pos + k // 6)
    return Graph(n, edges)


def _decode_order(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte vertex count", len(data))
        n = _from_groups(data[1:4])
        return n, 4
    if len(data) < 8:
        raise Graph6Error("truncated 8-byte vertex count", len(data))
    n = _from_groups(data[2:8])
    return n, 8


def _from_groups(groups: bytes) -> int:
    n = 0
    for b in groups:
        n = (n << 6) | (b - 63)
    return n


def to_graph6(g: Graph) -> str:
    """Encode with minimal padding and no vertex reordering.

    Requires at least one vertex; inverse of :func:`from_graph6` on its
    own output.
    """
    n = g.n
    if n < 1:
        raise ValueError("graph6 encoding requires at least one vertex")
    out = bytearray(_encode_order(n))
    bits = 0
    acc = 0
    for j in range(1, n):
        row = g.neighbor_set(j)
        for i in range(j):
            acc = (acc << 1) | (1 if i in row else 0)
            bits += 1
            if bits == 6:
                out.append(acc + 63)
                acc = bits = 0
    if bits:
        out.append((acc << (6 - bits)) + 63)
    return out.decode("ascii")


def _encode_order(n: int) -> bytes:
    if n <= _MAX_SHORT:
        return bytes([n + 63])
    if n <= _MAX_MEDIUM:
        return bytes([126]) + _to_groups(n, 3)
    if n < 1 << 36:
        return bytes([126, 126]) + _to_groups(n, 6)
    raise ValueError(f"n={n} exceeds the graph6 limit of 2^36 - 1")


def _to_groups(n: int, width: int) -> bytes:
    return bytes(((n >> (6 * k)) & 63) + 63 for k in reversed(range(width)))
