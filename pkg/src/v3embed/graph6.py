"""graph6 encoding and decoding.

Levi graphs travel without colour information; the receiver splits the
vertex range at ``n // 2`` (points first).
"""
from __future__ import annotations

from .core import Graph, LeviGraph


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode(g: Graph, header: bool = False) -> str:
    """graph6 string (no trailing newline) for ``g``."""
    n = g.n
    bits = []
    for j in range(1, n):
        nb = set(g.adj[j])
        for i in range(j):
            bits.append(1 if i in nb else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)
    )
    out = _encode_n(n) + body
    return (">>graph6<<" if header else "") + out.decode("ascii")


def decode(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [c - 63 for c in s.encode("ascii")]
    if any(x < 0 or x > 63 for x in data):
        raise ValueError("not a graph6 string")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        body = data[8:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for x in body:
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    edges, k = [], 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def decode_levi(s: str) -> LeviGraph:
    g = decode(s)
    if g.n % 2:
        raise ValueError("Levi graph must have an even number of vertices")
    lg = LeviGraph(g.n, g.adj, g.n // 2)
    for a, b in lg.edges():
        if (a < lg.v) == (b < lg.v):
            raise ValueError("vertex split at n/2 is not a bipartition")
    return lg
