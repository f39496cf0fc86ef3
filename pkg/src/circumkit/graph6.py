"""graph6 encoding and decoding (the undirected, simple-graph variant only).

Layout: ``N(n)`` followed by the upper triangle of the adjacency matrix read
column by column (``(0,1), (0,2), (1,2), (0,3), ...``), packed six bits per
printable byte with an offset of 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_order(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _decode_order(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated order field")
        chunk, rest = data[2:8], data[8:]
    else:
        if len(data) < 4:
            raise Graph6Error("truncated order field")
        chunk, rest = data[1:4], data[4:]
    n = 0
    for c in chunk:
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid byte {c!r} in order field")
        n = (n << 6) | (c - 63)
    return n, rest


def encode(g: Graph, header: bool = False) -> str:
    out = bytearray(_encode_order(g.n))
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    text = out.decode("ascii")
    return HEADER + text if header else text


def decode(text: str | bytes) -> Graph:
    if isinstance(text, str):
        try:
            text = text.encode("ascii")
        except UnicodeEncodeError:
            raise Graph6Error("graph6 is printable ASCII") from None
    data = text.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if data[:1] in (b":", b";", b"&"):
        raise Graph6Error("sparse6/digraph6 input is not supported")
    n, body = _decode_order(data)
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    vals = []
    for c in body:
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid byte {c!r}")
        vals.append(c - 63)
    for j in range(1, n):
        for i in range(j):
            if vals[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = len(vals) * 6 - k
    if pad and vals[-1] & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    return Graph._trusted(n, rows)


def read_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield decode(line)


def read_file(path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(read_lines(fh))
