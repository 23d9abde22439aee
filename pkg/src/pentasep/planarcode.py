"""Bit-exact planar_code I/O and the human-readable adjacency text format.

A planar_code stream is the ASCII header ">>planar_code<<" followed by one
record per graph: the vertex count, then for each vertex its neighbors
(1-based) in rotation order, each list terminated by 0.  Entries are single
bytes while the vertex count fits in one; larger graphs switch the whole
record to the 0-prefixed 2-byte little-endian form.  Writing then reading is
byte-identical because the rotation system is stored verbatim.
"""
from __future__ import annotations

from typing import BinaryIO, Iterable, Iterator

from .errors import BadHeader, InvalidNeighborIndex, TruncatedRecord
from .planegraph import PlaneGraph, build_from_rotation

HEADER = b">>planar_code<<"


def write_planar_code(graphs: Iterable[PlaneGraph], out: BinaryIO) -> None:
    """Write the header and one record per graph, in input order."""
    out.write(HEADER)
    for g in graphs:
        out.write(encode_record(g))


def encode_record(g: PlaneGraph) -> bytes:
    n = g.vertex_count
    if n <= 255:
        rec = bytearray([n])
        for nbrs in g.rotation:
            rec.extend(u + 1 for u in nbrs)
            rec.append(0)
        return bytes(rec)
    rec = bytearray([0])
    rec += n.to_bytes(2, "little")
    for nbrs in g.rotation:
        for u in nbrs:
            rec += (u + 1).to_bytes(2, "little")
        rec += b"\x00\x00"
    return bytes(rec)


def read_planar_code(stream: BinaryIO) -> Iterator[PlaneGraph]:
    """Yield the validated plane graphs of a planar_code stream."""
    head = stream.read(len(HEADER))
    if head != HEADER:
        raise BadHeader(f"expected {HEADER!r}, got {head!r}")
    while True:
        first = stream.read(1)
        if not first:
            return
        if first[0] != 0:
            n = first[0]
            yield _read_record(stream, n, 1)
        else:
            raw = stream.read(2)
            if len(raw) != 2:
                raise TruncatedRecord("record ends inside the vertex count")
            n = int.from_bytes(raw, "little")
            yield _read_record(stream, n, 2)


def _read_record(stream: BinaryIO, n: int, width: int) -> PlaneGraph:
    rotation = []
    for v in range(n):
        nbrs = []
        while True:
            raw = stream.read(width)
            if len(raw) != width:
                raise TruncatedRecord(f"record ends inside vertex {v}")
            e = int.from_bytes(raw, "little")
            if e == 0:
                break
            if e > n:
                raise InvalidNeighborIndex(f"neighbor {e} of vertex {v} > {n}")
            nbrs.append(e - 1)
        rotation.append(tuple(nbrs))
    return build_from_rotation(rotation)


def write_text(graphs: Iterable[PlaneGraph]) -> str:
    """One block per graph, one `index: n1 n2 ...` line per vertex."""
    blocks = []
    for g in graphs:
        lines = [f"{v}: " + " ".join(str(u) for u in nbrs)
                 for v, nbrs in enumerate(g.rotation)]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def read_text(text: str) -> Iterator[PlaneGraph]:
    """Parse the block format produced by write_text."""
    for block in text.split("\n\n"):
        block = block.strip()
        if not block:
            continue
        rows = {}
        for line in block.splitlines():
            left, _, right = line.partition(":")
            rows[int(left)] = tuple(int(x) for x in right.split())
        rotation = [rows[v] for v in range(len(rows))]
        yield build_from_rotation(rotation)
