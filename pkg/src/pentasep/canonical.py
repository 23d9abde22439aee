"""Face-spiral canonical codes and isomorphism checks.

The canonical form of a fullerene is its lexicographically minimal face spiral:
faces are peeled off one at a time, each new face sharing an edge with its
predecessor and with the earliest face of the spiral that still has an uncovered
edge.  The code records the face count and the 12 pentagon positions (1-based)
of the minimal spiral.  In mirror-identified mode the minimum runs over both
orientations, matching the counting convention where mirror images coincide.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterable, Literal, Optional

from .errors import NoSpiral
from .planegraph import Fullerene, dual_adjacency, plane_dual
from .windup import WindupEngine, spiral_unwind

ChiralityMode = Literal["mirror-identified", "chirality-sensitive"]

MIRROR_IDENTIFIED: ChiralityMode = "mirror-identified"
CHIRALITY_SENSITIVE: ChiralityMode = "chirality-sensitive"


@dataclass(frozen=True, order=True)
class CanonicalForm:
    code: bytes
    chirality_mode: str

    @property
    def face_count(self) -> int:
        return struct.unpack(">H", self.code[:2])[0]

    @property
    def pentagon_positions(self) -> tuple[int, ...]:
        return struct.unpack(">12H", self.code[2:])


def pack_code(face_count: int, pentagon_positions: Iterable[int]) -> bytes:
    return struct.pack(">H", face_count) + struct.pack(">12H", *pentagon_positions)


def _all_starts(adj, oriented_rotation=None):
    """Spiral start triples.

    With a rotation table, only positively oriented triples are produced
    (chirality-sensitive); without one, both triangles of every directed edge
    (covers both orientations, hence mirror-identified).
    """
    starts = []
    if oriented_rotation is not None:
        for b, nbrs in enumerate(oriented_rotation):
            deg = len(nbrs)
            for i, a in enumerate(nbrs):
                c = nbrs[(i + 1) % deg]
                starts.append((a, b, c))
    else:
        nbr_sets = [set(x) for x in adj]
        for a in range(len(adj)):
            for b in adj[a]:
                for c in adj[b]:
                    if c != a and c in nbr_sets[a]:
                        starts.append((a, b, c))
    return starts


def minimal_spiral_sizes(adj, sizes, starts) -> Optional[tuple[int, ...]]:
    """Lexicographically minimal face-size sequence over the given starts."""
    nbr_sets = [frozenset(x) for x in adj]
    best = None
    eng = WindupEngine(len(adj))
    for a, b, c in starts:
        order = spiral_unwind(adj, nbr_sets, sizes, a, b, c, best=best, eng=eng)
        if order is None:
            continue
        seq = tuple(sizes[v] for v in order)
        if best is None or seq < best:
            best = seq
    return best


def spiral_pentagon_positions(sizes_seq) -> tuple[int, ...]:
    return tuple(i + 1 for i, s in enumerate(sizes_seq) if s == 5)


def canonical_code(f: Fullerene, mode: ChiralityMode = MIRROR_IDENTIFIED) -> CanonicalForm:
    """Canonical form of a fullerene; raises NoSpiral if no face spiral exists."""
    adj = dual_adjacency(f)
    sizes = [fc.size for fc in f.faces]
    if mode == CHIRALITY_SENSITIVE:
        rot = plane_dual(f.graph).rotation
        starts = _all_starts(adj, oriented_rotation=rot)
    elif mode == MIRROR_IDENTIFIED:
        starts = _all_starts(adj)
    else:
        raise ValueError(f"unknown chirality mode {mode!r}")
    best = minimal_spiral_sizes(adj, sizes, starts)
    if best is None:
        raise NoSpiral(f"no face spiral on {f.vertex_count} vertices")
    return CanonicalForm(pack_code(len(adj), spiral_pentagon_positions(best)), mode)


def are_isomorphic(f1: Fullerene, f2: Fullerene, mode: ChiralityMode = MIRROR_IDENTIFIED) -> bool:
    """Isomorphism (optionally identifying mirror images) via canonical codes."""
    if f1.vertex_count != f2.vertex_count:
        return False
    return canonical_code(f1, mode).code == canonical_code(f2, mode).code
