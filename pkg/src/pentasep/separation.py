"""Pentagon separation: face distances measured in the dual graph.

The separation of a fullerene is the least dual-graph distance between two of
its 12 pentagon faces; distances are unweighted hop counts and hexagon faces
count as interior path nodes.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .planegraph import Fullerene, dual_adjacency


@dataclass(frozen=True)
class SeparationReport:
    separation: int
    pair_distances: tuple[tuple[int, ...], ...]
    argmin_pair: tuple[int, int]


def _bfs_distances(adj, source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist


def face_distance_matrix(f: Fullerene) -> tuple[tuple[int, ...], ...]:
    """12x12 matrix of dual distances between the pentagon faces (12 BFS runs)."""
    adj = dual_adjacency(f)
    pents = f.pentagon_faces
    rows = []
    for p in pents:
        dist = _bfs_distances(adj, p)
        rows.append(tuple(dist[q] for q in pents))
    return tuple(rows)


def pentagon_separation(f: Fullerene) -> SeparationReport:
    """Minimum pairwise pentagon face-distance, with the realizing pair."""
    m = face_distance_matrix(f)
    best = None
    argmin = (0, 1)
    for i in range(12):
        for j in range(i + 1, 12):
            if best is None or m[i][j] < best:
                best = m[i][j]
                argmin = (i, j)
    return SeparationReport(best, m, argmin)


def is_ipr(f: Fullerene) -> bool:
    """No two pentagons share an edge, i.e. separation >= 2."""
    return pentagon_separation(f).separation >= 2


def separation_histogram(fullerenes: Iterable[Fullerene]) -> dict[int, int]:
    """Counts of exact separation values over a stream of fullerenes."""
    hist: Counter[int] = Counter()
    for f in fullerenes:
        hist[pentagon_separation(f).separation] += 1
    return dict(hist)


def cumulative_counts(hist: Mapping[int, int], thresholds: Iterable[int]) -> dict[int, int]:
    """Counts with separation >= t for each threshold t (suffix sums)."""
    return {t: sum(c for d, c in hist.items() if d >= t) for t in thresholds}
