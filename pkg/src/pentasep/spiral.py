"""Face-spiral windup, unwind and exhaustive isomer generation.

Generation walks the tree of pentagon-position choices depth-first while
winding the spiral incrementally in the dual (a growing triangulated disk);
a prefix is abandoned at its first illegal attachment.  A completed windup is
kept only if its code equals its own canonical (mirror-identified) spiral, so
every isomorphism class is emitted exactly once.  The declared completeness
bound is 378 vertices: the first fullerene without a face spiral has 380, and
larger inputs are refused rather than silently undercounted.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from collections import deque
from typing import Iterator, Optional, Sequence

from .canonical import MIRROR_IDENTIFIED, canonical_code
from .errors import UnsupportedN, WindupFailure
from .planegraph import Fullerene, build_from_rotation, plane_dual, validate_fullerene
from .windup import WindupEngine, spiral_unwind

GENERATION_BOUND = 378


@dataclass(frozen=True)
class SpiralCode:
    """Face count and the 12 pentagon positions (1-based) of a face spiral."""

    face_count: int
    pentagon_positions: tuple[int, ...]

    def __post_init__(self):
        pp = self.pentagon_positions
        if len(pp) != 12 or list(pp) != sorted(set(pp)):
            raise ValueError("need 12 strictly increasing pentagon positions")
        if pp[0] < 1 or pp[-1] > self.face_count:
            raise ValueError("pentagon positions out of range")

    @property
    def sizes(self) -> tuple[int, ...]:
        pents = set(self.pentagon_positions)
        return tuple(5 if i + 1 in pents else 6 for i in range(self.face_count))


def _dual_separation(nbrs, pentagons) -> int:
    """Minimum pairwise BFS distance among pentagon dual vertices."""
    best = None
    pent_set = set(pentagons)
    for src in pentagons:
        dist = {src: 0}
        q = deque([src])
        while q:
            v = q.popleft()
            d = dist[v] + 1
            if best is not None and d > best:
                break
            for u in nbrs[v]:
                if u not in dist:
                    dist[u] = d
                    if u in pent_set and u > src:
                        if best is None or d < best:
                            best = d
                    q.append(u)
    return best


def _is_self_canonical(adj, sizes) -> bool:
    """True iff the identity spiral is the minimal one over all starts."""
    candidate = tuple(sizes)
    nbr_sets = [frozenset(x) for x in adj]
    eng = WindupEngine(len(adj))
    for a in range(len(adj)):
        if sizes[a] > candidate[0]:
            continue
        for b in adj[a]:
            for c in adj[b]:
                if c == a or c not in nbr_sets[a]:
                    continue
                order = spiral_unwind(adj, nbr_sets, sizes, a, b, c,
                                      best=candidate, eng=eng, stop_below=True)
                if order is not None:
                    seq = tuple(sizes[v] for v in order)
                    if seq < candidate:
                        return False
    return True


def _search_partition(nf: int, p1: int, p2: int, memo: Optional[dict] = None,
                      forbid_adjacent_pentagons: bool = False):
    """All self-canonical windable codes whose first two pentagons sit at
    positions p1 < p2 (1-based).  Returns (pentagon_positions, nbr_lists).

    With forbid_adjacent_pentagons, any push whose new edges join two
    pentagons is rejected.  This is sound for IPR-restricted counting: every
    edge the engine adds (attachment or zip) is an edge of the finished dual,
    so a rejected branch can only wind fullerenes with adjacent pentagons.

    Subtree results are memoized on the engine state: windability from a
    state depends only on faces remaining, pentagons remaining, the free
    valences along the boundary, and the chords among boundary faces.  A
    memo entry lists every closing size-suffix from that state (empty if the
    state is dead), so repeated states replay completions directly instead
    of re-exploring; entries are shared across partitions of the same nf.
    """
    if memo is None:
        memo = {}
    eng = WindupEngine(nf)
    target, deg, adj = eng.target, eng.deg, eng.adj
    seq = bytearray()
    out: list[tuple[tuple[int, ...], list[list[int]]]] = []
    recorders: list[tuple[int, list]] = []

    bpos = [0] * nf      # scratch: boundary index of each face

    if forbid_adjacent_pentagons:
        def push(s):
            if not eng.push_face(s):
                return False
            for u, v in eng.journal[-1][0]:
                if target[u] == 5 and target[v] == 5:
                    eng.pop_face()
                    return False
            return True
    else:
        push = eng.push_face

    def state_key(pents):
        b = eng.boundary
        n = len(b)
        acc = (((nf - eng.k) << 4 | pents) << 5) | n
        bmask = 0
        if forbid_adjacent_pentagons:
            # pentagon-ness of boundary faces changes which pushes are legal
            for i, v in enumerate(b):
                acc = (acc << 4) | ((target[v] == 5) << 3) | (target[v] - deg[v])
                bmask |= 1 << v
                bpos[v] = i
        else:
            for i, v in enumerate(b):
                acc = (acc << 3) | (target[v] - deg[v])
                bmask |= 1 << v
                bpos[v] = i
        # chords: adjacencies among boundary faces beyond the boundary cycle
        for i in range(n - 2):
            row = adj[b[i]] & bmask
            while row:
                low = row & -row
                row -= low
                j = bpos[low.bit_length() - 1]
                if j > i + 1 and (i or j < n - 1):
                    acc = acc * 1021 + (i << 5 | j)
        return acc

    def on_closure():
        sizes = list(target)
        adjl = eng.neighbor_lists()
        if _is_self_canonical(adjl, sizes):
            out.append((tuple(i + 1 for i, s in enumerate(sizes) if s == 5), adjl))
        for si, lst in recorders:
            lst.append(bytes(seq[si:]))

    def rec(idx, pents):
        if idx == nf:
            if pents == 12 and eng.closed():
                on_closure()
            return
        if pents < 2:
            expand(idx, pents)
            return
        key = state_key(pents)
        entry = memo.get(key)
        if entry is not None:
            for suf in entry:
                npush = 0
                ok = True
                for s in suf:
                    if not push(s):
                        ok = False
                        break
                    seq.append(s)
                    npush += 1
                if ok and eng.closed():
                    on_closure()
                for _ in range(npush):
                    eng.pop_face()
                    seq.pop()
            return
        lst: list[bytes] = []
        recorders.append((idx, lst))
        expand(idx, pents)
        recorders.pop()
        if len(memo) < _MEMO_CAP:
            memo[key] = tuple(lst)

    def expand(idx, pents):
        pos = idx + 1
        rem_after = nf - idx - 1
        if pents < 12:
            forced_hex = (pents == 0 and pos != p1) or (pents == 1 and pos != p2)
            if not forced_hex and push(5):
                seq.append(5)
                rec(idx + 1, pents + 1)
                seq.pop()
                eng.pop_face()
        if rem_after >= 12 - pents:
            forced_pent = (pents == 0 and pos == p1) or (pents == 1 and pos == p2)
            if not forced_pent and push(6):
                seq.append(6)
                rec(idx + 1, pents)
                seq.pop()
                eng.pop_face()

    rec(0, 0)
    return out


_MEMO_CAP = 4_000_000


def _check_n(n: int):
    if n % 2 != 0 or n < 20 or n > GENERATION_BOUND:
        raise UnsupportedN(f"n must be even, 20 <= n <= {GENERATION_BOUND}; got {n}")


def _partitions(nf: int):
    for p1 in range(1, nf - 10):
        for p2 in range(p1 + 1, nf - 9):
            yield p1, p2


_worker_memo: dict = {}
_worker_memo_nf: Optional[int] = None


def _partition_worker(args):
    global _worker_memo, _worker_memo_nf
    nf, p1, p2, min_separation = args
    prune = min_separation >= 2
    if _worker_memo_nf != (nf, prune):
        _worker_memo = {}
        _worker_memo_nf = (nf, prune)
    rows = []
    for positions, adj in _search_partition(nf, p1, p2, memo=_worker_memo,
                                            forbid_adjacent_pentagons=prune):
        sep = _dual_separation(adj, [i for i, d in enumerate(map(len, adj)) if d == 5])
        if sep >= min_separation:
            rows.append((positions, sep))
    return rows


def search_codes(n: int, min_separation: int = 1, workers: Optional[int] = None
                 ) -> list[tuple[tuple[int, ...], int]]:
    """All canonical spiral codes on n vertices with separation >= threshold.

    Returns (pentagon_positions, separation) pairs sorted by code.  The search
    tree partitions by the first two pentagon positions; partitions are
    independent, so results merge identically for any worker count.
    """
    _check_n(n)
    nf = n // 2 + 2
    tasks = [(nf, p1, p2, min_separation) for p1, p2 in _partitions(nf)]
    if workers is None:
        workers = 1
    rows: list[tuple[tuple[int, ...], int]] = []
    if workers > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            for part in pool.imap_unordered(_partition_worker, tasks, chunksize=8):
                rows.extend(part)
    else:
        for task in tasks:
            rows.extend(_partition_worker(task))
    rows.sort()
    return rows


def default_workers() -> int:
    """Worker count from PENTASEP_WORKERS, defaulting to the CPU count."""
    env = os.environ.get("PENTASEP_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _fullerene_from_dual_adjacency(nbrs) -> Fullerene:
    """Embed a dual triangulation and dualize back to the fullerene."""
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(range(len(nbrs)))
    for v, around in enumerate(nbrs):
        for u in around:
            g.add_edge(v, u)
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise WindupFailure(len(nbrs), "wound adjacency is not planar")
    rotation = [tuple(emb.neighbors_cw_order(v)) for v in range(len(nbrs))]
    triangulation = build_from_rotation(rotation)
    return validate_fullerene(plane_dual(triangulation))


def windup(code: SpiralCode) -> Fullerene:
    """Wind a spiral code into a fullerene; raises WindupFailure if it jams."""
    eng = WindupEngine(code.face_count)
    for i, s in enumerate(code.sizes):
        if not eng.push_face(s):
            raise WindupFailure(i + 1)
    if not eng.closed():
        raise WindupFailure(code.face_count, "spiral did not close")
    return _fullerene_from_dual_adjacency(eng.neighbor_lists())


def unwind(f: Fullerene) -> SpiralCode:
    """Canonical (mirror-identified, minimal) spiral code of a fullerene."""
    form = canonical_code(f, MIRROR_IDENTIFIED)
    return SpiralCode(form.face_count, form.pentagon_positions)


def generate(n: int, min_separation: int = 1, workers: Optional[int] = None
             ) -> Iterator[Fullerene]:
    """One representative per mirror-identified isomorphism class on n
    vertices with pentagon separation >= min_separation, ascending by code."""
    for positions, _sep in search_codes(n, min_separation, workers=workers):
        yield windup(SpiralCode(n // 2 + 2, positions))


def count_table(n_range: Sequence[int], separation_thresholds: Sequence[int] = (2, 3, 4, 5),
                workers: Optional[int] = None) -> list[tuple[int, ...]]:
    """One row per n: (nv, nf, total, count sep >= t for each threshold)."""
    rows = []
    for n in n_range:
        codes = search_codes(n, 1, workers=workers)
        seps = [s for _, s in codes]
        row = [n, n // 2 + 2, len(seps)]
        for t in separation_thresholds:
            row.append(sum(1 for s in seps if s >= t))
        rows.append(tuple(row))
    return rows
