"""Spiral windup engine and engine-verified spiral unwinding.

The engine grows a triangulated disk in the dual, one face per step: the new
face joins the newest and the earliest still-open boundary faces, and boundary
faces whose degree is complete are zipped away (their cycle neighbours become
adjacent), which is forced.  Every mutation is journalled so a depth-first
search can push and pop faces cheaply.

Unwinding runs the same engine against an existing graph: a face order counts
as a spiral only if the engine can rebuild the graph edge for edge along it.
That makes windup and unwind exact inverses, so canonical codes are minimal
over precisely the realizable spirals.
"""
from __future__ import annotations

from typing import Optional


class WindupEngine:
    """Incremental spiral windup in the dual, with an undo journal."""

    __slots__ = ("nf", "target", "deg", "adj", "boundary", "journal", "k")

    def __init__(self, nf: int):
        self.nf = nf
        self.target = [0] * nf
        self.deg = [0] * nf
        self.adj = [0] * nf          # bitmask adjacency
        self.boundary: list[int] = []
        self.journal: list[tuple] = []
        self.k = 0                   # faces placed

    def _rollback(self, edges, removals, appended):
        # zip removals happened after the append, so undo them first: the
        # appended face may itself have been zipped away
        b = self.boundary
        adj, deg = self.adj, self.deg
        for v, i in reversed(removals):
            b.insert(i, v)
        if appended:
            b.pop()
        for u, v in reversed(edges):
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            deg[u] -= 1
            deg[v] -= 1
        self.target[self.k] = 0

    def push_face(self, size: int) -> bool:
        """Attach the next face; on failure the state is left unchanged."""
        k = self.k
        b = self.boundary
        adj, deg, target = self.adj, self.deg, self.target
        target[k] = size

        if k == 0:
            b.append(0)
            self.journal.append(((), (), True))
            self.k = 1
            return True
        if k == 1:
            adj[0] |= 2
            adj[1] |= 1
            deg[0] = deg[1] = 1
            b.append(1)
            self.journal.append((((0, 1),), (), True))
            self.k = 2
            return True

        if k == self.nf - 1:
            # final face closes the sphere: it must join every boundary face,
            # each of which must have exactly one uncovered edge left
            if len(b) != size or any(target[v] - deg[v] != 1 for v in b):
                target[k] = 0
                return False
            kbit = 1 << k
            edges = []
            for v in b:
                adj[k] |= 1 << v
                adj[v] |= kbit
                deg[v] += 1
                edges.append((k, v))
            deg[k] = size
            self.journal.append((edges, (), False))
            self.k = k + 1
            return True

        last, head = b[-1], b[0]
        if deg[last] >= target[last] or deg[head] >= target[head]:
            target[k] = 0
            return False
        kbit = 1 << k
        adj[k] = (1 << last) | (1 << head)
        adj[last] |= kbit
        adj[head] |= kbit
        deg[last] += 1
        deg[head] += 1
        deg[k] = 2
        edges = [(k, last), (k, head)]
        b.append(k)

        # fast path: a face's own two fresh edges never saturate it, so zips
        # can only start from the two attachment faces
        if deg[last] != target[last] and deg[head] != target[head]:
            self.journal.append((edges, (), True))
            self.k = k + 1
            return True

        # forced zips: a saturated boundary face leaves the boundary and its
        # neighbours on the cycle become adjacent
        removals: list[tuple[int, int]] = []
        check = [last, head, k]
        while check:
            v = check.pop()
            if deg[v] != target[v]:
                continue
            try:
                i = b.index(v)
            except ValueError:
                continue
            if len(b) < 3:
                self._rollback(edges, removals, True)
                return False
            p = b[i - 1]
            nx = b[i + 1] if i + 1 < len(b) else b[0]
            if (adj[p] >> nx) & 1 or deg[p] >= target[p] or deg[nx] >= target[nx]:
                self._rollback(edges, removals, True)
                return False
            adj[p] |= 1 << nx
            adj[nx] |= 1 << p
            deg[p] += 1
            deg[nx] += 1
            edges.append((p, nx))
            del b[i]
            removals.append((v, i))
            check.append(p)
            check.append(nx)

        if len(b) < 3:
            self._rollback(edges, removals, True)
            return False
        self.journal.append((edges, removals, True))
        self.k = k + 1
        return True

    def pop_face(self):
        self.k -= 1
        edges, removals, appended = self.journal.pop()
        self._rollback(edges, removals, appended)

    def closed(self) -> bool:
        return self.k == self.nf and all(
            self.deg[v] == self.target[v] for v in range(self.nf))

    def neighbor_lists(self) -> list[list[int]]:
        """Adjacency lists recovered from the bitmask rows."""
        nf = self.nf
        return [[u for u in range(nf) if (row >> u) & 1] for row in self.adj]


def spiral_unwind(adj, nbr_sets, sizes, a: int, b: int, c: int,
                  best=None, eng: Optional[WindupEngine] = None,
                  stop_below: bool = False) -> Optional[list[int]]:
    """Unwind a spiral of the graph `adj` from the start triangle (a, b, c).

    Each step the next face must be adjacent to the newest boundary face and
    to the earliest open face, and the windup engine must be able to realize
    the step inside the actual graph.  When `best` is given, branches whose size
    sequence exceeds it lexicographically are abandoned; among surviving
    completions the size-minimal one is returned, else None.  With
    `stop_below`, the search returns as soon as any completion strictly below
    `best` is found (for canonicality rejection, where one witness suffices).
    """
    nf = len(adj)
    if eng is None:
        eng = WindupEngine(nf)   # callers in a loop pass a reusable engine
    order: list[int] = []
    used = [False] * nf

    def push_checked(real: int) -> bool:
        if not eng.push_face(sizes[real]):
            return False
        for u, v in eng.journal[-1][0]:
            ru = real if u == eng.k - 1 else order[u]
            rv = real if v == eng.k - 1 else order[v]
            if rv not in nbr_sets[ru]:
                eng.pop_face()
                return False
        order.append(real)
        used[real] = True
        return True

    def pop():
        used[order.pop()] = False
        eng.pop_face()

    bound = best
    stop_at = best if stop_below else None
    found_small = False
    if bound is not None:
        for i, r in enumerate((a, b, c)):
            if sizes[r] > bound[i]:
                return None
            if sizes[r] < bound[i]:
                bound = None
                break
    for r in (a, b, c):
        if not push_checked(r):
            while order:
                pop()
            return None

    def extend(k: int, bound):
        # returns (order, size sequence) of the minimal completion, or None
        nonlocal found_small
        if k == nf:
            o = list(order)
            return o, tuple(sizes[v] for v in o)
        # candidates come from the engine's own boundary (newest and earliest
        # open faces), so unwinding follows exactly the windup attachment rule
        h = order[eng.boundary[0]]
        last = order[eng.boundary[-1]]
        if h == last:
            cands = [x for x in adj[last] if not used[x]]
        else:
            hs = nbr_sets[h]
            if last not in hs:
                return None
            cands = [x for x in adj[last] if not used[x] and x in hs]
        result = None
        for nxt in cands:
            nxt_bound = bound
            if nxt_bound is not None:
                s = sizes[nxt]
                if s > nxt_bound[k]:
                    continue
                if s < nxt_bound[k]:
                    nxt_bound = None
            if not push_checked(nxt):
                continue
            sub = extend(k + 1, nxt_bound)
            pop()
            if sub is not None and (result is None or sub[1] < result[1]):
                result = sub
                bound = sub[1]
                if stop_at is not None and sub[1] < stop_at:
                    found_small = True
            if found_small:
                return result
        return result

    res = extend(3, bound)
    while order:
        pop()
    return res[0] if res is not None else None
