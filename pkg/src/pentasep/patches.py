"""Fullerene patches and caps: boundary parameters, ring surgery, the two
cap rewrites, gluing, and the builder for separation-d fullerenes at every
sufficiently large hexagon count.

A patch is a plane graph with one distinguished outer face; all interior
faces are pentagons or hexagons, boundary vertices have degree 2 or 3 and
interior vertices degree 3.  A cap is a patch with exactly 6 pentagons whose
boundary degree sequence reads (23)^l (32)^m up to rotation and reflection.

Surgery is expressed through one primitive: attaching hexagons over a run of
boundary "gaps" (the stretches between consecutive degree-2 vertices).  A
full cyclic run is a ring; the partial runs realize the second rewrite.  All
rewrites are searched over their small candidate spaces and verified
post hoc against the contracts (parameters, face counts, pentagon count,
pentagon-distance monotonicity), so a wrong candidate can never escape.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BelowThreshold,
    BoundaryMismatch,
    InternalVerificationFailure,
    InvalidD,
    NotACapBoundary,
    NotL0Cap,
    OddK,
    PentagonOnBoundary,
    TooFewPentagons,
    ZeroParameter,
)
from .goldberg import CoxeterCoords, goldberg
from .planegraph import Face, Fullerene, PlaneGraph, build_from_rotation, validate_fullerene
from .separation import pentagon_separation


@dataclass(frozen=True)
class Patch:
    """Plane graph with a distinguished outer face; interior faces 5/6-gonal."""

    graph: PlaneGraph
    outer: int                      # index into graph.faces

    @property
    def outer_face(self) -> Face:
        return self.graph.faces[self.outer]

    @cached_property
    def boundary(self) -> tuple[int, ...]:
        """Boundary vertices in outer-face traversal order."""
        return self.outer_face.vertices

    @cached_property
    def boundary_degrees(self) -> tuple[int, ...]:
        return tuple(self.graph.degree(v) for v in self.boundary)

    @cached_property
    def interior_faces(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.graph.faces)) if i != self.outer)

    @cached_property
    def pentagons(self) -> tuple[int, ...]:
        return tuple(i for i in self.interior_faces if self.graph.faces[i].size == 5)

    @property
    def face_count(self) -> int:
        """Interior faces only; the outer face is not counted."""
        return len(self.graph.faces) - 1

    @property
    def hexagon_count(self) -> int:
        return self.face_count - len(self.pentagons)


@dataclass(frozen=True)
class BoundaryParams:
    l: int
    m: int
    offset: int


@dataclass(frozen=True)
class Cap:
    """A patch with 6 pentagons and a (23)^l (32)^m boundary."""

    patch: Patch
    l: int
    m: int

    @property
    def face_count(self) -> int:
        return self.patch.face_count

    @property
    def hexagon_count(self) -> int:
        return self.patch.hexagon_count


def validate_patch(graph: PlaneGraph, outer: int) -> Patch:
    """Check the patch invariants and return the Patch."""
    p = Patch(graph, outer)
    on_boundary = set(p.boundary)
    for v in range(graph.vertex_count):
        d = graph.degree(v)
        if v in on_boundary:
            if d not in (2, 3):
                raise InternalVerificationFailure(
                    f"boundary vertex {v} has degree {d}")
        elif d != 3:
            raise InternalVerificationFailure(
                f"interior vertex {v} has degree {d}")
    for i in p.interior_faces:
        size = graph.faces[i].size
        if size not in (5, 6):
            raise InternalVerificationFailure(f"interior face of size {size}")
    return p


def patch_from_faces(f: Fullerene, face_indices) -> Patch:
    """The patch formed by a face subset of a fullerene (must be a disk)."""
    chosen = set(face_indices)
    keep_edges = set()
    for i in chosen:
        for (u, v) in f.faces[i].boundary:
            keep_edges.add((u, v))
            keep_edges.add((v, u))
    old_rot = f.graph.rotation
    verts = sorted({u for (u, _) in keep_edges})
    new_id = {v: i for i, v in enumerate(verts)}
    rotation = []
    for v in verts:
        rotation.append(tuple(new_id[u] for u in old_rot[v] if (v, u) in keep_edges))
    g = build_from_rotation(rotation)
    if len(g.faces) != len(chosen) + 1:
        raise InternalVerificationFailure(
            f"face subset is not a disk: {len(g.faces)} != {len(chosen)} + 1")
    # the outer face is the one whose boundary is not a chosen face's boundary
    old_boundaries = set()
    for i in chosen:
        old_boundaries.add(frozenset(
            (new_id[u], new_id[v]) for (u, v) in f.faces[i].boundary))
    outer = [i for i, fc in enumerate(g.faces)
             if frozenset(fc.boundary) not in old_boundaries]
    if len(outer) != 1:
        raise InternalVerificationFailure("could not identify the outer face")
    return validate_patch(g, outer[0])


def _parse_pattern(seq: tuple[int, ...]):
    """Parse a degree sequence as the literal concatenation (23)^l (32)^m."""
    n = len(seq)
    if n % 2:
        return None
    i = 0
    l = 0
    while i + 1 < n and seq[i] == 2 and seq[i + 1] == 3:
        l += 1
        i += 2
    m = 0
    while i + 1 < n and seq[i] == 3 and seq[i + 1] == 2:
        m += 1
        i += 2
    if i != n or l + m == 0:
        return None
    return l, m


def boundary_params(p: Patch) -> BoundaryParams:
    """Recognize the (l,m) cap boundary, normalized to l >= m.

    The degree sequence is matched literally at every rotation of both
    traversal directions (reflection swaps l and m); among matches the one
    with the largest l and then the smallest offset wins.
    """
    degs = p.boundary_degrees
    n = len(degs)
    best = None
    for reflected, seq in ((False, degs), (True, tuple(reversed(degs)))):
        for off in range(n):
            parsed = _parse_pattern(seq[off:] + seq[:off])
            if parsed is None:
                continue
            l, m = parsed
            cand = (-l, reflected, off)
            if best is None or cand < best[0]:
                best = (cand, BoundaryParams(l, m, off))
    if best is None:
        raise NotACapBoundary(f"degree sequence {degs} never matches (23)^l(32)^m")
    return best[1]


def make_cap(p: Patch) -> Cap:
    """Validate the cap invariants (6 pentagons, parameter boundary)."""
    if len(p.pentagons) != 6:
        raise NotACapBoundary(f"cap needs 6 pentagons, found {len(p.pentagons)}")
    bp = boundary_params(p)
    return Cap(p, bp.l, bp.m)


def pentagon_separation_patch(p: Patch) -> int:
    """Minimum pairwise pentagon distance in the inner dual (outer excluded)."""
    pents = p.pentagons
    if len(pents) < 2:
        raise TooFewPentagons(f"patch has {len(pents)} pentagon(s)")
    faces = p.graph.faces
    face_of_edge = {}
    for i, fc in enumerate(faces):
        for e in fc.boundary:
            face_of_edge[e] = i
    adj = {}
    for i in p.interior_faces:
        nbrs = []
        for (u, v) in faces[i].boundary:
            j = face_of_edge[(v, u)]
            if j != p.outer:
                nbrs.append(j)
        adj[i] = nbrs
    best = None
    pent_set = set(pents)
    for src in pents:
        dist = {src: 0}
        q = deque([src])
        while q:
            x = q.popleft()
            d = dist[x] + 1
            if best is not None and d > best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = d
                    if y in pent_set and y > src:
                        if best is None or d < best:
                            best = d
                    q.append(y)
    if best is None:
        raise InternalVerificationFailure("pentagons in different components")
    return best


# ---------------------------------------------------------------------------
# ring surgery

def _boundary_steps(p: Patch):
    """Per boundary position: (vertex, previous vertex, next vertex)."""
    b = p.boundary
    n = len(b)
    return [(b[i], b[i - 1], b[(i + 1) % n]) for i in range(n)]


def _gaps(p: Patch):
    """Boundary gaps: (degree-2 vertex, interior-degree-3 stretch) pairs.

    Gap i runs from the i-th degree-2 boundary vertex (in traversal order)
    up to, excluding, the next one; the stretch lists the degree-3 vertices
    between them.
    """
    b = p.boundary
    degs = p.boundary_degrees
    two_positions = [i for i, d in enumerate(degs) if d == 2]
    if not two_positions:
        raise NotACapBoundary("boundary has no degree-2 vertices")
    n = len(b)
    gaps = []
    for idx, pos in enumerate(two_positions):
        end = two_positions[(idx + 1) % len(two_positions)]
        stretch = []
        j = (pos + 1) % n
        while j != end:
            stretch.append(b[j])
            j = (j + 1) % n
        gaps.append((b[pos], stretch))
    return gaps


def _insert_outer(rot: list[list[int]], v: int, prev: int, new: int):
    """Insert `new` into rotation(v) in the outer-face slot after `prev`."""
    i = rot[v].index(prev)
    rot[v].insert(i + 1, new)


def _attach_hexagons(p: Patch, start: int, count: int, cyclic: bool) -> Patch:
    """Attach one hexagon over each of `count` consecutive gaps from `start`.

    cyclic=True is a full ring (count must equal the gap count); otherwise a
    strip whose two end spokes stay on the new boundary.  Each gap with g
    degree-3 vertices (g <= 2) receives a hexagon with 2-g new intermediate
    vertices between the spoke tops over its degree-2 ends.
    """
    gaps = _gaps(p)
    ng = len(gaps)
    if cyclic and count != ng:
        raise InternalVerificationFailure("ring must cover every gap")
    prev_of = {v: pv for v, pv, _ in _boundary_steps(p)}
    rot = [list(r) for r in p.graph.rotation]
    nv = len(rot)
    run = [gaps[(start + i) % ng] for i in range(count)]
    for _, stretch in run:
        if len(stretch) > 2:
            raise InternalVerificationFailure("gap too wide for a hexagon")

    tops = {}        # spoke top over each covered degree-2 vertex
    base = {}        # spoke base of each top
    fwd = {}         # ring neighbour in traversal direction
    bwd = {}         # ring neighbour against traversal direction

    def top_of(v):
        nonlocal nv
        if v not in tops:
            tops[v] = nv
            base[nv] = v
            rot.append(None)
            _insert_outer(rot, v, prev_of[v], nv)
            nv += 1
        return tops[v]

    for gi in range(count):
        u, stretch = run[gi]
        w = run[gi + 1][0] if gi + 1 < count else \
            (run[0][0] if cyclic else gaps[(start + count) % ng][0])
        chain = [top_of(u)]
        for _ in range(2 - len(stretch)):
            rot.append(None)
            chain.append(nv)
            nv += 1
        chain.append(top_of(w))
        for a, b in zip(chain, chain[1:]):
            fwd[a] = b
            bwd[b] = a
    # a spoke top's faces close correctly when the rotation reads
    # (base, backward ring neighbour, forward ring neighbour)
    for t in range(p.graph.vertex_count, nv):
        around = [base[t]] if t in base else []
        if t in bwd:
            around.append(bwd[t])
        if t in fwd:
            around.append(fwd[t])
        rot[t] = around
    g = build_from_rotation([tuple(r) for r in rot])

    # identify the new outer face: it contains a new vertex, and (for strips)
    # an uncovered old boundary vertex; for rings its vertices are all new
    old_n = p.graph.vertex_count
    old_boundaries = {frozenset(p.graph.faces[i].boundary) for i in p.interior_faces}
    new_faces = [i for i, fc in enumerate(g.faces)
                 if frozenset(fc.boundary) not in old_boundaries]
    if cyclic:
        outer = [i for i in new_faces
                 if all(v >= old_n for v in g.faces[i].vertices)]
    else:
        # the outer face is the one still traversing a boundary edge of an
        # uncovered gap
        covered_edges = set()
        for gi in range(count):
            u, stretch = run[gi]
            w = run[gi + 1][0] if gi + 1 < count else gaps[(start + count) % ng][0]
            seg = [u] + stretch + [w]
            for x, y in zip(seg, seg[1:]):
                covered_edges.add(frozenset((x, y)))
        omitted = {frozenset(e) for e in p.outer_face.boundary} - covered_edges
        outer = [i for i in new_faces
                 if any(frozenset(e) in omitted for e in g.faces[i].boundary)]
    if len(outer) != 1:
        raise InternalVerificationFailure("ambiguous outer face after surgery")
    result = validate_patch(g, outer[0])
    for i in result.interior_faces:
        if frozenset(g.faces[i].boundary) not in old_boundaries \
                and g.faces[i].size != 6:
            raise InternalVerificationFailure("attached face is not a hexagon")
    if result.face_count != p.face_count + count:
        raise InternalVerificationFailure("wrong face count after surgery")
    return result


def hexagon_ring(p: Patch) -> Patch:
    """Attach a full ring of hexagons (one per boundary gap)."""
    return _attach_hexagons(p, 0, len(_gaps(p)), cyclic=True)


def add_ring(c: Cap) -> Cap:
    """One full ring of l+m hexagons; parameters are preserved."""
    out = make_cap(hexagon_ring(c.patch))
    if (out.l, out.m) != (c.l, c.m):
        raise InternalVerificationFailure(
            f"ring changed parameters {(c.l, c.m)} -> {(out.l, out.m)}")
    return out


def strip_ring(c: Cap) -> Cap:
    """Remove the outermost ring of hexagons (inverse of add_ring)."""
    p = _strip_patch(c.patch)
    out = make_cap(p)
    if (out.l, out.m) != (c.l, c.m) or out.face_count != c.face_count - (c.l + c.m):
        raise InternalVerificationFailure("stripping broke the cap contract")
    return out


def _strip_patch(p: Patch) -> Patch:
    """Delete the boundary vertices; every face touching them must be a hexagon."""
    g = p.graph
    on_boundary = set(p.boundary)
    for i in p.interior_faces:
        fc = g.faces[i]
        if fc.size == 5 and any(v in on_boundary for v in fc.vertices):
            raise PentagonOnBoundary(f"pentagon face {i} touches the boundary")
    keep = [v for v in range(g.vertex_count) if v not in on_boundary]
    if not keep:
        raise PentagonOnBoundary("nothing would remain after stripping")
    new_id = {v: i for i, v in enumerate(keep)}
    rotation = [tuple(new_id[u] for u in g.rotation[v] if u not in on_boundary)
                for v in keep]
    ng = build_from_rotation(rotation)
    survivors = set()
    for i in p.interior_faces:
        fc = g.faces[i]
        if all(v not in on_boundary for v in fc.vertices):
            survivors.add(frozenset(
                (new_id[u], new_id[v]) for (u, v) in fc.boundary))
    outer = [i for i, fc in enumerate(ng.faces)
             if frozenset(fc.boundary) not in survivors]
    if len(outer) != 1:
        raise InternalVerificationFailure("stripping did not leave a disk")
    return validate_patch(ng, outer[0])


def _has_boundary_pentagon(p: Patch) -> bool:
    on_boundary = set(p.boundary)
    return any(any(v in on_boundary for v in p.graph.faces[i].vertices)
               for i in p.pentagons)


# ---------------------------------------------------------------------------
# the two rewrites

def _subdivide_boundary_edge(p: Patch, u: int, v: int) -> Patch:
    """Split boundary edge (u,v) with a new degree-2 vertex (face grows by 1)."""
    rot = [list(r) for r in p.graph.rotation]
    w = len(rot)
    rot[u][rot[u].index(v)] = w
    rot[v][rot[v].index(u)] = w
    rot.append([u, v])
    g = build_from_rotation([tuple(r) for r in rot])
    outer = [i for i, fc in enumerate(g.faces) if w in fc.vertices
             and fc.size == p.outer_face.size + 1
             and set(fc.vertices) == set(p.outer_face.vertices) | {w}]
    if len(outer) != 1:
        raise InternalVerificationFailure("subdivision lost the outer face")
    return validate_patch(g, outer[0])


def _smooth_boundary_vertex(p: Patch, w: int) -> Patch:
    """Remove a degree-2 boundary vertex, merging its edges (face shrinks by 1)."""
    g = p.graph
    a, b = g.rotation[w]
    if b in g.rotation[a]:
        raise InternalVerificationFailure("smoothing would create a double edge")
    keep = [v for v in range(g.vertex_count) if v != w]
    new_id = {v: i for i, v in enumerate(keep)}
    rot = []
    for v in keep:
        row = [a if x == w and v == b else b if x == w else x
               for x in g.rotation[v]]
        rot.append(tuple(new_id[x] for x in row))
    g2 = build_from_rotation(rot)
    old_outer = set(p.outer_face.vertices) - {w}
    outer = [i for i, fc in enumerate(g2.faces)
             if set(fc.vertices) == {new_id[v] for v in old_outer}
             and fc.size == p.outer_face.size - 1]
    if len(outer) != 1:
        raise InternalVerificationFailure("smoothing lost the outer face")
    return validate_patch(g2, outer[0])


def lemma1_transform(c: Cap) -> Cap:
    """Rewrite an (l,0) cap into an (l,1) cap, pentagon distances preserved.

    Following the first rewrite: strip hexagon rings until a pentagon lies on
    the boundary, turn one boundary pentagon into a hexagon by splitting a
    boundary edge, wrap one ring of hexagons, and turn one boundary hexagon
    adjacent to the changed face back into a pentagon.  The concrete pentagon,
    edge and hexagon are found by search; every candidate result is verified
    against the contract before being returned.
    """
    if c.m != 0:
        raise NotL0Cap(f"parameters ({c.l},{c.m}), need m = 0")
    sep_in = pentagon_separation_patch(c.patch)
    p = c.patch
    while not _has_boundary_pentagon(p):
        p = _strip_patch(p)

    faces = p.graph.faces
    outer_edges = set(p.outer_face.boundary)
    for pi in p.pentagons:
        pent_edges = [(u, v) for (u, v) in faces[pi].boundary
                      if (v, u) in outer_edges]
        for (u, v) in pent_edges:
            try:
                p1 = _subdivide_boundary_edge(p, u, v)
                h_vertices = set(faces[pi].vertices) | {p.graph.vertex_count}
                p2 = hexagon_ring(p1)
            except InternalVerificationFailure:
                continue
            h_idx = [i for i in p2.interior_faces
                     if set(p2.graph.faces[i].vertices) == h_vertices]
            if len(h_idx) != 1:
                continue
            out = _lemma1_close(p2, h_idx[0], (c.l, 1), sep_in)
            if out is not None:
                return out
    raise InternalVerificationFailure("no valid first-rewrite candidate")


def _lemma1_close(p2: Patch, h: int, want, sep_in):
    """Try turning a boundary hexagon adjacent to face h into a pentagon."""
    g = p2.graph
    face_of_edge = {}
    for i, fc in enumerate(g.faces):
        for e in fc.boundary:
            face_of_edge[e] = i
    neighbors = {face_of_edge[(v, u)] for (u, v) in g.faces[h].boundary}
    on_boundary = set(p2.boundary)
    for i in sorted(neighbors):
        if i == p2.outer or i == h or g.faces[i].size != 6:
            continue
        for w in g.faces[i].vertices:
            if w in on_boundary and g.degree(w) == 2:
                try:
                    cand = make_cap(_smooth_boundary_vertex(p2, w))
                except (InternalVerificationFailure, NotACapBoundary):
                    continue
                if (cand.l, cand.m) == want \
                        and len(cand.patch.pentagons) == 6 \
                        and pentagon_separation_patch(cand.patch) >= sep_in:
                    return cand
    return None


def lemma2_extend(c: Cap, side: str) -> Cap:
    """Grow a cap by l (side="l") or m (side="m") hexagons, parameters kept.

    The hexagons are attached over a contiguous run of boundary gaps; the
    run position is searched and the first candidate satisfying the contract
    (same parameters, exact face count, pentagon distances not decreased) is
    returned.  The input's faces persist unchanged in the output.
    """
    if c.l == 0 or c.m == 0:
        raise ZeroParameter(f"parameters ({c.l},{c.m}) must both be nonzero")
    if side not in ("l", "m"):
        raise ValueError(f"side must be 'l' or 'm', got {side!r}")
    k = c.l if side == "l" else c.m
    sep_in = pentagon_separation_patch(c.patch)
    ng = len(_gaps(c.patch))
    for start in range(ng):
        try:
            p = _attach_hexagons(c.patch, start, k, cyclic=False)
            cand = make_cap(p)
        except (InternalVerificationFailure, NotACapBoundary):
            continue
        if (cand.l, cand.m) == (c.l, c.m) \
                and cand.face_count == c.face_count + k \
                and pentagon_separation_patch(cand.patch) >= sep_in:
            return cand
    raise InternalVerificationFailure("no valid second-rewrite run")


# ---------------------------------------------------------------------------
# gluing and the separated-fullerene builder

def glue_caps(a: Cap, b: Cap, rings: int = 0) -> Fullerene:
    """Glue two caps with equal parameters into a fullerene.

    The second cap is taken mirror-imaged and its boundary is identified with
    the first cap's boundary, degree-2 vertices against degree-3 vertices, at
    the least legal offset.  `rings` extra rings of hexagons are added to the
    first cap before gluing.
    """
    if (a.l, a.m) != (b.l, b.m):
        raise BoundaryMismatch(f"parameters ({a.l},{a.m}) != ({b.l},{b.m})")
    for _ in range(rings):
        a = add_ring(a)
    pa, pb = a.patch, b.patch
    for mirrored in (True, False):
        gb = pb.graph.mirror() if mirrored else pb.graph
        # the outer face of the mirrored graph traverses the same vertex cycle
        bnd_b = tuple(reversed(pb.boundary)) if mirrored else pb.boundary
        got = _try_glue(pa, gb, bnd_b)
        if got is not None:
            f, off = got
            object.__setattr__(f, "provenance",
                               {"glue_offset": off, "mirrored": mirrored,
                                "rings": rings, "params": (a.l, a.m)})
            return f
    raise BoundaryMismatch("no offset meshes the two boundaries")


def _try_glue(pa: Patch, gb: PlaneGraph, bnd_b):
    ga = pa.graph
    bnd_a = pa.boundary
    n = len(bnd_a)
    if len(bnd_b) != n:
        return None
    deg_a = [ga.degree(v) for v in bnd_a]
    deg_b = [len(gb.rotation[v]) for v in bnd_b]
    prev_a = {v: pv for v, pv, _ in _boundary_steps(pa)}
    interior_b = [v for v in range(len(gb.rotation)) if v not in set(bnd_b)]
    for off in range(n):
        if any(deg_a[i] + deg_b[(off - i) % n] != 5 for i in range(n)):
            continue
        # identify bnd_a[i] with bnd_b[(off - i) % n]
        partner = {bnd_b[(off - i) % n]: bnd_a[i] for i in range(n)}
        new_id = {v: len(ga.rotation) + i for i, v in enumerate(interior_b)}
        new_id.update(partner)
        rot = [list(r) for r in ga.rotation]
        for v in interior_b:
            rot.append([new_id[u] for u in gb.rotation[v]])
        ok = True
        for v in bnd_b:
            third = [u for u in gb.rotation[v] if u not in partner
                     or abs(bnd_b.index(u) - bnd_b.index(v)) not in (1, n - 1)]
            if len(gb.rotation[v]) == 3:
                if len(third) != 1:
                    ok = False
                    break
                va = partner[v]
                _insert_outer(rot, va, prev_a[va], new_id[third[0]])
        if not ok:
            continue
        try:
            f = validate_fullerene(build_from_rotation([tuple(r) for r in rot]))
        except Exception:
            continue
        return f, off
    return None


# ---------------------------------------------------------------------------
# penta-hexagonal net balls

def penthex_face_ball(k: int) -> Patch:
    """Central pentagon plus all faces at face-distance <= k in the net.

    Extracted as the ball around a pentagon of an icosahedral fullerene whose
    pentagons are too far apart to intrude (separation 2k+2), which matches
    the infinite net out to radius k.
    """
    if k < 0:
        raise InvalidD(f"radius must be nonnegative, got {k}")
    c = k + 1
    f = goldberg(CoxeterCoords(c, c))
    ball = _face_ball_indices(f, f.pentagon_faces[0], k)
    p = patch_from_faces(f, ball)
    if p.face_count != 5 * k * (k + 1) // 2 + 1:
        raise InternalVerificationFailure(
            f"ball face count {p.face_count} != {5 * k * (k + 1) // 2 + 1}")
    return p


def _face_ball_indices(f: Fullerene, src: int, k: int):
    face_of_edge = {}
    for i, fc in enumerate(f.faces):
        for e in fc.boundary:
            face_of_edge[e] = i
    dist = {src: 0}
    q = deque([src])
    while q:
        x = q.popleft()
        if dist[x] == k:
            continue
        for (u, v) in f.faces[x].boundary:
            y = face_of_edge[(v, u)]
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return sorted(dist)


def penthex_vertex_ball_count(k: int) -> int:
    """Vertices at distance <= k from the central pentagon of the net."""
    if k < 0:
        raise InvalidD(f"radius must be nonnegative, got {k}")
    if k % 2:
        raise OddK(f"the closed form holds for even radii, got {k}")
    return 5 * (k * k // 4 + k + 1)


# ---------------------------------------------------------------------------
# Theorem 2 pipeline

def base_cap(d: int) -> Cap:
    """A (9c,0) cap, c = ceil(d/2), with pentagon distances >= 2c.

    Cut from the icosahedral fullerene with Coxeter coordinates (c,c) along a
    zigzag cycle (alternating left/right turns, so the off-cycle edges
    alternate sides and the patch boundary alternates degrees 2 and 3).  The
    cycle is found by deterministic search over starting edges and verified
    to enclose 6 pentagons with the required parameters and distances.
    """
    if d < 1:
        raise InvalidD(f"separation target must be positive, got {d}")
    c = (d + 1) // 2
    f = goldberg(CoxeterCoords(c, c))
    want_len = 18 * c
    rot = f.graph.rotation
    for v0 in range(f.vertex_count):
        for u0 in rot[v0]:
            for first_left in (True, False):
                cyc = _zigzag_cycle(rot, v0, u0, first_left, want_len)
                if cyc is None:
                    continue
                cap = _cap_from_cycle(f, cyc, c)
                if cap is not None:
                    return cap
    raise InternalVerificationFailure(f"no zigzag cut of length {want_len}")


def _zigzag_cycle(rot, v0, u0, first_left, want_len):
    """Follow alternating turns from directed edge (v0,u0); return the simple
    cycle of the required length, or None."""
    path = [v0]
    seen = {v0}
    u, v = v0, u0
    left = first_left
    while True:
        if v == v0:
            break
        if v in seen or len(path) > want_len:
            return None
        path.append(v)
        seen.add(v)
        nbrs = rot[v]
        i = nbrs.index(u)
        u, v = v, nbrs[(i + 1) % 3] if left else nbrs[(i - 1) % 3]
        left = not left
    # closing edge must also continue the alternation back to the start
    if len(path) != want_len:
        return None
    return path


def _cap_from_cycle(f: Fullerene, cycle, c: int):
    cyc_set = set(cycle)
    cyc_edges = set()
    n = len(cycle)
    for i in range(n):
        cyc_edges.add((cycle[i], cycle[(i + 1) % n]))
        cyc_edges.add((cycle[(i + 1) % n], cycle[i]))
    face_of_edge = {}
    for i, fc in enumerate(f.faces):
        for e in fc.boundary:
            face_of_edge[e] = i
    seed = face_of_edge[(cycle[0], cycle[1])]
    side = {seed}
    q = deque([seed])
    while q:
        x = q.popleft()
        for (u, v) in f.faces[x].boundary:
            if (u, v) in cyc_edges:
                continue
            y = face_of_edge[(v, u)]
            if y not in side:
                side.add(y)
                q.append(y)
    if len(side) == len(f.faces):
        return None
    pents = sum(1 for i in side if f.faces[i].size == 5)
    if pents != 6:
        return None
    try:
        cap = make_cap(patch_from_faces(f, side))
    except (InternalVerificationFailure, NotACapBoundary):
        return None
    if (cap.l, cap.m) != (9 * c, 0):
        return None
    if pentagon_separation_patch(cap.patch) < 2 * c:
        return None
    return cap


_pipeline_cache: dict[int, tuple[Cap, int, int]] = {}


def _pipeline(d: int) -> tuple[Cap, int, int]:
    """The (9c,1) cap after the first rewrite, the ring count needed for
    separation d, and the hexagon count of the base gluing."""
    if d not in _pipeline_cache:
        cap = lemma1_transform(base_cap(d))
        rings = 0
        while True:
            f = glue_caps(cap, cap, rings=rings)
            if pentagon_separation(f).separation >= d:
                break
            rings += 1
            if rings > 20:
                raise InternalVerificationFailure(
                    f"ring search for d={d} did not terminate")
        _pipeline_cache[d] = (cap, rings, f.hexagon_count)
    return _pipeline_cache[d]


def h_threshold(d: int) -> int:
    """Smallest hexagon count the builder covers for every h above it.

    This is the pipeline's bound (base gluing size), an upper bound on the
    optimal threshold, with no optimality claim.
    """
    if d < 1:
        raise InvalidD(f"separation target must be positive, got {d}")
    return _pipeline(d)[2]


def build_separated(d: int, h: int) -> Fullerene:
    """A fullerene with exactly h hexagons and pentagon separation >= d.

    Two copies of the rewritten cap are glued with the recorded ring count;
    the hexagon count is then raised one at a time by the m-side second
    rewrite (m = 1) on one cap before gluing.
    """
    if d < 1:
        raise InvalidD(f"separation target must be positive, got {d}")
    cap, rings, h0 = _pipeline(d)
    if h < h0:
        raise BelowThreshold(h0)
    grown = cap
    for _ in range(h - h0):
        grown = lemma2_extend(grown, "m")
    f = glue_caps(grown, cap, rings=rings)
    if f.hexagon_count != h:
        raise InternalVerificationFailure(
            f"built {f.hexagon_count} hexagons, wanted {h}")
    if pentagon_separation(f).separation < d:
        raise InternalVerificationFailure(
            f"built separation {pentagon_separation(f).separation} < {d}")
    return f
