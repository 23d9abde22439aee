"""Plane graphs as rotation systems, face tracing, fullerene validation and duals.

A plane graph is stored purely combinatorially: for every vertex the cyclic
sequence of its neighbours in counterclockwise order.  Everything else (faces,
the dual, genus checks) is derived from that rotation system.  Vertices are
0-based internally; external formats are 1-based (see planarcode).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    AsymmetricAdjacency,
    BadFaceSize,
    Disconnected,
    NonzeroGenus,
    NotCubic,
    WrongPentagonCount,
)


@dataclass(frozen=True)
class Face:
    """One face, as the cyclic sequence of directed edges tracing its boundary."""

    boundary: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.boundary)


@dataclass(frozen=True)
class PlaneGraph:
    """Connected plane graph given by a rotation system (genus 0 enforced)."""

    rotation: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.rotation) // 2

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def next_directed_edge(self, u: int, v: int) -> tuple[int, int]:
        """Face-tracing successor of directed edge (u, v): reverse, then next in rotation."""
        nbrs = self.rotation[v]
        i = nbrs.index(u)
        return v, nbrs[(i + 1) % len(nbrs)]

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(trace_faces(self))

    def mirror(self) -> "PlaneGraph":
        """The orientation-reversed embedding (all rotations reversed)."""
        return PlaneGraph(tuple(tuple(reversed(nbrs)) for nbrs in self.rotation))


def build_from_rotation(rotation: Sequence[Sequence[int]]) -> PlaneGraph:
    """Validate a rotation table and return the plane graph it describes.

    Raises AsymmetricAdjacency, Disconnected or NonzeroGenus when the table
    does not describe a connected embedding on the sphere.
    """
    if not rotation:
        raise AsymmetricAdjacency("empty rotation table")
    n = len(rotation)
    rot = tuple(tuple(nbrs) for nbrs in rotation)
    for v, nbrs in enumerate(rot):
        if not nbrs:
            raise AsymmetricAdjacency(f"vertex {v} has no neighbours")
        for u in nbrs:
            if not (0 <= u < n):
                raise AsymmetricAdjacency(f"vertex {v} lists invalid neighbour {u}")
        if len(set(nbrs)) != len(nbrs):
            raise AsymmetricAdjacency(f"vertex {v} lists a neighbour twice")
    for v, nbrs in enumerate(rot):
        for u in nbrs:
            if v not in rot[u]:
                raise AsymmetricAdjacency(f"{v} lists {u} but not conversely")

    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in rot[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != n:
        raise Disconnected(f"only {len(seen)} of {n} vertices reachable")

    g = PlaneGraph(rot)
    e = g.edge_count
    f = len(g.faces)
    if n - e + f != 2:
        raise NonzeroGenus(f"V-E+F = {n}-{e}+{f} = {n - e + f} != 2")
    return g


def trace_faces(g: PlaneGraph) -> list[Face]:
    """Partition all directed edges into face boundaries.

    Faces come out ordered by their smallest directed edge, and each boundary
    starts at that edge, so the result is reproducible.
    """
    unused: set[tuple[int, int]] = set()
    for v, nbrs in enumerate(g.rotation):
        for u in nbrs:
            unused.add((v, u))
    faces = []
    for start in sorted(unused):
        if start not in unused:
            continue
        boundary = []
        e = start
        while True:
            boundary.append(e)
            unused.discard(e)
            e = g.next_directed_edge(*e)
            if e == start:
                break
        faces.append(Face(tuple(boundary)))
    faces.sort(key=lambda f: f.boundary[0])
    return faces


@dataclass(frozen=True)
class Fullerene:
    """A validated fullerene: cubic plane graph, faces all of size 5 or 6."""

    graph: PlaneGraph
    faces: tuple[Face, ...]
    pentagon_faces: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def hexagon_count(self) -> int:
        return len(self.faces) - 12

    def mirror(self) -> "Fullerene":
        return validate_fullerene(self.graph.mirror())


def validate_fullerene(g: PlaneGraph) -> Fullerene:
    """Check the fullerene invariants and record faces and pentagon indices."""
    for v in range(g.vertex_count):
        if g.degree(v) != 3:
            raise NotCubic(f"vertex {v} has degree {g.degree(v)}")
    faces = g.faces
    pentagons = []
    for i, f in enumerate(faces):
        if f.size == 5:
            pentagons.append(i)
        elif f.size != 6:
            raise BadFaceSize(i, f.size)
    if len(pentagons) != 12:
        raise WrongPentagonCount(len(pentagons))
    return Fullerene(g, faces, tuple(pentagons))


@dataclass(frozen=True)
class DualTriangulation:
    """Dual of a fullerene: triangulation with 12 degree-5 vertices."""

    graph: PlaneGraph
    degree_list: tuple[int, ...]
    low_degree_vertices: tuple[int, ...]


def plane_dual(g: PlaneGraph) -> PlaneGraph:
    """Generic plane dual: vertices are faces, adjacency across shared edges.

    The rotation of each dual vertex follows the boundary traversal of the
    corresponding face, so orientation is inherited from g.
    """
    faces = g.faces
    face_of_edge = {}
    for i, f in enumerate(faces):
        for e in f.boundary:
            face_of_edge[e] = i
    rotation = []
    for f in faces:
        rotation.append(tuple(face_of_edge[(v, u)] for (u, v) in f.boundary))
    return build_from_rotation(rotation)


def dual(f: Fullerene) -> DualTriangulation:
    """Dual triangulation of a fullerene."""
    dg = plane_dual(f.graph)
    degrees = tuple(dg.degree(v) for v in range(dg.vertex_count))
    low = tuple(v for v, d in enumerate(degrees) if d == 5)
    return DualTriangulation(dg, degrees, low)


def dual_adjacency(f: Fullerene) -> list[list[int]]:
    """Face adjacency lists of a fullerene (dual graph, without rotation)."""
    faces = f.faces
    face_of_edge = {}
    for i, fc in enumerate(faces):
        for e in fc.boundary:
            face_of_edge[e] = i
    return [[face_of_edge[(v, u)] for (u, v) in fc.boundary] for fc in faces]


def relabel(g: PlaneGraph, perm: Sequence[int]) -> PlaneGraph:
    """Apply a vertex permutation: vertex v becomes perm[v]."""
    n = g.vertex_count
    new_rot: list[tuple[int, ...]] = [()] * n
    for v in range(n):
        new_rot[perm[v]] = tuple(perm[u] for u in g.rotation[v])
    return build_from_rotation(new_rot)


def are_oriented_isomorphic(g1: PlaneGraph, g2: PlaneGraph) -> bool:
    """Brute-force orientation-preserving map isomorphism by flag propagation.

    Exhaustive over all image flags of a fixed source flag; intended as an
    oracle for small graphs and as the fallback behind canonical codes.
    """
    n = g1.vertex_count
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    deg1 = sorted(len(r) for r in g1.rotation)
    deg2 = sorted(len(r) for r in g2.rotation)
    if deg1 != deg2:
        return False
    v0 = 0
    u0 = g1.rotation[0][0]
    for w0 in range(n):
        if len(g2.rotation[w0]) != len(g1.rotation[v0]):
            continue
        for x0 in g2.rotation[w0]:
            if _flag_map_extends(g1, g2, v0, u0, w0, x0):
                return True
    return False


def _flag_map_extends(g1, g2, v0, u0, w0, x0) -> bool:
    n = g1.vertex_count
    img = [-1] * n
    img[v0] = w0
    img[u0] = x0
    stack = [(v0, u0)]
    done = set()
    while stack:
        v, u = stack.pop()
        if (v, u) in done:
            continue
        done.add((v, u))
        nbrs1 = g1.rotation[v]
        nbrs2 = g2.rotation[img[v]]
        if len(nbrs1) != len(nbrs2):
            return False
        i = nbrs1.index(u)
        j = nbrs2.index(img[u])
        for k in range(len(nbrs1)):
            a = nbrs1[(i + k) % len(nbrs1)]
            b = nbrs2[(j + k) % len(nbrs2)]
            if img[a] == -1:
                img[a] = b
            elif img[a] != b:
                return False
            stack.append((a, v))
            stack.append((v, a))
    if sorted(img) != list(range(n)):
        return False
    # final adjacency-with-rotation check
    for v in range(n):
        nbrs1 = [img[u] for u in g1.rotation[v]]
        nbrs2 = list(g2.rotation[img[v]])
        if len(nbrs1) != len(nbrs2):
            return False
        k = nbrs2.index(nbrs1[0])
        if nbrs1 != nbrs2[k:] + nbrs2[:k]:
            return False
    return True
