"""Icosahedral fullerenes from Coxeter coordinates.

The construction works in the dual: each icosahedron face carries a chart of
the triangular lattice (Eisenstein integers) whose corner placements are
0, z and wz with z = p + q*w, w = exp(i*pi/3).  Unit lattice triangles are the
fullerene vertices; triangles are assigned to a unique owner chart by an exact
centroid test, and neighbour lookups hop across seams with the lattice isometry
matching the shared icosahedron edge.  The result is validated post hoc (Euler
genus, fullerene check), so any bookkeeping mistake in the gluing fails loudly
instead of producing a wrong graph.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidD
from .planegraph import Fullerene, build_from_rotation, validate_fullerene

# --- Eisenstein integers as int pairs (x, y) meaning x + y*w, w^2 = w - 1 ---

_UNITS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def _emul(u, v):
    a, b = u
    c, d = v
    return (a * c - b * d, a * d + b * c + b * d)


def _eadd(u, v):
    return (u[0] + v[0], u[1] + v[1])


def _esub(u, v):
    return (u[0] - v[0], u[1] - v[1])


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


# --- icosahedron combinatorics from coordinates ---

def _icosahedron_faces():
    """20 oriented corner triples (outward CCW) and the directed-edge -> face map."""
    phi = (1 + 5 ** 0.5) / 2
    verts = []
    for s1 in (-1.0, 1.0):
        for s2 in (-phi, phi):
            verts += [(0.0, s1, s2), (s1, s2, 0.0), (s2, 0.0, s1)]
    n = len(verts)

    def d2(i, j):
        return sum((verts[i][k] - verts[j][k]) ** 2 for k in range(3))

    adj = [[j for j in range(n) if j != i and abs(d2(i, j) - 4.0) < 1e-9]
           for i in range(n)]
    faces = []
    for a in range(n):
        for b in adj[a]:
            if b < a:
                continue
            for c in adj[a]:
                if c < b or c not in adj[b]:
                    continue
                va, vb, vc = verts[a], verts[b], verts[c]
                det = (va[0] * (vb[1] * vc[2] - vb[2] * vc[1])
                       - va[1] * (vb[0] * vc[2] - vb[2] * vc[0])
                       + va[2] * (vb[0] * vc[1] - vb[1] * vc[0]))
                faces.append((a, b, c) if det > 0 else (a, c, b))
    assert len(faces) == 20
    edge_face = {}
    for fi, (a, b, c) in enumerate(faces):
        for u, v in ((a, b), (b, c), (c, a)):
            edge_face[(u, v)] = fi
    return faces, edge_face


_ICO_FACES, _ICO_EDGE_FACE = _icosahedron_faces()


@dataclass(frozen=True)
class CoxeterCoords:
    """Lattice coordinates (p, q) indexing an icosahedral fullerene."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise ValueError(f"invalid Coxeter coordinates ({self.p}, {self.q})")

    @property
    def triangulation_number(self) -> int:
        return self.p * self.p + self.p * self.q + self.q * self.q


def coxeter_vertex_count(c: CoxeterCoords) -> int:
    """Vertex count 20(p^2 + pq + q^2) of the indexed fullerene."""
    return 20 * c.triangulation_number


class _ChartGeometry:
    """Chart triangle, seam transitions and triangle ownership for one (p, q)."""

    def __init__(self, p: int, q: int):
        z = (p, q)
        self.corners = ((0, 0), z, _emul((0, 1), z))  # 0, z, wz: CCW equilateral
        self.corners3 = tuple((3 * x, 3 * y) for x, y in self.corners)
        # seam transition per (face, edge slot): (neighbour face, rho, t)
        self.seams = {}
        for fi, face in enumerate(_ICO_FACES):
            for i in range(3):
                a, b = face[i], face[(i + 1) % 3]
                gi = _ICO_EDGE_FACE[(b, a)]
                gface = _ICO_FACES[gi]
                j = gface.index(b)
                j1 = (j + 1) % 3
                i1 = (i + 1) % 3
                num = _esub(self.corners[j], self.corners[j1])
                den = _esub(self.corners[i1], self.corners[i])
                rho = next(u for u in _UNITS if _emul(u, den) == num)
                t = _esub(self.corners[j1], _emul(rho, self.corners[i]))
                self.seams[(fi, i)] = (gi, rho, t)
        # tie-break for centroids exactly on a seam line: the face whose
        # traversal runs the shared edge from smaller to larger vertex id owns
        self.tie = {}
        for fi, face in enumerate(_ICO_FACES):
            for i in range(3):
                self.tie[(fi, i)] = face[i] < face[(i + 1) % 3]

    def owner_violation(self, fi: int, c3):
        """None if the centroid*3 point lies in face fi's territory, else the
        first violated edge slot to hop across."""
        for i in range(3):
            e1 = self.corners3[i]
            e2 = self.corners3[(i + 1) % 3]
            s = _cross(_esub(e2, e1), _esub(c3, e1))
            if s < 0 or (s == 0 and not self.tie[(fi, i)]):
                return i
        return None

    def apply_seam(self, fi: int, slot: int, pts):
        gi, rho, t = self.seams[(fi, slot)]
        return gi, tuple(_eadd(_emul(rho, w), t) for w in pts)

    def resolve(self, fi: int, tri):
        """Owner chart and coordinates of a unit triangle given in chart fi."""
        for _ in range(12):
            c3 = (tri[0][0] + tri[1][0] + tri[2][0],
                  tri[0][1] + tri[1][1] + tri[2][1])
            slot = self.owner_violation(fi, c3)
            if slot is None:
                return fi, tri
            fi, tri = self.apply_seam(fi, slot, tri)
        raise AssertionError("seam walk did not terminate")


def _tri_key(fi: int, tri):
    xs = [w[0] for w in tri]
    ys = [w[1] for w in tri]
    return (fi, min(xs), min(ys), (min(xs), min(ys)) in tri)


def goldberg(c: CoxeterCoords) -> Fullerene:
    """The icosahedral fullerene with Coxeter coordinates (p, q)."""
    geo = _ChartGeometry(c.p, c.q)
    xs = [w[0] for w in geo.corners]
    ys = [w[1] for w in geo.corners]

    # enumerate owned unit triangles (fullerene vertices), CCW corner order
    owned = []
    index = {}
    for fi in range(20):
        for x in range(min(xs) - 1, max(xs) + 1):
            for y in range(min(ys) - 1, max(ys) + 1):
                w = (x, y)
                up = (w, (x + 1, y), (x, y + 1))
                down = ((x + 1, y), (x + 1, y + 1), (x, y + 1))
                for tri in (up, down):
                    c3 = (tri[0][0] + tri[1][0] + tri[2][0],
                          tri[0][1] + tri[1][1] + tri[2][1])
                    if geo.owner_violation(fi, c3) is None:
                        index[_tri_key(fi, tri)] = len(owned)
                        owned.append((fi, tri))
    expected = 20 * c.triangulation_number
    assert len(owned) == expected, f"owned {len(owned)} triangles, expected {expected}"

    rotation = []
    for fi, tri in owned:
        row = []
        for i in range(3):
            u, v = tri[i], tri[(i + 1) % 3]
            t = tri[(i + 2) % 3]
            apex = _esub(_eadd(u, v), t)
            gi, ntri = geo.resolve(fi, (v, u, apex))
            row.append(index[_tri_key(gi, ntri)])
        rotation.append(tuple(row))

    return validate_fullerene(build_from_rotation(rotation))


def minimal_separation_fullerene(d: int) -> list[Fullerene]:
    """The smallest fullerene(s) with pentagon separation at least d.

    d = 1 gives the dodecahedron; even d gives the single (d/2, d/2)
    icosahedral fullerene on 15d^2 vertices; odd d >= 3 gives the mirror pair
    with coordinates (ceil(d/2), floor(d/2)) and its reverse on 15d^2 + 5
    vertices.
    """
    if d < 1:
        raise InvalidD(f"d must be >= 1, got {d}")
    if d == 1:
        return [goldberg(CoxeterCoords(1, 0))]
    if d % 2 == 0:
        return [goldberg(CoxeterCoords(d // 2, d // 2))]
    hi, lo = (d + 1) // 2, d // 2
    return [goldberg(CoxeterCoords(hi, lo)), goldberg(CoxeterCoords(lo, hi))]
