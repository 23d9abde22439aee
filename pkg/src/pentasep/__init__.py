"""Fullerene graphs by pentagon separation: construction, enumeration, surgery."""

from .planegraph import (
    Face,
    Fullerene,
    PlaneGraph,
    build_from_rotation,
    dual,
    plane_dual,
    trace_faces,
    validate_fullerene,
)
from .canonical import (
    CHIRALITY_SENSITIVE,
    MIRROR_IDENTIFIED,
    CanonicalForm,
    are_isomorphic,
    canonical_code,
)
from .separation import (
    SeparationReport,
    face_distance_matrix,
    pentagon_separation,
    separation_histogram,
)
from .goldberg import CoxeterCoords, coxeter_vertex_count, goldberg, minimal_separation_fullerene
from .spiral import GENERATION_BOUND, SpiralCode, count_table, generate, unwind, windup
from .patches import (
    BoundaryParams,
    Cap,
    Patch,
    add_ring,
    base_cap,
    boundary_params,
    build_separated,
    glue_caps,
    h_threshold,
    lemma1_transform,
    lemma2_extend,
    make_cap,
    patch_from_faces,
    pentagon_separation_patch,
    penthex_face_ball,
    penthex_vertex_ball_count,
    strip_ring,
    validate_patch,
)
from .planarcode import read_planar_code, read_text, write_planar_code, write_text
from .tables import emit_table, fixture_rows, verify_against_fixtures

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "GENERATION_BOUND",
    "SpiralCode",
    "count_table",
    "generate",
    "unwind",
    "windup",
    "BoundaryParams",
    "Cap",
    "Patch",
    "add_ring",
    "base_cap",
    "boundary_params",
    "build_separated",
    "glue_caps",
    "h_threshold",
    "lemma1_transform",
    "lemma2_extend",
    "make_cap",
    "patch_from_faces",
    "pentagon_separation_patch",
    "penthex_face_ball",
    "penthex_vertex_ball_count",
    "strip_ring",
    "validate_patch",
    "read_planar_code",
    "read_text",
    "write_planar_code",
    "write_text",
    "emit_table",
    "fixture_rows",
    "verify_against_fixtures",
    "Face",
    "Fullerene",
    "PlaneGraph",
    "build_from_rotation",
    "trace_faces",
    "validate_fullerene",
    "dual",
    "plane_dual",
    "CanonicalForm",
    "canonical_code",
    "are_isomorphic",
    "MIRROR_IDENTIFIED",
    "CHIRALITY_SENSITIVE",
    "SeparationReport",
    "face_distance_matrix",
    "pentagon_separation",
    "separation_histogram",
    "CoxeterCoords",
    "coxeter_vertex_count",
    "goldberg",
    "minimal_separation_fullerene",
]
