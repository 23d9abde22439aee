import numpy as np
import pytest
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import floyd_warshall

from pentasep import (
    CoxeterCoords,
    face_distance_matrix,
    goldberg,
    pentagon_separation,
    separation_histogram,
)
from pentasep.planegraph import dual_adjacency
from pentasep.separation import cumulative_counts, is_ipr
from pentasep.spiral import generate


def oracle_matrix(f):
    adj = dual_adjacency(f)
    n = len(adj)
    m = np.zeros((n, n))
    for v, nbrs in enumerate(adj):
        for u in nbrs:
            m[v, u] = 1
    return floyd_warshall(csr_matrix(m), unweighted=True)


def oracle_separation(f):
    d = oracle_matrix(f)
    p = f.pentagon_faces
    return int(min(d[a, b] for a in p for b in p if a < b))


@pytest.mark.parametrize("pq", [(1, 0), (1, 1), (2, 1)])
def test_matrix_matches_floyd_warshall(pq):
    f = goldberg(CoxeterCoords(*pq))
    got = face_distance_matrix(f)
    full = oracle_matrix(f)
    p = f.pentagon_faces
    for i, row in enumerate(got):
        assert list(row) == [int(full[p[i], q]) for q in p]


def test_separation_matches_oracle_small_isomers():
    # full check up to 36 vertices here; 38-44 run in the acceptance suite
    for n in range(20, 37, 2):
        for f in generate(n):
            assert pentagon_separation(f).separation == oracle_separation(f)


def test_report_fields(c60):
    rep = pentagon_separation(c60)
    assert rep.separation == 2
    assert is_ipr(c60)


def test_c20_separation(c20):
    assert pentagon_separation(c20).separation == 1
    assert not is_ipr(c20)


def test_histogram_and_cumulative(c20, c60):
    hist = separation_histogram([c20, c60, c60])
    assert hist == {1: 1, 2: 2}
    assert cumulative_counts(hist, [1, 2, 3]) == {1: 3, 2: 2, 3: 0}
