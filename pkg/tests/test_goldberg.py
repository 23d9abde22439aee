import pytest

from pentasep import (
    CHIRALITY_SENSITIVE,
    CoxeterCoords,
    are_isomorphic,
    coxeter_vertex_count,
    goldberg,
    minimal_separation_fullerene,
    pentagon_separation,
)
from pentasep.errors import InvalidD


@pytest.mark.parametrize("p,q", [(p, q) for p in (1, 2, 3) for q in range(1, p + 1)])
def test_goldberg_laws(p, q):
    f = goldberg(CoxeterCoords(p, q))
    assert f.vertex_count == 20 * (p * p + p * q + q * q)
    assert f.vertex_count == coxeter_vertex_count(CoxeterCoords(p, q))
    assert pentagon_separation(f).separation == p + q


def test_goldberg_p0_axis():
    f = goldberg(CoxeterCoords(1, 0))
    assert f.vertex_count == 20
    assert pentagon_separation(f).separation == 1


def test_mirror_pair():
    a = goldberg(CoxeterCoords(2, 1))
    b = goldberg(CoxeterCoords(1, 2)) if _coords_ok(1, 2) else a.mirror()
    assert are_isomorphic(a, b)


def _coords_ok(p, q):
    try:
        CoxeterCoords(p, q)
        return True
    except Exception:
        return False


@pytest.mark.parametrize("d,nv", [(2, 60), (3, 140), (4, 240), (5, 380)])
def test_minimal_separation_sizes(d, nv):
    outs = minimal_separation_fullerene(d)
    assert len(outs) in (1, 2)
    for f in outs:
        assert f.vertex_count == nv
        assert pentagon_separation(f).separation == d


@pytest.mark.parametrize("d", [3, 5])
def test_minimal_odd_d_chirality(d):
    outs = minimal_separation_fullerene(d)
    assert len(outs) == 2
    a, b = outs
    assert are_isomorphic(a, b)
    assert not are_isomorphic(a, b, CHIRALITY_SENSITIVE)


def test_minimal_invalid_d():
    with pytest.raises(InvalidD):
        minimal_separation_fullerene(0)
