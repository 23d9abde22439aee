import random

import pytest

from pentasep import CoxeterCoords, goldberg, validate_fullerene
from pentasep.planegraph import relabel


@pytest.fixture(scope="session")
def c20():
    return goldberg(CoxeterCoords(1, 0))


@pytest.fixture(scope="session")
def c60():
    return goldberg(CoxeterCoords(1, 1))


@pytest.fixture(scope="session")
def c140():
    return goldberg(CoxeterCoords(2, 1))


def random_relabel(f, rng: random.Random):
    """A randomly relabeled copy of a fullerene (rotation cycles rotated too)."""
    perm = list(range(f.vertex_count))
    rng.shuffle(perm)
    g = relabel(f.graph, perm)
    rotation = []
    for nbrs in g.rotation:
        shift = rng.randrange(len(nbrs))
        rotation.append(nbrs[shift:] + nbrs[:shift])
    from pentasep.planegraph import build_from_rotation

    return validate_fullerene(build_from_rotation(rotation))
