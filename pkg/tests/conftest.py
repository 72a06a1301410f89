import pytest

from latlin.gf import GFMatrix
from latlin.instances import boolean_lattice, chain, m3, n5, subspace_lattice

import oracles


@pytest.fixture(scope="session")
def gf2_3():
    return subspace_lattice(2, 3)


@pytest.fixture(scope="session")
def gf2_2():
    return subspace_lattice(2, 2)


@pytest.fixture(scope="session")
def gf2_4():
    return subspace_lattice(2, 4)


@pytest.fixture(scope="session")
def b3():
    return boolean_lattice(3)


SMALL = {
    "chain1": lambda: chain(1),
    "chain4": lambda: chain(4),
    "m3": m3,
    "n5": n5,
    "b2": lambda: boolean_lattice(2),
    "b3": lambda: boolean_lattice(3),
    "gf2_2": lambda: subspace_lattice(2, 2).lattice,
    "gf3_2": lambda: subspace_lattice(3, 2).lattice,
}


@pytest.fixture(params=sorted(SMALL))
def small_lattice(request):
    return SMALL[request.param]()


def leq_matrix(L):
    return [[L.leq(x, y) for y in range(L.size)] for x in range(L.size)]


_endo_cache = {}


def join_endos(L):
    """All 0-preserving join endomorphisms of a small lattice, from the brute oracle."""
    key = (L.size, L.down)
    if key not in _endo_cache:
        _endo_cache[key] = oracles.all_join_endos(leq_matrix(L))
    return _endo_cache[key]


JORDAN3 = GFMatrix.from_rows(2, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
PROJ2 = GFMatrix.from_rows(2, [[1, 0, 0], [0, 1, 0], [0, 0, 0]])
BLOCK4 = GFMatrix.from_rows(2, [[1, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
