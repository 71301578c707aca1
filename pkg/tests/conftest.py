import pytest

from knotsieve import enumerate_polyhedra, enumerate_tangles


@pytest.fixture(scope="session")
def tangles_c8():
    """The full tangle-class corpus through 8 crossings."""
    return list(enumerate_tangles(8))


@pytest.fixture(scope="session")
def polyhedra_v10():
    return list(enumerate_polyhedra(10))


@pytest.fixture(scope="session")
def polyhedra_v13():
    """The full polyhedron corpus through 13 vertices (several minutes)."""
    return list(enumerate_polyhedra(13))
