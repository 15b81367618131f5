import pytest

from qproj import build_boolean_geometry, build_projective_space

# the corpus every geometry-level check runs against
PROJECTIVE_PARAMS = [(q, n) for q in (2, 3, 4) for n in (1, 2, 3)]
BOOLEAN_SIZES = [1, 2, 3, 4, 5, 6]


@pytest.fixture(scope="session")
def geometry_corpus():
    geoms = {}
    for q, n in PROJECTIVE_PARAMS:
        geoms[f"P{n}(F{q})"] = build_projective_space(q, n)
    for n in BOOLEAN_SIZES:
        geoms[f"Boolean({n})"] = build_boolean_geometry(n)
    return geoms


@pytest.fixture(scope="session")
def fano(geometry_corpus):
    return geometry_corpus["P2(F2)"]
