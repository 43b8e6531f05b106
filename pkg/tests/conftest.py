import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from spherejoin import build_complex, simplex_boundary_on
from spherejoin.catalog import build_catalog


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()


@pytest.fixture
def square():
    return build_complex([{0, 1}, {1, 2}, {2, 3}, {3, 0}], 4)


@pytest.fixture
def pentagon():
    return build_complex([{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}], 5)


@pytest.fixture
def octahedron():
    k = simplex_boundary_on([0, 1]).join(simplex_boundary_on([2, 3]))
    return k.join(simplex_boundary_on([4, 5]))


def cycle(k):
    return build_complex([{i, (i + 1) % k} for i in range(k)], k)
