import json

import pytest

from classes.generators import half_lattice_parts, pd_partition_parts, polygon, product_parts, simplex_multiple
from classes.nef_partition import validate
from classes.polytope import hull_from_vertices, translate


@pytest.fixture(scope="session")
def diamond():
    return polygon('diamond')


@pytest.fixture(scope="session")
def square():
    return polygon('square')


@pytest.fixture(scope="session")
def pd_33():
    return validate(pd_partition_parts([3, 3]))


@pytest.fixture(scope="session")
def quintic():
    """Newton polytope of a quintic in P^4, recentered so that 0 is interior"""
    return translate(simplex_multiple(5, 4), (-1, -1, -1, -1))


@pytest.fixture(scope="session")
def product_diamonds(diamond):
    return validate(product_parts([diamond, diamond]))


@pytest.fixture(scope="session")
def half_lattice():
    return validate(half_lattice_parts())


@pytest.fixture
def write_json(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding='utf-8')
        return str(path)
    return write
