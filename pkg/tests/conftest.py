# -*- coding: utf-8 -*-
import json
import logging

import pytest

from rzk_index.simplicial_core import SimplicialComplex, boundary_simplex, cone

logger = logging.getLogger(__name__)


@pytest.fixture(scope="session")
def boundary_triangle():
    return boundary_simplex(3)


@pytest.fixture(scope="session")
def four_cycle():
    return SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


@pytest.fixture(scope="session")
def glued_triangles():
    return SimplicialComplex.from_facets(4, [[1, 2, 3], [2, 3, 4]])


@pytest.fixture(scope="session")
def path4():
    return SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4]])


@pytest.fixture(scope="session")
def mixed_orders():
    """
    Every edge except {1, 2} and no triangles: minimal non-faces of orders
    2 and 3.
    """
    return SimplicialComplex.from_facets(
        5,
        [[1, 3], [1, 4], [1, 5], [2, 3], [2, 4], [2, 5], [3, 4], [3, 5], [4, 5]],
    )


@pytest.fixture(scope="session")
def cone_over_triangle(boundary_triangle):
    return cone(boundary_triangle)


@pytest.fixture
def write_problem(tmp_path):
    def write(content, name="problem.json"):
        path = tmp_path / name
        if not isinstance(content, str):
            content = json.dumps(content)
        path.write_text(content, encoding="utf-8")
        return str(path)

    return write
