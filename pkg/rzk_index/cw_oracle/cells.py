# -*- coding: utf-8 -*-
import logging

from dataclasses import dataclass
from typing import List

import numpy as np

from ..exceptions import TooManyCells, WidthMismatch
from ..simplicial_core import SimplicialComplex
from ..two_torus import GroupElement
from ..vertex_set import VertexSet, expand, popcount

logger = logging.getLogger(__name__)

DEFAULT_MAX_CELLS = 1 << 22


@dataclass(frozen=True)
class Cell:
    """
    Open cell of the real moment-angle complex inside the cube ``[-1, 1]^m``.

    Coordinates in ``sigma`` range over the open interval, every other
    coordinate is ``-1`` when it lies in ``negative`` and ``+1`` otherwise.
    """

    sigma: VertexSet
    negative: VertexSet

    def __post_init__(self):
        if self.sigma.bits & self.negative.bits:
            raise ValueError(
                "Sign pattern %s overlaps the interval coordinates %s"
                % (self.negative, self.sigma)
            )

    @property
    def dim(self) -> int:
        return len(self.sigma)

    def boundary(self) -> List["Cell"]:
        """
        Two facets per interval coordinate ``i``: ``x_i = +1`` and ``x_i = -1``.
        """
        faces = []
        for vertex in self.sigma:
            tau = self.sigma.remove(vertex)
            faces.append(Cell(tau, self.negative))
            faces.append(Cell(tau, self.negative.add(vertex)))
        return faces

    def __str__(self) -> str:
        return "(%s, -%s)" % (self.sigma, self.negative)


def cell_count(complex_: SimplicialComplex) -> int:
    """
    ``sum over faces sigma of 2^(m - |sigma|)``, the empty face included.

    Examples
    --------
    >>> from rzk_index.simplicial_core import boundary_simplex, full_simplex
    >>> cell_count(boundary_simplex(3)), cell_count(full_simplex(4))
    (26, 81)
    """
    m = complex_.m
    return sum(1 << (m - popcount(face)) for face in complex_.faces)


def check_cell_cap(complex_: SimplicialComplex, max_cells: int) -> int:
    """
    Exact cell count, or ``TooManyCells`` once it is known to exceed
    ``max_cells``. A facet ``F`` alone carries ``3^|F| 2^(m - |F|)`` cells, so
    oversized facets are rejected before any face is materialized.
    """
    m = complex_.m
    for facet in complex_.facet_bits:
        size = popcount(facet)
        lower = 3 ** size << (m - size)
        if lower > max_cells:
            raise TooManyCells(lower, max_cells, at_least=True)
    count = cell_count(complex_)
    if count > max_cells:
        raise TooManyCells(count, max_cells)
    return count


def build_cells(
    complex_: SimplicialComplex, max_cells: int = DEFAULT_MAX_CELLS
) -> List[Cell]:
    """
    Every cell, ordered by dimension, then face, then sign pattern.
    """
    count = check_cell_cap(complex_, max_cells)
    m = complex_.m
    full = (1 << m) - 1
    faces = sorted(
        (VertexSet(bits) for bits in complex_.faces), key=VertexSet.sort_key
    )
    cells = []
    for sigma in faces:
        complement = full & ~sigma.bits
        for pattern in range(1 << popcount(complement)):
            cells.append(Cell(sigma, VertexSet(expand(pattern, complement))))
    assert len(cells) == count
    logger.debug(f"Built {count} cells for complex on {m} vertices")
    return cells


def barycenter(cell: Cell, m: int) -> np.ndarray:
    """
    Centre of the cell: 0 on interval coordinates, the sign elsewhere.

    Examples
    --------
    >>> barycenter(Cell(VertexSet.of(2), VertexSet.of(3)), 3).tolist()
    [1, 0, -1]
    """
    point = np.ones(m, dtype=np.int8)
    for vertex in cell.sigma:
        point[vertex - 1] = 0
    for vertex in cell.negative:
        point[vertex - 1] = -1
    return point


def act(element: GroupElement, point: np.ndarray) -> np.ndarray:
    """
    Coordinatewise sign action ``(g_1 x_1, ..., g_m x_m)``
    """
    if element.m != point.shape[0]:
        raise WidthMismatch(element.m, point.shape[0])
    signs = np.ones(element.m, dtype=np.int8)
    for vertex in element.support:
        signs[vertex - 1] = -1
    return signs * point


def fixed_cells(
    complex_: SimplicialComplex,
    element: GroupElement,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> List[Cell]:
    """
    Cells mapped onto themselves by ``element``: exactly those whose interval
    coordinates cover ``supp(g)``, since a flipped sign coordinate moves the
    cell to another one.

    Examples
    --------
    >>> from rzk_index.simplicial_core import boundary_simplex
    >>> len(fixed_cells(boundary_simplex(3), GroupElement.from_string("100")))
    8
    >>> fixed_cells(boundary_simplex(3), GroupElement.from_string("111"))
    []
    """
    if element.m != complex_.m:
        raise WidthMismatch(complex_.m, element.m)
    support = element.support
    return [
        cell
        for cell in build_cells(complex_, max_cells)
        if support.is_subset(cell.sigma)
    ]
