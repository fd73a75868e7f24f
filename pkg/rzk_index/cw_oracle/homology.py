# -*- coding: utf-8 -*-
import logging

from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..extended_nat import ExtendedNat
from ..simplicial_core import SimplicialComplex
from .cells import DEFAULT_MAX_CELLS, Cell, build_cells
from .gf2 import pack_sparse, rank

logger = logging.getLogger(__name__)


class Mod2ChainComplex:
    """
    Cellular chain complex of the real moment-angle complex over GF(2).

    Every incidence coefficient is 1, so no orientations are tracked. Boundary
    matrices have one packed row per cell of the higher dimension.
    """

    def __init__(self, cells: Sequence[Cell], top_dim: int):
        self.top_dim = top_dim
        grouped: Dict[int, List[Cell]] = defaultdict(list)
        for cell in cells:
            grouped[cell.dim].append(cell)
        self.cells_by_dim: Dict[int, List[Cell]] = {
            dim: grouped.get(dim, []) for dim in range(top_dim + 1)
        }
        self._index: Dict[Cell, int] = {}
        for dim_cells in self.cells_by_dim.values():
            for position, cell in enumerate(dim_cells):
                self._index[cell] = position
        self._boundaries: Dict[int, np.ndarray] = {}
        self._ranks: Dict[int, int] = {}

    @classmethod
    def from_complex(
        cls, complex_: SimplicialComplex, max_cells: int = DEFAULT_MAX_CELLS
    ) -> "Mod2ChainComplex":
        return cls(build_cells(complex_, max_cells), complex_.dim + 1)

    def size(self, dim: int) -> int:
        return len(self.cells_by_dim.get(dim, []))

    def boundary_matrix(self, dim: int) -> np.ndarray:
        """
        Packed matrix of the boundary from ``dim``-cells to ``(dim - 1)``-cells
        """
        if dim not in self._boundaries:
            rows = [
                [self._index[face] for face in cell.boundary()]
                for cell in self.cells_by_dim.get(dim, [])
            ]
            self._boundaries[dim] = pack_sparse(rows, self.size(dim - 1))
        return self._boundaries[dim]

    def boundary_rank(self, dim: int) -> int:
        if dim <= 0 or dim > self.top_dim:
            return 0
        if dim not in self._ranks:
            self._ranks[dim] = rank(self.boundary_matrix(dim), self.size(dim - 1))
        return self._ranks[dim]

    def check_boundary_squared(self) -> bool:
        """
        ``∂∘∂ = 0``: the boundary rows of the faces of every cell cancel.
        """
        for dim in range(2, self.top_dim + 1):
            lower = self.boundary_matrix(dim - 1)
            for cell in self.cells_by_dim[dim]:
                indices = [self._index[face] for face in cell.boundary()]
                if np.bitwise_xor.reduce(lower[indices], axis=0).any():
                    logger.debug(f"Boundary of boundary of {cell} is not zero")
                    return False
        return True

    def betti_numbers(self) -> Tuple[int, ...]:
        betti = []
        for dim in range(self.top_dim + 1):
            cycles = self.size(dim) - self.boundary_rank(dim)
            betti.append(cycles - self.boundary_rank(dim + 1))
        return tuple(betti)


def mod2_homology(
    complex_: SimplicialComplex, max_cells: int = DEFAULT_MAX_CELLS
) -> Tuple[int, ...]:
    """
    Mod-2 Betti numbers ``b_0, ..., b_{dim K + 1}``.

    Examples
    --------
    >>> from rzk_index.simplicial_core import boundary_simplex
    >>> mod2_homology(boundary_simplex(3))
    (1, 0, 1)
    """
    betti = Mod2ChainComplex.from_complex(complex_, max_cells).betti_numbers()
    logger.debug(f"Betti numbers over GF(2): {betti}")
    return betti


def euler_characteristic(complex_: SimplicialComplex) -> int:
    """
    Closed form ``sum over faces sigma of (-1)^|sigma| 2^(m - |sigma|)``;
    needs no cells.

    Examples
    --------
    >>> from rzk_index.simplicial_core import boundary_simplex, full_simplex
    >>> euler_characteristic(boundary_simplex(3)), euler_characteristic(full_simplex(5))
    (2, 1)
    """
    m = complex_.m
    return sum(
        (-1) ** size * count * 2 ** (m - size)
        for size, count in enumerate(complex_.f_vector())
    )


def reduced_betti(betti: Sequence[int]) -> Tuple[int, ...]:
    """
    >>> reduced_betti((1, 0, 1))
    (0, 0, 1)
    """
    if not betti:
        return ()
    return (betti[0] - 1,) + tuple(betti[1:])


def connectivity_degree(delta: ExtendedNat, betti_length: int) -> int:
    """
    Number of leading reduced Betti numbers that have to vanish
    """
    if delta.is_infinite:
        return betti_length
    return min(delta.value, betti_length)


def verify_connectivity(
    complex_: SimplicialComplex, max_cells: int = DEFAULT_MAX_CELLS
) -> bool:
    """
    Reduced mod-2 homology vanishes below degree ``δ(K)``.

    Homology vanishing stands in for connectivity here; without the
    fundamental group a pass is evidence, not proof.
    """
    reduced = reduced_betti(mod2_homology(complex_, max_cells))
    bound = connectivity_degree(complex_.delta_number(), len(reduced))
    failing = [degree for degree in range(bound) if reduced[degree]]
    if failing:
        logger.warning(
            f"Reduced homology in degrees {failing} below δ = {complex_.delta_number()}"
        )
    return not failing
