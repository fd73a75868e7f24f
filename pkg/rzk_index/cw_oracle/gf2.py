# -*- coding: utf-8 -*-
import logging

from typing import Iterable, Sequence

import numpy as np

logger = logging.getLogger(__name__)

WORD_BITS = 64


def words_for(n_cols: int) -> int:
    return max(1, (n_cols + WORD_BITS - 1) // WORD_BITS)


def pack_dense(matrix: np.ndarray) -> np.ndarray:
    """
    Pack a 0/1 matrix into ``uint64`` words, column ``j`` at bit ``j % 64`` of
    word ``j // 64``.

    Examples
    --------
    >>> packed = pack_dense(np.array([[1, 0, 1], [0, 1, 0]]))
    >>> packed.shape, packed[:, 0].tolist()
    ((2, 1), [5, 2])
    """
    n_rows, n_cols = matrix.shape
    width = words_for(n_cols) * WORD_BITS
    padded = np.zeros((n_rows, width), dtype=np.uint8)
    padded[:, :n_cols] = matrix.astype(np.uint8) & 1
    packed = np.packbits(padded, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64).reshape(n_rows, -1)


def pack_sparse(rows: Sequence[Iterable[int]], n_cols: int) -> np.ndarray:
    """
    Pack rows given as lists of column indices. An index listed twice cancels,
    as it would over GF(2).
    """
    packed = np.zeros((len(rows), words_for(n_cols)), dtype=np.uint64)
    for row_index, columns in enumerate(rows):
        for column in columns:
            word, bit = divmod(column, WORD_BITS)
            packed[row_index, word] ^= np.uint64(1) << np.uint64(bit)
    return packed


def rank(packed: np.ndarray, n_cols: int) -> int:
    """
    Rank over GF(2) of a packed matrix by Gaussian elimination.

    Columns are eliminated left to right; the pivot is always the lowest row
    index holding the column, so the elimination is deterministic. The input is
    left untouched.

    Examples
    --------
    >>> rank(pack_dense(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])), 3)
    2
    >>> rank(pack_dense(np.eye(70, dtype=np.uint8)), 70)
    70
    """
    n_rows = packed.shape[0]
    if n_rows == 0 or n_cols == 0:
        return 0
    rows = packed.copy()
    found = 0
    one = np.uint64(1)
    for column in range(n_cols):
        word, bit = divmod(column, WORD_BITS)
        hits = np.flatnonzero((rows[found:, word] >> np.uint64(bit)) & one)
        if hits.size == 0:
            continue
        pivot = found + int(hits[0])
        if pivot != found:
            rows[[found, pivot]] = rows[[pivot, found]]
        others = found + hits[1:]
        if others.size:
            rows[others] ^= rows[found]
        found += 1
        if found == n_rows:
            break
    logger.debug(f"Eliminated {n_rows}x{n_cols} matrix, rank {found}")
    return found


def is_zero(packed: np.ndarray) -> bool:
    return not packed.any()
