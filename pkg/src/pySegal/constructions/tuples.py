"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Levels made of tuples of partial-monoid elements

A TupleLevel holds its tuples as rows of an int64 array in lexicographic
order. Each row is also encoded as one integer in base |M|, so finding
the index of a computed tuple is a binary search. Structure maps are
built by transforming all rows at once and looking the results up.
"""

from typing import Optional

import numpy as np

import pySegal
from pySegal.exceptions import CorruptedStateError, TruncationError
from pySegal.finset import FinMap, FinSet
from pySegal.pmonoid import UNDEFINED, PartialMonoid

logger = pySegal.getLogger('Constructions.Tuples')

# Keys must stay well inside int64
_KEY_LIMIT = 2**62


def tuple_label(m: PartialMonoid, row) -> str:
    return '(' + ','.join(m.label(int(x)) for x in row) + ')'


class TupleLevel:

    def __init__(self, monoid: PartialMonoid, rows: np.ndarray):
        rows = np.asarray(rows, dtype=np.int64)
        if rows.ndim != 2:
            raise CorruptedStateError(f"Tuple rows of shape {rows.shape}")
        base = max(monoid.size, 2)
        width = rows.shape[1]
        if base ** width >= _KEY_LIMIT:
            raise TruncationError(
                f"Tuples of width {width} over {monoid.size} elements "
                "are too many to index")
        self._monoid = monoid
        self._rows = rows
        self._rows.setflags(write=False)
        self._base = base
        self._keys = self._encode(rows)
        if self._keys.size > 1 and np.any(np.diff(self._keys) <= 0):
            raise CorruptedStateError("Tuple rows are not in strict order")
        self._finset = None

    def _encode(self, rows: np.ndarray) -> np.ndarray:
        keys = np.zeros(rows.shape[0], dtype=np.int64)
        for column in range(rows.shape[1]):
            keys = keys * self._base + rows[:, column]
        return keys

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    @property
    def width(self) -> int:
        return self._rows.shape[1]

    @property
    def size(self) -> int:
        return self._rows.shape[0]

    @property
    def finset(self) -> FinSet:
        if self._finset is None:
            self._finset = FinSet(
                self.size,
                [tuple_label(self._monoid, row) for row in self._rows])
        return self._finset

    def tuple_at(self, index: int) -> tuple:
        return tuple(self._rows[index].tolist())

    def index_of(self, rows: np.ndarray) -> np.ndarray:
        """
        Index of each row, all of which must be tuples of this level
        """
        rows = np.asarray(rows, dtype=np.int64)
        if rows.shape[1] != self.width:
            raise CorruptedStateError(
                f"Rows of width {rows.shape[1]} at a level of "
                f"width {self.width}")
        if rows.size and rows.min() < 0:
            raise CorruptedStateError(
                "An undefined product appeared in a structure map")
        keys = self._encode(rows)
        found = np.searchsorted(self._keys, keys)
        clipped = np.minimum(found, max(self.size - 1, 0))
        if self.size == 0 or np.any(self._keys[clipped] != keys):
            missing = rows[np.nonzero(
                (found >= self.size) | (self._keys[clipped] != keys))[0][0]]
            raise CorruptedStateError(
                f"{tuple_label(self._monoid, missing)} is not at this level")
        return found

    def map_to(self, target: "TupleLevel", rows: np.ndarray) -> FinMap:
        """
        The map sending row k of this level to rows[k] of the target
        """
        return FinMap(self.finset, target.finset, target.index_of(rows))

    def __repr__(self):
        return f"TupleLevel(width={self.width}, size={self.size})"


def enumerate_composable(m: PartialMonoid, width: int,
                         total: Optional[int] = None) -> TupleLevel:
    """
    All tuples (x_1, ..., x_width) whose product is defined, and equal to
    total if that is given, in lexicographic order
    """
    if width < 0:
        raise TruncationError(f"Negative tuple width {width}")
    rows = np.zeros((1, 0), dtype=np.int64)
    products = np.array([m.identity], dtype=np.int64)
    for _ in range(width):
        candidates = m.op[products]
        # row-major nonzero keeps lexicographic order
        r, y = np.nonzero(candidates != UNDEFINED)
        rows = np.column_stack((rows[r], y)).astype(np.int64)
        products = candidates[r, y]
    if total is not None:
        keep = products == total
        rows = rows[keep]
    logger.debug(f"{rows.shape[0]} composable tuples of width {width}")
    return TupleLevel(m, rows)


# Row transformations, each acting on all rows at once

def multiply_columns(m: PartialMonoid, rows: np.ndarray,
                     into: int, other: int) -> np.ndarray:
    """
    Column `into` becomes into·other, then column `other` is removed
    """
    result = np.array(rows, dtype=np.int64, copy=True)
    result[:, into] = m.op[rows[:, into], rows[:, other]]
    return np.delete(result, other, axis=1)


def drop_column(rows: np.ndarray, column: int) -> np.ndarray:
    return np.delete(rows, column, axis=1)


def insert_identity(m: PartialMonoid, rows: np.ndarray,
                    position: int) -> np.ndarray:
    return np.insert(rows, position, m.identity, axis=1)


def swap_columns(rows: np.ndarray, a: int, b: int) -> np.ndarray:
    order = list(range(rows.shape[1]))
    order[a], order[b] = order[b], order[a]
    return rows[:, order]


def rotate_left(rows: np.ndarray) -> np.ndarray:
    """
    (x_0, x_1, ..., x_n) -> (x_1, ..., x_n, x_0)
    """
    return np.roll(rows, -1, axis=1)


def row_products(m: PartialMonoid, rows: np.ndarray) -> np.ndarray:
    """
    The product of each row, UNDEFINED where it doesn't exist
    """
    extended = m.extended_op()
    products = np.full(rows.shape[0], m.identity, dtype=np.int64)
    for column in range(rows.shape[1]):
        products = extended[products, rows[:, column]]
    return products
