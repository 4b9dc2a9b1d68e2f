"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Exact linear algebra over the rationals

Matrices are numpy object arrays holding fractions.Fraction (or int).
Determinant and rank use fraction-free (Bareiss) elimination on
integer-scaled rows, inversion uses Gauss-Jordan on Fractions.
"""

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from pySegal.exceptions import SegalValueError


def fraction_matrix(values) -> np.ndarray:
    """
    An object array of Fraction with the shape of values
    """
    source = np.asarray(values, dtype=object)
    result = np.empty(source.shape, dtype=object)
    for index, value in np.ndenumerate(source):
        result[index] = Fraction(value)
    return result


def fraction_vector(values: Sequence) -> np.ndarray:
    return fraction_matrix(list(values))


def identity_matrix(n: int) -> np.ndarray:
    return np.array([[Fraction(int(i == j)) for j in range(n)]
                     for i in range(n)], dtype=object).reshape(n, n)


def _integer_rows(matrix) -> Tuple[List[List[int]], int]:
    """
    Each row multiplied through by the lcm of its denominators,
    along with the product of those multipliers
    """
    rows = []
    scale = 1
    for row in np.asarray(matrix, dtype=object):
        fractions = [Fraction(v) for v in row]
        multiplier = 1
        for v in fractions:
            multiplier = math.lcm(multiplier, v.denominator)
        rows.append([int(v * multiplier) for v in fractions])
        scale *= multiplier
    return rows, scale


def determinant(matrix) -> Fraction:
    source = np.asarray(matrix, dtype=object)
    if source.ndim != 2 or source.shape[0] != source.shape[1]:
        raise SegalValueError(
            f"Determinant needs a square matrix, not {source.shape}")
    n = source.shape[0]
    if n == 0:
        return Fraction(1)
    rows, scale = _integer_rows(source)
    sign = 1
    previous = 1
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            factor = rows[i][k]
            for j in range(k + 1, n):
                # Sylvester's identity makes this division exact
                rows[i][j] = (rows[i][j] * pivot
                              - factor * rows[k][j]) // previous
            rows[i][k] = 0
        previous = pivot
    return Fraction(sign * rows[n - 1][n - 1], scale)


def rank(matrix) -> int:
    source = np.asarray(matrix, dtype=object)
    if source.ndim != 2 or source.size == 0:
        return 0
    rows, _ = _integer_rows(source)
    n_rows, n_cols = source.shape
    previous = 1
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0),
                         None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, n_rows):
            factor = rows[i][c]
            rows[i] = [(rows[i][k] * pivot - factor * rows[r][k]) // previous
                       for k in range(n_cols)]
        previous = pivot
        r += 1
        if r == n_rows:
            break
    return r


def inverse_matrix(matrix) -> np.ndarray:
    x = fraction_matrix(matrix)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise SegalValueError(
            f"Inverse needs a square matrix, not {x.shape}")
    n = x.shape[0]
    y = identity_matrix(n)

    # downward elimination: make lower triangle zero and main diagonal 1.
    for i in range(n):
        for j in range(i, n):
            if x[j, i] != 0:
                if i != j:
                    x[[i, j]] = x[[j, i]]
                    y[[i, j]] = y[[j, i]]
                break
        else:
            raise SegalValueError("matrix is not invertible")

        y[i, :] /= x[i, i]
        x[i, :] /= x[i, i]

        for j in range(i + 1, n):
            y[j, :] -= x[j, i] * y[i, :]
            x[j, :] -= x[j, i] * x[i, :]

    # upward elimination: zero the upper triangle.
    for j in range(n - 2, -1, -1):
        for i in range(j + 1, n):
            y[j, :] -= x[j, i] * y[i, :]
            x[j, :] -= x[j, i] * x[i, :]

    return y


class EchelonBasis:
    """
    Incrementally grown basis of a subspace of Q^dimension

    Each stored row has a leading 1 at its pivot and zeros at the
    pivots of every earlier row.
    """

    def __init__(self, dimension: int):
        self._dimension = dimension
        self._rows: List[Tuple[int, np.ndarray]] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def is_full(self) -> bool:
        return self.rank == self._dimension

    def reduce(self, vector) -> np.ndarray:
        v = fraction_vector(vector)
        for pivot, row in self._rows:
            if v[pivot] != 0:
                v = v - v[pivot] * row
        return v

    def add(self, vector) -> bool:
        """
        True if the vector was independent of the basis so far
        """
        v = self.reduce(vector)
        pivot: Optional[int] = next(
            (i for i in range(self._dimension) if v[i] != 0), None)
        if pivot is None:
            return False
        self._rows.append((pivot, v / v[pivot]))
        return True
