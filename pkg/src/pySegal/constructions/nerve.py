"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

The nerve of a partial monoid

Level n holds the tuples (x_1, ..., x_n) with x_1···x_n defined.
Positions in the docstrings below count from 1, as the tuples do.

    d_0         drops x_1
    d_i         replaces x_i, x_{i+1} by x_i·x_{i+1}      0 < i < n
    d_n         drops x_n
    s_i         inserts e after x_i
    theta_i     swaps x_i and x_{i+1}                      commutative only
"""

from typing import List, NamedTuple

import pySegal
from pySegal.constructions.tuples import (
    TupleLevel, drop_column, enumerate_composable, insert_identity,
    multiply_columns, swap_columns,
)
from pySegal.exceptions import NonCommutativeMonoidError, TruncationError
from pySegal.pmonoid import PartialMonoid, commutativity_witness
from pySegal.simplicial.structured import Flavor, TruncatedStructuredSet

logger = pySegal.getLogger('Constructions.Nerve')


class NerveLevels (NamedTuple):
    structured: TruncatedStructuredSet
    levels: List[TupleLevel]


def require_commutative(m: PartialMonoid):
    witness = commutativity_witness(m)
    if witness is not None:
        x, y = witness
        raise NonCommutativeMonoidError(
            f"{m.label(x)}·{m.label(y)} and {m.label(y)}·{m.label(x)} "
            "differ, so there is no permutation action")


def nerve_levels(m: PartialMonoid, N: int, gamma: bool = True) \
        -> NerveLevels:
    if N < 0:
        raise TruncationError(f"Negative truncation {N}")
    if gamma:
        require_commutative(m)
    levels = [enumerate_composable(m, n) for n in range(N + 1)]

    face = [[]]
    for n in range(1, N + 1):
        rows = levels[n].rows
        row = []
        for i in range(n + 1):
            if i == 0:
                image = drop_column(rows, 0)
            elif i == n:
                image = drop_column(rows, n - 1)
            else:
                image = multiply_columns(m, rows, i - 1, i)
            row.append(levels[n].map_to(levels[n - 1], image))
        face.append(row)

    degeneracy = [
        [levels[n].map_to(levels[n + 1],
                          insert_identity(m, levels[n].rows, i))
         for i in range(n + 1)]
        for n in range(N)]

    theta = None
    if gamma:
        theta = [
            [levels[n].map_to(levels[n],
                              swap_columns(levels[n].rows, i - 1, i))
             for i in range(1, n)]
            for n in range(N + 1)]

    X = TruncatedStructuredSet(
        [level.finset for level in levels], face, degeneracy,
        theta=theta, flavor=Flavor.GAMMA if gamma else Flavor.PLAIN)
    logger.info(f"Nerve of {m} up to N={N}, "
                f"sizes {[level.size for level in levels]}")
    return NerveLevels(X, levels)


def nerve(m: PartialMonoid, N: int, gamma: bool = True) \
        -> TruncatedStructuredSet:
    """
    The nerve truncated at N, with the permutation action when gamma
    """
    return nerve_levels(m, N, gamma).structured
