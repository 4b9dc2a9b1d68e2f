"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Adjoining a basepoint to a Gamma-set, the L-simplex set of a commutative
partial monoid, and the comparisons between those and the nerve

The L-simplex set has at level n the tuples (x_0, ..., x_n) with
x_0···x_n = L, positions counted from 0:

    d_i         replaces x_i, x_{i+1} by x_i·x_{i+1}      i < n
    d_n         (x_0·x_n, x_1, ..., x_{n-1})
    s_i         inserts e after x_i
    tau         (x_1, ..., x_n, x_0)
    theta_i     swaps x_i and x_{i+1}                      1 <= i <= n-1
"""

from typing import List, NamedTuple, Optional

import numpy as np

import pySegal
from pySegal.check_report import CheckReport, ViolationCollector
from pySegal.constructions.nerve import nerve_levels, require_commutative
from pySegal.constructions.tuples import (
    TupleLevel, drop_column, enumerate_composable, insert_identity,
    multiply_columns, rotate_left, row_products, swap_columns,
)
from pySegal.exceptions import (
    CorruptedStateError, OrthocomplementError, SegalValueError,
    TruncationError,
)
from pySegal.finset import FinMap
from pySegal.pmonoid import (
    Complement, PartialMonoid, has_orthocomplement_property, orthocomplement,
)
from pySegal.simplicial.relations import require_structure
from pySegal.simplicial.structured import (
    Flavor, TruncatedStructuredSet, composite,
)
from pySegal.simplicial.synthesis import (
    check_structure_morphism, component,
)

logger = pySegal.getLogger('Constructions.Simplex')


class SimplexLevels (NamedTuple):
    structured: TruncatedStructuredSet
    levels: List[TupleLevel]


def basepoint_adjoin(X: TruncatedStructuredSet,
                     m: Optional[PartialMonoid] = None) \
        -> TruncatedStructuredSet:
    """
    The cosymmetric set with level n the level n+1 of the Gamma-set X

        d^_i = d_{i+1}                      i < n
        d^_n = d_1 theta_2 ... theta_n
        s^_i = s_{i+1}
        theta^_i = theta_{i+1}
        tau^ = theta_n ... theta_1

    The result is truncated one level below X. When the monoid X came
    from is given, it is checked to be commutative.
    """
    require_structure(X, theta=True)
    if m is not None:
        require_commutative(m)
    if X.truncation < 1:
        raise TruncationError(
            "Adjoining a basepoint needs X at truncation 1 or more")
    N = X.truncation - 1

    levels = [X.level(n + 1) for n in range(N + 1)]
    face = [[]]
    for n in range(1, N + 1):
        row = [X.d(n + 1, i + 1) for i in range(n)]
        row.append(composite(X.d(n + 1, 1),
                             X.theta_product(n + 1, list(range(2, n + 1)))))
        face.append(row)
    degeneracy = [[X.s(n + 1, i + 1) for i in range(n + 1)]
                  for n in range(N)]
    tau = [X.theta_product(n + 1, list(range(n, 0, -1)))
           for n in range(N + 1)]
    theta = [[X.th(n + 1, i + 1) for i in range(1, n)]
             for n in range(N + 1)]
    result = TruncatedStructuredSet(levels, face, degeneracy, tau, theta,
                                    flavor=Flavor.COSYMMETRIC)
    logger.info(f"Adjoined a basepoint: {result}")
    return result


def _check_element(m: PartialMonoid, L: int):
    if isinstance(L, bool) or not isinstance(L, (int, np.integer)) \
            or not 0 <= L < m.size:
        raise SegalValueError(f"{L!r} is not an element of {m}")


def simplex_levels(m: PartialMonoid, L: int, N: int) -> SimplexLevels:
    require_commutative(m)
    _check_element(m, L)
    if N < 0:
        raise TruncationError(f"Negative truncation {N}")
    levels = [enumerate_composable(m, n + 1, total=L) for n in range(N + 1)]

    face = [[]]
    for n in range(1, N + 1):
        rows = levels[n].rows
        row = [levels[n].map_to(levels[n - 1],
                                multiply_columns(m, rows, i, i + 1))
               for i in range(n)]
        row.append(levels[n].map_to(levels[n - 1],
                                    multiply_columns(m, rows, 0, n)))
        face.append(row)
    degeneracy = [
        [levels[n].map_to(levels[n + 1],
                          insert_identity(m, levels[n].rows, i + 1))
         for i in range(n + 1)]
        for n in range(N)]
    tau = [levels[n].map_to(levels[n], rotate_left(levels[n].rows))
           for n in range(N + 1)]
    theta = [
        [levels[n].map_to(levels[n], swap_columns(levels[n].rows, i, i + 1))
         for i in range(1, n)]
        for n in range(N + 1)]

    X = TruncatedStructuredSet([level.finset for level in levels],
                               face, degeneracy, tau, theta,
                               flavor=Flavor.COSYMMETRIC)
    logger.info(f"{m.label(L)}-simplex set of {m} up to N={N}, "
                f"sizes {[level.size for level in levels]}")
    return SimplexLevels(X, levels)


def simplex_set(m: PartialMonoid, L: int, N: int) -> TruncatedStructuredSet:
    return simplex_levels(m, L, N).structured


def _drop_first(source: SimplexLevels, target: List[TupleLevel]) \
        -> List[FinMap]:
    return [level.map_to(target[n], drop_column(level.rows, 0))
            for n, level in enumerate(source.levels)]


def simplex_to_nerve_morphism(m: PartialMonoid, L: int, N: int) \
        -> List[FinMap]:
    """
    (x_0, x_1, ..., x_n) -> (x_1, ..., x_n), level by level

    Raises CorruptedStateError if the maps fail to commute with faces,
    degeneracies and theta.
    """
    simplex = simplex_levels(m, L, N)
    target = nerve_levels(m, N)
    maps = _drop_first(simplex, target.levels)
    report = check_structure_morphism(maps, simplex.structured,
                                      target.structured, bijective=False,
                                      with_tau=False, with_theta=True)
    if not report.passed:
        raise CorruptedStateError(
            f"Dropping x_0 is not a Gamma-map: {report.violations[0]}")
    return maps


def induced_cyclic_on_nerve(m: PartialMonoid, L: int, N: int) \
        -> TruncatedStructuredSet:
    """
    The nerve with

        tau (x_1, ..., x_n) = (x_2, ..., x_n, (x_1···x_n)^perp)

    where perp is relative to L. The result is checked to be isomorphic,
    with every structure map, to the L-simplex set.
    """
    _check_element(m, L)
    if not has_orthocomplement_property(m, L):
        complements = orthocomplement(m, L)
        bad = next(x for x, y in complements.items()
                   if isinstance(y, Complement))
        raise OrthocomplementError(
            f"{m.label(bad)} has {complements[bad].value} complement "
            f"relative to {m.label(L)}")
    complements = orthocomplement(m, L)
    perp = np.array([complements[x] for x in range(m.size)],
                    dtype=np.int64)

    plain = nerve_levels(m, N)
    levels = plain.levels
    tau = [FinMap.identity(levels[0].finset)]
    for n in range(1, N + 1):
        rows = levels[n].rows
        products = row_products(m, rows)
        image = np.column_stack((rows[:, 1:], perp[products]))
        tau.append(levels[n].map_to(levels[n], image))
    X = plain.structured
    X = TruncatedStructuredSet(X.levels, X.face_table, X.degeneracy_table,
                               tau, X.theta_table,
                               flavor=Flavor.COSYMMETRIC)

    simplex = simplex_levels(m, L, N)
    maps = _drop_first(simplex, levels)
    report = check_structure_morphism(maps, simplex.structured, X,
                                      bijective=True)
    if not report.passed:
        raise CorruptedStateError(
            f"Induced structure is not isomorphic to the "
            f"{m.label(L)}-simplex set: {report.violations[0]}")
    logger.info(f"Induced cyclic structure on the nerve of {m} "
                f"relative to {m.label(L)}")
    return X


def check_simplex_last_face(m: PartialMonoid, L: int, N: int) \
        -> CheckReport:
    """
    The last face (x_0·x_n, x_1, ..., x_{n-1}) against d_1 theta_2 ...
    theta_n on the nerve one level up, over L
    """
    direct = simplex_set(m, L, N)
    derived = component(basepoint_adjoin(nerve_levels(m, N + 1).structured),
                        L)
    vc = ViolationCollector(N, log=logger)
    vc.note('simplex.last_face')
    for n in range(1, N + 1):
        vc.compare('simplex.last_face', n, (n,),
                   direct.d(n, n), derived.d(n, n))
    return vc.report('simplex last face')
