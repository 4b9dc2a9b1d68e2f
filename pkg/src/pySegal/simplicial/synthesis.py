"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Putting a paracyclic structure and a Gamma structure on the same 2-Segal
set together into a cosymmetric one, and the comparisons needed to
round-trip that: projections, components, equality and structure
morphisms
"""

from typing import Optional, Sequence

import numpy as np

import pySegal
from pySegal.check_report import CheckReport, ViolationCollector
from pySegal.exceptions import (
    DomainMismatchError, StructureTableError, SynthesisError,
)
from pySegal.finset import FinMap, FinSet
from pySegal.simplicial.relations import (
    check_cosymmetric_relations, require_structure,
)
from pySegal.simplicial.segal import check_two_segal
from pySegal.simplicial.structured import (
    Flavor, TruncatedStructuredSet, composite,
)

logger = pySegal.getLogger('Simplicial.Synthesis')


def strip_to_paracyclic(X: TruncatedStructuredSet) -> TruncatedStructuredSet:
    require_structure(X, tau=True)
    return TruncatedStructuredSet(X.levels, X.face_table,
                                  X.degeneracy_table, tau=X.tau_table,
                                  flavor=Flavor.PARACYCLIC)


def strip_to_gamma(X: TruncatedStructuredSet) -> TruncatedStructuredSet:
    require_structure(X, theta=True)
    return TruncatedStructuredSet(X.levels, X.face_table,
                                  X.degeneracy_table, theta=X.theta_table,
                                  flavor=Flavor.GAMMA)


def _tables_equal(a, b) -> bool:
    if a is None or b is None:
        return a is None and b is None
    if len(a) != len(b):
        return False
    for row_a, row_b in zip(a, b):
        if isinstance(row_a, FinMap):
            if row_a != row_b:
                return False
        elif len(row_a) != len(row_b) \
                or any(f != g for f, g in zip(row_a, row_b)):
            return False
    return True


def _same_underlying(X: TruncatedStructuredSet,
                     Y: TruncatedStructuredSet) -> bool:
    return (X.truncation == Y.truncation
            and all(a.matches(b) for a, b in zip(X.levels, Y.levels))
            and _tables_equal(X.face_table, Y.face_table)
            and _tables_equal(X.degeneracy_table, Y.degeneracy_table))


def structured_sets_equal(X: TruncatedStructuredSet,
                          Y: TruncatedStructuredSet) -> bool:
    """
    Same flavor, level sizes and every stored table, entry for entry
    """
    return (X.flavor == Y.flavor
            and _same_underlying(X, Y)
            and _tables_equal(X.tau_table, Y.tau_table)
            and _tables_equal(X.theta_table, Y.theta_table))


def synthesize_cosymmetric(P: TruncatedStructuredSet,
                           Q: TruncatedStructuredSet) \
        -> TruncatedStructuredSet:
    """
    The cosymmetric set with P's tau and Q's theta

    P and Q must share levels, faces and degeneracies, and that
    simplicial set must pass the 2-Segal check. The result carries the
    combined check report; a violation of any relation raises
    SynthesisError with that report, since it means P or Q was not
    genuinely paracyclic or Gamma.
    """
    require_structure(P, tau=True)
    require_structure(Q, theta=True)
    if not _same_underlying(P, Q):
        raise SynthesisError(
            "Paracyclic and Gamma inputs have different simplicial data")

    segal = check_two_segal(P.as_plain())
    if not segal.passed:
        raise SynthesisError(
            f"Underlying simplicial set is not 2-Segal: {segal.summary()}",
            segal)

    X = TruncatedStructuredSet(P.levels, P.face_table, P.degeneracy_table,
                               tau=P.tau_table, theta=Q.theta_table,
                               flavor=Flavor.COSYMMETRIC)
    report = segal + check_cosymmetric_relations(X)
    if not report.passed:
        first = report.violations[0]
        raise SynthesisError(
            f"Synthesized structure fails, first at {first}", report)
    logger.info(f"Synthesized {X}, {report.summary()}")
    return X.with_report(report)


def component(X: TruncatedStructuredSet, u: int) -> TruncatedStructuredSet:
    """
    The elements lying over u in X_0 by iterated d_0, with every stored
    table restricted to them
    """
    base = X.level(0)
    if not 0 <= u < base.size:
        raise StructureTableError(f"{u} is not an element of X_0")

    over = [np.array([u], dtype=np.int64)]
    to_base = np.arange(base.size, dtype=np.int64)
    for n in range(1, X.truncation + 1):
        to_base = to_base[X.d(n, 0).image]
        over.append(np.nonzero(to_base == u)[0])

    levels = []
    positions = []
    for n, members in enumerate(over):
        level = X.level(n)
        labels = [level.label(int(i)) for i in members] \
            if level.is_labeled else None
        levels.append(FinSet(members.size, labels))
        position = np.full(level.size, -1, dtype=np.int64)
        position[members] = np.arange(members.size, dtype=np.int64)
        positions.append(position)

    def restrict(fmap: FinMap, source: int, target: int) -> FinMap:
        image = positions[target][fmap.image[over[source]]]
        if image.size and image.min() < 0:
            raise StructureTableError(
                f"A structure map X_{source} -> X_{target} leaves "
                f"the component over {u}")
        return FinMap(levels[source], levels[target], image)

    N = X.truncation
    face = [[]] + [[restrict(X.d(n, i), n, n - 1) for i in range(n + 1)]
                   for n in range(1, N + 1)]
    degeneracy = [[restrict(X.s(n, i), n, n + 1) for i in range(n + 1)]
                  for n in range(N)]
    tau = None
    if X.has_tau:
        tau = [restrict(X.t(n), n, n) for n in range(N + 1)]
    theta = None
    if X.has_theta:
        theta = [[restrict(X.th(n, i), n, n) for i in range(1, n)]
                 for n in range(N + 1)]
    result = TruncatedStructuredSet(levels, face, degeneracy, tau, theta,
                                    flavor=X.flavor)
    logger.debug(f"Component over {base.label(u)}: {result}")
    return result


def check_structure_morphism(maps: Sequence[FinMap],
                             X: TruncatedStructuredSet,
                             Y: TruncatedStructuredSet,
                             bijective: bool = True,
                             with_tau: Optional[bool] = None,
                             with_theta: Optional[bool] = None) \
        -> CheckReport:
    """
    Levelwise maps f_n : X_n -> Y_n commuting with faces, degeneracies
    and, where both sides have them, tau and theta
    """
    N = X.truncation
    if Y.truncation != N or len(maps) != N + 1:
        raise DomainMismatchError(
            f"Need {N + 1} maps between sets of equal truncation")
    for n, fmap in enumerate(maps):
        if not (fmap.domain.matches(X.level(n))
                and fmap.codomain.matches(Y.level(n))):
            raise DomainMismatchError(f"Map at level {n} is not X_n -> Y_n")
    if with_tau is None:
        with_tau = X.has_tau and Y.has_tau
    if with_theta is None:
        with_theta = X.has_theta and Y.has_theta

    vc = ViolationCollector(N, log=logger)
    if bijective:
        vc.note('morphism.bijective')
        for n, fmap in enumerate(maps):
            if not fmap.is_bijective():
                vc.add('morphism.bijective', n, (), None,
                       f"{fmap.domain.size} -> {fmap.codomain.size}, "
                       "not a bijection")
    vc.note('morphism.face')
    for n in range(1, N + 1):
        for i in range(n + 1):
            vc.compare('morphism.face', n, (i,),
                       composite(maps[n - 1], X.d(n, i)),
                       composite(Y.d(n, i), maps[n]))
    vc.note('morphism.degeneracy')
    for n in range(N):
        for i in range(n + 1):
            vc.compare('morphism.degeneracy', n, (i,),
                       composite(maps[n + 1], X.s(n, i)),
                       composite(Y.s(n, i), maps[n]))
    if with_tau:
        vc.note('morphism.tau')
        for n in range(N + 1):
            vc.compare('morphism.tau', n, (),
                       composite(maps[n], X.t(n)),
                       composite(Y.t(n), maps[n]))
    if with_theta:
        vc.note('morphism.theta')
        for n in range(2, N + 1):
            for i in range(1, n):
                vc.compare('morphism.theta', n, (i,),
                           composite(maps[n], X.th(n, i)),
                           composite(Y.th(n, i), maps[n]))
    return vc.report()


def is_structure_isomorphism(maps: Sequence[FinMap],
                             X: TruncatedStructuredSet,
                             Y: TruncatedStructuredSet) -> bool:
    return check_structure_morphism(maps, X, Y, bijective=True).passed
