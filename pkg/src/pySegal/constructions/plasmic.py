"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

The nerve rebuilt a second way, as partial-monoid maps phi: P_n -> M
where P_n is the subsets of {1..n} under disjoint union

Level n holds every such phi, found by testing all candidates
phi(A) = prod_{i in A} x_i against all disjoint pairs. A pointed map
f: [n] -> [m] acts by (f phi)(A) = phi(f^-1(A)). The result must agree,
map for map, with the nerve through phi -> (phi({1}), ..., phi({n})).
"""

import itertools
from typing import List

import numpy as np

import pySegal
from pySegal.check_report import CheckReport, ViolationCollector
from pySegal.constructions.nerve import nerve_levels, require_commutative
from pySegal.constructions.phi import PhiMorphism
from pySegal.finset import FinMap, FinSet
from pySegal.pmonoid import UNDEFINED, PartialMonoid, make_powerset_monoid
from pySegal.simplicial.structured import Flavor, TruncatedStructuredSet
from pySegal.simplicial.synthesis import check_structure_morphism

logger = pySegal.getLogger('Constructions.Plasmic')


class _PlasmicLevel:
    """
    The morphisms P_n -> M, each as its vector of values on all 2^n masks
    """

    def __init__(self, m: PartialMonoid, n: int):
        self.n = n
        power = make_powerset_monoid(n)
        extended = m.extended_op()
        candidates = np.array(
            list(itertools.product(range(m.size), repeat=n)),
            dtype=np.int64).reshape(m.size ** n, n)
        values = np.full((candidates.shape[0], power.size), m.identity,
                         dtype=np.int64)
        for mask in range(1, power.size):
            high = mask.bit_length() - 1
            values[:, mask] = extended[values[:, mask & ~(1 << high)],
                                       candidates[:, high]]

        keep = np.all(values != UNDEFINED, axis=1)
        a, b = np.nonzero(power.op != UNDEFINED)
        for x, y in zip(a.tolist(), b.tolist()):
            keep &= extended[values[:, x], values[:, y]] \
                == values[:, int(power.op[x, y])]
        self.values = values[keep]
        self.singletons = candidates[keep]
        self.index = {row.tobytes(): k for k, row in enumerate(self.values)}
        self.finset = FinSet(self.values.shape[0])

    def pushed(self, f: PhiMorphism, target: "_PlasmicLevel") -> np.ndarray:
        """
        Values of f phi on every mask of P_m, for each phi at this level
        """
        result = np.empty((self.values.shape[0], 2 ** target.n),
                          dtype=np.int64)
        for mask in range(2 ** target.n):
            pre = 0
            for j in range(1, self.n + 1):
                if f(j) > 0 and mask >> (f(j) - 1) & 1:
                    pre |= 1 << (j - 1)
            result[:, mask] = self.values[:, pre]
        return result


def _structure_map(vc: ViolationCollector, relation: str,
                   f: PhiMorphism, source: _PlasmicLevel,
                   target: _PlasmicLevel, indices) -> FinMap:
    pushed = source.pushed(f, target)
    image = []
    for k, row in enumerate(pushed):
        found = target.index.get(row.tobytes())
        if found is None:
            vc.add(relation, source.n, indices, k,
                   "result is not a partial-monoid map")
            found = 0
        image.append(found)
    return FinMap(source.finset, target.finset, image)


def plasmic_nerve_crosscheck(m: PartialMonoid, N: int) -> CheckReport:
    require_commutative(m)
    levels: List[_PlasmicLevel] = [_PlasmicLevel(m, n) for n in range(N + 1)]
    vc = ViolationCollector(N, log=logger)
    vc.note('plasmic.closure')

    face = [[]] + [
        [_structure_map(vc, 'plasmic.closure', PhiMorphism.face(n, i),
                        levels[n], levels[n - 1], (i,))
         for i in range(n + 1)]
        for n in range(1, N + 1)]
    degeneracy = [
        [_structure_map(vc, 'plasmic.closure', PhiMorphism.degeneracy(n, i),
                        levels[n], levels[n + 1], (i,))
         for i in range(n + 1)]
        for n in range(N)]
    theta = [
        [_structure_map(vc, 'plasmic.closure', PhiMorphism.theta(n, i),
                        levels[n], levels[n], (i,))
         for i in range(1, n)]
        for n in range(N + 1)]
    closure = vc.report()
    if not closure.passed:
        return closure

    plasmic = TruncatedStructuredSet([level.finset for level in levels],
                                     face, degeneracy, theta=theta,
                                     flavor=Flavor.GAMMA)
    target = nerve_levels(m, N)
    maps = [FinMap(level.finset, target.levels[n].finset,
                   target.levels[n].index_of(level.singletons))
            for n, level in enumerate(levels)]
    report = closure + check_structure_morphism(
        maps, plasmic, target.structured, bijective=True,
        with_tau=False, with_theta=True)
    logger.info(f"Plasmic cross-check of {m} up to N={N}: "
                f"{report.summary()}")
    return report
