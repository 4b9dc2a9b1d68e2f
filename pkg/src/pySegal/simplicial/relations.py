"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Exhaustive, elementwise checkers for the relation families of a
truncated structured set

Each checker compares two composite tables over every valid index
combination whose levels stay within the truncation, and reports every
disagreeing element. Relation ids are

    simplicial.dd   simplicial.ds   simplicial.ss
    paracyclic.dtau paracyclic.stau
    cyclic.order
    gamma.moore_square  gamma.moore_braid  gamma.moore_commute
    gamma.theta_s   gamma.theta_d   gamma.d_theta   gamma.last_face
    gamma.cycle_order
    cosymmetric.theta_tau   cosymmetric.theta_tau_last

Violations carry the level n of the domain of the composites.
"""

import pySegal
from pySegal.check_report import CheckReport, ViolationCollector
from pySegal.exceptions import MissingStructureError
from pySegal.simplicial.structured import (
    TruncatedStructuredSet, composite,
)

logger = pySegal.getLogger('Simplicial.Relations')


def require_structure(X: TruncatedStructuredSet,
                      tau: bool = False, theta: bool = False):
    if tau and not X.has_tau:
        raise MissingStructureError(
            f"{X} has no tau, needed for this check")
    if theta and not X.has_theta:
        raise MissingStructureError(
            f"{X} has no theta, needed for this check")


def _collect_simplicial(X: TruncatedStructuredSet, vc: ViolationCollector):
    N = X.truncation

    vc.note('simplicial.dd')
    for n in range(2, N + 1):
        for j in range(1, n + 1):
            for i in range(j):
                vc.compare('simplicial.dd', n, (i, j),
                           composite(X.d(n - 1, i), X.d(n, j)),
                           composite(X.d(n - 1, j - 1), X.d(n, i)))

    vc.note('simplicial.ds')
    for n in range(N):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = composite(X.d(n + 1, i), X.s(n, j))
                if i < j:
                    rhs = composite(X.s(n - 1, j - 1), X.d(n, i))
                elif i in (j, j + 1):
                    rhs = X.identity(n)
                else:
                    rhs = composite(X.s(n - 1, j), X.d(n, i - 1))
                vc.compare('simplicial.ds', n, (i, j), lhs, rhs)

    vc.note('simplicial.ss')
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                vc.compare('simplicial.ss', n, (i, j),
                           composite(X.s(n + 1, i), X.s(n, j)),
                           composite(X.s(n + 1, j + 1), X.s(n, i)))


def check_simplicial_relations(X: TruncatedStructuredSet) -> CheckReport:
    vc = ViolationCollector(X.truncation, log=logger)
    _collect_simplicial(X, vc)
    return vc.report('simplicial relations')


def _collect_paracyclic(X: TruncatedStructuredSet, vc: ViolationCollector):
    N = X.truncation

    vc.note('paracyclic.dtau')
    for n in range(1, N + 1):
        for i in range(n):
            vc.compare('paracyclic.dtau', n, (i,),
                       composite(X.d(n, i), X.t(n)),
                       composite(X.t(n - 1), X.d(n, i + 1)))
        vc.compare('paracyclic.dtau', n, (n,),
                   composite(X.d(n, n), X.t(n)), X.d(n, 0))

    vc.note('paracyclic.stau')
    for n in range(N):
        for i in range(n):
            vc.compare('paracyclic.stau', n, (i,),
                       composite(X.s(n, i), X.t(n)),
                       composite(X.t(n + 1), X.s(n, i + 1)))
        vc.compare('paracyclic.stau', n, (n,),
                   composite(X.s(n, n), X.t(n)),
                   composite(X.tau_power(n + 1, 2), X.s(n, 0)))


def check_paracyclic_relations(X: TruncatedStructuredSet) -> CheckReport:
    """
    d_i tau = tau d_{i+1} and s_i tau = tau s_{i+1} for i < n,
    with the wrap-around cases d_n tau = d_0 and s_n tau = tau^2 s_0
    """
    require_structure(X, tau=True)
    vc = ViolationCollector(X.truncation, log=logger)
    _collect_paracyclic(X, vc)
    return vc.report('paracyclic relations')


def _collect_cyclic(X: TruncatedStructuredSet, vc: ViolationCollector):
    vc.note('cyclic.order')
    for n in range(X.truncation + 1):
        vc.compare('cyclic.order', n, (),
                   X.tau_power(n, n + 1), X.identity(n))


def check_cyclic(X: TruncatedStructuredSet) -> CheckReport:
    require_structure(X, tau=True)
    vc = ViolationCollector(X.truncation, log=logger)
    _collect_cyclic(X, vc)
    return vc.report('cyclic order')


def _collect_gamma(X: TruncatedStructuredSet, vc: ViolationCollector):
    N = X.truncation

    for name in ('gamma.moore_square', 'gamma.moore_braid',
                 'gamma.moore_commute', 'gamma.d_theta'):
        vc.note(name)
    for n in range(2, N + 1):
        for i in range(1, n):
            vc.compare('gamma.moore_square', n, (i,),
                       X.theta_product(n, [i, i]), X.identity(n))
            vc.compare('gamma.d_theta', n, (i,),
                       composite(X.d(n, i), X.th(n, i)), X.d(n, i))
        for i in range(1, n - 1):
            vc.compare('gamma.moore_braid', n, (i,),
                       X.theta_product(n, [i, i + 1, i]),
                       X.theta_product(n, [i + 1, i, i + 1]))
        for j in range(3, n):
            for i in range(1, j - 1):
                vc.compare('gamma.moore_commute', n, (i, j),
                           X.theta_product(n, [i, j]),
                           X.theta_product(n, [j, i]))

    # theta_i^{n+1} s_j^n
    vc.note('gamma.theta_s')
    for n in range(N):
        for j in range(n + 1):
            for i in range(1, n + 1):
                lhs = composite(X.th(n + 1, i), X.s(n, j))
                if i < j:
                    rhs = composite(X.s(n, j), X.th(n, i))
                elif i == j:
                    rhs = X.s(n, i - 1)
                elif i == j + 1:
                    rhs = X.s(n, i)
                else:
                    rhs = composite(X.s(n, j), X.th(n, i - 1))
                vc.compare('gamma.theta_s', n, (i, j), lhs, rhs)

    # theta_i^{n-1} d_j^n
    vc.note('gamma.theta_d')
    for n in range(3, N + 1):
        for j in range(n + 1):
            for i in range(1, n - 1):
                lhs = composite(X.th(n - 1, i), X.d(n, j))
                if i < j - 1:
                    rhs = composite(X.d(n, j), X.th(n, i))
                elif i == j - 1:
                    rhs = composite(X.d(n, i), X.th(n, i + 1), X.th(n, i))
                elif i == j:
                    rhs = composite(X.d(n, i + 1), X.th(n, i),
                                    X.th(n, i + 1))
                else:
                    rhs = composite(X.d(n, j), X.th(n, i + 1))
                vc.compare('gamma.theta_d', n, (i, j), lhs, rhs)

    vc.note('gamma.last_face')
    for n in range(1, N + 1):
        vc.compare('gamma.last_face', n, (),
                   X.d(n, n),
                   composite(X.d(n, 0),
                             X.theta_product(n, list(range(1, n)))))


def check_gamma_relations(X: TruncatedStructuredSet) -> CheckReport:
    """
    The Moore relations among the theta_i on each level, and the mixed
    relations with faces and degeneracies, including
    d_n = d_0 theta_1 ... theta_{n-1}
    """
    require_structure(X, theta=True)
    vc = ViolationCollector(X.truncation, log=logger)
    _collect_gamma(X, vc)
    return vc.report('gamma relations')


def _collect_theta_tau(X: TruncatedStructuredSet, vc: ViolationCollector):
    vc.note('cosymmetric.theta_tau')
    vc.note('cosymmetric.theta_tau_last')
    for n in range(2, X.truncation + 1):
        for i in range(1, n - 1):
            vc.compare('cosymmetric.theta_tau', n, (i,),
                       composite(X.th(n, i), X.t(n)),
                       composite(X.t(n), X.th(n, i + 1)))
        vc.compare('cosymmetric.theta_tau_last', n, (n - 1,),
                   composite(X.th(n, n - 1), X.t(n)),
                   composite(X.tau_power(n, 2),
                             X.theta_product(n, list(range(1, n)))))


def check_cosymmetric_relations(X: TruncatedStructuredSet) -> CheckReport:
    """
    Every family: simplicial, paracyclic, cyclic order, gamma, and the
    two ways theta passes through tau
    """
    require_structure(X, tau=True, theta=True)
    vc = ViolationCollector(X.truncation, log=logger)
    _collect_simplicial(X, vc)
    _collect_paracyclic(X, vc)
    _collect_cyclic(X, vc)
    _collect_gamma(X, vc)
    _collect_theta_tau(X, vc)
    return vc.report('cosymmetric relations')


def check_cyclic_theta_order(X: TruncatedStructuredSet) -> CheckReport:
    """
    (theta_{m-1} ∘ ... ∘ theta_1)^m = id on each level m >= 2
    """
    require_structure(X, theta=True)
    vc = ViolationCollector(X.truncation, log=logger)
    vc.note('gamma.cycle_order')
    for m in range(2, X.truncation + 1):
        cycle = X.theta_product(m, list(range(m - 1, 0, -1)))
        vc.compare('gamma.cycle_order', m, (), cycle.power(m),
                   X.identity(m))
    return vc.report('theta cycle order')
