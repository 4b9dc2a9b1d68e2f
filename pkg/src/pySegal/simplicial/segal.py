"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Pullback conditions on a truncated structured set, and the extra
degeneracies s_{n+1}^n = tau^{n+1} s_0^n of a paracyclic one

Squares are given as (top, left, right, bottom)

    W --top--> B
    |          |
  left       right
    v          v
    A -bottom-> Z

Only levels up to the truncation N are examined, so "passed" means
passed up to N.
"""

from typing import List, Tuple

import numpy as np

import pySegal
from pySegal.check_report import CheckReport, ViolationCollector
from pySegal.exceptions import TruncationError
from pySegal.finset import FinMap, pullback_square_diagnostic
from pySegal.simplicial.relations import require_structure
from pySegal.simplicial.structured import (
    TruncatedStructuredSet, composite,
)

logger = pySegal.getLogger('Simplicial.Segal')


def _require_truncation(X: TruncatedStructuredSet, minimum: int = 2):
    if X.truncation < minimum:
        raise TruncationError(
            f"Needs truncation at least {minimum}, not {X.truncation}")


def _square(vc: ViolationCollector, relation: str, n: int,
            indices: Tuple[int, ...],
            top: FinMap, left: FinMap, right: FinMap, bottom: FinMap):
    vc.note(relation)
    diagnostic = pullback_square_diagnostic(top, left, right, bottom)
    if diagnostic is not None:
        vc.add(relation, n, indices, diagnostic.witness[0],
               f"{diagnostic.reason}, witness {list(diagnostic.witness)}")


def check_two_segal(X: TruncatedStructuredSet) -> CheckReport:
    """
    For 0 < i < n, n + 1 <= N, both

        X_{n+1} --d_0--> X_n            X_{n+1} --d_{n+1}--> X_n
           |              |                |                  |
        d_{i+1}          d_i              d_i                d_i
           v              v                v                  v
          X_n ---d_0--> X_{n-1}           X_n ----d_n----> X_{n-1}

    are pullbacks. Vacuous below N = 3.
    """
    _require_truncation(X)
    vc = ViolationCollector(X.truncation, log=logger)
    vc.note('two_segal.d0')
    vc.note('two_segal.dlast')
    for n in range(2, X.truncation):
        for i in range(1, n):
            _square(vc, 'two_segal.d0', n, (i,),
                    X.d(n + 1, 0), X.d(n + 1, i + 1), X.d(n, i), X.d(n, 0))
            _square(vc, 'two_segal.dlast', n, (i,),
                    X.d(n + 1, n + 1), X.d(n + 1, i), X.d(n, i), X.d(n, n))
    return vc.report('2-Segal squares')


def check_nn_pullbacks(X: TruncatedStructuredSet) -> CheckReport:
    """
    (d_i, d_{j+1}, d_j, d_i) squares for i < j <= n, other than (0, n)
    """
    _require_truncation(X)
    vc = ViolationCollector(X.truncation, log=logger)
    vc.note('nn_pullback')
    for n in range(2, X.truncation):
        for j in range(1, n + 1):
            for i in range(j):
                if (i, j) == (0, n):
                    continue
                _square(vc, 'nn_pullback', n, (i, j),
                        X.d(n + 1, i), X.d(n + 1, j + 1),
                        X.d(n, j), X.d(n, i))
    return vc.report('(i, j) pullbacks')


def check_unitality(X: TruncatedStructuredSet) -> CheckReport:
    """
    X_1 is X_0 ×_{s_0, d_2} X_2 through (d_1, s_0),
    and X_2 ×_{d_0, s_0} X_0 through (s_1, d_0)
    """
    _require_truncation(X)
    vc = ViolationCollector(X.truncation, log=logger)
    _square(vc, 'unitality.left', 1, (0,),
            X.s(1, 0), X.d(1, 1), X.d(2, 2), X.s(0, 0))
    _square(vc, 'unitality.right', 1, (1,),
            X.d(1, 0), X.s(1, 1), X.s(0, 0), X.d(2, 0))
    return vc.report('unitality')


def extra_degeneracy(X: TruncatedStructuredSet, n: int) -> FinMap:
    """
    s_{n+1}^n = tau^{n+1} ∘ s_0^n : X_n -> X_{n+1}
    """
    require_structure(X, tau=True)
    if not 0 <= n < X.truncation:
        raise TruncationError(
            f"No extra degeneracy at level {n} "
            f"for truncation {X.truncation}")
    return composite(X.t(n + 1), X.s(n, 0))


def check_extra_degeneracy_pullback(X: TruncatedStructuredSet) \
        -> CheckReport:
    """
    For 1 <= i <= n, n + 1 <= N

        X_n ---s_{n+1}--> X_{n+1}
         |                  |
        d_i                d_i
         v                  v
      X_{n-1} ---s_n----> X_n
    """
    require_structure(X, tau=True)
    _require_truncation(X)
    vc = ViolationCollector(X.truncation, log=logger)
    vc.note('extra_degeneracy.pullback')
    for n in range(1, X.truncation):
        top = extra_degeneracy(X, n)
        bottom = extra_degeneracy(X, n - 1)
        for i in range(1, n + 1):
            _square(vc, 'extra_degeneracy.pullback', n, (i,),
                    top, X.d(n, i), X.d(n + 1, i), bottom)
    return vc.report('extra degeneracy pullbacks')


def check_extra_degeneracy_relations(X: TruncatedStructuredSet) \
        -> CheckReport:
    require_structure(X, tau=True)
    N = X.truncation
    vc = ViolationCollector(N, log=logger)
    vc.note('extra_degeneracy.faces')
    vc.note('extra_degeneracy.degeneracies')
    extras = [extra_degeneracy(X, n) for n in range(N)]
    for n in range(N):
        extra = extras[n]
        vc.compare('extra_degeneracy.faces', n, (0,),
                   composite(X.d(n + 1, 0), extra), X.t(n))
        for i in range(1, n + 1):
            vc.compare('extra_degeneracy.faces', n, (i,),
                       composite(X.d(n + 1, i), extra),
                       composite(extras[n - 1], X.d(n, i)))
        vc.compare('extra_degeneracy.faces', n, (n + 1,),
                   composite(X.d(n + 1, n + 1), extra), X.identity(n))
        if n + 2 > N:
            continue
        for i in range(n + 1):
            vc.compare('extra_degeneracy.degeneracies', n, (i,),
                       composite(X.s(n + 1, i), extra),
                       composite(extras[n + 1], X.s(n, i)))
        vc.compare('extra_degeneracy.degeneracies', n, (n + 1,),
                   composite(X.s(n + 1, n + 1), extra),
                   composite(extras[n + 1], extra))
    return vc.report('extra degeneracy relations')


def check_stautheta_identities(X: TruncatedStructuredSet) -> CheckReport:
    """
    With s = s_{n+1}^n the extra degeneracy, for n + 1 <= N

        stautheta.1     theta_i s = s d_{n+1} theta_i s     1 <= i <= n
        stautheta.2     theta_i s = s theta_i               1 <= i <= n-1
        stautheta.3     theta_n ... theta_1 s = s tau
    """
    require_structure(X, tau=True, theta=True)
    vc = ViolationCollector(X.truncation, log=logger)
    for name in ('stautheta.1', 'stautheta.2', 'stautheta.3'):
        vc.note(name)
    for n in range(X.truncation):
        extra = extra_degeneracy(X, n)
        for i in range(1, n + 1):
            lhs = composite(X.th(n + 1, i), extra)
            vc.compare('stautheta.1', n, (i,), lhs,
                       composite(extra, X.d(n + 1, n + 1), lhs))
            if i <= n - 1:
                vc.compare('stautheta.2', n, (i,), lhs,
                           composite(extra, X.th(n, i)))
        vc.compare('stautheta.3', n, (),
                   composite(X.theta_product(n + 1, list(range(n, 0, -1))),
                             extra),
                   composite(extra, X.t(n)))
    return vc.report('s tau theta identities')


def outer_face_collisions(X: TruncatedStructuredSet) \
        -> List[Tuple[int, int]]:
    """
    Pairs w < w' in X_2 with d_2 w = d_2 w' and d_0 w = d_0 w'

    A nerve has none, so any pair shows X is not a nerve.
    """
    if X.truncation < 2:
        raise TruncationError("Needs X_2")
    keys = X.d(2, 2).image * X.size(1) + X.d(2, 0).image
    order = np.argsort(keys, kind='stable')
    pairs = []
    start = 0
    sorted_keys = keys[order]
    while start < order.size:
        stop = start
        while stop < order.size and sorted_keys[stop] == sorted_keys[start]:
            stop += 1
        members = sorted(order[start:stop].tolist())
        pairs.extend((a, b) for k, a in enumerate(members)
                     for b in members[k + 1:])
        start = stop
    pairs.sort()
    if pairs:
        logger.info(f"{len(pairs)} pairs in X_2 share their outer faces")
    return pairs
