"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only
"""

import pytest

from pySegal.constructions.nerve import nerve
from pySegal.constructions.simplex import basepoint_adjoin, simplex_set
from pySegal.exceptions import (
    DomainMismatchError, MissingStructureError, StructureTableError,
    SynthesisError,
)
from pySegal.finset import FinMap
from pySegal.pmonoid import (
    make_cyclic_group, make_powerset_union, make_trunc_add,
)
from pySegal.simplicial.structured import Flavor
from pySegal.simplicial.synthesis import (
    check_structure_morphism, component, is_structure_isomorphism,
    strip_to_gamma, strip_to_paracyclic, structured_sets_equal,
    synthesize_cosymmetric,
)


@pytest.mark.parametrize('m,L', [
    (make_trunc_add(2), 2),
    (make_cyclic_group(3), 1),
    (make_powerset_union(1), 1),
])
def test_round_trip(m, L):
    X = simplex_set(m, L, 3)
    P = strip_to_paracyclic(X)
    Q = strip_to_gamma(X)
    assert P.flavor == Flavor.PARACYCLIC and not P.has_theta
    assert Q.flavor == Flavor.GAMMA and not Q.has_tau
    Z = synthesize_cosymmetric(P, Q)
    assert structured_sets_equal(Z, X)
    assert Z.report is not None and Z.report.passed
    assert X.report is None


def test_strip_needs_the_structure():
    Y = nerve(make_trunc_add(2), 3)
    with pytest.raises(MissingStructureError):
        strip_to_paracyclic(Y)
    with pytest.raises(MissingStructureError):
        synthesize_cosymmetric(Y, Y)


def test_different_underlying_sets():
    P = strip_to_paracyclic(simplex_set(make_trunc_add(2), 2, 3))
    Q = strip_to_gamma(simplex_set(make_trunc_add(2), 1, 3))
    with pytest.raises(SynthesisError) as e:
        synthesize_cosymmetric(P, Q)
    assert e.value.report is None


def test_bad_tau_fails_synthesis():
    X = simplex_set(make_cyclic_group(3), 1, 3)
    P = strip_to_paracyclic(X.with_tau(1, X.identity(1)))
    with pytest.raises(SynthesisError) as e:
        synthesize_cosymmetric(P, strip_to_gamma(X))
    report = e.value.report
    assert report is not None and not report.passed
    assert report.for_relation('paracyclic.')
    assert not report.for_relation('gamma.')


def test_equality_sees_every_table():
    X = simplex_set(make_trunc_add(2), 2, 3)
    assert structured_sets_equal(X, simplex_set(make_trunc_add(2), 2, 3))
    assert not structured_sets_equal(X, X.with_theta(2, 1, X.identity(2)))
    assert not structured_sets_equal(X, strip_to_gamma(X))
    assert not structured_sets_equal(X, simplex_set(make_trunc_add(2), 2, 2))


@pytest.mark.parametrize('m,L', [
    (make_trunc_add(2), 2),
    (make_trunc_add(3), 1),
    (make_cyclic_group(3), 2),
    (make_powerset_union(2), 3),
])
def test_simplex_set_is_a_component_of_the_adjoined_nerve(m, L):
    adjoined = basepoint_adjoin(nerve(m, 4), m)
    assert adjoined.flavor == Flavor.COSYMMETRIC
    assert adjoined.truncation == 3
    assert structured_sets_equal(component(adjoined, L), simplex_set(m, L, 3))


def test_component_range():
    adjoined = basepoint_adjoin(nerve(make_trunc_add(1), 3))
    with pytest.raises(StructureTableError):
        component(adjoined, 2)
    sizes = [component(adjoined, u).size(1) for u in range(2)]
    assert sizes == [1, 2]


def test_identity_is_a_structure_isomorphism():
    X = simplex_set(make_trunc_add(2), 2, 3)
    maps = [X.identity(n) for n in range(4)]
    assert is_structure_isomorphism(maps, X, X)
    report = check_structure_morphism(maps, X, X)
    assert set(report.relations) >= {'morphism.tau', 'morphism.theta'}


def test_structure_morphism_faults():
    X = simplex_set(make_trunc_add(2), 2, 3)
    maps = [X.identity(n) for n in range(4)]
    swapped = list(maps)
    swapped[1] = X.t(1)
    report = check_structure_morphism(swapped, X, X)
    assert not report.passed
    assert report.for_relation('morphism.face')
    collapsed = list(maps)
    collapsed[0] = FinMap.identity(X.level(0))
    collapsed[3] = FinMap.constant(X.level(3), X.level(3), 0)
    report = check_structure_morphism(collapsed, X, X)
    assert report.for_relation('morphism.bijective')
    with pytest.raises(DomainMismatchError):
        check_structure_morphism(maps[:3], X, X)
