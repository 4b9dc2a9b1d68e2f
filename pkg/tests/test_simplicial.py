"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only
"""

import pytest

from pySegal.constructions.nerve import nerve
from pySegal.constructions.simplex import simplex_set
from pySegal.exceptions import (
    MissingStructureError, StructureTableError, TruncationError,
)
from pySegal.finset import FinMap, FinSet
from pySegal.pmonoid import (
    make_cyclic_group, make_powerset_union, make_trunc_add,
)
from pySegal.simplicial.relations import (
    check_cosymmetric_relations, check_cyclic, check_cyclic_theta_order,
    check_gamma_relations, check_paracyclic_relations,
    check_simplicial_relations,
)
from pySegal.simplicial.structured import (
    Flavor, TruncatedStructuredSet, composite,
)


def trunc_simplex(L=2, N=3):
    return simplex_set(make_trunc_add(L), L, N)


def test_levels_and_labels():
    X = simplex_set(make_trunc_add(1), 1, 2)
    assert X.flavor == Flavor.COSYMMETRIC
    assert X.truncation == 2
    assert [X.size(n) for n in range(3)] == [1, 2, 3]
    assert list(X.level(1).labels) == ['(0,1)', '(1,0)']
    assert list(X.level(2).labels) == ['(0,0,1)', '(0,1,0)', '(1,0,0)']


def test_faces_degeneracies_tau_theta():
    X = simplex_set(make_trunc_add(1), 1, 2)
    two = X.level(2)
    one = X.level(1)
    w = two.index_of('(0,1,0)')
    # d_2 multiplies the outer entries
    assert one.label(X.d(2, 2)(w)) == '(0,1)'
    assert one.label(X.d(2, 0)(w)) == '(1,0)'
    assert one.label(X.d(2, 1)(w)) == '(0,1)'
    assert two.label(X.s(1, 0)(one.index_of('(1,0)'))) == '(1,0,0)'
    assert two.label(X.s(1, 1)(one.index_of('(0,1)'))) == '(0,1,0)'
    assert two.label(X.t(2)(w)) == '(1,0,0)'
    assert two.label(X.th(2, 1)(w)) == '(0,0,1)'


def test_accessors_check_ranges():
    X = trunc_simplex(N=2)
    with pytest.raises(TruncationError):
        X.level(3)
    with pytest.raises(TruncationError):
        X.d(3, 0)
    with pytest.raises(TruncationError):
        X.s(2, 0)
    with pytest.raises(TruncationError):
        X.th(2, 2)
    Y = nerve(make_trunc_add(2), 2, gamma=False)
    assert Y.flavor == Flavor.PLAIN
    with pytest.raises(MissingStructureError):
        Y.t(1)
    with pytest.raises(MissingStructureError):
        Y.th(2, 1)


def test_composite_order():
    X = trunc_simplex()
    # theta_product(n, [1, 2]) is theta_1 after theta_2
    assert X.theta_product(3, [1, 2]) == composite(X.th(3, 1), X.th(3, 2))
    assert X.theta_product(3, []) == X.identity(3)
    assert X.tau_power(2, 3) == X.identity(2)


def test_validation_rejects_bad_tables():
    X = trunc_simplex(N=2)
    with pytest.raises(StructureTableError):
        TruncatedStructuredSet(X.levels, X.face_table[:2],
                               X.degeneracy_table)
    with pytest.raises(StructureTableError):
        TruncatedStructuredSet(X.levels, X.face_table, X.degeneracy_table,
                               flavor=Flavor.CYCLIC)
    wrong_level = FinMap.identity(X.level(2))
    with pytest.raises(StructureTableError):
        X.with_face(2, 0, wrong_level)
    not_invertible = FinMap.constant(X.level(1), X.level(1), 0)
    with pytest.raises(StructureTableError):
        X.with_tau(1, not_invertible)
    with pytest.raises(MissingStructureError):
        X.as_plain().with_tau(1, X.t(1))


def test_as_dict():
    X = simplex_set(make_trunc_add(1), 1, 2)
    d = X.as_dict()
    assert d['flavor'] == 'cosymmetric'
    assert d['truncation'] == 2
    assert [level['size'] for level in d['levels']] == [1, 2, 3]
    assert d['tau'][1] == [1, 0]
    assert d['theta'][:2] == [[], []]


@pytest.mark.parametrize('m,L', [
    (make_trunc_add(0), 0),
    (make_trunc_add(2), 2),
    (make_trunc_add(3), 2),
    (make_cyclic_group(3), 1),
    (make_cyclic_group(4), 0),
    (make_powerset_union(2), 3),
])
def test_simplex_sets_are_cosymmetric(m, L):
    X = simplex_set(m, L, 4)
    report = check_cosymmetric_relations(X)
    assert report.passed, report.violations[:5]
    assert report.truncation == 4
    assert 'cosymmetric.theta_tau_last' in report.relations
    assert check_cyclic_theta_order(X).passed
    for check in (check_simplicial_relations, check_paracyclic_relations,
                  check_cyclic, check_gamma_relations):
        assert check(X).passed


@pytest.mark.parametrize('m', [
    make_trunc_add(2), make_cyclic_group(3), make_powerset_union(2),
])
def test_nerve_is_a_gamma_set(m):
    X = nerve(m, 4)
    assert X.flavor == Flavor.GAMMA
    assert check_simplicial_relations(X).passed
    assert check_gamma_relations(X).passed
    assert check_cyclic_theta_order(X).passed
    with pytest.raises(MissingStructureError):
        check_paracyclic_relations(X)
    with pytest.raises(MissingStructureError):
        check_cosymmetric_relations(X)


def test_face_fault_is_caught():
    X = trunc_simplex()
    broken = X.with_face(2, 1, X.d(2, 0))
    report = check_simplicial_relations(broken)
    assert not report.passed
    assert report.for_relation('simplicial.ds')
    assert all(v.element is not None for v in report.violations)


def test_degeneracy_fault_is_caught():
    X = trunc_simplex()
    broken = X.with_degeneracy(1, 0, X.s(1, 1))
    report = check_simplicial_relations(broken)
    assert report.for_relation('simplicial.ds')
    assert not report.for_relation('simplicial.dd')


def test_tau_fault_is_caught():
    X = simplex_set(make_cyclic_group(3), 1, 2)
    broken = X.with_tau(1, X.identity(1))
    report = check_paracyclic_relations(broken)
    assert not report.passed
    assert report.for_relation('paracyclic.stau')
    assert check_simplicial_relations(broken).passed


def test_theta_fault_is_caught():
    X = trunc_simplex()
    broken = X.with_theta(2, 1, X.identity(2))
    report = check_gamma_relations(broken)
    assert report.for_relation('gamma.last_face')
    assert not check_cosymmetric_relations(broken).passed


def test_violations_are_sorted():
    X = trunc_simplex()
    broken = X.with_face(2, 1, X.d(2, 0)).with_theta(2, 1, X.identity(2))
    report = check_cosymmetric_relations(broken)
    keys = [v.sort_key() for v in report.violations]
    assert keys == sorted(keys)
    assert report.as_dict()['passed'] is False


def test_truncation_zero_and_one():
    m = make_trunc_add(2)
    X = simplex_set(m, 2, 0)
    assert X.truncation == 0
    assert check_cosymmetric_relations(X).passed
    Y = simplex_set(m, 2, 1)
    assert check_cosymmetric_relations(Y).passed
    assert FinSet(1).matches(Y.level(0))
