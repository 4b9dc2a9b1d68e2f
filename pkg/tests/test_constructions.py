"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only
"""

import numpy as np
import pytest

from pySegal.constructions.nerve import nerve, nerve_levels
from pySegal.constructions.phi import (
    PhiMorphism, all_phi_morphisms, phi_action, phi_table,
)
from pySegal.constructions.plasmic import plasmic_nerve_crosscheck
from pySegal.constructions.simplex import (
    basepoint_adjoin, check_simplex_last_face, induced_cyclic_on_nerve,
    simplex_levels, simplex_set, simplex_to_nerve_morphism,
)
from pySegal.constructions.tuples import (
    enumerate_composable, row_products,
)
from pySegal.exceptions import (
    CorruptedStateError, NonCommutativeMonoidError, OrthocomplementError,
    SegalValueError, TruncationError,
)
from pySegal.pmonoid import (
    UNDEFINED, make_cyclic_group, make_from_table, make_powerset_disjoint,
    make_powerset_union, make_trunc_add,
)
from pySegal.simplicial.relations import check_cyclic

NON_COMMUTATIVE = {
    'size': 3,
    'identity': 0,
    'op': [[0, 1, 2], [1, 1, 1], [2, 2, 2]],
}


# Tuples

def test_enumerate_composable():
    m = make_trunc_add(2)
    level = enumerate_composable(m, 2)
    assert level.size == 6
    assert level.tuple_at(0) == (0, 0)
    assert level.tuple_at(5) == (2, 0)
    over_two = enumerate_composable(m, 2, total=2)
    assert [over_two.tuple_at(k) for k in range(3)] == \
        [(0, 2), (1, 1), (2, 0)]
    assert enumerate_composable(m, 0).size == 1
    with pytest.raises(TruncationError):
        enumerate_composable(m, -1)


def test_tuple_lookup():
    m = make_trunc_add(2)
    level = enumerate_composable(m, 2, total=2)
    found = level.index_of(np.array([[2, 0], [0, 2]]))
    assert found.tolist() == [2, 0]
    with pytest.raises(CorruptedStateError):
        level.index_of(np.array([[1, 0]]))
    with pytest.raises(CorruptedStateError):
        level.index_of(np.array([[UNDEFINED, 2]]))


def test_row_products():
    m = make_trunc_add(2)
    rows = np.array([[1, 1], [2, 1], [0, 0]])
    assert row_products(m, rows).tolist() == [2, UNDEFINED, 0]


# Nerve

def test_nerve_sizes():
    assert [nerve(make_trunc_add(2), 2).size(n) for n in range(3)] == \
        [1, 3, 6]
    X = nerve(make_cyclic_group(3), 3)
    assert [X.size(n) for n in range(4)] == [1, 3, 9, 27]
    assert nerve(make_powerset_disjoint(2), 2).size(2) == 9


def test_nerve_faces():
    levels = nerve_levels(make_trunc_add(3), 2)
    X = levels.structured
    two = X.level(2)
    one = X.level(1)
    w = two.index_of('(1,2)')
    assert one.label(X.d(2, 0)(w)) == '(2)'
    assert one.label(X.d(2, 1)(w)) == '(3)'
    assert one.label(X.d(2, 2)(w)) == '(1)'
    assert two.label(X.th(2, 1)(w)) == '(2,1)'
    assert two.label(X.s(1, 0)(one.index_of('(2)'))) == '(0,2)'
    assert two.label(X.s(1, 1)(one.index_of('(2)'))) == '(2,0)'


def test_non_commutative_monoid_is_refused():
    m = make_from_table(NON_COMMUTATIVE)
    with pytest.raises(NonCommutativeMonoidError):
        nerve(m, 2)
    plain = nerve(m, 2, gamma=False)
    assert not plain.has_theta
    with pytest.raises(NonCommutativeMonoidError):
        simplex_set(m, 0, 2)
    with pytest.raises(NonCommutativeMonoidError):
        basepoint_adjoin(nerve(make_trunc_add(1), 2), m)


# L-simplex sets

def test_simplex_sizes():
    assert [simplex_set(make_trunc_add(1), 1, 2).size(n)
            for n in range(3)] == [1, 2, 3]
    for k in (1, 2, 3):
        top = 2 ** k - 1
        assert simplex_set(make_powerset_union(k), top, 1).size(1) == 3 ** k
        assert simplex_set(make_powerset_disjoint(k), top, 1).size(1) == \
            2 ** k


def test_simplex_arguments():
    m = make_trunc_add(2)
    with pytest.raises(SegalValueError):
        simplex_set(m, 3, 2)
    with pytest.raises(SegalValueError):
        simplex_set(m, True, 2)
    with pytest.raises(TruncationError):
        simplex_set(m, 2, -1)
    with pytest.raises(TruncationError):
        basepoint_adjoin(nerve(m, 0))


@pytest.mark.parametrize('m,L', [
    (make_trunc_add(2), 2),
    (make_cyclic_group(4), 1),
    (make_powerset_union(2), 3),
])
def test_last_face_matches_adjoined_nerve(m, L):
    report = check_simplex_last_face(m, L, 3)
    assert report.passed
    assert report.relations == ('simplex.last_face',)


def test_dropping_x0_is_a_gamma_map():
    m = make_trunc_add(2)
    maps = simplex_to_nerve_morphism(m, 2, 3)
    assert len(maps) == 4
    assert all(f.is_bijective() for f in maps)
    union = make_powerset_union(1)
    maps = simplex_to_nerve_morphism(union, 1, 2)
    assert not maps[1].is_injective()


@pytest.mark.parametrize('m,L', [
    (make_trunc_add(3), 3),
    (make_trunc_add(1), 1),
    (make_cyclic_group(5), 2),
    (make_powerset_disjoint(2), 3),
])
def test_induced_cyclic_structure(m, L):
    X = induced_cyclic_on_nerve(m, L, 3)
    assert check_cyclic(X).passed
    one = X.level(1)
    # tau (x) = (x^perp)
    assert one.label(X.t(1)(one.index_of(f"({m.label(0)})"))) == \
        f"({m.label(L)})"


def test_induced_cyclic_needs_complements():
    with pytest.raises(OrthocomplementError):
        induced_cyclic_on_nerve(make_powerset_union(1), 1, 2)
    with pytest.raises(OrthocomplementError):
        induced_cyclic_on_nerve(make_trunc_add(2), 1, 2)


# Maps of cardinals

def test_phi_generators():
    assert PhiMorphism.face(2, 0).image == (0, 0, 1)
    assert PhiMorphism.face(2, 1).image == (0, 1, 1)
    assert PhiMorphism.face(2, 2).image == (0, 1, 0)
    assert PhiMorphism.degeneracy(1, 0).image == (0, 2)
    assert PhiMorphism.theta(3, 2).image == (0, 1, 3, 2)
    assert PhiMorphism.tau(2).image == (2, 0, 1)
    assert PhiMorphism.tau_power(2, 1) == PhiMorphism.tau(2)
    assert PhiMorphism.tau_power(3, 4) == PhiMorphism.identity(3)
    assert PhiMorphism.face(2, 1).is_pointed
    assert not PhiMorphism.tau(2).is_pointed
    with pytest.raises(SegalValueError):
        PhiMorphism.theta(2, 2)
    with pytest.raises(SegalValueError):
        PhiMorphism(1, 1, [0, 2])


def test_phi_composition():
    f = PhiMorphism.face(2, 1)
    g = PhiMorphism.degeneracy(1, 0)
    assert (f @ g) == PhiMorphism.identity(1)
    with pytest.raises(SegalValueError):
        f @ f


def test_every_map_factors_through_tau():
    for f in all_phi_morphisms(2, 2):
        k, g = f.factor()
        assert g.is_pointed
        assert PhiMorphism.tau_power(2, k) @ g == f
    assert sum(1 for _ in all_phi_morphisms(1, 2)) == 9


def test_phi_action():
    m = make_trunc_add(2)
    assert phi_action(PhiMorphism.face(2, 1), (0, 1, 1), m) == (0, 2)
    assert phi_action(PhiMorphism.degeneracy(1, 1), (1, 1), m) == (1, 1, 0)
    # an empty preimage gives e
    assert phi_action(PhiMorphism(0, 1, [1]), (2,), m) == (0, 2)
    with pytest.raises(CorruptedStateError):
        phi_action(PhiMorphism.face(1, 0), (1, 1), make_trunc_add(1))
    with pytest.raises(SegalValueError):
        phi_action(PhiMorphism.face(2, 0), (1, 1), m)


@pytest.mark.parametrize('m,L', [
    (make_trunc_add(2), 2),
    (make_cyclic_group(3), 1),
])
def test_phi_tables_are_the_structure_maps(m, L):
    levels = simplex_levels(m, L, 3)
    X = levels.structured
    tables = levels.levels
    for n in range(1, 4):
        for i in range(n + 1):
            assert phi_table(PhiMorphism.face(n, i), tables[n],
                             tables[n - 1], m) == X.d(n, i)
        assert phi_table(PhiMorphism.tau(n), tables[n], tables[n], m) \
            == X.t(n)
        for i in range(1, n):
            assert phi_table(PhiMorphism.theta(n, i), tables[n],
                             tables[n], m) == X.th(n, i)
    for n in range(3):
        for i in range(n + 1):
            assert phi_table(PhiMorphism.degeneracy(n, i), tables[n],
                             tables[n + 1], m) == X.s(n, i)


# Nerve as maps out of powersets

@pytest.mark.parametrize('m', [
    make_trunc_add(2), make_cyclic_group(3), make_powerset_union(1),
])
def test_plasmic_crosscheck(m):
    report = plasmic_nerve_crosscheck(m, 3)
    assert report.passed, report.violations[:3]
    assert 'plasmic.closure' in report.relations
    assert 'morphism.bijective' in report.relations
