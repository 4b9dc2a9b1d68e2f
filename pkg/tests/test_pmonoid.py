"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only
"""

import json

import pytest

from pySegal.exceptions import ParameterRangeError, PartialMonoidError
from pySegal.pmonoid import (
    UNDEFINED, Complement, commutativity_witness, has_orthocomplement_property,
    is_commutative, is_effect_algebra, label_index, load_table,
    make_cyclic_group, make_from_table, make_powerset_disjoint,
    make_powerset_monoid, make_powerset_union, make_trunc_add,
    orthocomplement, satisfies_zero_one_law, validate_axioms,
)

BUILTINS = [
    (make_trunc_add, 0), (make_trunc_add, 3),
    (make_cyclic_group, 1), (make_cyclic_group, 5),
    (make_powerset_disjoint, 0), (make_powerset_disjoint, 3),
    (make_powerset_union, 2), (make_powerset_monoid, 2),
]


# Left-absorbing: x·y = x unless x is the identity
NON_COMMUTATIVE = {
    'size': 3,
    'identity': 0,
    'op': [[0, 1, 2], [1, 1, 1], [2, 2, 2]],
}


@pytest.mark.parametrize('maker,parameter', BUILTINS)
def test_builtins_are_commutative_partial_monoids(maker, parameter):
    m = maker(parameter)
    report = validate_axioms(m)
    assert report.passed, report.violations
    assert set(report.relations) == {'pmonoid.identity',
                                     'pmonoid.associativity'}
    assert is_commutative(m)


def test_trunc_add():
    m = make_trunc_add(2)
    assert m.size == 3
    assert m.kind == 'trunc' and m.parameter == 2
    assert m.mul(1, 1) == 2
    assert m.mul(1, 2) is None
    assert not m.is_defined(2, 2)
    assert m.op[2, 1] == UNDEFINED
    assert m.label(2) == '2'


def test_cyclic_group_wraps():
    m = make_cyclic_group(4)
    assert m.mul(3, 2) == 1
    assert m.op.min() >= 0


def test_powerset_labels_and_ops():
    union = make_powerset_union(2)
    assert [union.label(x) for x in range(4)] == \
        ['{}', '{a}', '{b}', '{a,b}']
    assert union.mul(1, 3) == 3
    disjoint = make_powerset_disjoint(2)
    assert disjoint.mul(1, 2) == 3
    assert disjoint.mul(1, 3) is None
    numbered = make_powerset_monoid(2)
    assert numbered.label(3) == '{1,2}'
    assert numbered.index_of('{2}') == 2


@pytest.mark.parametrize('maker,bad', [
    (make_trunc_add, -1),
    (make_cyclic_group, 0),
    (make_powerset_disjoint, -1),
    (make_powerset_union, 27),
    (make_trunc_add, True),
    (make_cyclic_group, 2.0),
])
def test_parameter_range(maker, bad):
    with pytest.raises(ParameterRangeError):
        maker(bad)


def test_product_is_a_left_fold():
    m = make_trunc_add(3)
    assert m.product([]) == m.identity
    assert m.product([1, 1, 1]) == 3
    assert m.product([2, 2]) is None
    assert m.product([2, 2, 0]) is None


def test_extended_op():
    m = make_trunc_add(1)
    extended = m.extended_op()
    assert extended.shape == (3, 3)
    assert extended[UNDEFINED, 0] == UNDEFINED
    assert extended[0, 1] == 1


def test_identity_violation_is_reported():
    broken = make_trunc_add(2).with_entry(0, 1, 2)
    assert broken.kind is None
    report = validate_axioms(broken)
    assert not report.passed
    identity = report.for_relation('pmonoid.identity')
    assert identity[0].indices == (1,)
    assert identity[0].n == 0


def test_associativity_violation_is_reported():
    table = {
        'size': 3,
        'identity': 0,
        'op': [[0, 1, 2], [1, 2, None], [2, 2, None]],
    }
    with pytest.raises(PartialMonoidError):
        make_from_table(table)


def test_from_table():
    m = make_from_table({
        'size': 2, 'identity': 0, 'op': [[0, 1], [1, None]],
        'labels': ['e', 'x'],
    })
    assert m.kind == 'table'
    assert m.mul(1, 1) is None
    assert label_index(m, 'x') == 1
    assert m.as_dict() == {
        'size': 2, 'identity': 0, 'labels': ['e', 'x'],
        'op': [[0, 1], [1, None]],
    }


@pytest.mark.parametrize('table', [
    {'size': 2, 'op': [[0, 1], [1, 0]]},
    {'size': 2, 'identity': 0, 'op': [[0, 1]]},
    {'size': 2, 'identity': 0, 'op': [[0, 1], [1, 2]]},
    {'size': 2, 'identity': 5, 'op': [[0, 1], [1, 0]]},
    {'size': 0, 'identity': 0, 'op': []},
    [1, 2, 3],
])
def test_from_table_rejects(table):
    with pytest.raises(PartialMonoidError):
        make_from_table(table)


def test_load_table(tmp_path):
    path = tmp_path / 'z2.json'
    path.write_text(json.dumps({'size': 2, 'identity': 0,
                                'op': [[0, 1], [1, 0]]}))
    m = load_table(str(path))
    assert m.mul(1, 1) == 0
    assert label_index(m, '1') == 1


def test_commutativity_witness():
    m = make_from_table(NON_COMMUTATIVE)
    assert validate_axioms(m).passed
    assert commutativity_witness(m) == (1, 2)
    assert not is_effect_algebra(m, 2)
    assert commutativity_witness(make_trunc_add(3)) is None


def test_orthocomplement_of_trunc():
    m = make_trunc_add(2)
    assert orthocomplement(m, 2) == {0: 2, 1: 1, 2: 0}
    assert orthocomplement(m, 1)[2] is Complement.NONE
    assert satisfies_zero_one_law(m, 2)
    assert is_effect_algebra(m, 2)


def test_group_fails_zero_one_law():
    m = make_cyclic_group(3)
    assert has_orthocomplement_property(m, 1)
    assert not satisfies_zero_one_law(m, 1)
    assert not is_effect_algebra(m, 1)


def test_union_complements_are_not_unique():
    m = make_powerset_union(1)
    assert orthocomplement(m, 1) == {0: 1, 1: Complement.MULTIPLE}
    assert not has_orthocomplement_property(m, 1)


def test_disjoint_union_is_effect_algebra():
    m = make_powerset_disjoint(2)
    assert orthocomplement(m, 3) == {0: 3, 1: 2, 2: 1, 3: 0}
    assert is_effect_algebra(m, 3)
