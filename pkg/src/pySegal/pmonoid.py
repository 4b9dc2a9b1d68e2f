"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Finite partial monoids

The operation is a total table; UNDEFINED marks pairs with no product.
Equations hold in the "both sides undefined, or both defined and equal"
sense.

Powerset examples encode subsets as bitmasks, so the element index is
the mask and labels read like "{a,c}".
"""

import enum
import json
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

import numpy as np

import pySegal
from pySegal.check_report import CheckReport, ViolationCollector
from pySegal.exceptions import (
    ParameterRangeError, PartialMonoidError, SegalValueError,
)
from pySegal.finset import FinSet

logger = pySegal.getLogger('PartialMonoid')

UNDEFINED = -1


class Complement (enum.Enum):
    NONE = 'none'
    MULTIPLE = 'multiple'


class PartialMonoid:

    def __init__(self, carrier: FinSet, op, identity: int,
                 kind: Optional[str] = None,
                 parameter: Optional[int] = None):
        table = np.array(op, dtype=np.int64, copy=True)
        size = carrier.size
        if table.shape != (size, size):
            raise PartialMonoidError(
                f"Operation table of shape {table.shape} "
                f"for a carrier of size {size}")
        if table.size and (table.min() < UNDEFINED or table.max() >= size):
            raise PartialMonoidError("Operation table entry out of range")
        if not 0 <= identity < size:
            raise PartialMonoidError(
                f"Identity {identity} not in the carrier")
        table.setflags(write=False)
        self._carrier = carrier
        self._op = table
        self._identity = int(identity)
        self._kind = kind
        self._parameter = parameter

    @property
    def carrier(self) -> FinSet:
        return self._carrier

    @property
    def size(self) -> int:
        return self._carrier.size

    @property
    def op(self) -> np.ndarray:
        return self._op

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def kind(self) -> Optional[str]:
        """
        Which built-in family this came from, if any
        """
        return self._kind

    @property
    def parameter(self) -> Optional[int]:
        return self._parameter

    def label(self, x: int) -> str:
        return self._carrier.label(x)

    def index_of(self, label: str) -> int:
        return self._carrier.index_of(label)

    def mul(self, x: int, y: int) -> Optional[int]:
        value = int(self._op[x, y])
        return None if value == UNDEFINED else value

    def is_defined(self, x: int, y: int) -> bool:
        return self._op[x, y] != UNDEFINED

    def product(self, elements: Iterable[int]) -> Optional[int]:
        """
        Left fold, the empty product is the identity
        """
        result = self._identity
        for x in elements:
            result = int(self._op[result, x])
            if result == UNDEFINED:
                return None
        return result

    def extended_op(self) -> np.ndarray:
        """
        The table with one more row and column of UNDEFINED,
        so that indexing with UNDEFINED (-1) lands there
        """
        size = self.size
        extended = np.full((size + 1, size + 1), UNDEFINED, dtype=np.int64)
        extended[:size, :size] = self._op
        return extended

    def with_entry(self, x: int, y: int, value: Optional[int]) \
            -> "PartialMonoid":
        table = self._op.copy()
        table[x, y] = UNDEFINED if value is None else value
        return PartialMonoid(self._carrier, table, self._identity)

    def as_dict(self) -> dict:
        return {
            'size': self.size,
            'identity': self._identity,
            'labels': list(self._carrier.labels)
            if self._carrier.is_labeled else None,
            'op': [[None if v == UNDEFINED else v for v in row]
                   for row in self._op.tolist()],
        }

    def __repr__(self):
        family = f"{self._kind}:{self._parameter}" if self._kind else 'table'
        return f"PartialMonoid({family}, size={self.size})"


def _value_str(value: int) -> str:
    return 'undefined' if value == UNDEFINED else str(value)


def validate_axioms(m: PartialMonoid) -> CheckReport:
    collector = ViolationCollector(log=logger)
    e = m.identity
    everything = np.arange(m.size)

    collector.note('pmonoid.identity')
    for x in np.nonzero(m.op[e, :] != everything)[0].tolist():
        collector.add('pmonoid.identity', 0, (x,), None,
                      f"e·{x} = {_value_str(m.op[e, x])}")
    for x in np.nonzero(m.op[:, e] != everything)[0].tolist():
        collector.add('pmonoid.identity', 1, (x,), None,
                      f"{x}·e = {_value_str(m.op[x, e])}")

    collector.note('pmonoid.associativity')
    extended = m.extended_op()
    op = m.op
    left = extended[op[:, :, None], everything[None, None, :]]
    right = extended[everything[:, None, None], op[None, :, :]]
    for x, y, z in np.argwhere(left != right).tolist():
        collector.add('pmonoid.associativity', 0, (x, y, z), None,
                      f"({x}·{y})·{z} = {_value_str(left[x, y, z])}, "
                      f"{x}·({y}·{z}) = {_value_str(right[x, y, z])}")
    return collector.report('partial monoid axioms')


def commutativity_witness(m: PartialMonoid) -> Optional[Tuple[int, int]]:
    bad = np.argwhere(m.op != m.op.T)
    if bad.size == 0:
        return None
    x, y = bad[0].tolist()
    return x, y


def is_commutative(m: PartialMonoid) -> bool:
    return commutativity_witness(m) is None


def orthocomplement(m: PartialMonoid, top: int) \
        -> Dict[int, Union[int, Complement]]:
    """
    x -> the unique y with x·y = top, or why there isn't one
    """
    if not 0 <= top < m.size:
        raise SegalValueError(f"Element {top} not in the carrier")
    result = {}
    for x in range(m.size):
        ys = np.nonzero(m.op[x, :] == top)[0]
        if ys.size == 1:
            result[x] = int(ys[0])
        elif ys.size == 0:
            result[x] = Complement.NONE
        else:
            result[x] = Complement.MULTIPLE
    return result


def has_orthocomplement_property(m: PartialMonoid, top: int) -> bool:
    return all(isinstance(y, int)
               for y in orthocomplement(m, top).values())


def satisfies_zero_one_law(m: PartialMonoid, top: int) -> bool:
    """
    x·top defined only for x = e
    """
    defined = np.nonzero(m.op[:, top] != UNDEFINED)[0].tolist()
    return defined == [m.identity]


def is_effect_algebra(m: PartialMonoid, top: int) -> bool:
    if not is_commutative(m):
        logger.warning(f"{m} is not commutative, so not an effect algebra")
        return False
    return has_orthocomplement_property(m, top) \
        and satisfies_zero_one_law(m, top)


# Built-in families

def _check_parameter(name: str, value, minimum: int):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ParameterRangeError(f"{name} must be an int, not {value!r}")
    if value < minimum:
        raise ParameterRangeError(f"{name} must be >= {minimum}, not {value}")


def subset_label(mask: int, names: Sequence[str]) -> str:
    members = [names[i] for i in range(len(names)) if mask >> i & 1]
    return '{' + ','.join(members) + '}'


def _letters(k: int) -> Tuple[str, ...]:
    if k > 26:
        raise ParameterRangeError(f"At most 26 named points, not {k}")
    return tuple(chr(ord('a') + i) for i in range(k))


def make_trunc_add(top: int) -> PartialMonoid:
    """
    {0..top} with x + y defined when it is at most top
    """
    _check_parameter('L', top, 0)
    values = np.arange(top + 1)
    sums = values[:, None] + values[None, :]
    op = np.where(sums <= top, sums, UNDEFINED)
    return PartialMonoid(FinSet(top + 1, [str(v) for v in values]),
                         op, 0, kind='trunc', parameter=top)


def make_cyclic_group(m: int) -> PartialMonoid:
    _check_parameter('m', m, 1)
    values = np.arange(m)
    op = (values[:, None] + values[None, :]) % m
    return PartialMonoid(FinSet(m, [str(v) for v in values]),
                         op, 0, kind='zmod', parameter=m)


def _powerset(names: Sequence[str], disjoint: bool,
              kind: str) -> PartialMonoid:
    size = 2 ** len(names)
    masks = np.arange(size)
    unions = masks[:, None] | masks[None, :]
    if disjoint:
        op = np.where((masks[:, None] & masks[None, :]) == 0,
                      unions, UNDEFINED)
    else:
        op = unions
    labels = [subset_label(mask, names) for mask in range(size)]
    return PartialMonoid(FinSet(size, labels), op, 0,
                         kind=kind, parameter=len(names))


def make_powerset_disjoint(k: int) -> PartialMonoid:
    _check_parameter('k', k, 0)
    return _powerset(_letters(k), disjoint=True, kind='pset-disjoint')


def make_powerset_union(k: int) -> PartialMonoid:
    _check_parameter('k', k, 0)
    return _powerset(_letters(k), disjoint=False, kind='pset-union')


def make_powerset_monoid(n: int) -> PartialMonoid:
    """
    Subsets of {1..n} under disjoint union
    """
    _check_parameter('n', n, 0)
    return _powerset([str(i) for i in range(1, n + 1)],
                     disjoint=True, kind='powerset')


def make_from_table(source: dict) -> PartialMonoid:
    """
    {size, identity, op: [[entry or null]], labels (optional)}

    Raises PartialMonoidError with the first witness
    if the table breaks an axiom
    """
    try:
        size = source['size']
        identity = source['identity']
        rows = source['op']
    except (KeyError, TypeError) as e:
        raise PartialMonoidError(f"Table needs size, identity and op: {e}")
    _check_parameter('size', size, 1)
    if not isinstance(rows, list) or len(rows) != size \
            or any(not isinstance(row, list) or len(row) != size
                   for row in rows):
        raise PartialMonoidError(f"op must be a {size} x {size} list")
    op = [[UNDEFINED if v is None else v for v in row] for row in rows]
    labels = source.get('labels')
    monoid = PartialMonoid(FinSet(size, labels), op, identity,
                           kind='table')
    report = validate_axioms(monoid)
    if not report.passed:
        raise PartialMonoidError(
            f"Table is not a partial monoid: {report.violations[0]}")
    return monoid


def load_table(path: str) -> PartialMonoid:
    with open(path, 'r') as fh:
        source = json.load(fh)
    return make_from_table(source)


def label_index(m: PartialMonoid, label: str) -> int:
    """
    Element by exact label, numeric index accepted for unlabeled carriers
    """
    return m.index_of(label)
