"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

The Hall algebra of a finite 2-Segal set, over the rationals

The basis is X_1. For omega in X_2 with d_2 omega = x, d_0 omega = y and
d_1 omega = z, omega contributes z to the product m(x, y), so

    c[x, y, z] = |{omega : (d_2, d_0, d_1)(omega) = (x, y, z)}|

The unit is the sum of s_0(X_0), the counit is the indicator of
s_1(X_0), where s_1^0 = tau s_0^0 is the extra degeneracy.

Linear maps are matrices of shape (outputs, inputs), inputs being the
column vectors. A pair of basis elements (a, b) is index a * dim + b.
"""

from fractions import Fraction
from typing import Optional

import numpy as np

import pySegal
from pySegal.check_report import CheckReport, ViolationCollector
from pySegal.exceptions import (
    DegeneratePairingError, DomainMismatchError, MissingStructureError,
    SegalValueError, TruncationError,
)
from pySegal.finset import FinSet
from pySegal.hall.linalg import (
    determinant, fraction_matrix, fraction_vector, inverse_matrix,
)
from pySegal.simplicial.relations import require_structure
from pySegal.simplicial.segal import extra_degeneracy
from pySegal.simplicial.structured import TruncatedStructuredSet

logger = pySegal.getLogger('Hall.Algebra')


class HallAlgebra:

    def __init__(self, basis: FinSet, structure_constants,
                 unit, counit=None):
        c = np.array(structure_constants, dtype=np.int64, copy=True)
        d = basis.size
        if c.shape != (d, d, d):
            raise DomainMismatchError(
                f"Structure constants of shape {c.shape} "
                f"for dimension {d}")
        c.setflags(write=False)
        self._basis = basis
        self._c = c
        self._c_exact = c.astype(object)
        self._unit = fraction_vector(unit)
        self._counit = None if counit is None else fraction_vector(counit)
        for name, vector in (('unit', self._unit), ('counit', self._counit)):
            if vector is not None and vector.shape != (d,):
                raise DomainMismatchError(
                    f"{name} of length {vector.shape} for dimension {d}")

    @property
    def basis(self) -> FinSet:
        return self._basis

    @property
    def dimension(self) -> int:
        return self._basis.size

    @property
    def structure_constants(self) -> np.ndarray:
        return self._c

    @property
    def unit(self) -> np.ndarray:
        return self._unit.copy()

    @property
    def counit(self) -> Optional[np.ndarray]:
        return None if self._counit is None else self._counit.copy()

    @property
    def has_counit(self) -> bool:
        return self._counit is not None

    def basis_vector(self, x: int) -> np.ndarray:
        v = fraction_vector([0] * self.dimension)
        v[x] = Fraction(1)
        return v

    def element(self, label: str) -> np.ndarray:
        return self.basis_vector(self._basis.index_of(label))

    def multiply(self, u, v) -> np.ndarray:
        u = fraction_vector(u)
        v = fraction_vector(v)
        by_u = np.tensordot(u, self._c_exact, axes=([0], [0]))
        return np.tensordot(v, by_u, axes=([0], [0]))

    def power(self, v, k: int) -> np.ndarray:
        if k < 0:
            raise SegalValueError(f"Negative power {k}")
        result = self.unit
        for _ in range(k):
            result = self.multiply(result, v)
        return result

    def apply_counit(self, v) -> Fraction:
        if self._counit is None:
            raise MissingStructureError("This algebra has no counit")
        return Fraction(np.dot(fraction_vector(v), self._counit))

    def multiplication_matrix(self) -> np.ndarray:
        """
        (dim, dim²), column (x, y) holding m(x, y)
        """
        d = self.dimension
        return self._c_exact.transpose(2, 0, 1).reshape(d, d * d)

    def with_structure_constant(self, x: int, y: int, z: int,
                                value: int) -> "HallAlgebra":
        c = self._c.copy()
        c[x, y, z] = value
        return HallAlgebra(self._basis, c, self._unit, self._counit)

    def with_counit(self, counit) -> "HallAlgebra":
        return HallAlgebra(self._basis, self._c, self._unit, counit)

    def as_dict(self) -> dict:
        nonzero = np.argwhere(self._c != 0)
        retval = {
            'dimension': self.dimension,
            'basis_labels': [self._basis.label(x)
                             for x in range(self.dimension)],
            'structure_constants': [
                [x, y, z, int(self._c[x, y, z])]
                for x, y, z in nonzero.tolist()],
            'unit': list(self._unit),
            'counit': None if self._counit is None else list(self._counit),
            'pairing_determinant': None,
        }
        if self._counit is not None:
            retval['pairing_determinant'] = pairing_determinant(self)
        return retval

    def __repr__(self):
        return f"HallAlgebra(dim={self.dimension})"


def counit(X: TruncatedStructuredSet) -> np.ndarray:
    """
    Indicator of the image of the extra degeneracy s_1^0 : X_0 -> X_1
    """
    require_structure(X, tau=True)
    s1 = extra_degeneracy(X, 0)
    hit = np.zeros(X.size(1), dtype=np.int64)
    hit[s1.image] = 1
    return fraction_vector(hit)


def hall_algebra(X: TruncatedStructuredSet) -> HallAlgebra:
    if X.truncation < 2:
        raise TruncationError(
            f"A Hall algebra needs X_2, truncation is {X.truncation}")
    d = X.size(1)
    c = np.zeros((d, d, d), dtype=np.int64)
    np.add.at(c, (X.d(2, 2).image, X.d(2, 0).image, X.d(2, 1).image), 1)
    unit = np.bincount(X.s(0, 0).image, minlength=d)
    epsilon = counit(X) if X.has_tau else None
    algebra = HallAlgebra(X.level(1), c, unit, epsilon)
    logger.info(f"Hall algebra of {X}: dimension {d}, "
                f"{int(np.count_nonzero(c))} nonzero structure constants")
    return algebra


def check_associativity(A: HallAlgebra) -> CheckReport:
    c = A.structure_constants
    left = np.einsum('xyw,wzv->xyzv', c, c)
    right = np.einsum('yzw,xwv->xyzv', c, c)
    vc = ViolationCollector(log=logger)
    vc.note('hall.associativity')
    for x, y, z, v in np.argwhere(left != right).tolist():
        vc.add('hall.associativity', 0, (x, y, z), v,
               f"(xy)z has {int(left[x, y, z, v])}, "
               f"x(yz) has {int(right[x, y, z, v])}")
    return vc.report('Hall associativity')


def check_commutativity(A: HallAlgebra) -> CheckReport:
    c = A.structure_constants
    vc = ViolationCollector(log=logger)
    vc.note('hall.commutativity')
    for x, y, z in np.argwhere(c != c.transpose(1, 0, 2)).tolist():
        if x < y:
            vc.add('hall.commutativity', 0, (x, y), z,
                   f"{int(c[x, y, z])} != {int(c[y, x, z])}")
    return vc.report('Hall commutativity')


def check_unit(A: HallAlgebra) -> CheckReport:
    d = A.dimension
    unit = A.unit
    c = A.structure_constants.astype(object)
    expected = np.identity(d, dtype=np.int64)
    vc = ViolationCollector(log=logger)
    vc.note('hall.unit')
    left = np.tensordot(unit, c, axes=([0], [0]))
    right = np.tensordot(unit, c, axes=([0], [1]))
    for side, product in enumerate((left, right)):
        for x, z in np.argwhere(product != expected).tolist():
            vc.add('hall.unit', side, (x,), z,
                   f"coefficient {product[x, z]}")
    return vc.report('Hall unit')


def pairing_matrix(A: HallAlgebra) -> np.ndarray:
    """
    beta[x, y] = counit(m(x, y))
    """
    if not A.has_counit:
        raise MissingStructureError("The pairing needs a counit")
    c = A.structure_constants.astype(object)
    return np.tensordot(c, A.counit, axes=([2], [0]))


def pairing_determinant(A: HallAlgebra) -> Fraction:
    return determinant(pairing_matrix(A))


def check_frobenius(A: HallAlgebra) -> CheckReport:
    vc = ViolationCollector(log=logger)
    vc.note('hall.frobenius')
    if not A.has_counit:
        vc.add('hall.frobenius', 0, (), None, "no counit")
    else:
        det = pairing_determinant(A)
        if det == 0:
            vc.add('hall.frobenius', 0, (), None, "pairing is degenerate")
        else:
            logger.debug(f"Pairing determinant {det}")
    return vc.report('Frobenius pairing')


def linear_comult(A: HallAlgebra) -> np.ndarray:
    """
    The comultiplication dual to m under the pairing, as a (dim², dim)
    matrix

        delta(x) = sum over a, b, b' of beta^-1[a, b] c[b, x, b'] a ⊗ b'
    """
    beta = pairing_matrix(A)
    try:
        beta_inverse = inverse_matrix(beta)
    except SegalValueError:
        raise DegeneratePairingError(
            f"Pairing of {A} is degenerate, there is no comultiplication")
    d = A.dimension
    c = fraction_matrix(A.structure_constants)
    # (a, x, b') -> (a, b', x)
    delta = np.tensordot(beta_inverse, c, axes=([1], [0]))
    return delta.transpose(0, 2, 1).reshape(d * d, d)
