"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Truncated simplicial sets carrying optional cyclic (tau) and
symmetric (theta) operators, held as complete tables

    face[n][i]          d_i^n : X_n -> X_{n-1}      1 <= n <= N, 0 <= i <= n
    degeneracy[n][i]    s_i^n : X_n -> X_{n+1}      0 <= n < N,  0 <= i <= n
    tau[n]              tau^n : X_n -> X_n          0 <= n <= N
    theta[n][i-1]       theta_i^n : X_n -> X_n      1 <= i <= n-1

face[0] and theta[0], theta[1] are empty lists.

Products of operators are written as they compose: theta_product(n, [1, 2])
is theta_1 ∘ theta_2, so theta_2 is applied first.
"""

import copy
import enum
import functools
from typing import Optional, Sequence

import pySegal
from pySegal.exceptions import (
    MissingStructureError, StructureTableError, TruncationError,
)
from pySegal.finset import FinMap, FinSet

logger = pySegal.getLogger('Simplicial.Structured')


class Flavor (enum.Enum):
    PLAIN = 'plain'
    PARACYCLIC = 'paracyclic'
    CYCLIC = 'cyclic'
    GAMMA = 'gamma'
    COSYMMETRIC = 'cosymmetric'

    @property
    def needs_tau(self) -> bool:
        return self in (Flavor.PARACYCLIC, Flavor.CYCLIC, Flavor.COSYMMETRIC)

    @property
    def needs_theta(self) -> bool:
        return self in (Flavor.GAMMA, Flavor.COSYMMETRIC)


def composite(*maps: FinMap) -> FinMap:
    """
    composite(a, b, c) is a ∘ b ∘ c
    """
    return functools.reduce(lambda outer, inner: outer @ inner, maps)


class TruncatedStructuredSet:

    def __init__(self, levels: Sequence[FinSet],
                 face: Sequence[Sequence[FinMap]],
                 degeneracy: Sequence[Sequence[FinMap]],
                 tau: Optional[Sequence[FinMap]] = None,
                 theta: Optional[Sequence[Sequence[FinMap]]] = None,
                 flavor: Optional[Flavor] = None):
        self._levels = tuple(levels)
        self._face = tuple(tuple(row) for row in face)
        self._degeneracy = tuple(tuple(row) for row in degeneracy)
        self._tau = None if tau is None else tuple(tau)
        self._theta = None if theta is None \
            else tuple(tuple(row) for row in theta)
        if flavor is None:
            flavor = self._inferred_flavor()
        self._flavor = flavor
        self._report = None
        self._validate()

    def _inferred_flavor(self) -> Flavor:
        if self._tau is not None and self._theta is not None:
            return Flavor.COSYMMETRIC
        if self._tau is not None:
            return Flavor.PARACYCLIC
        if self._theta is not None:
            return Flavor.GAMMA
        return Flavor.PLAIN

    def _check_map(self, fmap: FinMap, source: int, target: int, name: str):
        if not isinstance(fmap, FinMap):
            raise StructureTableError(f"{name} is not a FinMap")
        if not (fmap.domain.matches(self._levels[source])
                and fmap.codomain.matches(self._levels[target])):
            raise StructureTableError(
                f"{name} should map X_{source} to X_{target}, "
                f"not {fmap.domain.size} -> {fmap.codomain.size} elements")

    def _validate(self):
        N = len(self._levels) - 1
        if N < 0:
            raise StructureTableError("Need at least the level X_0")
        if len(self._face) != N + 1 or len(self._face[0]) != 0:
            raise StructureTableError(
                "face needs rows 0..N with row 0 empty")
        for n in range(1, N + 1):
            if len(self._face[n]) != n + 1:
                raise StructureTableError(f"Need {n + 1} faces at level {n}")
            for i, fmap in enumerate(self._face[n]):
                self._check_map(fmap, n, n - 1, f"d_{i}^{n}")
        if len(self._degeneracy) != N:
            raise StructureTableError("degeneracy needs rows 0..N-1")
        for n in range(N):
            if len(self._degeneracy[n]) != n + 1:
                raise StructureTableError(
                    f"Need {n + 1} degeneracies at level {n}")
            for i, fmap in enumerate(self._degeneracy[n]):
                self._check_map(fmap, n, n + 1, f"s_{i}^{n}")
        if self._tau is not None:
            if len(self._tau) != N + 1:
                raise StructureTableError("tau needs levels 0..N")
            for n, fmap in enumerate(self._tau):
                self._check_map(fmap, n, n, f"tau^{n}")
        if self._theta is not None:
            if len(self._theta) != N + 1:
                raise StructureTableError("theta needs rows 0..N")
            for n in range(N + 1):
                if len(self._theta[n]) != max(n - 1, 0):
                    raise StructureTableError(
                        f"Need {max(n - 1, 0)} thetas at level {n}")
                for i, fmap in enumerate(self._theta[n], start=1):
                    self._check_map(fmap, n, n, f"theta_{i}^{n}")

        if self._flavor.needs_tau and self._tau is None:
            raise StructureTableError(f"{self._flavor.value} needs tau")
        if self._flavor.needs_theta and self._theta is None:
            raise StructureTableError(f"{self._flavor.value} needs theta")
        if self._tau is not None:
            for n, fmap in enumerate(self._tau):
                if not fmap.is_bijective():
                    raise StructureTableError(f"tau^{n} is not invertible")

    # Accessors

    @property
    def truncation(self) -> int:
        return len(self._levels) - 1

    @property
    def flavor(self) -> Flavor:
        return self._flavor

    @property
    def has_tau(self) -> bool:
        return self._tau is not None

    @property
    def has_theta(self) -> bool:
        return self._theta is not None

    @property
    def report(self):
        """
        The CheckReport this set was certified with, if any
        """
        return self._report

    @property
    def levels(self) -> tuple:
        return self._levels

    @property
    def face_table(self) -> tuple:
        return self._face

    @property
    def degeneracy_table(self) -> tuple:
        return self._degeneracy

    @property
    def tau_table(self) -> Optional[tuple]:
        return self._tau

    @property
    def theta_table(self) -> Optional[tuple]:
        return self._theta

    def level(self, n: int) -> FinSet:
        if not 0 <= n <= self.truncation:
            raise TruncationError(
                f"Level {n} outside 0..{self.truncation}")
        return self._levels[n]

    def size(self, n: int) -> int:
        return self.level(n).size

    def d(self, n: int, i: int) -> FinMap:
        if not 1 <= n <= self.truncation or not 0 <= i <= n:
            raise TruncationError(
                f"No face d_{i}^{n} at truncation {self.truncation}")
        return self._face[n][i]

    def s(self, n: int, i: int) -> FinMap:
        if not 0 <= n < self.truncation or not 0 <= i <= n:
            raise TruncationError(
                f"No degeneracy s_{i}^{n} at truncation {self.truncation}")
        return self._degeneracy[n][i]

    def t(self, n: int) -> FinMap:
        if self._tau is None:
            raise MissingStructureError(
                f"A {self._flavor.value} set has no tau")
        if not 0 <= n <= self.truncation:
            raise TruncationError(
                f"No tau^{n} at truncation {self.truncation}")
        return self._tau[n]

    def th(self, n: int, i: int) -> FinMap:
        if self._theta is None:
            raise MissingStructureError(
                f"A {self._flavor.value} set has no theta")
        if not 0 <= n <= self.truncation or not 1 <= i <= n - 1:
            raise TruncationError(
                f"No theta_{i}^{n} at truncation {self.truncation}")
        return self._theta[n][i - 1]

    def identity(self, n: int) -> FinMap:
        return FinMap.identity(self.level(n))

    def theta_product(self, n: int, indices: Sequence[int]) -> FinMap:
        """
        theta_{i_1} ∘ theta_{i_2} ∘ ... in written order,
        the identity for no indices
        """
        if not indices:
            return self.identity(n)
        return composite(*(self.th(n, i) for i in indices))

    def tau_power(self, n: int, k: int) -> FinMap:
        return self.t(n).power(k)

    # Copies with replaced tables

    def _copy_with(self, **overrides) -> "TruncatedStructuredSet":
        clone = copy.copy(self)
        clone._report = None
        for name, value in overrides.items():
            setattr(clone, name, value)
        clone._validate()
        return clone

    def with_face(self, n: int, i: int, fmap: FinMap):
        rows = [list(row) for row in self._face]
        rows[n][i] = fmap
        return self._copy_with(_face=tuple(tuple(r) for r in rows))

    def with_degeneracy(self, n: int, i: int, fmap: FinMap):
        rows = [list(row) for row in self._degeneracy]
        rows[n][i] = fmap
        return self._copy_with(_degeneracy=tuple(tuple(r) for r in rows))

    def with_tau(self, n: int, fmap: FinMap):
        if self._tau is None:
            raise MissingStructureError("No tau to replace")
        rows = list(self._tau)
        rows[n] = fmap
        return self._copy_with(_tau=tuple(rows))

    def with_theta(self, n: int, i: int, fmap: FinMap):
        if self._theta is None:
            raise MissingStructureError("No theta to replace")
        rows = [list(row) for row in self._theta]
        rows[n][i - 1] = fmap
        return self._copy_with(_theta=tuple(tuple(r) for r in rows))

    def with_report(self, report) -> "TruncatedStructuredSet":
        return self._copy_with(_report=report)

    def as_plain(self) -> "TruncatedStructuredSet":
        return TruncatedStructuredSet(self._levels, self._face,
                                      self._degeneracy)

    def as_dict(self) -> dict:
        def tables(rows):
            return [[fmap.as_list() for fmap in row] for row in rows]

        return {
            'flavor': self._flavor.value,
            'truncation': self.truncation,
            'levels': [{
                'size': level.size,
                'labels': list(level.labels) if level.is_labeled else None,
            } for level in self._levels],
            'face': tables(self._face),
            'degeneracy': tables(self._degeneracy),
            'tau': None if self._tau is None
            else [fmap.as_list() for fmap in self._tau],
            'theta': None if self._theta is None else tables(self._theta),
        }

    def __repr__(self):
        sizes = ', '.join(str(level.size) for level in self._levels)
        return (f"{type(self).__name__}({self._flavor.value}, "
                f"N={self.truncation}, sizes=[{sizes}])")
