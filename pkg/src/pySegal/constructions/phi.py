"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Maps of nonempty finite cardinals [m] -> [n], and how they act on
tuples of a commutative partial monoid

f acts on (x_0, ..., x_m) giving (y_0, ..., y_n) with y_i the product of
the x_j over j in f^-1(i), the empty product being e. Faces,
degeneracies, tau and theta of the L-simplex set are the actions of the
generators below.
"""

import itertools
from typing import Iterator, Sequence, Tuple

import numpy as np

from pySegal.constructions.tuples import TupleLevel
from pySegal.exceptions import CorruptedStateError, SegalValueError
from pySegal.finset import FinMap
from pySegal.pmonoid import UNDEFINED, PartialMonoid


class PhiMorphism:

    def __init__(self, source_n: int, target_n: int, image: Sequence[int]):
        image = tuple(int(k) for k in image)
        if source_n < 0 or target_n < 0:
            raise SegalValueError("Cardinals [n] need n >= 0")
        if len(image) != source_n + 1:
            raise SegalValueError(
                f"[{source_n}] has {source_n + 1} points, "
                f"image has {len(image)}")
        if any(not 0 <= k <= target_n for k in image):
            raise SegalValueError(f"Image {image} leaves [{target_n}]")
        self._source_n = source_n
        self._target_n = target_n
        self._image = image

    @property
    def source_n(self) -> int:
        return self._source_n

    @property
    def target_n(self) -> int:
        return self._target_n

    @property
    def image(self) -> Tuple[int, ...]:
        return self._image

    @property
    def is_pointed(self) -> bool:
        return self._image[0] == 0

    def __call__(self, k: int) -> int:
        return self._image[k]

    def preimage(self, i: int) -> Tuple[int, ...]:
        return tuple(j for j, k in enumerate(self._image) if k == i)

    def __matmul__(self, other: "PhiMorphism") -> "PhiMorphism":
        """
        self ∘ other
        """
        if other.target_n != self._source_n:
            raise SegalValueError(
                f"Can't follow a map into [{other.target_n}] "
                f"by one from [{self._source_n}]")
        return PhiMorphism(other.source_n, self._target_n,
                           [self._image[k] for k in other.image])

    def __eq__(self, other):
        if not isinstance(other, PhiMorphism):
            return NotImplemented
        return (self._source_n, self._target_n, self._image) \
            == (other._source_n, other._target_n, other._image)

    def __hash__(self):
        return hash((self._source_n, self._target_n, self._image))

    def __repr__(self):
        return (f"PhiMorphism([{self._source_n}] -> [{self._target_n}], "
                f"{list(self._image)})")

    @classmethod
    def identity(cls, n: int) -> "PhiMorphism":
        return cls(n, n, range(n + 1))

    @classmethod
    def face(cls, n: int, i: int) -> "PhiMorphism":
        if n < 1 or not 0 <= i <= n:
            raise SegalValueError(f"No face d_{i} from [{n}]")
        if i == n:
            return cls(n, n - 1, [k if k < n else 0 for k in range(n + 1)])
        return cls(n, n - 1, [k if k <= i else k - 1 for k in range(n + 1)])

    @classmethod
    def degeneracy(cls, n: int, i: int) -> "PhiMorphism":
        if not 0 <= i <= n:
            raise SegalValueError(f"No degeneracy s_{i} from [{n}]")
        return cls(n, n + 1, [k if k <= i else k + 1 for k in range(n + 1)])

    @classmethod
    def theta(cls, n: int, i: int) -> "PhiMorphism":
        if not 1 <= i <= n - 1:
            raise SegalValueError(f"No theta_{i} on [{n}]")
        image = list(range(n + 1))
        image[i], image[i + 1] = i + 1, i
        return cls(n, n, image)

    @classmethod
    def tau(cls, n: int) -> "PhiMorphism":
        return cls(n, n, [n] + list(range(n)))

    @classmethod
    def tau_power(cls, n: int, k: int) -> "PhiMorphism":
        return cls(n, n, [(j - k) % (n + 1) for j in range(n + 1)])

    def factor(self) -> Tuple[int, "PhiMorphism"]:
        """
        (k, g) with self = tau^k ∘ g and g(0) = 0
        """
        size = self._target_n + 1
        k = (size - self._image[0]) % size
        g = PhiMorphism(self._source_n, self._target_n,
                        [(j + k) % size for j in self._image])
        return k, g


def all_phi_morphisms(m: int, n: int) -> Iterator[PhiMorphism]:
    for image in itertools.product(range(n + 1), repeat=m + 1):
        yield PhiMorphism(m, n, image)


def phi_action(f: PhiMorphism, t: Sequence[int],
               monoid: PartialMonoid) -> Tuple[int, ...]:
    if len(t) != f.source_n + 1:
        raise SegalValueError(
            f"A tuple of length {len(t)} is not at level {f.source_n}")
    result = []
    for i in range(f.target_n + 1):
        y = monoid.product(t[j] for j in f.preimage(i))
        if y is None:
            raise CorruptedStateError(
                f"Product over {f.preimage(i)} of {tuple(t)} is undefined")
        result.append(y)
    return tuple(result)


def phi_table(f: PhiMorphism, source: TupleLevel, target: TupleLevel,
              monoid: PartialMonoid) -> FinMap:
    """
    The action of f as a map between two tuple levels
    """
    if source.width != f.source_n + 1 or target.width != f.target_n + 1:
        raise SegalValueError(f"{f} doesn't fit these levels")
    extended = monoid.extended_op()
    rows = source.rows
    image = np.full((rows.shape[0], f.target_n + 1), monoid.identity,
                    dtype=np.int64)
    for j, i in enumerate(f.image):
        image[:, i] = extended[image[:, i], rows[:, j]]
    if image.size and (image == UNDEFINED).any():
        raise CorruptedStateError(f"{f} met an undefined product")
    return source.map_to(target, image)
