"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Finite sets, maps between them and spans of finite sets

Elements of a FinSet are the indices 0..size-1. Labels are for display
and for matching user input only; nothing is computed from them.

Every construction enumerates in lexicographic order, so that composites
built the same way are identical, table for table. Products index
(a, b) as a * |B| + b.

Span composition is by pullback, and "isomorphic" for spans over fixed
feet always means equal fiber cardinalities over every pair of feet
elements, never equality of apexes.
"""

import itertools
from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np

import pySegal
from pySegal.exceptions import (
    ApexLimitExceededError, DomainMismatchError, SegalValueError,
    SquareNotComposableError, StructureTableError,
)
from pySegal.hall.linalg import fraction_matrix

logger = pySegal.getLogger('FinSet')


class FinSet:
    """
    A finite set {0, ..., size-1} with optional display labels
    """

    def __init__(self, size: int, labels: Optional[Sequence[str]] = None):
        if isinstance(size, bool) or not isinstance(size, (int, np.integer)):
            raise SegalValueError(f"FinSet size must be an int, not {size!r}")
        size = int(size)
        if size < 0:
            raise SegalValueError(f"FinSet size must be >= 0, not {size}")
        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != size:
                raise SegalValueError(
                    f"Expected {size} labels, got {len(labels)}")
            if len(set(labels)) != size:
                raise SegalValueError("Duplicate labels in FinSet")
        self._size = size
        self._labels = labels
        self._label_index = None

    @property
    def size(self) -> int:
        return self._size

    @property
    def labels(self) -> Optional[Tuple[str, ...]]:
        return self._labels

    @property
    def is_labeled(self) -> bool:
        return self._labels is not None

    def __len__(self):
        return self._size

    def __iter__(self):
        return iter(range(self._size))

    def label(self, element: int) -> str:
        if self._labels is None:
            return str(element)
        return self._labels[element]

    def index_of(self, label: str) -> int:
        if self._label_index is None:
            if self._labels is None:
                self._label_index = {str(i): i for i in range(self._size)}
            else:
                self._label_index = {
                    label: i for i, label in enumerate(self._labels)}
        try:
            return self._label_index[label]
        except KeyError:
            raise SegalValueError(f"No element labeled '{label}'")

    def matches(self, other: "FinSet") -> bool:
        """
        Same size, and the same labels when both are labeled
        """
        if self._size != other._size:
            return False
        if self._labels is None or other._labels is None:
            return True
        return self._labels == other._labels

    def unlabeled(self) -> "FinSet":
        return FinSet(self._size)

    def __eq__(self, other):
        if not isinstance(other, FinSet):
            return NotImplemented
        return self._size == other._size and self._labels == other._labels

    def __hash__(self):
        return hash((self._size, self._labels))

    def __repr__(self):
        if self._labels is None:
            return f"FinSet({self._size})"
        shown = ', '.join(self._labels[:6])
        if self._size > 6:
            shown += ', ...'
        return f"FinSet({self._size}, labels=[{shown}])"


def point() -> FinSet:
    return FinSet(1)


def empty() -> FinSet:
    return FinSet(0)


def product(a: FinSet, b: FinSet) -> FinSet:
    labels = None
    if a.is_labeled and b.is_labeled:
        labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]
    return FinSet(a.size * b.size, labels)


def cartesian_power(x: FinSet, k: int) -> FinSet:
    """
    X^k in lexicographic order; X^0 is a point
    """
    if k < 0:
        raise SegalValueError(f"Negative power {k}")
    if k == 0:
        return point()
    if k == 1:
        return x
    labels = None
    if x.is_labeled:
        labels = ['(' + ','.join(combo) + ')'
                  for combo in itertools.product(x.labels, repeat=k)]
    return FinSet(x.size ** k, labels)


class FinMap:
    """
    A map of finite sets, held as its table of images

    The table is a read-only numpy int64 array.
    g @ f is the composite g∘f.
    """

    def __init__(self, domain: FinSet, codomain: FinSet, image):
        table = np.array(image, dtype=np.int64, copy=True)
        if table.ndim != 1 or table.shape[0] != domain.size:
            raise StructureTableError(
                f"Image table of length {table.shape} "
                f"for a domain of size {domain.size}")
        if table.size and (table.min() < 0
                           or table.max() >= codomain.size):
            raise StructureTableError(
                f"Image entry out of range for codomain of "
                f"size {codomain.size}")
        table.setflags(write=False)
        self._domain = domain
        self._codomain = codomain
        self._image = table

    @property
    def domain(self) -> FinSet:
        return self._domain

    @property
    def codomain(self) -> FinSet:
        return self._codomain

    @property
    def image(self) -> np.ndarray:
        return self._image

    def __call__(self, element: int) -> int:
        return int(self._image[element])

    def __matmul__(self, other: "FinMap") -> "FinMap":
        return compose_maps(other, self)

    def __eq__(self, other):
        if not isinstance(other, FinMap):
            return NotImplemented
        return (self._domain.matches(other._domain)
                and self._codomain.matches(other._codomain)
                and np.array_equal(self._image, other._image))

    __hash__ = None

    def __repr__(self):
        return (f"FinMap({self._domain.size} -> {self._codomain.size}, "
                f"{self._image.tolist()[:12]}"
                f"{'...' if self._domain.size > 12 else ''})")

    @classmethod
    def identity(cls, x: FinSet) -> "FinMap":
        return cls(x, x, np.arange(x.size, dtype=np.int64))

    @classmethod
    def constant(cls, x: FinSet, y: FinSet, value: int) -> "FinMap":
        return cls(x, y, np.full(x.size, value, dtype=np.int64))

    @classmethod
    def to_point(cls, x: FinSet) -> "FinMap":
        return cls(x, point(), np.zeros(x.size, dtype=np.int64))

    def as_list(self) -> list:
        return self._image.tolist()

    def fiber_sizes(self) -> np.ndarray:
        return np.bincount(self._image, minlength=self._codomain.size)

    def preimage(self, element: int) -> list:
        return np.nonzero(self._image == element)[0].tolist()

    def is_injective(self) -> bool:
        return np.unique(self._image).size == self._domain.size

    def is_surjective(self) -> bool:
        return np.unique(self._image).size == self._codomain.size

    def is_bijective(self) -> bool:
        return self._domain.size == self._codomain.size \
            and self.is_injective()

    def inverse(self) -> "FinMap":
        if not self.is_bijective():
            raise SegalValueError("Only a bijection has an inverse")
        inverse = np.empty(self._domain.size, dtype=np.int64)
        inverse[self._image] = np.arange(self._domain.size, dtype=np.int64)
        return FinMap(self._codomain, self._domain, inverse)

    def with_entry(self, element: int, value: int) -> "FinMap":
        """
        A copy with one image replaced
        """
        table = self._image.copy()
        table[element] = value
        return FinMap(self._domain, self._codomain, table)

    def power(self, k: int) -> "FinMap":
        """
        k-fold iterate of an endomap, negative k needs a bijection
        """
        if self._domain.size != self._codomain.size:
            raise DomainMismatchError("Only an endomap has powers")
        base = self if k >= 0 else self.inverse()
        table = np.arange(self._domain.size, dtype=np.int64)
        for _ in range(abs(k)):
            table = base._image[table]
        return FinMap(self._domain, self._codomain, table)


def compose_maps(f: FinMap, g: FinMap) -> FinMap:
    """
    g∘f, that is, apply f then g
    """
    if not f.codomain.matches(g.domain):
        raise DomainMismatchError(
            f"Can't compose, codomain {f.codomain} "
            f"is not the domain {g.domain}")
    return FinMap(f.domain, g.codomain, g.image[f.image])


def pair_map(f: FinMap, g: FinMap) -> FinMap:
    """
    w -> (f(w), g(w)) into the product of the codomains
    """
    if not f.domain.matches(g.domain):
        raise DomainMismatchError("Paired maps need a common domain")
    return FinMap(f.domain, product(f.codomain, g.codomain),
                  f.image * g.codomain.size + g.image)


def product_map(f: FinMap, g: FinMap) -> FinMap:
    """
    (a, c) -> (f(a), g(c))
    """
    table = (f.image[:, None] * g.codomain.size
             + g.image[None, :]).ravel()
    return FinMap(product(f.domain, g.domain),
                  product(f.codomain, g.codomain), table)


def swap_map(a: FinSet, b: FinSet) -> FinMap:
    """
    (x, y) -> (y, x) from A×B to B×A
    """
    xs = np.repeat(np.arange(a.size, dtype=np.int64), b.size)
    ys = np.tile(np.arange(b.size, dtype=np.int64), a.size)
    return FinMap(product(a, b), product(b, a), ys * a.size + xs)


class Pullback (NamedTuple):
    apex: FinSet
    proj_x: FinMap
    proj_y: FinMap


def pullback(f: FinMap, g: FinMap, limit: Optional[int] = None) -> Pullback:
    """
    The pairs (x, y) with f(x) = g(y), in lexicographic order

    If limit is given, refuse to build an apex larger than that
    """
    if not f.codomain.matches(g.codomain):
        raise DomainMismatchError(
            f"Can't take a pullback over different codomains, "
            f"{f.codomain} and {g.codomain}")
    counts = np.bincount(g.image, minlength=g.codomain.size)
    # stable, so that each block of equal images keeps y in order
    order = np.argsort(g.image, kind='stable')
    starts = np.cumsum(counts) - counts
    per_x = counts[f.image]
    size = int(per_x.sum())
    if limit is not None and size > limit:
        raise ApexLimitExceededError(size, limit)

    proj_x = np.repeat(np.arange(f.domain.size, dtype=np.int64), per_x)
    block_start = np.repeat(starts[f.image], per_x)
    within = np.arange(size, dtype=np.int64) \
        - np.repeat(np.cumsum(per_x) - per_x, per_x)
    proj_y = order[block_start + within]

    labels = None
    if f.domain.is_labeled and g.domain.is_labeled:
        labels = [f"({f.domain.label(x)},{g.domain.label(y)})"
                  for x, y in zip(proj_x.tolist(), proj_y.tolist())]
    apex = FinSet(size, labels)
    return Pullback(apex,
                    FinMap(apex, f.domain, proj_x),
                    FinMap(apex, g.domain, proj_y))


class SquareDiagnostic (NamedTuple):
    reason: str
    witness: Tuple[int, ...]


DOES_NOT_COMMUTE = 'does not commute'
NOT_INJECTIVE = 'not injective'
NOT_SURJECTIVE = 'not surjective'


def _check_square_shape(top: FinMap, left: FinMap,
                        right: FinMap, bottom: FinMap):
    """
        W --top--> B
        |          |
      left       right
        v          v
        A -bottom-> Z
    """
    if not top.domain.matches(left.domain):
        raise SquareNotComposableError(
            "top and left must leave the same corner")
    if not right.domain.matches(top.codomain):
        raise SquareNotComposableError("right must start where top ends")
    if not bottom.domain.matches(left.codomain):
        raise SquareNotComposableError("bottom must start where left ends")
    if not right.codomain.matches(bottom.codomain):
        raise SquareNotComposableError(
            "right and bottom must end at the same corner")


def pullback_square_diagnostic(top: FinMap, left: FinMap,
                               right: FinMap, bottom: FinMap) \
        -> Optional[SquareDiagnostic]:
    """
    None if the square is a pullback, otherwise why not with a witness

        does not commute    (w,)
        not injective       (w, w') with the same (left, top) images
        not surjective      (a, b) in the pullback of bottom and right
                            that no w reaches
    """
    _check_square_shape(top, left, right, bottom)

    mismatch = np.nonzero(right.image[top.image]
                          != bottom.image[left.image])[0]
    if mismatch.size:
        return SquareDiagnostic(DOES_NOT_COMMUTE, (int(mismatch[0]),))

    b_size = top.codomain.size
    keys = left.image * b_size + top.image
    unique, counts = np.unique(keys, return_counts=True)
    if unique.size < keys.size:
        repeated = unique[counts > 1][0]
        first, second = np.nonzero(keys == repeated)[0][:2]
        return SquareDiagnostic(NOT_INJECTIVE, (int(first), int(second)))

    expected = int(np.dot(bottom.fiber_sizes(), right.fiber_sizes()))
    if keys.size < expected:
        canonical = pullback(bottom, right)
        canonical_keys = canonical.proj_x.image * b_size \
            + canonical.proj_y.image
        missing = int(np.setdiff1d(canonical_keys, unique)[0])
        return SquareDiagnostic(NOT_SURJECTIVE,
                                (missing // b_size, missing % b_size))
    return None


def is_pullback_square(top: FinMap, left: FinMap,
                       right: FinMap, bottom: FinMap) -> bool:
    return pullback_square_diagnostic(top, left, right, bottom) is None


class Span:
    """
    left_foot <-left_leg- apex -right_leg-> right_foot
    """

    def __init__(self, left_leg: FinMap, right_leg: FinMap):
        if not left_leg.domain.matches(right_leg.domain):
            raise DomainMismatchError(
                "The legs of a span must share the apex")
        self._left_leg = left_leg
        self._right_leg = right_leg

    @property
    def apex(self) -> FinSet:
        return self._left_leg.domain

    @property
    def left_foot(self) -> FinSet:
        return self._left_leg.codomain

    @property
    def right_foot(self) -> FinSet:
        return self._right_leg.codomain

    @property
    def left_leg(self) -> FinMap:
        return self._left_leg

    @property
    def right_leg(self) -> FinMap:
        return self._right_leg

    def __repr__(self):
        return (f"Span({self.left_foot.size} <- {self.apex.size} "
                f"-> {self.right_foot.size})")


def identity_span(x: FinSet) -> Span:
    return Span(FinMap.identity(x), FinMap.identity(x))


def swap_span(x: FinSet) -> Span:
    """
    X×X <-id- X×X -swap-> X×X
    """
    xx = product(x, x)
    return Span(FinMap.identity(xx), swap_map(x, x))


def compose_spans(s1: Span, s2: Span,
                  apex_limit: Optional[int] = None) -> Span:
    """
    s1 first, then s2, by pullback over the shared foot
    """
    if not s1.right_foot.matches(s2.left_foot):
        raise DomainMismatchError(
            f"Can't compose spans, foot {s1.right_foot} "
            f"is not {s2.left_foot}")
    pb = pullback(s1.right_leg, s2.left_leg, limit=apex_limit)
    logger.debug(f"Composed {s1} with {s2}, apex {pb.apex.size}")
    return Span(compose_maps(pb.proj_x, s1.left_leg),
                compose_maps(pb.proj_y, s2.right_leg))


def tensor_spans(s1: Span, s2: Span) -> Span:
    return Span(product_map(s1.left_leg, s2.left_leg),
                product_map(s1.right_leg, s2.right_leg))


def _fiber_counts(span: Span) -> Tuple[np.ndarray, np.ndarray]:
    keys = span.left_leg.image * span.right_foot.size \
        + span.right_leg.image
    return np.unique(keys, return_counts=True)


def spans_isomorphic(s1: Span, s2: Span) -> bool:
    if not (s1.left_foot.matches(s2.left_foot)
            and s1.right_foot.matches(s2.right_foot)):
        raise DomainMismatchError(
            "Only spans between the same feet can be compared")
    if s1.apex.size != s2.apex.size:
        return False
    keys1, counts1 = _fiber_counts(s1)
    keys2, counts2 = _fiber_counts(s2)
    return np.array_equal(keys1, keys2) and np.array_equal(counts1, counts2)


def fiber_matrix(span: Span) -> np.ndarray:
    """
    Row-major |left_foot| x |right_foot| integer counts of the apex
    """
    counts = np.zeros((span.left_foot.size, span.right_foot.size),
                      dtype=np.int64)
    np.add.at(counts, (span.left_leg.image, span.right_leg.image), 1)
    return counts


def linearize(span: Span) -> np.ndarray:
    """
    The exact matrix of the span as a linear map from the free module
    on the left foot to the free module on the right foot
    """
    return fraction_matrix(fiber_matrix(span).T)
