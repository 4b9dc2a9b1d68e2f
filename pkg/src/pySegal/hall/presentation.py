"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Checking that a Hall algebra is the algebra a presentation describes

Relations are integer polynomials in the generator names, written like

    x^4
    x^3 - x^2
    x1^2 - x1 - y1
    2*x*y + 1

A presentation holds when every relation evaluates to zero, the
generator images generate the whole algebra, and the algebra has the
expected dimension. Identities are further polynomials that must vanish,
evaluated with auxiliary images as well, and play no part in generation.
"""

from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

import pyparsing
from pyparsing import (
    Group, Optional as PPOptional, StringEnd, Suppress, Word, ZeroOrMore,
    alphanums, alphas, nums, one_of,
)

import pySegal
from pySegal.check_report import CheckReport, ViolationCollector
from pySegal.exceptions import PresentationParseError, SegalValueError
from pySegal.hall.algebra import HallAlgebra
from pySegal.hall.linalg import EchelonBasis, fraction_vector, rank
from pySegal.pmonoid import PartialMonoid, subset_label
from pySegal.simplicial.structured import TruncatedStructuredSet

logger = pySegal.getLogger('Hall.Presentation')

### Start of Grammar ###

integer = Word(nums).set_parse_action(lambda toks: int(toks[0]))

generator_name = Word(alphas, alphanums + '_')

power = Group(generator_name
              + PPOptional(Suppress('^') + integer, default=1))

factor = power | integer

monomial = Group(factor + ZeroOrMore(Suppress('*') + factor))

sign = one_of('+ -')

polynomial = (
      PPOptional(sign, default='+')
    + monomial
    + ZeroOrMore(sign + monomial)
    + StringEnd()
)

### End of Grammar ###


class Term (NamedTuple):
    coefficient: int
    powers: Tuple[Tuple[str, int], ...]


class Polynomial:

    def __init__(self, terms: Sequence[Term], text: Optional[str] = None):
        self._terms = tuple(terms)
        self._text = text

    @property
    def terms(self) -> Tuple[Term, ...]:
        return self._terms

    @property
    def names(self) -> frozenset:
        return frozenset(name for term in self._terms
                         for name, _ in term.powers)

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        try:
            parsed = polynomial.parse_string(text)
        except pyparsing.ParseException as e:
            raise PresentationParseError(
                f"Can't read '{text}' as a polynomial at column {e.col}")
        terms = []
        toks = parsed.as_list()
        for k in range(0, len(toks), 2):
            coefficient = -1 if toks[k] == '-' else 1
            powers = []
            for factor_toks in toks[k + 1]:
                if isinstance(factor_toks, int):
                    coefficient *= factor_toks
                else:
                    powers.append((factor_toks[0], factor_toks[1]))
            terms.append(Term(coefficient, tuple(powers)))
        return cls(terms, text)

    def evaluate(self, A: HallAlgebra,
                 images: Dict[str, np.ndarray]) -> np.ndarray:
        missing = self.names - set(images)
        if missing:
            raise PresentationParseError(
                f"No image for {', '.join(sorted(missing))} in '{self}'")
        total = fraction_vector([0] * A.dimension)
        for term in self._terms:
            value = A.unit
            for name, exponent in term.powers:
                value = A.multiply(value, A.power(images[name], exponent))
            total = total + term.coefficient * value
        return total

    def __str__(self):
        if self._text is not None:
            return self._text
        return ' + '.join(
            f"{t.coefficient}*" + '*'.join(f"{n}^{e}" for n, e in t.powers)
            for t in self._terms)

    def __repr__(self):
        return f"Polynomial('{self}')"


class Presentation:

    def __init__(self, generator_names: Sequence[str],
                 relations: Sequence[str], expected_dimension: int,
                 identities: Sequence[str] = ()):
        self._generator_names = tuple(generator_names)
        self._relations = tuple(Polynomial.parse(r) for r in relations)
        self._identities = tuple(Polynomial.parse(r) for r in identities)
        self._expected_dimension = expected_dimension
        for relation in self._relations:
            unknown = relation.names - set(self._generator_names)
            if unknown:
                raise PresentationParseError(
                    f"'{relation}' uses {', '.join(sorted(unknown))}, "
                    "which are not generators")

    @property
    def generator_names(self) -> Tuple[str, ...]:
        return self._generator_names

    @property
    def relations(self) -> Tuple[Polynomial, ...]:
        return self._relations

    @property
    def identities(self) -> Tuple[Polynomial, ...]:
        return self._identities

    @property
    def expected_dimension(self) -> int:
        return self._expected_dimension

    def as_dict(self) -> dict:
        return {
            'generators': list(self._generator_names),
            'relations': [str(r) for r in self._relations],
            'identities': [str(r) for r in self._identities],
            'expected_dimension': self._expected_dimension,
        }

    def __repr__(self):
        relations = ', '.join(str(r) for r in self._relations)
        return (f"Presentation<{', '.join(self._generator_names)} | "
                f"{relations}>")


def _nonzero_detail(A: HallAlgebra, v: np.ndarray) -> str:
    shown = [f"{value}·{A.basis.label(x)}"
             for x, value in enumerate(v) if value != 0]
    return ' + '.join(shown[:6]) + (' + ...' if len(shown) > 6 else '')


def generated_subspace(A: HallAlgebra,
                       images: Sequence[np.ndarray]) -> List[np.ndarray]:
    """
    Independent monomials in the images spanning the subalgebra they
    generate, the unit first
    """
    basis = EchelonBasis(A.dimension)
    found = []
    queue = [A.unit]
    basis.add(A.unit)
    found.append(A.unit)
    while queue and not basis.is_full:
        v = queue.pop(0)
        for g in images:
            w = A.multiply(v, g)
            if basis.add(w):
                found.append(w)
                queue.append(w)
    return found


def verify_presentation(A: HallAlgebra, P: Presentation,
                        generator_images: Dict[str, np.ndarray],
                        auxiliary_images: Optional[
                            Dict[str, np.ndarray]] = None) -> CheckReport:
    missing = set(P.generator_names) - set(generator_images)
    if missing:
        raise PresentationParseError(
            f"No image for generators {', '.join(sorted(missing))}")
    images = {name: fraction_vector(generator_images[name])
              for name in P.generator_names}

    vc = ViolationCollector(log=logger)
    vc.note('presentation.relation')
    for k, relation in enumerate(P.relations):
        value = relation.evaluate(A, images)
        if any(value != 0):
            vc.add('presentation.relation', 0, (k,), None,
                   f"{relation} = {_nonzero_detail(A, value)}")

    if P.identities:
        vc.note('presentation.identity')
        everything = dict(images)
        for name, image in (auxiliary_images or {}).items():
            everything[name] = fraction_vector(image)
        for k, identity in enumerate(P.identities):
            value = identity.evaluate(A, everything)
            if any(value != 0):
                vc.add('presentation.identity', 0, (k,), None,
                       f"{identity} = {_nonzero_detail(A, value)}")

    vc.note('presentation.generation')
    monomials = generated_subspace(
        A, [images[name] for name in P.generator_names])
    spanned = rank(np.array(monomials, dtype=object).reshape(
        len(monomials), A.dimension))
    if spanned != A.dimension:
        vc.add('presentation.generation', 0, (), None,
               f"generators span {spanned} of {A.dimension} dimensions")

    vc.note('presentation.dimension')
    if A.dimension != P.expected_dimension:
        vc.add('presentation.dimension', 0, (), None,
               f"dimension {A.dimension}, expected "
               f"{P.expected_dimension}")
    return vc.report(f"presentation {P}")


class StandardPresentation (NamedTuple):
    presentation: Presentation
    images: Dict[str, np.ndarray]
    auxiliary: Dict[str, np.ndarray]


def standard_presentation(m: PartialMonoid, L: int,
                          X: TruncatedStructuredSet) -> StandardPresentation:
    """
    The known presentation of the Hall algebra of the L-simplex set X of
    a built-in monoid, with generator images found by their labels in X_1
    """
    level_one = X.level(1)

    def image(first: str, second: str) -> np.ndarray:
        v = fraction_vector([0] * level_one.size)
        v[level_one.index_of(f"({first},{second})")] = 1
        return v

    kind = m.kind
    if kind == 'trunc':
        total = int(m.label(L))
        if total == 0:
            return StandardPresentation(Presentation([], [], 1), {}, {})
        return StandardPresentation(
            Presentation(['x'], [f"x^{total + 1}"], total + 1),
            {'x': image(str(total - 1), '1')}, {})

    if kind == 'zmod':
        order = m.parameter
        if order == 1:
            return StandardPresentation(Presentation([], [], 1), {}, {})
        first = str((int(m.label(L)) - 1) % order)
        return StandardPresentation(
            Presentation(['x'], [f"x^{order} - 1"], order),
            {'x': image(first, '1')}, {})

    if kind in ('pset-disjoint', 'pset-union'):
        letters = [chr(ord('a') + i) for i in range(m.parameter)]
        points = [i for i in range(m.parameter) if L >> i & 1]
        names = [f"x{k}" for k in range(1, len(points) + 1)]
        images = {}
        auxiliary = {}
        relations = []
        identities = []
        for name, point in zip(names, points):
            single = subset_label(1 << point, letters)
            rest = subset_label(L & ~(1 << point), letters)
            if kind == 'pset-disjoint':
                images[name] = image(rest, single)
                relations.append(f"{name}^2")
            else:
                aux = 'y' + name[1:]
                images[name] = image(subset_label(L, letters), single)
                auxiliary[aux] = image(rest, single)
                relations.append(f"{name}^3 - {name}^2")
                identities.append(f"{name}^2 - {name} - {aux}")
                identities.append(f"{name}*{aux}")
        base = 2 if kind == 'pset-disjoint' else 3
        return StandardPresentation(
            Presentation(names, relations, base ** len(points), identities),
            images, auxiliary)

    raise SegalValueError(f"No standard presentation for {m}")
