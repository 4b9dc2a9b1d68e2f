"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Evaluating cobordism words, as spans of finite sets and as matrices

The span route tensors each layer's generator spans left to right and
composes layers first to last by pullback, so a word with profile
(p, q) becomes a span X_1^p <- S -> X_1^q. The linear route does the
same with Kronecker products and matrix products of the Hall algebra's
maps. Both agree on every word, which is what closed_surface_invariant
relies on.
"""

import functools
from fractions import Fraction
from typing import Dict, NamedTuple, Optional

import numpy as np

import pySegal
from pySegal.exceptions import (
    ApexLimitExceededError, DomainMismatchError, TQFTConsistencyError,
    TruncationError, WordError,
)
from pySegal.finset import (
    FinMap, Span, compose_spans, identity_span, linearize, pair_map,
    spans_isomorphic, swap_span, tensor_spans,
)
from pySegal.hall.algebra import HallAlgebra, linear_comult
from pySegal.hall.linalg import fraction_matrix, identity_matrix
from pySegal.simplicial.relations import require_structure
from pySegal.simplicial.segal import extra_degeneracy
from pySegal.simplicial.structured import TruncatedStructuredSet, composite
from pySegal.tqft.word import CobordismWord, genus_word

logger = pySegal.getLogger('TQFT.Evaluate')

# Written into reports alongside the values it produced
EVALUATION_ORDER = "layers first to last, each tensored left to right"


class GeneratorSpans (NamedTuple):
    mult: Span
    unit: Span
    comult: Span
    counit: Span
    ident: Span
    swap: Span


def _unlabeled(fmap: FinMap) -> FinMap:
    return FinMap(fmap.domain.unlabeled(), fmap.codomain.unlabeled(),
                  fmap.image)


def generator_spans(X: TruncatedStructuredSet) -> GeneratorSpans:
    """
        mult        X_1 × X_1 <-(d_2, d_0)- X_2 -d_1-> X_1
        unit        pt <- X_0 -s_0-> X_1
        comult      X_1 <-d_0- X_2 -(tau d_2, d_1)-> X_1 × X_1
        counit      X_1 <-s_1- X_0 -> pt

    The legs are unlabeled, so that (A × B) × C and A × (B × C)
    are the same foot.
    """
    require_structure(X, tau=True)
    if X.truncation < 2:
        raise TruncationError("Generator spans need X_2")
    d0, d1, d2 = (_unlabeled(X.d(2, i)) for i in range(3))
    x1 = d0.codomain
    return GeneratorSpans(
        mult=Span(pair_map(d2, d0), d1),
        unit=Span(FinMap.to_point(X.level(0).unlabeled()),
                  _unlabeled(X.s(0, 0))),
        comult=Span(d0, pair_map(_unlabeled(composite(X.t(1), X.d(2, 2))),
                                 d1)),
        counit=Span(_unlabeled(extra_degeneracy(X, 0)),
                    FinMap.to_point(X.level(0).unlabeled())),
        ident=identity_span(x1),
        swap=swap_span(x1),
    )


def _check_apex(span: Span, apex_limit: Optional[int]):
    if apex_limit is not None and span.apex.size > apex_limit:
        raise ApexLimitExceededError(span.apex.size, apex_limit)


def evaluate_span(w: CobordismWord, G: GeneratorSpans,
                  apex_limit: Optional[int] = None) -> Span:
    spans = G._asdict()
    result = None
    for layer in w.layers:
        layer_span = functools.reduce(
            tensor_spans, (spans[g] for g in layer))
        _check_apex(layer_span, apex_limit)
        if result is None:
            result = layer_span
        else:
            result = compose_spans(result, layer_span,
                                   apex_limit=apex_limit)
    logger.debug(f"{w} evaluates to {result}")
    return result


def generator_matrices(A: HallAlgebra) -> Dict[str, np.ndarray]:
    d = A.dimension
    swap = np.zeros((d * d, d * d), dtype=np.int64)
    for x in range(d):
        for y in range(d):
            swap[y * d + x, x * d + y] = 1
    return {
        'mult': A.multiplication_matrix(),
        'unit': A.unit.reshape(d, 1),
        'comult': linear_comult(A),
        'counit': A.counit.reshape(1, d),
        'ident': identity_matrix(d),
        'swap': fraction_matrix(swap),
    }


def evaluate_linear(w: CobordismWord, A: HallAlgebra) -> np.ndarray:
    """
    The word as an exact matrix of shape (dim^outputs, dim^inputs)
    """
    matrices = generator_matrices(A)
    result = None
    for layer in w.layers:
        layer_matrix = functools.reduce(
            np.kron, (matrices[g] for g in layer))
        result = layer_matrix if result is None else layer_matrix @ result
    return result


def closed_surface_invariant(g: int, X: TruncatedStructuredSet,
                             A: HallAlgebra,
                             apex_limit: Optional[int] = None,
                             word: Optional[CobordismWord] = None) \
        -> Fraction:
    """
    The value of the genus-g closed surface, computed both as a matrix
    and as the size of a span apex, which must agree
    """
    if word is None:
        word = genus_word(g)
    if word.profile != (0, 0):
        raise WordError(f"{word} is not a closed surface")
    matrix = evaluate_linear(word, A)
    value = Fraction(matrix[0, 0])
    span = evaluate_span(word, generator_spans(X), apex_limit=apex_limit)
    counted = Fraction(linearize(span)[0, 0])
    if counted != value:
        raise TQFTConsistencyError(
            f"Genus {g}: matrix route gives {value}, span route {counted}")
    logger.info(f"Genus {g} closed surface: {value}")
    return value


def compare_decompositions(w1: CobordismWord, w2: CobordismWord,
                           G: GeneratorSpans,
                           apex_limit: Optional[int] = None) -> bool:
    if w1.profile != w2.profile:
        raise WordError(
            f"{w1} has profile {w1.profile}, {w2} has {w2.profile}")
    try:
        return spans_isomorphic(evaluate_span(w1, G, apex_limit),
                                evaluate_span(w2, G, apex_limit))
    except DomainMismatchError as e:
        raise WordError(f"Can't compare {w1} with {w2}: {e}")


def linearization_agrees(w: CobordismWord, G: GeneratorSpans,
                         A: HallAlgebra,
                         apex_limit: Optional[int] = None) -> bool:
    """
    evaluate_linear against the fiber counts of evaluate_span
    """
    matrix = evaluate_linear(w, A)
    counted = linearize(evaluate_span(w, G, apex_limit))
    return matrix.shape == counted.shape \
        and bool(np.all(matrix == counted))
