"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only
"""

from fractions import Fraction

import pytest

from pySegal.constructions.nerve import nerve
from pySegal.constructions.simplex import simplex_set
from pySegal.exceptions import (
    ApexLimitExceededError, MissingStructureError, TruncationError,
    WordError,
)
from pySegal.hall.algebra import hall_algebra
from pySegal.pmonoid import (
    make_cyclic_group, make_powerset_disjoint, make_powerset_union,
    make_trunc_add,
)
from pySegal.tqft.evaluate import (
    closed_surface_invariant, compare_decompositions, evaluate_linear,
    evaluate_span, generator_spans, linearization_agrees,
)
from pySegal.tqft.word import (
    CobordismWord, alternative_genus_word, associator_words,
    commutativity_words, frobenius_words, genus_word, parse_word,
    unitor_words, word,
)

CORPUS = [
    (make_trunc_add(1), 1),
    (make_trunc_add(2), 2),
    (make_cyclic_group(3), 1),
    (make_powerset_disjoint(1), 1),
    (make_powerset_union(1), 1),
]


def show_test_result(result):
    if result[0]:
        print("\n-------\nPASSED\n-------\n")
    else:
        print("\n=======\nFAILED\n=======\n")
    assert result[0]


def setup_for(m, L):
    X = simplex_set(m, L, 2)
    return X, hall_algebra(X)


# Words

def test_word_grammar():
    result = word.run_tests(
        tests="""
        unit;comult;mult;counit
        mult,ident;mult
        ident
        swap;mult
        unit ; comult , ident
        """
    )
    show_test_result(result)

    result = word.run_tests(
        failure_tests=True,
        tests="""
        unit counit
        countit
        units
        mult,
        unit;;counit
        ;mult
        """
    )
    show_test_result(result)


def test_word_profiles():
    assert parse_word('mult,ident;mult').profile == (3, 1)
    assert parse_word('unit;comult').profile == (0, 2)
    assert genus_word(0).profile == (0, 0)
    assert str(genus_word(2)) == 'unit;comult;mult;comult;mult;counit'
    assert parse_word('unit ; comult') == CobordismWord([['unit'],
                                                         ['comult']])


def test_bad_words():
    with pytest.raises(WordError):
        parse_word('unit;mult')
    with pytest.raises(WordError):
        parse_word('bogus')
    with pytest.raises(WordError):
        CobordismWord([])
    with pytest.raises(WordError):
        CobordismWord([['unit'], []])
    with pytest.raises(WordError):
        CobordismWord([['handle']])
    with pytest.raises(WordError):
        genus_word(-1)
    with pytest.raises(WordError):
        alternative_genus_word(-2)


def test_alternative_genus_words_are_closed():
    for g in range(4):
        assert alternative_genus_word(g).profile == (0, 0)
    assert str(alternative_genus_word(2)) == \
        'unit;comult;comult,ident;ident,mult;mult;counit'


# Evaluation

def test_generator_span_shapes():
    X, _ = setup_for(make_trunc_add(1), 1)
    G = generator_spans(X)
    assert (G.mult.left_foot.size, G.mult.apex.size,
            G.mult.right_foot.size) == (4, 3, 2)
    assert (G.unit.left_foot.size, G.unit.right_foot.size) == (1, 2)
    assert (G.comult.left_foot.size, G.comult.right_foot.size) == (2, 4)
    assert (G.counit.left_foot.size, G.counit.right_foot.size) == (2, 1)


def test_generator_spans_need_tau_and_level_two():
    with pytest.raises(MissingStructureError):
        generator_spans(nerve(make_trunc_add(1), 2))
    with pytest.raises(TruncationError):
        generator_spans(simplex_set(make_trunc_add(1), 1, 1))


@pytest.mark.parametrize('m,L', CORPUS)
def test_linearization_agrees(m, L):
    X, A = setup_for(m, L)
    G = generator_spans(X)
    for text in ('unit', 'counit', 'mult', 'comult', 'ident', 'swap',
                 'mult,ident;mult', 'comult,ident;ident,mult',
                 'unit;comult;mult;counit'):
        assert linearization_agrees(parse_word(text), G, A), text


@pytest.mark.parametrize('m,L', CORPUS)
def test_decompositions_agree(m, L):
    X, _ = setup_for(m, L)
    G = generator_spans(X)
    assert compare_decompositions(*associator_words(), G)
    left, right, cylinder = unitor_words()
    assert compare_decompositions(left, cylinder, G)
    assert compare_decompositions(right, cylinder, G)
    assert compare_decompositions(*commutativity_words(), G)
    first, second, middle = frobenius_words()
    assert compare_decompositions(first, middle, G)
    assert compare_decompositions(second, middle, G)


def test_decompositions_need_the_same_profile():
    X, _ = setup_for(make_trunc_add(1), 1)
    G = generator_spans(X)
    with pytest.raises(WordError):
        compare_decompositions(parse_word('mult'), parse_word('ident'), G)
    assert not compare_decompositions(parse_word('mult'),
                                      parse_word('swap;mult;comult;mult'), G)


@pytest.mark.parametrize('m,L,values', [
    (make_trunc_add(1), 1, [0, 2, 0]),
    (make_trunc_add(2), 2, [0, 3]),
    (make_cyclic_group(2), 1, [0, 2, 0, 8]),
    (make_cyclic_group(3), 1, [0, 3, 0, 0, 81]),
])
def test_closed_surfaces(m, L, values):
    X, A = setup_for(m, L)
    for g, expected in enumerate(values):
        value = closed_surface_invariant(g, X, A)
        assert isinstance(value, Fraction)
        assert value == expected


@pytest.mark.parametrize('m,L', CORPUS)
def test_alternative_genus_words_agree(m, L):
    X, A = setup_for(m, L)
    for g in range(3):
        assert closed_surface_invariant(
            g, X, A, word=alternative_genus_word(g)) == \
            closed_surface_invariant(g, X, A)


def test_sphere_counts_the_identity():
    X, A = setup_for(make_trunc_add(0), 0)
    assert closed_surface_invariant(0, X, A) == 1
    span = evaluate_span(parse_word('unit;counit'), generator_spans(X))
    assert span.apex.size == 1


def test_only_closed_words_have_invariants():
    X, A = setup_for(make_trunc_add(1), 1)
    with pytest.raises(WordError):
        closed_surface_invariant(0, X, A, word=parse_word('mult'))


def test_evaluate_linear_shape():
    _, A = setup_for(make_trunc_add(2), 2)
    assert evaluate_linear(parse_word('mult,ident;mult'), A).shape == (3, 27)
    assert evaluate_linear(parse_word('unit;comult'), A).shape == (9, 1)


def test_apex_limit():
    X, A = setup_for(make_trunc_add(1), 1)
    with pytest.raises(ApexLimitExceededError) as e:
        closed_surface_invariant(1, X, A, apex_limit=2)
    assert e.value.limit == 2
    assert e.value.apex_size > 2
    assert closed_surface_invariant(1, X, A, apex_limit=100) == 2
