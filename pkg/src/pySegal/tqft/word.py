"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Cobordisms presented as layered words in six generators

Text form separates layers by ';' and the generators within a layer by
',', for example the torus

    unit;comult;mult;counit

Within a layer generators sit side by side, left to right. Layers are
applied first to last.
"""

from typing import Dict, Sequence, Tuple

import pyparsing
from pyparsing import (
    Group, StringEnd, Suppress, ZeroOrMore, one_of,
)

import pySegal
from pySegal.exceptions import WordError

logger = pySegal.getLogger('TQFT.Word')

# generator -> (inputs, outputs)
GENERATOR_PROFILES: Dict[str, Tuple[int, int]] = {
    'unit': (0, 1),
    'counit': (1, 0),
    'mult': (2, 1),
    'comult': (1, 2),
    'ident': (1, 1),
    'swap': (2, 2),
}

### Start of Grammar ###

generator = one_of(' '.join(GENERATOR_PROFILES), as_keyword=True)

layer = Group(generator + ZeroOrMore(Suppress(',') + generator))

word = layer + ZeroOrMore(Suppress(';') + layer) + StringEnd()

### End of Grammar ###


def layer_profile(generators: Sequence[str]) -> Tuple[int, int]:
    inputs = sum(GENERATOR_PROFILES[g][0] for g in generators)
    outputs = sum(GENERATOR_PROFILES[g][1] for g in generators)
    return inputs, outputs


class CobordismWord:

    def __init__(self, layers: Sequence[Sequence[str]]):
        layers = tuple(tuple(layer) for layer in layers)
        if not layers:
            raise WordError("A word needs at least one layer")
        for k, generators in enumerate(layers):
            if not generators:
                raise WordError(f"Layer {k} is empty")
            unknown = [g for g in generators if g not in GENERATOR_PROFILES]
            if unknown:
                raise WordError(
                    f"Layer {k} has unknown generators {unknown}")
        for k in range(1, len(layers)):
            before = layer_profile(layers[k - 1])[1]
            after = layer_profile(layers[k])[0]
            if before != after:
                raise WordError(
                    f"Layer {k - 1} has {before} outputs "
                    f"but layer {k} takes {after} inputs")
        self._layers = layers

    @classmethod
    def parse(cls, text: str) -> "CobordismWord":
        try:
            parsed = word.parse_string(text)
        except pyparsing.ParseException as e:
            raise WordError(
                f"Can't read '{text}' as a word at column {e.col}")
        return cls(parsed.as_list())

    @property
    def layers(self) -> Tuple[Tuple[str, ...], ...]:
        return self._layers

    @property
    def profile(self) -> Tuple[int, int]:
        return (layer_profile(self._layers[0])[0],
                layer_profile(self._layers[-1])[1])

    def __eq__(self, other):
        if not isinstance(other, CobordismWord):
            return NotImplemented
        return self._layers == other._layers

    def __hash__(self):
        return hash(self._layers)

    def __str__(self):
        return ';'.join(','.join(layer) for layer in self._layers)

    def __repr__(self):
        return f"CobordismWord('{self}')"


def parse_word(text: str) -> CobordismWord:
    return CobordismWord.parse(text)


# Standard words

def associator_words() -> Tuple[CobordismWord, CobordismWord]:
    return (parse_word('mult,ident;mult'),
            parse_word('ident,mult;mult'))


def unitor_words() -> Tuple[CobordismWord, CobordismWord, CobordismWord]:
    """
    Left unitor, right unitor, and the bare cylinder they both equal
    """
    return (parse_word('unit,ident;mult'),
            parse_word('ident,unit;mult'),
            parse_word('ident'))


def commutativity_words() -> Tuple[CobordismWord, CobordismWord]:
    return parse_word('swap;mult'), parse_word('mult')


def frobenius_words() \
        -> Tuple[CobordismWord, CobordismWord, CobordismWord]:
    return (parse_word('comult,ident;ident,mult'),
            parse_word('ident,comult;mult,ident'),
            parse_word('mult;comult'))


def genus_word(g: int) -> CobordismWord:
    """
    unit, then g handles each a comult followed by a mult, then counit
    """
    if g < 0:
        raise WordError(f"Negative genus {g}")
    return CobordismWord([['unit']] + [['comult'], ['mult']] * g
                         + [['counit']])


def alternative_genus_word(g: int) -> CobordismWord:
    """
    The same closed surface with its handles opened side by side
    """
    if g < 0:
        raise WordError(f"Negative genus {g}")
    if g == 0:
        return parse_word('unit;ident;counit')
    if g == 1:
        return parse_word('unit;comult;swap;mult;counit')
    return CobordismWord(
        [['unit'], ['comult']]
        + [['comult', 'ident'], ['ident', 'mult']] * (g - 1)
        + [['mult'], ['counit']])
