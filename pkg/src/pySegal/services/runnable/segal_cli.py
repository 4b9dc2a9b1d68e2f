#!/usr/bin/env python3
"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Command-line front end

    pysegal check  --monoid trunc:2 --L 2 --level 4
    pysegal hall   --monoid zmod:4
    pysegal tqft   --monoid trunc:1 --genus 2
    pysegal tqft   --monoid trunc:1 --word 'unit;comult;mult;counit'
    pysegal export --monoid pset-union:2 --out /tmp/union

Monoids are given as

    trunc:L  zmod:m  pset-disjoint:k  pset-union:k  table:<path>

where <path> is a JSON file {size, identity, op: [[entry or null]]}.
Element labels for --L are matched exactly, powerset elements as {a,b}.
Without --L the top element is used: L itself for trunc, 1 for zmod
and the full set for the powersets.

check, hall and tqft write one JSON report to --out, or to STDOUT.
export writes structured_set.json, algebra.json and tqft.json into the
directory --out, which is created if needed.

Exit codes are 0 when everything passed, 1 on a failed check, 2 on bad
input or a failed construction and 3 on an I/O error.
"""

import enum
import os.path
from typing import NamedTuple, Optional, Tuple

import pyparsing
from pyparsing import (
    Keyword, Regex, StringEnd, Suppress, Word, nums, one_of,
)

import pySegal
from pySegal.check_report import CheckReport, Violation
from pySegal.config import config
from pySegal.constructions.simplex import (
    check_simplex_last_face, simplex_set,
)
from pySegal.exceptions import (
    ApexLimitExceededError, DegeneratePairingError, PartialMonoidError,
    RunConfigError, SegalError, SpecParseError, SynthesisError,
    TQFTConsistencyError,
)
from pySegal.hall.algebra import (
    HallAlgebra, check_associativity, check_commutativity, check_frobenius,
    check_unit, hall_algebra,
)
from pySegal.hall.presentation import (
    standard_presentation, verify_presentation,
)
from pySegal.pmonoid import (
    PartialMonoid, is_effect_algebra, label_index, load_table,
    make_cyclic_group, make_powerset_disjoint, make_powerset_union,
    make_trunc_add, subset_label,
)
from pySegal.simplicial.relations import (
    check_cosymmetric_relations, check_cyclic, check_cyclic_theta_order,
    check_gamma_relations, check_paracyclic_relations,
    check_simplicial_relations,
)
from pySegal.simplicial.segal import (
    check_extra_degeneracy_pullback, check_extra_degeneracy_relations,
    check_nn_pullbacks, check_stautheta_identities, check_two_segal,
    check_unitality, outer_face_collisions,
)
from pySegal.simplicial.structured import TruncatedStructuredSet
from pySegal.simplicial.synthesis import (
    strip_to_gamma, strip_to_paracyclic, structured_sets_equal,
    synthesize_cosymmetric,
)
from pySegal.tqft.evaluate import (
    EVALUATION_ORDER, closed_surface_invariant, evaluate_linear,
    generator_spans, linearization_agrees,
)
from pySegal.tqft.word import parse_word
from pySegal.utils import canonical_json, write_json

logger = pySegal.getLogger('CLI')

COMMANDS = ('check', 'hall', 'tqft', 'export')

# Collisions beyond this are counted but not listed
COLLISIONS_SHOWN = 12


class ExitCode (enum.IntEnum):
    OK = 0
    VIOLATION = 1
    INPUT = 2
    IO = 3


_MINIMUM_PARAMETER = {
    'trunc': 0,
    'zmod': 1,
    'pset-disjoint': 0,
    'pset-union': 0,
}

_BUILDERS = {
    'trunc': make_trunc_add,
    'zmod': make_cyclic_group,
    'pset-disjoint': make_powerset_disjoint,
    'pset-union': make_powerset_union,
}

### Start of Grammar ###

natural = Word(nums).set_parse_action(lambda toks: int(toks[0]))

family = one_of(' '.join(_BUILDERS))

builtin_spec = (
      family('family')
    + Suppress(':')
    + natural('parameter')
    + StringEnd()
)

table_spec = (
      Keyword('table')('family')
    + Suppress(':')
    + Regex(r'\S.*')('path')
    + StringEnd()
)

monoid_spec = table_spec | builtin_spec

### End of Grammar ###


def parse_monoid_spec(text: str) -> PartialMonoid:
    try:
        parsed = monoid_spec.parse_string(text)
    except pyparsing.ParseException as e:
        raise SpecParseError(text, e.loc, e.msg)

    if parsed['family'] == 'table':
        path = parsed['path']
        try:
            m = load_table(path)
        except (OSError, ValueError) as e:
            if isinstance(e, PartialMonoidError):
                raise
            raise SpecParseError(text, text.index(':') + 1,
                                 f"can't read table {path}: {e}")
        logger.info(f"Loaded {m} from {path}")
        return m

    name = parsed['family']
    parameter = parsed['parameter']
    if parameter < _MINIMUM_PARAMETER[name]:
        raise SpecParseError(
            text, text.index(':') + 1,
            f"{name} needs a parameter of at least "
            f"{_MINIMUM_PARAMETER[name]}")
    return _BUILDERS[name](parameter)


def default_top(m: PartialMonoid) -> str:
    if m.kind == 'trunc':
        return m.label(m.size - 1)
    if m.kind == 'zmod':
        return '1' if m.parameter > 1 else '0'
    if m.kind in ('pset-disjoint', 'pset-union'):
        letters = [chr(ord('a') + i) for i in range(m.parameter)]
        return subset_label((1 << m.parameter) - 1, letters)
    raise RunConfigError(f"{m} has no default top element, give --L")


class RunConfig (NamedTuple):
    command: str
    monoid_spec: str
    L: Optional[str] = None
    truncation: int = 4
    output_path: Optional[str] = None
    apex_limit: int = 10**6
    word: Optional[str] = None
    genus: int = 2

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise RunConfigError(
                f"Unknown command '{self.command}', "
                f"expected one of {', '.join(COMMANDS)}")
        minimum = config.checks.MIN_TRUNCATION
        if self.truncation < minimum:
            raise RunConfigError(
                f"Truncation {self.truncation} is below {minimum}")
        if self.apex_limit < 1:
            raise RunConfigError(f"Apex limit {self.apex_limit} is not "
                                 "a positive count")
        if self.genus < 0:
            raise RunConfigError(f"Negative genus {self.genus}")
        if self.command == 'export' and self.output_path is None:
            raise RunConfigError("export needs an output directory")
        return self


class _Built (NamedTuple):
    monoid: PartialMonoid
    top: int
    simplex: TruncatedStructuredSet


def _build(cfg: RunConfig) -> _Built:
    m = parse_monoid_spec(cfg.monoid_spec)
    label = cfg.L if cfg.L is not None else default_top(m)
    top = label_index(m, label)
    X = simplex_set(m, top, cfg.truncation)
    return _Built(m, top, X)


def _header(cfg: RunConfig, built: _Built) -> dict:
    return {
        'command': cfg.command,
        'monoid': cfg.monoid_spec,
        'L': built.monoid.label(built.top),
        'truncation': cfg.truncation,
        'level_sizes': [level.size for level in built.simplex.levels],
    }


def _error_report(cfg: RunConfig, e: Exception) -> dict:
    logger.error(f"{cfg.command} {cfg.monoid_spec}: {e}")
    return {
        'command': cfg.command,
        'monoid': cfg.monoid_spec,
        'passed': False,
        'error': {'type': type(e).__name__, 'message': str(e)},
    }


def _round_trip(X: TruncatedStructuredSet) -> CheckReport:
    """
    Split into paracyclic and Gamma data, join again, compare
    """
    try:
        joined = synthesize_cosymmetric(strip_to_paracyclic(X),
                                        strip_to_gamma(X))
    except SynthesisError as e:
        if e.report is not None:
            return e.report
        return _failed('synthesis.round_trip', e.message)
    if structured_sets_equal(joined, X):
        return CheckReport([], ['synthesis.round_trip'])
    return _failed('synthesis.round_trip', "tables differ after synthesis")


def _failed(relation: str, detail: str) -> CheckReport:
    return CheckReport([Violation(relation, 0, (), None, detail)],
                       [relation])


def _non_nerve_witness(built: _Built) -> dict:
    X = built.simplex
    pairs = outer_face_collisions(X)
    level_two = X.level(2)
    return {
        'effect_algebra': is_effect_algebra(built.monoid, built.top),
        'collision_count': len(pairs),
        'collisions': [[level_two.label(a), level_two.label(b)]
                       for a, b in pairs[:COLLISIONS_SHOWN]],
    }


def _hall_sections(built: _Built, A: HallAlgebra) -> dict:
    sections = {
        'hall_associativity': check_associativity(A),
        'hall_commutativity': check_commutativity(A),
        'hall_unit': check_unit(A),
        'hall_frobenius': check_frobenius(A),
    }
    if built.monoid.kind in _BUILDERS:
        standard = standard_presentation(built.monoid, built.top,
                                         built.simplex)
        sections['presentation'] = verify_presentation(
            A, standard.presentation, standard.images, standard.auxiliary)
    return sections


def _assemble(cfg: RunConfig, built: _Built, sections: dict,
              **extra) -> Tuple[ExitCode, dict]:
    passed = all(report.passed for report in sections.values())
    retval = _header(cfg, built)
    retval.update(extra)
    retval['passed'] = passed
    retval['checks'] = {name: report.as_dict()
                        for name, report in sections.items()}
    failing = [name for name, report in sections.items()
               if not report.passed]
    if failing:
        logger.warning(f"Failed: {', '.join(failing)}")
    else:
        logger.info(f"All {len(sections)} check sections passed")
    return (ExitCode.OK if passed else ExitCode.VIOLATION), retval


def run_check_suite(cfg: RunConfig) -> Tuple[ExitCode, dict]:
    """
    Every relation and pullback check on the L-simplex set,
    then the Hall algebra checks
    """
    try:
        built = _build(cfg)
    except SegalError as e:
        return ExitCode.INPUT, _error_report(cfg, e)

    X = built.simplex
    m = built.monoid
    sections = {
        'simplicial': check_simplicial_relations(X),
        'paracyclic': check_paracyclic_relations(X),
        'cyclic': check_cyclic(X),
        'gamma': check_gamma_relations(X),
        'cosymmetric': check_cosymmetric_relations(X),
        'cyclic_theta_order': check_cyclic_theta_order(X),
        'two_segal': check_two_segal(X),
        'nn_pullbacks': check_nn_pullbacks(X),
        'unitality': check_unitality(X),
        'extra_degeneracy_pullback': check_extra_degeneracy_pullback(X),
        'extra_degeneracy_relations': check_extra_degeneracy_relations(X),
        'stautheta': check_stautheta_identities(X),
        'simplex_last_face': check_simplex_last_face(
            m, built.top, cfg.truncation),
        'synthesis_round_trip': _round_trip(X),
    }
    A = hall_algebra(X)
    sections.update(_hall_sections(built, A))
    return _assemble(cfg, built, sections,
                     non_nerve_witness=_non_nerve_witness(built))


def run_hall(cfg: RunConfig) -> Tuple[ExitCode, dict]:
    try:
        built = _build(cfg)
    except SegalError as e:
        return ExitCode.INPUT, _error_report(cfg, e)
    A = hall_algebra(built.simplex)
    return _assemble(cfg, built, _hall_sections(built, A),
                     algebra=A.as_dict())


def invariant_table(cfg: RunConfig, built: _Built,
                    A: HallAlgebra) -> dict:
    """
    Closed-surface values for g = 0..genus, by both routes
    """
    X = built.simplex
    return {str(g): closed_surface_invariant(g, X, A,
                                             apex_limit=cfg.apex_limit)
            for g in range(cfg.genus + 1)}


def run_tqft(cfg: RunConfig) -> Tuple[ExitCode, dict]:
    try:
        built = _build(cfg)
        word = None if cfg.word is None else parse_word(cfg.word)
    except SegalError as e:
        return ExitCode.INPUT, _error_report(cfg, e)

    A = hall_algebra(built.simplex)
    frobenius = check_frobenius(A)
    if not frobenius.passed:
        return _assemble(cfg, built, {'hall_frobenius': frobenius})
    try:
        if word is None:
            extra = {'invariants': invariant_table(cfg, built, A),
                     'evaluation_order': EVALUATION_ORDER}
            sections = {'hall_frobenius': frobenius}
        else:
            agrees = linearization_agrees(
                word, generator_spans(built.simplex), A,
                apex_limit=cfg.apex_limit)
            extra = {
                'word': str(word),
                'profile': list(word.profile),
                'matrix': evaluate_linear(word, A),
                'evaluation_order': EVALUATION_ORDER,
            }
            sections = {
                'hall_frobenius': frobenius,
                'tqft_routes': CheckReport([], ['tqft.routes']) if agrees
                else _failed('tqft.routes',
                             "span and matrix routes differ"),
            }
    except ApexLimitExceededError as e:
        return ExitCode.INPUT, _error_report(cfg, e)
    except (TQFTConsistencyError, DegeneratePairingError) as e:
        return _assemble(cfg, built, {
            'hall_frobenius': frobenius,
            'tqft_routes': _failed('tqft.routes', str(e)),
        })
    return _assemble(cfg, built, sections, **extra)


def export_report(cfg: RunConfig, indent: Optional[int] = 2) -> ExitCode:
    """
    structured_set.json, algebra.json and tqft.json under cfg.output_path
    """
    try:
        built = _build(cfg)
    except SegalError as e:
        _error_report(cfg, e)
        return ExitCode.INPUT

    A = hall_algebra(built.simplex)
    header = _header(cfg, built)
    structured = dict(header, structured_set=built.simplex.as_dict())
    algebra = dict(header, algebra=A.as_dict())
    tqft = dict(header, genus=cfg.genus, invariants=None, error=None,
                evaluation_order=EVALUATION_ORDER)
    exit_code = ExitCode.OK
    try:
        tqft['invariants'] = invariant_table(cfg, built, A)
    except (DegeneratePairingError, TQFTConsistencyError) as e:
        logger.warning(f"No invariant table: {e}")
        tqft['error'] = str(e)
        exit_code = ExitCode.VIOLATION
    except ApexLimitExceededError as e:
        logger.error(f"No invariant table: {e}")
        tqft['error'] = str(e)
        exit_code = ExitCode.INPUT

    try:
        os.makedirs(cfg.output_path, exist_ok=True)
        for name, content in (('structured_set.json', structured),
                              ('algebra.json', algebra),
                              ('tqft.json', tqft)):
            path = os.path.join(cfg.output_path, name)
            write_json(path, content, indent=indent)
            logger.info(f"Wrote {path}")
    except OSError as e:
        logger.error(f"Can't write to {cfg.output_path}: {e}")
        return ExitCode.IO
    return exit_code


_RUNNERS = {
    'check': run_check_suite,
    'hall': run_hall,
    'tqft': run_tqft,
}


def main(argv=None) -> int:

    import argparse
    import sys

    import pySegal.pysegal_logging as pysegal_logging

    ap = argparse.ArgumentParser(
        description="Check the L-simplex set of a partial monoid, "
                    "its Hall algebra and the surfaces it evaluates. "
                    "Reports are JSON, to STDOUT unless --out is given."
    )
    ap.add_argument('command', choices=COMMANDS)
    ap.add_argument('-m', '--monoid', required=True,
                    help='trunc:L, zmod:m, pset-disjoint:k, '
                         'pset-union:k or table:<path>')
    ap.add_argument('--L', dest='top',
                    help='Label of the top element, such as 2 or {a,b}')
    ap.add_argument('--level', type=int,
                    help='Truncation level N '
                         f"(default {config.checks.TRUNCATION})")
    ap.add_argument('--word', help="Cobordism word, such as 'mult;comult'")
    ap.add_argument('--genus', type=int,
                    help='Largest genus in the invariant table '
                         f"(default {config.tqft.GENUS})")
    ap.add_argument('-o', '--out',
                    help='Output file, or directory for export')
    ap.add_argument('--apex-limit', type=int,
                    help='Largest intermediate span apex '
                         f"(default {config.tqft.APEX_LIMIT})")
    ap.add_argument('-c', '--config', help='Use as alternate config file')
    ap.add_argument('-v', '--verbose', action='count', default=0,
                    help='Log INFO to stderr, -vv for DEBUG')
    args = ap.parse_args(argv)

    pysegal_logging.setup_initial_logger()
    try:
        config.load_from_yaml(args.config)
    except Exception as e:
        logger.critical(f"Config not loaded: {e}")
        return ExitCode.INPUT
    if args.verbose:
        config.logging.handlers.STDERR = \
            'DEBUG' if args.verbose > 1 else 'INFO'
    pysegal_logging.setup_direct_logging(config.logging)

    try:
        cfg = RunConfig(
            command=args.command,
            monoid_spec=args.monoid,
            L=args.top,
            truncation=args.level if args.level is not None
            else config.checks.TRUNCATION,
            output_path=args.out,
            apex_limit=args.apex_limit if args.apex_limit is not None
            else config.tqft.APEX_LIMIT,
            word=args.word,
            genus=args.genus if args.genus is not None
            else config.tqft.GENUS,
        ).validate()
    except RunConfigError as e:
        logger.error(str(e))
        return ExitCode.INPUT

    indent = config.output.INDENT
    if cfg.command == 'export':
        return export_report(cfg, indent=indent)

    exit_code, report = _RUNNERS[cfg.command](cfg)
    text = canonical_json(report, indent=indent)
    if cfg.output_path is None:
        sys.stdout.write(text)
    else:
        try:
            with open(cfg.output_path, 'w') as fh:
                fh.write(text)
        except OSError as e:
            logger.error(f"Can't write {cfg.output_path}: {e}")
            return ExitCode.IO
    return exit_code


def run_as_script():
    import sys
    sys.exit(int(main()))


if __name__ == '__main__':
    run_as_script()
