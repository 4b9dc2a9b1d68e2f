"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only

Check results are data, not exceptions

A CheckReport passes exactly when it holds no violations. Violations are
kept sorted by (relation, level, indices, element) so that reports are
reproducible whatever order the checks ran in.
"""

import logging
from typing import Iterable, List, NamedTuple, Optional, Tuple

import numpy as np

import pySegal

logger = pySegal.getLogger('CheckReport')


class Violation (NamedTuple):
    relation: str
    n: int
    indices: Tuple[int, ...]
    element: Optional[int]
    detail: Optional[str] = None

    def sort_key(self):
        return (self.relation, self.n, self.indices,
                -1 if self.element is None else self.element)

    def as_dict(self) -> dict:
        return {
            'relation': self.relation,
            'n': self.n,
            'indices': list(self.indices),
            'element': self.element,
            'detail': self.detail,
        }

    def __str__(self):
        where = f"{self.relation} n={self.n} indices={list(self.indices)}"
        if self.element is not None:
            where += f" element={self.element}"
        if self.detail:
            where += f": {self.detail}"
        return where


class CheckReport:

    def __init__(self, violations: Iterable[Violation] = (),
                 relations: Iterable[str] = (),
                 truncation: Optional[int] = None):
        self._violations = tuple(sorted(violations, key=Violation.sort_key))
        self._relations = tuple(sorted(set(relations)))
        self._truncation = truncation

    @property
    def passed(self) -> bool:
        return len(self._violations) == 0

    @property
    def violations(self) -> Tuple[Violation, ...]:
        return self._violations

    @property
    def relations(self) -> Tuple[str, ...]:
        """
        The relation families that were checked
        """
        return self._relations

    @property
    def truncation(self) -> Optional[int]:
        return self._truncation

    def for_relation(self, prefix: str) -> List[Violation]:
        return [v for v in self._violations if v.relation.startswith(prefix)]

    @classmethod
    def combine(cls, reports: Iterable["CheckReport"]) -> "CheckReport":
        violations = []
        relations = []
        truncations = []
        for report in reports:
            violations.extend(report.violations)
            relations.extend(report.relations)
            if report.truncation is not None:
                truncations.append(report.truncation)
        return cls(violations, relations,
                   min(truncations) if truncations else None)

    def __add__(self, other: "CheckReport") -> "CheckReport":
        return CheckReport.combine((self, other))

    def summary(self) -> str:
        upto = '' if self._truncation is None \
            else f" up to N={self._truncation}"
        if self.passed:
            return f"passed{upto}, {len(self._relations)} relation families"
        return (f"{len(self._violations)} violations{upto} in "
                f"{len({v.relation for v in self._violations})} "
                "relation families")

    def as_dict(self) -> dict:
        return {
            'passed': self.passed,
            'truncation': self._truncation,
            'relations': list(self._relations),
            'violations': [v.as_dict() for v in self._violations],
        }

    def __repr__(self):
        return f"CheckReport({self.summary()})"


class ViolationCollector:
    """
    Accumulates violations for one checker, then hands back a report
    """

    def __init__(self, truncation: Optional[int] = None,
                 log: Optional[logging.Logger] = None):
        self._violations: List[Violation] = []
        self._relations = set()
        self._truncation = truncation
        self._logger = log if log is not None else logger

    def note(self, relation: str):
        self._relations.add(relation)

    def add(self, relation: str, n: int, indices: Tuple[int, ...],
            element: Optional[int] = None, detail: Optional[str] = None):
        self._relations.add(relation)
        self._violations.append(
            Violation(relation, n, tuple(indices), element, detail))

    def compare(self, relation: str, n: int, indices: Tuple[int, ...],
                lhs, rhs) -> int:
        """
        Elementwise comparison of two maps (or image arrays) with a
        common domain. Returns the number of elements that disagree.
        """
        self._relations.add(relation)
        left = getattr(lhs, 'image', lhs)
        right = getattr(rhs, 'image', rhs)
        if left.shape != right.shape:
            self.add(relation, n, indices, None,
                     f"domains differ, {left.shape} and {right.shape}")
            return 1
        bad = np.nonzero(left != right)[0]
        for element in bad.tolist():
            self._violations.append(Violation(
                relation, n, tuple(indices), element,
                f"{int(left[element])} != {int(right[element])}"))
        return int(bad.size)

    def report(self, family: Optional[str] = None) -> CheckReport:
        if family is not None:
            self._logger.info(
                f"{family}: {len(self._violations)} violations"
                + ('' if self._truncation is None
                   else f" up to N={self._truncation}"))
        return CheckReport(self._violations, self._relations,
                           self._truncation)
