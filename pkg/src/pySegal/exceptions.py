"""
License for this software, part of the pySegal package, is granted under
GNU General Public License v3.0 only
SPDX-License-Identifier: GPL-3.0-only
"""


class SegalError (RuntimeError):
    pass


class SegalValueError (SegalError, ValueError):
    pass


class SegalTypeError (SegalError, TypeError):
    pass


class SegalRuntimeError (SegalError, RuntimeError):
    pass


class SegalAttributeError (SegalError, AttributeError):
    pass


# Finite sets and spans

class DomainMismatchError (SegalValueError):
    """
    Domain/codomain of maps, feet of spans or boundary profiles
    of cobordism words do not line up
    """
    pass


class SquareNotComposableError (SegalValueError):
    """
    The four maps of a square do not form a square at all,
    as opposed to a square that is not a pullback
    """
    pass


# Structured simplicial sets

class StructureTableError (SegalValueError):
    pass


class MissingStructureError (SegalAttributeError):
    """
    Such as asking for the extra degeneracy of a set without tau
    """
    pass


class TruncationError (SegalValueError):
    pass


class SynthesisError (SegalError):
    """
    The paracyclic and Gamma data could not be joined.
    The report, if any, lists the relation violations that were found.
    """
    def __init__(self, message, report=None, *args):
        self.message = message
        self.report = report
        super(SynthesisError, self).__init__(message, *args)

    def __reduce__(self):
        return (SynthesisError, (self.message, self.report))


# Partial monoids

class PartialMonoidError (SegalValueError):
    pass


class ParameterRangeError (PartialMonoidError):
    pass


class NonCommutativeMonoidError (PartialMonoidError):
    pass


class OrthocomplementError (PartialMonoidError):
    pass


class CorruptedStateError (SegalRuntimeError):
    """
    A product that must be defined for valid inputs was not
    """
    pass


# Hall algebras

class DegeneratePairingError (SegalError):
    pass


class PresentationParseError (SegalValueError):
    pass


# TQFT evaluation

class WordError (SegalValueError):
    pass


class ApexLimitExceededError (SegalRuntimeError):
    def __init__(self, apex_size, limit, *args):
        self.apex_size = apex_size
        self.limit = limit
        super(ApexLimitExceededError, self).__init__(
            f"Intermediate apex of size {apex_size} exceeds limit {limit}",
            *args)

    def __reduce__(self):
        return (ApexLimitExceededError, (self.apex_size, self.limit))


class TQFTConsistencyError (SegalRuntimeError):
    """
    The span route and the matrix route disagree
    """
    pass


# Command line

class SpecParseError (SegalValueError):
    def __init__(self, text, position, reason, *args):
        self.text = text
        self.position = position
        self.reason = reason
        super(SpecParseError, self).__init__(
            f"Can't parse '{text}' at position {position}: {reason}",
            *args)

    def __reduce__(self):
        return (SpecParseError, (self.text, self.position, self.reason))


class RunConfigError (SegalValueError):
    pass
