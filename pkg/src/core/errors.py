#!/usr/bin/env python3
"""
Exception hierarchy for the flagorbit engine.
Library code raises these; only the CLI turns them into exit codes.
"""


class FlagOrbitError(Exception):
    """Base class for every error raised by the engine."""


class ParseError(FlagOrbitError):
    """Raised when a system spec, word or weight cannot be parsed."""


class ConfigurationError(FlagOrbitError):
    """Raised when configuration values fail validation."""


class MalformedCartanMatrix(FlagOrbitError):
    """Raised when a Cartan matrix violates the generalized Cartan axioms."""


class NonFiniteType(FlagOrbitError):
    """Raised when the positive-root closure exceeds the root-count bound."""


class IndexOutOfRange(FlagOrbitError):
    """Raised for a generator or coroot index outside the valid range."""


class ArityMismatch(FlagOrbitError):
    """Raised when a weight has the wrong number of coordinates."""


class GroupTooLarge(FlagOrbitError):
    """Raised when enumeration exceeds the configured maximum group order."""


class NotTypeA(FlagOrbitError):
    """Raised when a type-A only operation is applied to another series."""


class MixedSystems(FlagOrbitError):
    """Raised when elements of different root systems are combined."""


class PatternLongerThanPermutation(FlagOrbitError):
    """Raised when a pattern is longer than the permutation it is tested in."""


class NonPositivePartition(FlagOrbitError):
    """Raised when a maximal-parabolic partition has a part below 1."""


class DegreeOutOfRange(FlagOrbitError):
    """Raised when a cohomological degree lies outside [0, dim X]."""


__all__ = [
    "FlagOrbitError",
    "ParseError",
    "ConfigurationError",
    "MalformedCartanMatrix",
    "NonFiniteType",
    "IndexOutOfRange",
    "ArityMismatch",
    "GroupTooLarge",
    "NotTypeA",
    "MixedSystems",
    "PatternLongerThanPermutation",
    "NonPositivePartition",
    "DegreeOutOfRange",
]
