"""Exception hierarchy for baselab.

Every error the library raises derives from BaselabError, itself a
ValueError, so callers that only care about bad input can catch the
builtin.
"""
from typing import FrozenSet, Optional


class BaselabError(ValueError):
    """Base class for all library errors."""


class ConfigurationError(BaselabError):
    """Invalid bounds, presets or environment settings."""


class _PositionedSyntaxError(BaselabError):
    def __init__(self, message: str, line: int, column: int,
                 expected: Optional[FrozenSet[str]] = None):
        self.line = line
        self.column = column
        self.expected = frozenset(expected or ())
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)

    @property
    def position(self):
        return self.line, self.column


class FormulaSyntaxError(_PositionedSyntaxError):
    """A formula string does not parse."""


class BaseSyntaxError(_PositionedSyntaxError):
    """A .base file does not parse."""


class FormulaNotClausal(BaselabError):
    """The antecedent of an intrinsic implication has no base counterpart."""

    def __init__(self, subformula):
        self.subformula = subformula
        super().__init__(f"not a clausal formula: {subformula}")


class EmptyBase(BaselabError):
    """The empty base has no formula translation."""


class BaseOutsideBasis(BaselabError):
    """A base is not a member of the configured basis."""


class AugmentedBaseOutsideBasis(BaseOutsideBasis):
    """b ∪ ⦅φ⦆ left the basis while the consequent needs extensions."""


class AtomOutsideVocabulary(BaselabError):
    """A formula or base mentions an atom the context does not know."""


class VocabularyTooLarge(BaselabError):
    """The brute-force derivability oracle would enumerate too many contexts."""


class EnumerationLimitExceeded(BaselabError):
    """A query would enumerate more bases than the configured limit."""


class UnmappableConnective(BaselabError):
    """A formula uses a connective the oracles cannot interpret."""


class TooManyAtoms(BaselabError):
    """The truth-table oracle refuses formulas over more than 20 atoms."""
