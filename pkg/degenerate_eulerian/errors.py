# -*- coding: utf-8 -*-
"""
Exception hierarchy for the degenerate Eulerian toolkit.

Every failure an operation can report has its own class so that callers
(the identity catalog and the CLI) can map it to a report or an exit code.
"""


class EulerianError(Exception):
    """Root of all errors raised by this package."""


# =============================================================================
# Exact Algebra
# =============================================================================

class NonExactDivision(EulerianError, ArithmeticError):
    """A polynomial division left a nonzero remainder."""


class MixedMainVariable(EulerianError, ValueError):
    """Two series with different main variables were combined."""


class NonUnitConstantTerm(EulerianError, ZeroDivisionError):
    """Series inversion was asked for a series with zero constant term."""


class NonzeroConstantTerm(EulerianError, ValueError):
    """series_exp was applied to a series whose constant term is not zero."""


class PoleEncountered(EulerianError, ZeroDivisionError):
    """A substitution made a denominator vanish."""


# =============================================================================
# Sequences
# =============================================================================

class NegativeIndex(EulerianError, ValueError):
    """An index that must be nonnegative was negative."""


class IndexOutOfTriangle(EulerianError, ValueError):
    """A Stirling index pair lies outside 0 ≤ k ≤ n."""


class IndexOutOfRange(EulerianError, ValueError):
    """A degenerate-number index pair lies outside 0 ≤ l ≤ n."""


class OracleBoundExceeded(EulerianError, ValueError):
    """A brute-force oracle was asked for a size it refuses to enumerate."""


# =============================================================================
# Identity Catalog / CLI
# =============================================================================

class UnknownIdentity(EulerianError, KeyError):
    """The requested identity tag is not registered."""

    def __str__(self) -> str:
        return f"unknown identity: {self.args[0]}" if self.args else "unknown identity"


class MissingSecondIndex(EulerianError, ValueError):
    """A two-index identity was verified without m_max."""


class UnusedBinding(EulerianError, ValueError):
    """A binding names a variable the chosen generating function does not use."""
