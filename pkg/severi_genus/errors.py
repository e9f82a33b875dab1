"""Exception types raised by the severi_genus package.

Library code only raises these; turning them into exit codes is the CLI's job.
"""

from __future__ import annotations


class SeveriGenusError(Exception):
    """Base class for every error raised by this package."""


class NonIntegralError(SeveriGenusError, ArithmeticError):
    """A value that must be an integer (2g-2, a count, an exact quotient) is not.

    Seeing this means a formula was transcribed wrongly, not that the input
    was bad.
    """


class DegreeOutOfRangeError(SeveriGenusError, ValueError):
    """The degree is below the lower bound of the requested formula."""


class InvalidSignatureError(SeveriGenusError, ValueError):
    """(n, r, d) does not describe a moduli space M_{0,n}(P^r, d) handled here."""
