"""Rational scalars.

Exact rationals are `fractions.Fraction` throughout the package; Fraction
already guarantees the reduced form with a positive denominator.  This module
only adds the textual wire format ("p/q", or "p" for integers).
"""

from fractions import Fraction

from ..errors import BssError


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction.

    Raises BssError on malformed input (including a zero denominator).
    """
    s = text.strip()
    try:
        q = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise BssError(f"malformed rational {text!r}") from exc
    if "." in s or "e" in s.lower():
        # Fraction accepts decimal strings; the wire format does not.
        raise BssError(f"malformed rational {text!r}")
    return q


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
