"""Text form of exact rationals: ``"p/q"`` in lowest terms, ``"p"`` when q = 1."""

from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]


def format_rational(value: RationalLike) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: RationalLike) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction.

    Raises:
        ValueError: If the text is not a rational number.
    """
    if isinstance(text, (Fraction, int)):
        return Fraction(text)
    stripped = text.strip()
    if "." in stripped or "e" in stripped.lower():
        raise ValueError(f"Expected an exact rational 'p/q', got {text!r}")
    return Fraction(stripped)
