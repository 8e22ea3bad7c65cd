"""Exact rational parsing and rendering shared by the serializers."""

from fractions import Fraction
from numbers import Rational

INF = "inf"


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions, sympy Rationals and ``"p/q"`` strings to Fraction.

    Floats are refused: every inequality downstream is decided exactly.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if hasattr(value, "p") and hasattr(value, "q"):
        # sympy.Rational does not register with numbers.Rational
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot use {value!r} ({type(value).__name__}) as an exact rational")


def fmt(value) -> str:
    """Render as ``"p/q"`` in lowest terms, ``"p"`` when the denominator is 1."""
    return str(as_fraction(value))


def parse_list(text: str) -> list[Fraction]:
    """Parse a comma separated list such as ``"1,1/2,3"``."""
    return [as_fraction(tok) for tok in text.split(",") if tok.strip()]
