"""Helpers shared by the three scalar kinds: Fraction, MPoly and RatFunc."""

from fractions import Fraction
from numbers import Rational

from .polynomial import MPoly
from .ratfunc import RatFunc


def simplify(x):
    """Demote a scalar to the simplest kind that represents it exactly."""
    if isinstance(x, RatFunc):
        if x.poles:
            return x
        x = x.num
    if isinstance(x, MPoly):
        return x.constant_value() if x.is_constant() else x
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"unsupported scalar {x!r}")


def is_zero(x):
    return not x


def scalar_to_str(x):
    """Serialize a scalar; rationals are always written ``num/den``."""
    x = simplify(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def scalar_from_str(text):
    """Parse ``"num/den"`` or an integer string into a Fraction."""
    if not isinstance(text, str):
        raise ValueError(f"expected a 'num/den' string, got {text!r}")
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc
    if "." in text or "e" in text.lower():
        raise ValueError(f"decimal notation is not exact: {text!r}")
    return value
