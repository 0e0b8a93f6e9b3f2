"""Rational functions in the spectral parameter ``nu``.

Every denominator met by the Frobenius recursion, the hypergeometric
coefficients and the Darboux sum/difference system is a product of linear
factors ``(nu - a)`` with rational ``a``.  A :class:`RatFunc` therefore
stores its denominator in factored form, ``{a: multiplicity}``, and keeps
the numerator as an :class:`~specres.polynomial.MPoly` that may involve
``nu`` and any other parameter.  Reduction to lowest terms cancels each
factor that divides the numerator exactly, so the stored form is canonical
and the denominator is monic.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .polynomial import MPoly

NU = "nu"


class PoleOrderError(ArithmeticError):
    """Residue requested at a pole of order two or more."""


def _linear_power(a, k):
    return (MPoly.var(NU) - a) ** k


class RatFunc:
    __slots__ = ("num", "poles")

    def __init__(self, num, poles=None):
        num = MPoly.coerce(num)
        poles = {Fraction(a): int(m) for a, m in (poles or {}).items() if m}
        if any(m < 0 for m in poles.values()):
            raise ValueError("pole multiplicities must be positive")
        if num.is_zero():
            poles = {}
        reduced = {}
        for a in sorted(poles):
            m = poles[a]
            while m:
                q, r = num.divmod_linear(NU, a)
                if not r.is_zero():
                    break
                num, m = q, m - 1
            if m:
                reduced[a] = m
        self.num = num
        self.poles = tuple(sorted(reduced.items()))

    @classmethod
    def simple_pole(cls, a, scale=1):
        """``scale / (nu - a)``."""
        return cls(MPoly.const(scale), {a: 1})

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, RatFunc) else cls(x)

    def denominator(self):
        out = MPoly.const(1)
        for a, m in self.poles:
            out = out * _linear_power(a, m)
        return out

    def pole_order(self, a):
        return dict(self.poles).get(Fraction(a), 0)

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return not self.poles

    # -- arithmetic ------------------------------------------------------

    def _lift(self, target):
        """Numerator rewritten over the (larger) denominator ``target``."""
        mine = dict(self.poles)
        num = self.num
        for a, m in target.items():
            extra = m - mine.get(a, 0)
            if extra:
                num = num * _linear_power(a, extra)
        return num

    def __add__(self, other):
        if isinstance(other, (MPoly, Rational)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.poles == other.poles:
            return RatFunc(self.num + other.num, dict(self.poles))
        target = dict(self.poles)
        for a, m in other.poles:
            target[a] = max(target.get(a, 0), m)
        return RatFunc(self._lift(target) + other._lift(target), target)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RatFunc)
        out.num = -self.num
        out.poles = self.poles
        return out

    def __sub__(self, other):
        if not isinstance(other, (RatFunc, MPoly, Rational)):
            return NotImplemented
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (MPoly, Rational)):
            return NotImplemented
        return RatFunc(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (MPoly, Rational)):
            if isinstance(other, Rational) or other.is_constant():
                # a constant factor cannot cancel a pole
                out = object.__new__(RatFunc)
                out.num = self.num * other
                out.poles = self.poles if out.num.terms else ()
                return out
            return RatFunc(self.num * other, dict(self.poles))
        if not isinstance(other, RatFunc):
            return NotImplemented
        poles = dict(self.poles)
        for a, m in other.poles:
            poles[a] = poles.get(a, 0) + m
        return RatFunc(self.num * other.num, poles)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Rational):
            return NotImplemented
        return self * (1 / Fraction(other))

    def over_linear(self, a):
        """``self / (nu - a)``."""
        poles = dict(self.poles)
        poles[Fraction(a)] = poles.get(Fraction(a), 0) + 1
        return RatFunc(self.num, poles)

    def __eq__(self, other):
        if isinstance(other, (MPoly, Rational)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        # cross-multiplication, independent of the reduced form
        return self.num * other.denominator() == other.num * self.denominator()

    def __hash__(self):
        return hash((self.num, self.poles))

    def __bool__(self):
        return not self.num.is_zero()

    # -- evaluation ------------------------------------------------------

    def evaluate(self, value):
        """Specialize ``nu = value`` (rational or polynomial); returns MPoly."""
        if isinstance(value, Rational):
            value = Fraction(value)
            den = Fraction(1)
            for a, m in self.poles:
                if a == value:
                    raise ZeroDivisionError(f"nu = {value} is a pole")
                den *= (value - a) ** m
            return self.num.subs({NU: value}) / den
        if self.poles:
            raise ValueError("symbolic evaluation of a function with poles")
        return self.num.subs({NU: value})

    def residue_at(self, n):
        """Residue at ``nu = n``.

        Zero when ``nu - n`` does not divide the denominator.  A pole of
        order two or more raises :class:`PoleOrderError`.
        """
        n = Fraction(n)
        order = self.pole_order(n)
        if order == 0:
            return MPoly.const(0)
        if order > 1:
            raise PoleOrderError(f"pole of order {order} at nu = {n}")
        rest = RatFunc(self.num, {a: m for a, m in self.poles if a != n})
        return rest.evaluate(n)

    def __str__(self):
        if not self.poles:
            return str(self.num)
        den = " ".join(
            (f"(nu - {a})" if a >= 0 else f"(nu + {-a})") + (f"^{m}" if m > 1 else "")
            for a, m in self.poles
        )
        return f"({self.num}) / ({den})"

    def __repr__(self):
        return f"RatFunc({self})"


def ratfunc_residue_at(f, n):
    """Residue of ``f`` at ``nu = n`` returned as a simplified scalar."""
    from .scalars import simplify

    if not isinstance(f, RatFunc):
        return Fraction(0)
    return simplify(f.residue_at(n))
