"""Sparse multivariate polynomials with exact rational coefficients.

Polynomials are immutable.  Each one carries the tuple of variable names it
is written over; the names are always kept sorted by :data:`VARIABLE_ORDER`
(unknown names go after the known ones, alphabetically), so two polynomials
built from the same expression print identically.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

VARIABLE_ORDER = (
    "u", "v", "u0", "u1", "x",
    "nu", "alpha", "beta", "gamma", "omega", "lam", "mu",
)


def _rank(name):
    try:
        return (0, VARIABLE_ORDER.index(name), name)
    except ValueError:
        return (1, 0, name)


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class MPoly:
    __slots__ = ("gens", "terms")

    def __init__(self, terms=None, gens=()):
        """Build from ``{exponent_tuple: coeff}`` aligned with ``gens``.

        ``gens`` may be in any order; it is re-sorted and the exponent
        tuples permuted accordingly.  Zero coefficients are dropped.
        """
        gens = tuple(gens)
        if len(set(gens)) != len(gens):
            raise ValueError(f"repeated variable in {gens}")
        order = sorted(range(len(gens)), key=lambda i: _rank(gens[i]))
        out = {}
        for exps, c in (terms or {}).items():
            if len(exps) != len(gens):
                raise ValueError("exponent tuple does not match variables")
            c = _frac(c)
            if c:
                key = tuple(int(exps[i]) for i in order)
                if any(e < 0 for e in key):
                    raise ValueError("negative exponent")
                out[key] = out.get(key, 0) + c
        self.gens = tuple(gens[i] for i in order)
        self.terms = {k: c for k, c in out.items() if c}

    @classmethod
    def _raw(cls, gens, terms):
        obj = object.__new__(cls)
        obj.gens = gens
        obj.terms = terms
        return obj

    @classmethod
    def var(cls, name):
        return cls._raw((name,), {(1,): Fraction(1)})

    @classmethod
    def const(cls, c):
        c = _frac(c)
        return cls._raw((), {(): c} if c else {})

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, MPoly) else cls.const(x)

    # -- structure -------------------------------------------------------

    def _regen(self, gens):
        if gens == self.gens:
            return self.terms
        pos = [gens.index(g) for g in self.gens]
        n = len(gens)
        out = {}
        for exps, c in self.terms.items():
            key = [0] * n
            for i, e in zip(pos, exps):
                key[i] = e
            out[tuple(key)] = c
        return out

    def _unify(self, other):
        if self.gens == other.gens:
            return self.gens, self.terms, other.terms
        gens = tuple(sorted(set(self.gens) | set(other.gens), key=_rank))
        return gens, self._regen(gens), other._regen(gens)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        """Value of a constant polynomial as a Fraction."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def variables(self):
        """Names of variables that actually occur."""
        used = set()
        for exps in self.terms:
            used.update(g for g, e in zip(self.gens, exps) if e)
        return tuple(g for g in self.gens if g in used)

    def degree(self, name=None):
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        if name not in self.gens:
            return 0
        i = self.gens.index(name)
        return max(e[i] for e in self.terms)

    def coefficient(self, monomial):
        """Coefficient of ``{name: exponent}`` (missing names mean 0)."""
        for name, e in monomial.items():
            if e and name not in self.gens:
                return Fraction(0)
        key = tuple(monomial.get(g, 0) for g in self.gens)
        return self.terms.get(key, Fraction(0))

    def coefficients_in(self, name):
        """Split into ``{k: coefficient of name**k}`` with MPoly values."""
        if name not in self.gens:
            return {0: self} if self.terms else {}
        i = self.gens.index(name)
        parts = {}
        for exps, c in self.terms.items():
            key = exps[:i] + (0,) + exps[i + 1:]
            parts.setdefault(exps[i], {})[key] = c
        return {k: MPoly._raw(self.gens, t) for k, t in parts.items()}

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, Rational):
                other = MPoly.const(other)
            else:
                return NotImplemented
        gens, a, b = self._unify(other)
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return MPoly._raw(gens, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.gens, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (MPoly, Rational)):
            return NotImplemented
        return self + (-MPoly.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, Rational):
            return NotImplemented
        return MPoly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational):
            c = _frac(other)
            if not c:
                return MPoly._raw(self.gens, {})
            return MPoly._raw(self.gens, {k: v * c for k, v in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        gens, a, b = self._unify(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MPoly._raw(gens, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Rational):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / _frac(other))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        _, a, b = self._unify(other)
        return a == b

    def __hash__(self):
        sparse = frozenset(
            (tuple((g, e) for g, e in zip(self.gens, exps) if e), c)
            for exps, c in self.terms.items()
        )
        return hash(sparse)

    def __bool__(self):
        return bool(self.terms)

    # -- substitution ----------------------------------------------------

    def subs(self, values):
        """Substitute ``{name: value}``; values may be rationals or MPoly."""
        values = {k: v for k, v in values.items() if k in self.gens}
        if not values:
            return self
        if all(isinstance(v, Rational) for v in values.values()):
            idx = [(self.gens.index(k), _frac(v)) for k, v in values.items()]
            out = {}
            for exps, c in self.terms.items():
                key = list(exps)
                for i, val in idx:
                    if exps[i]:
                        c = c * val ** exps[i]
                        key[i] = 0
                key = tuple(key)
                out[key] = out.get(key, 0) + c
            return MPoly._raw(self.gens, {k: c for k, c in out.items() if c})
        keep = [g for g in self.gens if g not in values]
        keep_idx = [self.gens.index(g) for g in keep]
        sub_idx = [(self.gens.index(k), MPoly.coerce(v)) for k, v in values.items()]
        powers = {}
        result = MPoly.const(0)
        for exps, c in self.terms.items():
            term = MPoly._raw(tuple(keep), {tuple(exps[i] for i in keep_idx): c})
            for i, val in sub_idx:
                e = exps[i]
                if e:
                    if (i, e) not in powers:
                        powers[i, e] = val ** e
                    term = term * powers[i, e]
            result = result + term
        return result

    def divmod_linear(self, name, a):
        """Divide by ``(name - a)``; return ``(quotient, remainder)``.

        The remainder is the polynomial with ``name`` set to ``a``.
        """
        a = _frac(a)
        if name not in self.gens:
            return MPoly._raw(self.gens, {}), self
        i = self.gens.index(name)
        by_deg = {}
        for exps, c in self.terms.items():
            key = exps[:i] + (0,) + exps[i + 1:]
            by_deg.setdefault(exps[i], {})[key] = c
        top = max(by_deg)
        quotient = {}
        carry = {}
        for k in range(top, 0, -1):
            cur = dict(by_deg.get(k, {}))
            for key, c in carry.items():
                cur[key] = cur.get(key, 0) + a * c
            cur = {key: c for key, c in cur.items() if c}
            for key, c in cur.items():
                quotient[key[:i] + (k - 1,) + key[i + 1:]] = c
            carry = cur
        rem = dict(by_deg.get(0, {}))
        for key, c in carry.items():
            rem[key] = rem.get(key, 0) + a * c
        rem = {key: c for key, c in rem.items() if c}
        return MPoly._raw(self.gens, quotient), MPoly._raw(self.gens, rem)

    # -- display ---------------------------------------------------------

    def sorted_terms(self):
        """Terms in canonical order: ascending total degree, then lex descending."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])),
        )

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = " ".join(
                g if e == 1 else f"{g}^{e}" for g, e in zip(self.gens, exps) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MPoly({self})"


def variables(*names):
    """Convenience: ``u, v = variables("u", "v")``."""
    return tuple(MPoly.var(n) for n in names)


def rising(x, n):
    """Rising factorial ``x (x+1) ... (x+n-1)``; ``x`` may be a polynomial."""
    out = MPoly.const(1)
    for j in range(n):
        out = out * (x + j)
    return out


def univariate_coefficients(poly, name):
    """Rational coefficients ``[c_0, c_1, ...]`` of a polynomial in one variable."""
    poly = MPoly.coerce(poly)
    extra = set(poly.variables()) - {name}
    if extra:
        raise ValueError(f"unexpected variables {sorted(extra)}")
    deg = max(poly.degree(name), 0)
    return [poly.coefficient({name: k}) for k in range(deg + 1)]
