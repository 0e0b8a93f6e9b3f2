"""Truncated graded power series in ``z`` with word-indexed coefficients.

A series of truncation order ``N`` is a finite map ``(grade, word) -> scalar``
with ``0 <= grade <= N``.  A *word* is a tuple of positive generator indices
(``(2, 1)`` stands for ``X_2 X_1``); products concatenate words left to right,
so the algebra is the free associative algebra over the scalar ring.  The
empty word carries pure scalars, which is how ordinary commuting power series
are represented (``1 + 3z`` is ``{(0, ()): 1, (1, ()): 3}``).  A word's
weight never exceeds its grade; for a free potential ``U_k`` it equals it.

``commutative=True`` sorts every word, turning the word algebra into the
polynomial ring in the generators (abelianization).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .polynomial import MPoly
from .ratfunc import RatFunc
from .scalars import scalar_from_str, scalar_to_str, simplify

_SCALARS = (Rational, MPoly, RatFunc)


class SchemaError(ValueError):
    """Malformed serialized input; ``path`` locates the offending element."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path


def _check_word(word, grade):
    word = tuple(word)
    if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in word):
        raise ValueError(f"word letters must be positive integers: {word}")
    if sum(word) > grade:
        raise ValueError(f"word {word} has weight above its grade {grade}")
    return word


# -- grade parts: dicts word -> scalar -------------------------------------

def part_add(a, b, scale=1):
    out = dict(a)
    for w, c in b.items():
        s = out.get(w, 0) + c * scale
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return out


def part_scale(a, c):
    if not c:
        return {}
    return {w: x * c for w, x in a.items() if x * c}


def part_mul(a, b, commutative=False):
    """Product of two homogeneous parts (concatenation of words)."""
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            if commutative:
                w = tuple(sorted(w))
            out[w] = out.get(w, 0) + c1 * c2
    return {w: c for w, c in out.items() if c}


def part_equal(a, b):
    keys = set(a) | set(b)
    return all(a.get(k, 0) == b.get(k, 0) for k in keys)


def format_part(part, letter="U"):
    if not part:
        return "0"
    pieces = []
    for w in sorted(part, key=lambda w: (-sum(w), len(w), w)):
        c = simplify(part[w])
        mono = " ".join(f"{letter}{k}" for k in w)
        if not mono:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(mono)
        elif c == -1:
            pieces.append(f"-{mono}")
        elif isinstance(c, Fraction):
            pieces.append(f"{c} {mono}")
        else:
            pieces.append(f"({c}) {mono}")
    return " + ".join(pieces).replace("+ -", "- ")


class Series:
    __slots__ = ("order", "_terms", "commutative")

    def __init__(self, order, terms=None, commutative=False):
        if not isinstance(order, int) or order < 0:
            raise ValueError(f"truncation order must be a non-negative integer, got {order!r}")
        self.order = order
        self.commutative = bool(commutative)
        out = {}
        for (grade, word), c in (terms or {}).items():
            if not isinstance(grade, int) or grade < 0:
                raise ValueError(f"bad grade {grade!r}")
            if grade > order:
                raise ValueError(f"grade {grade} exceeds truncation order {order}")
            if not isinstance(c, _SCALARS):
                raise TypeError(f"unsupported scalar {c!r}")
            word = _check_word(word, grade)
            if self.commutative:
                word = tuple(sorted(word))
            key = (grade, word)
            out[key] = out.get(key, 0) + c
        self._terms = {k: simplify(c) for k, c in out.items() if c}

    @classmethod
    def _raw(cls, order, terms, commutative):
        obj = object.__new__(cls)
        obj.order = order
        obj.commutative = commutative
        obj._terms = {k: simplify(c) for k, c in terms.items() if c}
        return obj

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_grades(cls, order, grades, constant=0, commutative=False):
        """From ``{grade: {word: scalar}}`` plus a scalar constant term."""
        terms = {(0, ()): constant} if constant else {}
        for g, part in grades.items():
            for w, c in part.items():
                terms[g, tuple(w)] = c
        return cls(order, terms, commutative)

    @classmethod
    def scalar(cls, order, coeffs, constant=0):
        """Commuting series ``constant + sum c_k z^k`` from ``{k: c_k}`` or a list ``[c_1, c_2, ...]``."""
        if not isinstance(coeffs, dict):
            coeffs = {k + 1: c for k, c in enumerate(coeffs)}
        terms = {(k, ()): c for k, c in coeffs.items() if k <= order}
        if constant:
            terms[0, ()] = constant
        return cls(order, terms)

    @classmethod
    def free(cls, order, constant=0):
        """The free potential ``X_1 z + X_2 z^2 + ...`` in independent generators."""
        terms = {(k, (k,)): Fraction(1) for k in range(1, order + 1)}
        if constant:
            terms[0, ()] = constant
        return cls(order, terms)

    @classmethod
    def one(cls, order):
        return cls(order, {(0, ()): Fraction(1)})

    @classmethod
    def zero(cls, order):
        return cls(order)

    # -- access ----------------------------------------------------------

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0], len(kv[0][1]), kv[0][1]))

    def grade(self, n):
        """Homogeneous part of grade ``n`` as a fresh ``{word: scalar}`` dict."""
        return {w: c for (g, w), c in self._terms.items() if g == n}

    def grades(self):
        return {n: self.grade(n) for n in range(self.order + 1)}

    @property
    def constant(self):
        return self._terms.get((0, ()), Fraction(0))

    def is_zero(self):
        return not self._terms

    def coefficient(self, grade, word=()):
        word = tuple(word)
        if self.commutative:
            word = tuple(sorted(word))
        return self._terms.get((grade, word), Fraction(0))

    # -- arithmetic ------------------------------------------------------

    def _same_order(self, other):
        if self.order != other.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = Series(self.order, {(0, ()): other})
        if not isinstance(other, Series):
            return NotImplemented
        self._same_order(other)
        comm = self.commutative or other.commutative
        out = {}
        for src in (self._terms, other._terms):
            for k, c in src.items():
                if comm:
                    k = (k[0], tuple(sorted(k[1])))
                out[k] = out.get(k, 0) + c
        return Series._raw(self.order, out, comm)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(self.order, {k: -c for k, c in self._terms.items()}, self.commutative)

    def __sub__(self, other):
        if isinstance(other, (Series,) + _SCALARS):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return Series._raw(
                self.order, {k: c * other for k, c in self._terms.items()}, self.commutative
            )
        if not isinstance(other, Series):
            return NotImplemented
        self._same_order(other)
        comm = self.commutative or other.commutative
        n = self.order
        out = {}
        right = other._terms.items()
        for (g1, w1), c1 in self._terms.items():
            for (g2, w2), c2 in right:
                g = g1 + g2
                if g > n:
                    continue
                w = w1 + w2
                if comm:
                    w = tuple(sorted(w))
                out[g, w] = out.get((g, w), 0) + c1 * c2
        return Series._raw(n, out, comm)

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = Series.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.order != other.order:
            return False
        keys = set(self._terms) | set(other._terms)
        return all(self._terms.get(k, 0) == other._terms.get(k, 0) for k in keys)

    __hash__ = None

    # -- operators -------------------------------------------------------

    def D(self):
        """Apply ``z d/dz``: multiply the grade-``n`` part by ``n``."""
        return Series._raw(self.order, {k: c * k[0] for k, c in self._terms.items()}, self.commutative)

    def invert_monic(self):
        """Two-sided inverse of a series with constant term 1."""
        if self.constant != 1 or any(g == 0 and w for (g, w) in self._terms):
            raise ValueError("series is not monic (constant term must be exactly 1)")
        parts = self.grades()
        inv = {0: {(): Fraction(1)}}
        for n in range(1, self.order + 1):
            acc = {}
            for j in range(1, n + 1):
                if parts[j] and inv[n - j]:
                    acc = part_add(acc, part_mul(parts[j], inv[n - j], self.commutative), -1)
            inv[n] = acc
        return Series.from_grades(self.order, inv, commutative=self.commutative)

    def map_coeffs(self, f):
        return Series._raw(self.order, {k: f(c) for k, c in self._terms.items()}, self.commutative)

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return Series._raw(order, {k: c for k, c in self._terms.items() if k[0] <= order}, self.commutative)

    def abelianize(self):
        """Image under the map sending words to commutative monomials."""
        out = {}
        for (g, w), c in self._terms.items():
            k = (g, tuple(sorted(w)))
            out[k] = out.get(k, 0) + c
        return Series._raw(self.order, out, True)

    def __repr__(self):
        return f"Series(order={self.order}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for n in range(self.order + 1):
            part = self.grade(n)
            if part:
                zpow = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
                body = format_part(part)
                pieces.append(body if not zpow else f"({body}) {zpow}")
        return " + ".join(pieces)


# -- serialization ---------------------------------------------------------

def series_to_json(s):
    return {
        "order": s.order,
        "terms": [
            {"grade": g, "word": list(w), "coeff": scalar_to_str(c)}
            for (g, w), c in s.items()
        ],
    }


def series_from_json(obj, path="$"):
    """Inverse of :func:`series_to_json` for rational coefficients."""
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object with 'order' and 'terms'")
    order = obj.get("order")
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise SchemaError(f"{path}.order", "expected a non-negative integer")
    terms = obj.get("terms", [])
    if not isinstance(terms, list):
        raise SchemaError(f"{path}.terms", "expected an array")
    out = {}
    for i, t in enumerate(terms):
        where = f"{path}.terms[{i}]"
        if not isinstance(t, dict):
            raise SchemaError(where, "expected an object")
        grade, word, coeff = t.get("grade"), t.get("word", []), t.get("coeff")
        if not isinstance(grade, int) or isinstance(grade, bool) or not 0 <= grade <= order:
            raise SchemaError(f"{where}.grade", f"expected an integer in [0, {order}]")
        if not isinstance(word, list):
            raise SchemaError(f"{where}.word", "expected an integer array")
        try:
            word = _check_word(word, grade)
        except ValueError as exc:
            raise SchemaError(f"{where}.word", str(exc)) from None
        try:
            value = scalar_from_str(coeff)
        except ValueError as exc:
            raise SchemaError(f"{where}.coeff", str(exc)) from None
        key = (grade, word)
        out[key] = out.get(key, 0) + value
    return Series(order, out, commutative=bool(obj.get("commutative", False)))
