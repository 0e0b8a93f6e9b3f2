"""Monic formal solutions of second-order operators with indicial roots 0 and nu.

Operators are written with the Euler derivative ``D = z d/dz``.  Since
``z^2 d^2/dz^2 = D^2 - D``, the operator

    z^2 phi'' + (1 - nu) z phi' + P z phi' + Q phi

is ``D^2 - nu D + P D + Q``.  Coefficient series multiply from the left,
which fixes the word order of every noncommutative result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .compositions import compositions, partial_sums
from .polynomial import MPoly
from .ratfunc import RatFunc, ratfunc_residue_at
from .series import Series, part_add, part_mul, part_scale

NU = MPoly.var("nu")


class DiffOp:
    """Operator ``sum_k c_k D^k`` with series coefficients acting from the left."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}
        orders = {c.order for c in coeffs.values()}
        if order is not None:
            orders.add(order)
        if len(orders) != 1:
            raise ValueError(f"inconsistent truncation orders {sorted(orders)}")
        self.order = orders.pop()
        self.coeffs = coeffs

    @classmethod
    def multiplication(cls, series):
        return cls({0: series}, series.order)

    @classmethod
    def euler(cls, order):
        """The operator ``D`` itself."""
        return cls({1: Series.one(order)}, order)

    def coefficient(self, k):
        return self.coeffs.get(k, Series.zero(self.order))

    def __call__(self, f):
        out = Series.zero(self.order)
        if f.order != self.order:
            raise ValueError("operator and series have different truncation orders")
        dk = f
        for k in range(max(self.coeffs, default=0) + 1):
            if k in self.coeffs:
                out = out + self.coeffs[k] * dk
            dk = dk.D()
        return out

    def __add__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return DiffOp({k: self.coefficient(k) + other.coefficient(k) for k in keys}, self.order)

    def __neg__(self):
        return DiffOp({k: -c for k, c in self.coeffs.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Composition ``self o other`` via ``D^i b = sum_r C(i, r) D^r(b) D^(i-r)``."""
        if not isinstance(other, DiffOp):
            return NotImplemented
        if other.order != self.order:
            raise ValueError("truncation orders differ")
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                db = b
                for r in range(i + 1):
                    term = a * db * comb(i, r)
                    k = i - r + j
                    out[k] = out[k] + term if k in out else term
                    db = db.D()
        return DiffOp(out, self.order)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return self.order == other.order and all(
            self.coefficient(k) == other.coefficient(k) for k in keys
        )

    __hash__ = None

    def __repr__(self):
        return " + ".join(f"[{c}] D^{k}" for k, c in sorted(self.coeffs.items())) or "0"


@dataclass(frozen=True)
class OperatorSpec:
    """``D^2 - nu D + P D + Q`` with ``P``, ``Q`` of zero constant term."""

    P: Series
    Q: Series

    def __post_init__(self):
        if self.P.order != self.Q.order:
            raise ValueError("P and Q must share a truncation order")
        for name, s in (("P", self.P), ("Q", self.Q)):
            if s.grade(0):
                raise ValueError(f"{name} must have zero constant term")

    @property
    def order(self):
        return self.P.order

    @property
    def commutative(self):
        return self.P.commutative or self.Q.commutative

    @classmethod
    def schrodinger(cls, U):
        return cls(Series.zero(U.order), U)

    def diffop(self):
        n = self.order
        return DiffOp({2: Series.one(n), 1: self.P - NU, 0: self.Q}, n)

    @classmethod
    def from_diffop(cls, op):
        if op.coefficient(2) != Series.one(op.order) or any(k > 2 for k in op.coeffs):
            raise ValueError("operator is not of the form D^2 + ...")
        return cls(op.coefficient(1) + NU, op.coefficient(0))


def solve_monic(op):
    """Monic series ``phi`` with ``op[phi] = 0``, coefficients rational in nu.

    Uses ``n (nu - n) phi_n = Q_n + sum_j (j P_{n-j} + Q_{n-j}) phi_j`` with
    the bracket multiplying ``phi_j`` from the left.
    """
    N = op.order
    comm = op.commutative
    P, Q = op.P.grades(), op.Q.grades()
    phi = {0: {(): Fraction(1)}}
    for n in range(1, N + 1):
        rhs = dict(Q[n])
        for j in range(1, n):
            left = part_add(part_scale(P[n - j], j), Q[n - j])
            if left and phi[j]:
                rhs = part_add(rhs, part_mul(left, phi[j], comm))
        pole = RatFunc.simple_pole(n, Fraction(1, n))
        phi[n] = {w: c * pole for w, c in rhs.items()}
    return Series.from_grades(N, phi, commutative=comm)


def phi_composition_sum(op, n):
    """Grade-``n`` coefficient of the monic solution as an explicit composition sum.

    Kept independent of :func:`solve_monic` so each can check the other.
    """
    comm = op.commutative
    P, Q = op.P.grades(), op.Q.grades()
    total = {}
    for p in compositions(n):
        s = partial_sums(p)
        prod = {(): Fraction(1)}
        for j in range(len(p) - 1, -1, -1):
            prev = s[j - 1] if j else 0
            numer = part_add(part_scale(P[p[j]], prev), Q[p[j]]) if j else dict(Q[p[j]])
            pole = RatFunc.simple_pole(s[j], Fraction(1, s[j]))
            factor = {w: c * pole for w, c in numer.items()}
            prod = part_mul(prod, factor, comm)
            if not prod:
                break
        total = part_add(total, prod)
    return total


def residue_table(op, N=None):
    """Spectral residues ``rho_n = Res(phi_n, nu = n)`` for ``1 <= n <= N``."""
    N = op.order if N is None else N
    if N > op.order:
        raise ValueError(f"requested {N} residues from an operator truncated at {op.order}")
    phi = solve_monic(op)
    grades = {n: {w: ratfunc_residue_at(c, n) for w, c in phi.grade(n).items()} for n in range(1, N + 1)}
    return Series.from_grades(N, grades, commutative=op.commutative)


def monic_solution_exists(op, n, method="residue"):
    """Whether ``op`` with ``nu = n`` has a monic series solution.

    ``method="residue"`` tests ``rho_n == 0``; ``method="direct"`` sets
    ``nu = n`` first and checks that the obstruction at grade ``n`` vanishes.
    """
    if method == "residue":
        return not residue_table(op, n).grade(n)
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    comm = op.commutative

    def at_n(part):
        return {w: (c.subs({"nu": n}) if isinstance(c, MPoly) else c) for w, c in part.items()}

    P = {k: at_n(v) for k, v in op.P.grades().items()}
    Q = {k: at_n(v) for k, v in op.Q.grades().items()}
    phi = {}
    for m in range(1, n + 1):
        rhs = dict(Q[m])
        for j in range(1, m):
            left = part_add(part_scale(P[m - j], j), Q[m - j])
            rhs = part_add(rhs, part_mul(left, phi[j], comm))
        if m == n:
            return not rhs
        phi[m] = part_scale(rhs, Fraction(1, m * (n - m)))
    return True


def conjugate_operator(op, mu):
    """Gauge transform ``mu o T o mu^-1`` for a monic series ``mu``.

    Obtained by composing the three operators symbolically; the result is
    again of the form ``D^2 - nu D + P D + Q``.
    """
    if mu.order != op.order:
        raise ValueError("gauge factor and operator have different truncation orders")
    conj = DiffOp.multiplication(mu) * op.diffop() * DiffOp.multiplication(mu.invert_monic())
    return OperatorSpec.from_diffop(conj)


def gauge_factor(P):
    """Monic ``mu`` with ``2 D(mu) = mu P``; conjugating by it removes the first-order term."""
    N = P.order
    Pg = P.grades()
    mu = {0: {(): Fraction(1)}}
    for n in range(1, N + 1):
        acc = dict(Pg[n])
        for j in range(1, n):
            acc = part_add(acc, part_mul(mu[n - j], Pg[j], P.commutative))
        mu[n] = part_scale(acc, Fraction(1, 2 * n))
    return Series.from_grades(N, mu, commutative=P.commutative)


def normalize_to_schrodinger(op, route="generic"):
    """Return ``(mu, U)`` with ``mu o T o mu^-1 = D^2 - nu D + U``.

    ``route="generic"`` conjugates symbolically and works for any
    coefficients.  ``route="sigma"`` uses ``mu = exp(sigma)`` with
    ``D sigma = P / 2`` and only applies to commuting coefficients.
    """
    if route == "generic":
        mu = gauge_factor(op.P)
        hat = conjugate_operator(op, mu)
        if not hat.P.is_zero():
            raise ArithmeticError("gauge factor failed to remove the first-order term")
        return mu, hat.Q
    if route != "sigma":
        raise ValueError(f"unknown route {route!r}")
    if not op.commutative and any(w for s in (op.P, op.Q) for (_, w), _c in s.items()):
        raise ValueError("the sigma route needs commuting coefficients")
    N = op.order
    sigma = Series.from_grades(
        N, {n: part_scale(op.P.grade(n), Fraction(1, 2 * n)) for n in range(1, N + 1)},
        commutative=op.commutative,
    )
    mu = series_exp(sigma)
    ds = sigma.D()
    U = op.Q - ds.D() + ds * NU - ds * ds
    return mu, U


def series_exp(sigma):
    """``exp(sigma)`` for a commuting series with zero constant term."""
    if sigma.grade(0):
        raise ValueError("exp needs a zero constant term")
    N = sigma.order
    sg = sigma.grades()
    out = {0: {(): Fraction(1)}}
    for n in range(1, N + 1):
        acc = {}
        for k in range(1, n + 1):
            if sg[k] and out[n - k]:
                acc = part_add(acc, part_mul(part_scale(sg[k], k), out[n - k], True))
        out[n] = part_scale(acc, Fraction(1, n))
    return Series.from_grades(N, out, commutative=sigma.commutative)


def explicit_gauge_potential(op, mu):
    """``(mu Q - z^2 mu'' - (1 - nu) z mu') mu^-1`` with ``z^2 mu'' = D^2 mu - D mu``.

    Reads the first-derivative term as the Euler derivative ``D mu``.
    """
    d1 = mu.D()
    z2_second = d1.D() - d1
    return (mu * op.Q - z2_second - d1 * (1 - NU)) * mu.invert_monic()
