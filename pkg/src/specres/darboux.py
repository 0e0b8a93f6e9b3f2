"""Formal Darboux transformation of potentials in the variable ``z``.

``H + nu^2/4 = (D - nu/2 - W)(D - nu/2 + W)`` with ``U = D W - W^2``.
Swapping the factors gives the partner potential ``-D W - W^2``.
"""

from __future__ import annotations

from fractions import Fraction

from .compositions import adjacent_sum_product, weight_q
from .frobenius import NU, DiffOp
from .ratfunc import RatFunc, ratfunc_residue_at
from .report import Check, compare
from .series import Series, part_add, part_mul, part_scale
from .transforms import _is_commutative, _require_zero_constant, residues_from_potential, word_sum


def prepotential_from_potential(U):
    """Solve ``U_n = n W_n - sum_i W_i W_{n-i}`` for ``W`` grade by grade."""
    _require_zero_constant(U, "potential")
    comm = U.commutative
    Ug = U.grades()
    W = {}
    for n in range(1, U.order + 1):
        acc = dict(Ug[n])
        for i in range(1, n):
            acc = part_add(acc, part_mul(W[i], W[n - i], comm))
        W[n] = part_scale(acc, Fraction(1, n))
    return Series.from_grades(U.order, W, commutative=comm)


def potential_from_prepotential(W):
    return W.D() - W * W


def darboux_transform(U):
    """Partner potential ``-D W - W^2``."""
    W = prepotential_from_potential(U)
    return -W.D() - W * W


def verify_residue_negation(U, N=None):
    """Check that the partner potential's residues are the negatives of ``U``'s."""
    N = U.order if N is None else N
    rho = residues_from_potential(U, N)
    rho_partner = residues_from_potential(darboux_transform(U), N)
    return compare(rho_partner, -rho)


def prepotential_from_residues(rho, N=None):
    """``W_n = sum over odd-length p of rho_{p_1} ... rho_{p_l} / ((p_1+p_2)...(p_{l-1}+p_l))``."""
    _require_zero_constant(rho, "residue sequence")
    N = rho.order if N is None else N
    comm = _is_commutative(rho)
    parts = rho.grades()
    grades = {
        n: word_sum(parts, n, lambda p: Fraction(1, adjacent_sum_product(p)), comm, parity="odd")
        for n in range(1, N + 1)
    }
    return Series.from_grades(N, grades, commutative=rho.commutative)


def residues_from_prepotential(W, N=None):
    """``rho_n = sum over odd-length p of (-1)^((l-1)/2) W_p / (q_p q_p')``."""
    _require_zero_constant(W, "prepotential")
    N = W.order if N is None else N
    comm = _is_commutative(W)
    parts = W.grades()

    def weight(p):
        sign = -1 if (len(p) // 2) % 2 else 1
        return Fraction(sign, weight_q(p) * weight_q(p[::-1]))

    grades = {n: word_sum(parts, n, weight, comm, parity="odd") for n in range(1, N + 1)}
    return Series.from_grades(N, grades, commutative=W.commutative)


def delta_series_oracle(W, N=None):
    """Solve the sum/difference system of the coupled first-order equations.

    ``n sigma_n = -sum_j W_{n-j} delta_j`` and
    ``(n - nu) delta_n = -W_n - sum_j W_{n-j} sigma_j`` with ``sigma_0 = 1``,
    ``delta_0 = 0``.  Returns ``(sigma, delta, rho)`` where
    ``rho_n = Res(delta_n, nu = n)``.
    """
    N = W.order if N is None else N
    comm = W.commutative
    Wg = W.grades()
    sigma = {0: {(): Fraction(1)}}
    delta = {0: {}}
    for n in range(1, N + 1):
        acc = {}
        for j in range(1, n):
            acc = part_add(acc, part_mul(Wg[n - j], delta[j], comm))
        sigma[n] = part_scale(acc, Fraction(-1, n))
        acc = dict(Wg[n])
        for j in range(1, n):
            acc = part_add(acc, part_mul(Wg[n - j], sigma[j], comm))
        pole = RatFunc.simple_pole(n)
        delta[n] = {w: c * pole for w, c in acc.items()}
    rho = {n: {w: ratfunc_residue_at(c, n) for w, c in delta[n].items()} for n in range(1, N + 1)}
    return (
        Series.from_grades(N, sigma, commutative=comm),
        Series.from_grades(N, delta, commutative=comm),
        Series.from_grades(N, rho, commutative=comm),
    )


def factorization_check(W):
    """Compose ``(D - nu/2 - W)(D - nu/2 + W)`` and compare with ``H + nu^2/4``."""
    N = W.order
    D = DiffOp.euler(N)
    half_nu = DiffOp.multiplication(Series.one(N) * (NU / 2))
    left = D - half_nu - DiffOp.multiplication(W)
    right = D - half_nu + DiffOp.multiplication(W)
    U = potential_from_prepotential(W)
    target = DiffOp(
        {2: Series.one(N), 1: Series.one(N) * (-NU), 0: U + NU * NU / 4}, N
    )
    product = left * right
    if product == target:
        return Check(True)
    return Check(False, f"composed operator {product!r} != {target!r}")
