"""Forward and inverse maps between potentials and spectral residues.

Three routes compute the same objects and are kept side by side:

* closed composition sums (:func:`residues_from_potential`,
  :func:`potential_from_residues`);
* residues of the Frobenius solution (:func:`specres.frobenius.residue_table`);
* the ladder ``rho_{n,k}`` of residues of ``phi_n`` at ``nu = k``
  (:func:`rho_nk`, :func:`residue_ladder`, :func:`potential_via_residue_ladder`).

Residue sequences are stored as :class:`~specres.series.Series` with zero
constant term, grade ``n`` holding ``rho_n``.
"""

from __future__ import annotations

from fractions import Fraction

from .compositions import adjacent_sum_product, compositions, weight_s
from .frobenius import OperatorSpec, residue_table, solve_monic
from .ratfunc import RatFunc, ratfunc_residue_at
from .scalars import simplify
from .series import Series, part_add, part_mul, part_scale


def _is_commutative(series):
    return series.commutative or all(not w for (_, w), _c in series.items())


def word_sum(factors, n, weight, commutative=False, **filters):
    """``sum_p weight(p) F_{p_1} ... F_{p_l}`` over compositions ``p`` of ``n``.

    ``factors`` maps a part size to a homogeneous part ``{word: scalar}``.
    Products of shared prefixes are cached.  When the factors commute the
    weights are first pooled per partition, so each distinct product is
    formed once.
    """
    cache = {(): {(): Fraction(1)}}

    def product(key):
        if key not in cache:
            head = product(key[:-1])
            cache[key] = part_mul(head, factors.get(key[-1], {}), commutative) if head else {}
        return cache[key]

    pooled = {}
    for p in compositions(n, **filters):
        if any(not factors.get(x) for x in p):
            continue
        key = tuple(sorted(p)) if commutative else p
        pooled[key] = pooled.get(key, 0) + weight(p)
    total = {}
    for key, w in pooled.items():
        if w:
            total = part_add(total, product(key), w)
    return total


def _require_zero_constant(s, what):
    if s.grade(0):
        raise ValueError(f"{what} must have zero constant term")


def residues_from_potential(U, N=None):
    """``rho_n = sum_p n / (s_p s_p') U_{p_1} ... U_{p_l}``."""
    _require_zero_constant(U, "potential")
    N = U.order if N is None else N
    comm = _is_commutative(U)
    parts = U.grades()
    grades = {}
    for n in range(1, N + 1):
        grades[n] = word_sum(parts, n, lambda p, n=n: Fraction(n, _ss(p)), comm)
    return Series.from_grades(N, grades, commutative=U.commutative)


def _ss(p):
    a, b = weight_s(p)
    return a * b


def potential_from_residues(rho, N=None):
    """``U_n = sum_p (-1)^(l-1) n / ((p_1+p_2)...(p_{l-1}+p_l)) rho_{p_1} ... rho_{p_l}``."""
    _require_zero_constant(rho, "residue sequence")
    N = rho.order if N is None else N
    comm = _is_commutative(rho)
    parts = rho.grades()
    grades = {}
    for n in range(1, N + 1):
        grades[n] = word_sum(
            parts, n,
            lambda p, n=n: Fraction((-1) ** (len(p) - 1) * n, adjacent_sum_product(p)),
            comm,
        )
    return Series.from_grades(N, grades, commutative=rho.commutative)


def rho_nk(U, n, k, method="factored", phi=None):
    """Residue of ``phi_n`` at ``nu = k`` for the potential ``U``.

    ``method="factored"`` uses ``phi_{n-k}(nu = -k) * rho_k``;
    ``method="direct"`` takes the residue of ``phi_n`` itself.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if n > U.order:
        raise ValueError(f"n={n} exceeds the truncation order {U.order}")
    if phi is None:
        phi = solve_monic(OperatorSpec.schrodinger(U))
    if method == "direct":
        return {w: ratfunc_residue_at(c, k) for w, c in phi.grade(n).items() if ratfunc_residue_at(c, k)}
    if method != "factored":
        raise ValueError(f"unknown method {method!r}")
    rho_k = {w: ratfunc_residue_at(c, k) for w, c in phi.grade(k).items()}
    left = {w: simplify(c.evaluate(-k)) if isinstance(c, RatFunc) else c
            for w, c in phi.grade(n - k).items()}
    return part_mul(left, rho_k, phi.commutative)


def residue_ladder(rho, N=None):
    """All ``rho_{n,k}`` for ``k <= n <= N`` from the residues alone.

    ``rho_{n,n} = rho_n`` and
    ``rho_{n,k} = -(sum_j rho_{n-k,j} / (k + j)) rho_k`` for ``k < n``,
    which is ``phi_{n-k}`` evaluated at ``nu = -k`` times ``rho_k``.
    """
    N = rho.order if N is None else N
    comm = _is_commutative(rho)
    parts = rho.grades()
    ladder = {}
    for n in range(1, N + 1):
        ladder[n, n] = parts[n]
        for k in range(1, n):
            m = n - k
            acc = {}
            for j in range(1, m + 1):
                acc = part_add(acc, ladder[m, j], Fraction(-1, k + j))
            ladder[n, k] = part_mul(acc, parts[k], comm)
    return ladder


def potential_via_residue_ladder(rho, N=None):
    """``U_n = n (rho_{n,n} + rho_{n,n-1} + ... + rho_{n,1})``."""
    N = rho.order if N is None else N
    ladder = residue_ladder(rho, N)
    grades = {}
    for n in range(1, N + 1):
        acc = {}
        for k in range(1, n + 1):
            acc = part_add(acc, ladder[n, k])
        grades[n] = part_scale(acc, n)
    return Series.from_grades(N, grades, commutative=rho.commutative)


def phi_from_ladder(ladder, n):
    """Partial-fraction form ``sum_k rho_{n,k} / (nu - k)`` of ``phi_n``."""
    out = {}
    for k in range(1, n + 1):
        pole = RatFunc.simple_pole(k)
        out = part_add(out, {w: c * pole for w, c in ladder[n, k].items()})
    return out


def frobenius_residues(U, N=None):
    """Residues of the Schrodinger operator with potential ``U`` via its monic solution."""
    return residue_table(OperatorSpec.schrodinger(U), N)
