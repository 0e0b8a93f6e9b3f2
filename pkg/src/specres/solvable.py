"""Residue polynomials of the Eckart, Poschl-Teller and Morse families.

Each family has three independent descriptions of its residues: the
composition sum specialized to the family's coefficients, a closed product
in the two potential parameters, and (Eckart, Morse) the residue of a
hypergeometric coefficient pulled back through the parameter bridge.
Polynomials are returned in the variables ``u`` and ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from .compositions import compositions, neven, nodd, weight_s
from .frobenius import NU, OperatorSpec, solve_monic
from .polynomial import MPoly, rising
from .ratfunc import RatFunc
from .report import Check
from .series import Series

FAMILIES = ("eckart", "poschl-teller", "morse")

u, v = MPoly.var("u"), MPoly.var("v")
u0, u1 = MPoly.var("u0"), MPoly.var("u1")
x = MPoly.var("x")
alpha, beta, omega = MPoly.var("alpha"), MPoly.var("beta"), MPoly.var("omega")
lam_, mu_ = MPoly.var("lam"), MPoly.var("mu")

# Poschl-Teller residues are naturally written in u0 = v - u, u1 = v + u.
PT_TO_UV = {"u0": v - u, "u1": v + u}


@dataclass(frozen=True)
class PotentialFamily:
    """A named potential with coefficient generator ``k -> U_k``.

    The three built-in families are looked up by name; a custom family
    supplies its own generator and is handled through the generic
    composition sum.
    """

    name: str
    coefficient: Callable[[int], MPoly] | None = None

    def __post_init__(self):
        if self.name not in FAMILIES and self.coefficient is None:
            raise ValueError(f"unknown family {self.name!r}; custom families need a coefficient generator")

    def U(self, k):
        if self.coefficient is not None:
            return MPoly.coerce(self.coefficient(k))
        return potential_coefficient(self.name, k)

    def potential(self, order):
        return Series.scalar(order, {k: self.U(k) for k in range(1, order + 1)})


def _check_family(family):
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def potential_coefficient(family, k):
    """``U_k`` of the family as a polynomial in ``u, v``."""
    _check_family(family)
    if family == "eckart":
        return u + v * k
    if family == "poschl-teller":
        return (PT_TO_UV["u1"] if k % 2 else PT_TO_UV["u0"]) * k
    return {1: u, 2: v}.get(k, MPoly.const(0))


def family_potential(family, order):
    """The family's potential as a commuting series with polynomial coefficients."""
    return Series.scalar(order, {k: potential_coefficient(family, k) for k in range(1, order + 1)})


def _nn(p, n):
    a, b = weight_s(p)
    return Fraction(factorial(n) ** 2, a * b)


def residue_polynomial(family, n):
    """``rho_n`` of the family from its own composition sum."""
    if isinstance(family, PotentialFamily):
        if family.coefficient is not None:
            from .transforms import residues_from_potential

            return MPoly.coerce(residues_from_potential(family.potential(n)).coefficient(n))
        family = family.name
    _check_family(family)
    if n < 1:
        raise ValueError("n must be positive")
    if family == "eckart":
        pooled = {}
        for p in compositions(n):
            key = tuple(sorted(p))
            a, b = weight_s(p)
            pooled[key] = pooled.get(key, 0) + Fraction(n, a * b)
        out = MPoly.const(0)
        for key, w in pooled.items():
            term = MPoly.const(w)
            for part in key:
                term = term * (u + v * part)
            out = out + term
        return out
    if family == "poschl-teller":
        coeffs = {}
        for p in compositions(n):
            a, b = weight_s(p)
            key = (nodd(p), neven(p))
            weight = Fraction(n, a * b)
            for part in p:
                weight *= part
            coeffs[key] = coeffs.get(key, 0) + weight
        poly = MPoly({(e, o): c for (o, e), c in coeffs.items()}, ("u0", "u1"))
        return poly.subs(PT_TO_UV)
    coeffs = {}
    for p in compositions(n, parts=(1, 2)):
        a, b = weight_s(p)
        key = (nodd(p), neven(p))
        coeffs[key] = coeffs.get(key, 0) + Fraction(n, a * b)
    return MPoly(coeffs, ("u", "v"))


def _eckart_pair(n, i):
    a = lambda j: j * (n - j)  # noqa: E731
    b = n - 1 - 2 * i
    return (u + v + a(i)) * (u + v + a(i + 1)) + v * b * b


def closed_form_product(family, n):
    """The family's factorized residue expanded as a polynomial in ``u, v``."""
    _check_family(family)
    if n < 1:
        raise ValueError("n must be positive")
    K = Fraction(1, factorial(n) * factorial(n - 1))
    m = n // 2
    out = MPoly.const(K)
    if family == "eckart":
        for i in range(m):
            out = out * _eckart_pair(n, i)
        if n % 2:
            out = out * (u + v + m * (n - m))
        return out
    if family == "poschl-teller":
        for k in range(1, n):
            if k % 2 != n % 2:
                out = out * (u1 * u1 + u0 * (2 * k * k) + (k ** 4 - k ** 2))
        if n % 2:
            out = out * u1
        return out.subs(PT_TO_UV)
    for k in range(1, n):
        if k % 2 != n % 2:
            out = out * (u * u + v * (k * k))
    if n % 2:
        out = out * u
    return out


def _first_monomial_difference(a, b):
    diff = a - b
    if diff.is_zero():
        return None
    exps, c = diff.sorted_terms()[0]
    mono = " ".join(f"{g}^{e}" for g, e in zip(diff.gens, exps) if e) or "1"
    return f"coefficient of {mono}: sum - product = {c}"


def verify_factorization(family, n):
    diff = _first_monomial_difference(residue_polynomial(family, n), closed_form_product(family, n))
    return Check(diff is None, diff or "")


# -- corollary composition sums --------------------------------------------

COROLLARIES = (
    "csum1", "csum2", "corrid", "corrid-noeven",
    "corrid-even", "corrid-even-noeven", "morse-odd", "morse-even",
)

_PARITY = {
    "corrid": 1, "corrid-noeven": 1, "morse-odd": 1,
    "corrid-even": 0, "corrid-even-noeven": 0, "morse-even": 0,
}


def _validate(cid, n, k):
    if cid not in COROLLARIES:
        raise ValueError(f"unknown identity {cid!r}; expected one of {COROLLARIES}")
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if cid in _PARITY and n % 2 != _PARITY[cid]:
        raise ValueError(f"{cid} needs n {'odd' if _PARITY[cid] else 'even'}, got {n}")
    if not isinstance(k, int) or not 0 <= k <= n:
        raise ValueError(f"k must be an integer in [0, {n}], got {k!r}")


def composition_sum(cid, n, k):
    """Exact value of the composition sum named ``cid`` at ``(n, k)``."""
    _validate(cid, n, k)
    total = Fraction(0)
    if cid in ("csum1", "csum2"):
        for p in compositions(n, length=k) if k else ():
            w = _nn(p, n)
            for part in p:
                w *= part if cid == "csum1" else part - 1
            total += w
        return total
    odd_count = 2 * k + _PARITY[cid]
    if cid.startswith("morse"):
        for p in compositions(n, parts=(1, 2), odd_parts=odd_count):
            total += _nn(p, n)
        return total
    filters = {"odd_parts": odd_count}
    if cid.endswith("noeven"):
        filters["even_parts"] = 0
    for p in compositions(n, **filters):
        w = _nn(p, n)
        for part in p:
            w *= part
        total += w / 2 ** neven(p)
    return total


def _expand(factors):
    """Coefficient list of ``prod (a x + b)`` for ``factors = [(a, b), ...]``."""
    poly = [Fraction(1)]
    for a, b in factors:
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += c * b
            nxt[i + 1] += c * a
        poly = nxt
    return poly


def corollary_product(cid, n):
    """Coefficient list (in ``x``) of the product side of identity ``cid``."""
    _validate(cid, n, 0)
    m = n // 2
    if cid == "csum1":
        return _expand([(1, j * (j + 1)) for j in range(n)])
    if cid == "csum2":
        factors = [((n - 1 - 2 * i) ** 2, i * (i + 1) * (n - 1 - i) * (n - i)) for i in range(m)]
        if n % 2:
            factors.append((0, m * (m + 1)))
        return _expand(factors)
    if cid in ("corrid", "corrid-noeven", "morse-odd"):
        ks = [2 * i for i in range(1, m + 1)]
    else:
        ks = [2 * i - 1 for i in range(1, m + 1)]
    if cid.startswith("morse"):
        return _expand([(1, k * k) for k in ks])
    if cid.endswith("noeven"):
        return _expand([(1, k ** 4 - k ** 2) for k in ks])
    return _expand([(1, k ** 4) for k in ks])


def product_coefficient(cid, n, k):
    """Coefficient of ``x^k`` in the product side of identity ``cid``."""
    _validate(cid, n, k)
    poly = corollary_product(cid, n)
    return poly[k] if k < len(poly) else Fraction(0)


def verify_corollary(cid, n):
    for k in range(n + 1):
        lhs, rhs = composition_sum(cid, n, k), product_coefficient(cid, n, k)
        if lhs != rhs:
            return Check(False, f"{cid} n={n} k={k}: sum {lhs} != product coefficient {rhs}")
    return Check(True)


# -- hypergeometric route ---------------------------------------------------

def eckart_hypergeometric_operator(order):
    """``z/(1-z)`` times the Gauss operator, written as ``D^2 - nu D + P D + Q``."""
    P = Series.scalar(order, [-(alpha + beta + NU)] * order)
    Q = Series.scalar(order, [-(alpha * beta)] * order)
    return OperatorSpec(P, Q)


def eckart_bridge():
    """``(u, v)`` as polynomials in ``alpha, beta, nu``."""
    return {
        "u": (alpha - beta - NU) * (alpha - beta + NU) / 4,
        "v": (alpha + beta + NU) * (2 - alpha - beta - NU) / 4,
    }


def morse_confluent_operator(order):
    """``z`` times the rescaled confluent operator: ``P = 2 omega z``, ``Q = 2 omega alpha z``."""
    P = Series.scalar(order, {1: omega * 2})
    Q = Series.scalar(order, {1: omega * alpha * 2})
    return OperatorSpec(P, Q)


def morse_bridge():
    return {"u": omega * (NU + alpha * 2 - 1), "v": -(omega * omega)}


def _pull_back(poly, bridge, n):
    at_n = {name: expr.subs({"nu": n}) for name, expr in bridge.items()}
    return poly.subs(at_n)


def _inv_rising_one_minus_nu(n):
    """``1 / [1 - nu]^n`` as a RatFunc."""
    return RatFunc(MPoly.const((-1) ** n), {j: 1 for j in range(1, n + 1)})


def hypergeometric_residue_oracle(family, n, check_series=True):
    """``rho_n`` in ``(u, v)`` obtained through the hypergeometric coefficients.

    The residue of the hypergeometric coefficient at ``nu = n`` is taken in
    the hypergeometric parameters.  Each bridge factor identity is then
    confirmed as an exact polynomial identity, and the product of the
    ``(u, v)`` sides is returned.  The family's composition-sum residue,
    pulled back through the bridge, must also reproduce the hypergeometric
    residue.  Any failure raises ``ArithmeticError``.
    """
    if family not in ("eckart", "morse"):
        raise ValueError("the hypergeometric route covers 'eckart' and 'morse'")
    if n < 1:
        raise ValueError("n must be positive")
    m = n // 2
    K = Fraction(1, factorial(n) * factorial(n - 1))
    if family == "eckart":
        bridge = eckart_bridge()
        coeff = _inv_rising_one_minus_nu(n) * (rising(alpha, n) * rising(beta, n) / factorial(n))
        op = eckart_hypergeometric_operator
        expected = rising(alpha, n) * rising(beta, n) * ((-1) ** n * K)
    else:
        bridge = morse_bridge()
        coeff = _inv_rising_one_minus_nu(n) * (rising(alpha, n) * omega ** n * Fraction((-2) ** n, factorial(n)))
        op = morse_confluent_operator
        expected = rising(alpha, n) * omega ** n * (2 ** n * K)

    if check_series:
        phi = solve_monic(op(n))
        if phi.coefficient(n) != coeff:
            raise ArithmeticError(f"{family}: hypergeometric coefficient {n} does not solve the operator")
    residue = coeff.residue_at(n)
    if residue != expected:
        raise ArithmeticError(f"{family}: residue {residue} != rising-factorial form {expected}")

    def bridged(poly):
        return _pull_back(poly, bridge, n)

    assembled = MPoly.const(K)
    if family == "eckart":
        sign = (-1) ** n
        for i in range(m):
            lhs = (alpha + i) * (beta + i) * (alpha + n - 1 - i) * (beta + n - 1 - i)
            rhs = _eckart_pair(n, i)
            if lhs != bridged(rhs):
                raise ArithmeticError(f"eckart bridge factor i={i} fails at n={n}")
            assembled = assembled * rhs
        if n % 2:
            middle = u + v + m * (n - m)
            if -((alpha + m) * (beta + m)) != bridged(middle):
                raise ArithmeticError(f"eckart middle bridge factor fails at n={n}")
            sign = -sign
            assembled = assembled * middle
        assembled = assembled * sign
    else:
        scale = Fraction(1)
        if n % 2 == 0:
            for i in range(m):
                k = 2 * i + 1
                rhs = u * u + v * (k * k)
                if omega * omega * (alpha + m + i) * (alpha + m - i - 1) * 4 != bridged(rhs):
                    raise ArithmeticError(f"morse bridge factor k={k} fails at n={n}")
                assembled = assembled * rhs
        else:
            for i in range(1, m + 1):
                k = 2 * i
                rhs = u * u + v * (k * k)
                if omega * omega * (alpha + m + i) * (alpha + m - i) * 4 != bridged(rhs):
                    raise ArithmeticError(f"morse bridge factor k={k} fails at n={n}")
                assembled = assembled * rhs
            if omega * (alpha + m) * 2 != bridged(u):
                raise ArithmeticError(f"morse linear bridge factor fails at n={n}")
            assembled = assembled * u
        assembled = assembled * scale

    if bridged(residue_polynomial(family, n)) != residue:
        raise ArithmeticError(f"{family}: composition-sum residue disagrees after the bridge at n={n}")
    if bridged(assembled) != residue:
        raise ArithmeticError(f"{family}: assembled product disagrees after the bridge at n={n}")
    return assembled


# -- Poschl-Teller series solution -----------------------------------------

def pt_hypergeometric_operator(order, lam=None, mu=None):
    """``D^2 - nu D + 2 w D + (lam + mu - nu) w`` with ``w = lam z/(z+1) + mu z/(z-1)``.

    ``lam``/``mu`` default to the symbols ``lam``/``mu``.
    """
    lam = lam_ if lam is None else lam
    mu = mu_ if mu is None else mu
    w = {k: lam * (-1) ** (k - 1) - mu for k in range(1, order + 1)}
    P = Series.scalar(order, {k: c * 2 for k, c in w.items()})
    Q = Series.scalar(order, {k: c * (lam + mu - NU) for k, c in w.items()})
    return OperatorSpec(P, Q)


def pt_candidate_solution(lam, mu, order):
    """``(1+z)^(nu-lam-mu) F(a, b, 1-nu; 4z/(1+z)^2)`` as a truncated series."""
    lam, mu = Fraction(lam), Fraction(mu)
    e = NU - (lam + mu)
    binom = {0: MPoly.const(1)}
    for k in range(1, order + 1):
        binom[k] = binom[k - 1] * (e - (k - 1)) / k
    front = Series.scalar(order, {k: c for k, c in binom.items() if k}, constant=1)

    inv_square = Series.scalar(order, {k: (-1) ** k * (k + 1) for k in range(1, order + 1)}, constant=1)
    t = Series.scalar(order, {1: 4}) * inv_square
    a = (NU * -1 + mu + lam) / 2
    b = (NU * -1 + mu - lam + 1) / 2
    F = Series.one(order)
    tj = Series.one(order)
    for j in range(1, order + 1):
        tj = tj * t
        coeff = _inv_rising_one_minus_nu(j) * (rising(a, j) * rising(b, j) / factorial(j))
        F = F + tj * coeff
    return front * F


def pt_solution_check(lam, mu, order):
    """Check that the closed hypergeometric form solves the PT operator up to ``order``.

    ``lam`` and ``mu`` are rationals, ``nu`` stays symbolic.  The candidate
    must be annihilated and must coincide with the recursive monic solution.
    """
    op = pt_hypergeometric_operator(order, Fraction(lam), Fraction(mu))
    phi = pt_candidate_solution(lam, mu, order)
    if phi.constant != 1:
        return Check(False, f"constant term is {phi.constant}, not 1")
    residual = op.diffop()(phi)
    if not residual.is_zero():
        n = min(g for (g, _), _c in residual.items())
        return Check(False, f"operator leaves a nonzero grade-{n} term {residual.coefficient(n)}")
    if phi != solve_monic(op):
        return Check(False, "candidate differs from the recursive monic solution")
    return Check(True)


# -- tableaux generating functions ------------------------------------------

def tableaux_generating_identity(n):
    """Compare ``prod_{m=2}^n (1 + m(m-1) x / 2)`` with its composition form.

    The composition form weights each composition by
    ``prod p_i / 2^(p_i - 1)`` times ``(n!/s_p)(n!/s_p')`` and ``x^(n - l)``.
    """
    product = _expand([(Fraction(mm * (mm - 1), 2), 1) for mm in range(2, n + 1)])
    comp = [Fraction(0)] * (n + 1)
    for p in compositions(n):
        w = _nn(p, n)
        for part in p:
            w *= Fraction(part, 2 ** (part - 1))
        comp[n - len(p)] += w
    return _compare_lists(product, comp, "third-row")


def middle_row_identity(n):
    """``prod_{m=1}^{n-1} (1 + m(n-m) x) = sum_p (n!/s_p)(n!/s_p') x^(n - l)``."""
    product = _expand([(mm * (n - mm), 1) for mm in range(1, n)])
    comp = [Fraction(0)] * (n + 1)
    for p in compositions(n):
        comp[n - len(p)] += _nn(p, n)
    return _compare_lists(product, comp, "middle-row")


def _compare_lists(a, b, label):
    size = max(len(a), len(b))
    a = a + [Fraction(0)] * (size - len(a))
    b = b + [Fraction(0)] * (size - len(b))
    for k, (p, q) in enumerate(zip(a, b)):
        if p != q:
            return Check(False, f"{label}: coefficient of x^{k}: product {p} != composition sum {q}")
    return Check(True)


def normalized_operator_check(family, order):
    """Normalize the family's hypergeometric operator and compare with its potential.

    Eckart and Morse use the bridge for ``(u, v)``; Poschl-Teller uses
    ``u = lam^2 - lam`` and ``v = mu - mu^2``.
    """
    from .frobenius import normalize_to_schrodinger

    _check_family(family)
    if family == "eckart":
        op, bridge = eckart_hypergeometric_operator(order), eckart_bridge()
    elif family == "morse":
        op, bridge = morse_confluent_operator(order), morse_bridge()
    else:
        op = pt_hypergeometric_operator(order)
        bridge = {"u": lam_ * lam_ - lam_, "v": mu_ - mu_ * mu_}
    _, U = normalize_to_schrodinger(op)
    expected = family_potential(family, order).map_coeffs(lambda c: c.subs(bridge))
    from .report import compare

    return compare(U, expected)
