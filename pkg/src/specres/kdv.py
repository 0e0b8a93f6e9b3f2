"""The formal KdV flow on free potentials and the evolution of residues.

Time derivatives are a derivation of the free algebra: each generator
``U_k`` is sent to the grade-``k`` part of the flow's right-hand side and
products follow the Leibniz rule.  Nothing is integrated numerically.
"""

from __future__ import annotations

from fractions import Fraction

from .report import Check
from .series import Series, format_part, part_add, part_mul, part_scale
from .transforms import residues_from_potential


def kdv_rhs(U, sign=1):
    """``D^3 U + sign * 3 (D(U) U + U D(U))``, truncated at ``U.order``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if U.grade(0):
        raise ValueError("potential must have zero constant term")
    dU = U.D()
    return dU.D().D() + (dU * U + U * dU) * (3 * sign)


class FlowDerivation:
    """Derivation of the word algebra fixed by the images of the generators."""

    def __init__(self, images, commutative=False):
        self.images = images
        self.commutative = commutative

    @classmethod
    def kdv(cls, order, sign=1, commutative=False):
        U = Series.free(order)
        if commutative:
            U = U.abelianize()
        rhs = kdv_rhs(U, sign)
        return cls({k: rhs.grade(k) for k in range(1, order + 1)}, commutative)

    def apply(self, part):
        out = {}
        for word, c in part.items():
            for i, g in enumerate(word):
                image = self.images.get(g, {})
                if not image:
                    continue
                left = {word[:i]: Fraction(1)}
                right = {word[i + 1:]: Fraction(1)}
                term = part_mul(part_mul(left, image, self.commutative), right, self.commutative)
                out = part_add(out, term, c)
        return out


def _rho(n, commutative):
    U = Series.free(n)
    if commutative:
        U = U.abelianize()
    return residues_from_potential(U, n).grade(n)


def residue_time_derivative(n, sign=1, commutative=False):
    """Image of ``rho_n`` (as a word polynomial in the free potential) under the flow."""
    return FlowDerivation.kdv(n, sign, commutative).apply(_rho(n, commutative))


def _evolution_check(n, sign, commutative):
    lhs = residue_time_derivative(n, sign, commutative)
    rhs = part_scale(_rho(n, commutative), n ** 3)
    diff = part_add(lhs, rhs, -1)
    if not diff:
        return Check(True)
    w = min(diff, key=lambda w: (len(w), w))
    return Check(False, f"n={n}, word {list(w)}: d/dt rho_n - n^3 rho_n has coefficient {diff[w]}")


def verify_evolution(N, sign=1, commutative=False):
    """``d/dt rho_n = n^3 rho_n`` for all ``n <= N``; reports the first failing word."""
    for n in range(1, N + 1):
        check = _evolution_check(n, sign, commutative)
        if not check:
            return check
    return Check(True)


def determine_kdv_sign():
    """Find the sign for which the evolution law holds at ``n = 2``.

    Returns ``(sign, witness)`` where ``witness`` maps each sign to the
    computed ``d/dt rho_2`` and the target ``8 rho_2`` as strings.
    Raises ``ArithmeticError`` unless exactly one sign works.
    """
    target = part_scale(_rho(2, False), 8)
    witness = {}
    good = []
    for sign in (1, -1):
        lhs = residue_time_derivative(2, sign)
        witness[sign] = {"d/dt rho_2": format_part(lhs), "8 rho_2": format_part(target)}
        if not part_add(lhs, target, -1):
            good.append(sign)
    if len(good) != 1:
        raise ArithmeticError(f"expected exactly one valid sign at n=2, found {good}")
    return good[0], witness
