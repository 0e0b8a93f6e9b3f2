"""Verification suites behind ``specres verify``.

Each suite takes a maximum order and returns a :class:`VerifyReport` whose
cases are listed in a fixed order, so reports are byte-stable.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import solvable
from .compositions import cube_identity_constant, compositions, cube_identity_sides
from .darboux import (
    darboux_transform,
    delta_series_oracle,
    factorization_check,
    prepotential_from_potential,
    prepotential_from_residues,
    residues_from_prepotential,
    verify_residue_negation,
)
from .frobenius import (
    OperatorSpec,
    conjugate_operator,
    normalize_to_schrodinger,
    phi_composition_sum,
    residue_table,
    solve_monic,
)
from .kdv import determine_kdv_sign, verify_evolution
from .report import Check, VerifyReport, compare
from .series import Series, part_equal
from .transforms import potential_from_residues, residues_from_potential

# Suites that work in the free algebra are exponential in the order.
FREE_SUITES = {"rhoinv", "frobenius", "darboux", "winv", "kdv"}

DEFAULT_ORDERS = {
    "rhoinv": 8,
    "frobenius": 7,
    "gauge": 8,
    "fac-eckart": 10,
    "fac-pt": 10,
    "fac-morse": 12,
    "csums": 12,
    "tableaux": 10,
    "darboux": 8,
    "winv": 8,
    "kdv": 6,
    "cube": 10,
    "pt-series": 5,
}

PT_SERIES_PARAMS = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(2)), (Fraction(1, 2), Fraction(-1, 3)))


def _uv_potential(order):
    return solvable.family_potential("eckart", order)


def suite_rhoinv(N):
    report = VerifyReport("rhoinv")
    for n in range(1, N + 1):
        U = Series.free(n)
        report.add("free", n, compare(potential_from_residues(residues_from_potential(U)), U))
    for n in range(1, N + 1):
        U = _uv_potential(n)
        report.add("eckart-uv", n, compare(potential_from_residues(residues_from_potential(U)), U))
    return report


def suite_frobenius(N):
    report = VerifyReport("frobenius")
    U = Series.free(N)
    op = OperatorSpec.schrodinger(U)
    phi = solve_monic(op)
    table = residue_table(op)
    sums = residues_from_potential(U)
    for n in range(1, N + 1):
        ok = part_equal(table.grade(n), sums.grade(n))
        report.add("residue-table", n, Check(ok, "" if ok else "Frobenius residue differs from composition sum"))
        ok = part_equal(phi.grade(n), phi_composition_sum(op, n))
        report.add("phi-composition-sum", n, Check(ok, "" if ok else "recursive and summed phi_n differ"))
    return report


def _random_fraction(rng):
    return Fraction(rng.randint(-5, 5), rng.randint(1, 4))


def suite_gauge(N, cases=20, seed=0):
    """Residue tables are unchanged under conjugation by random monic gauges."""
    report = VerifyReport("gauge", notes={"seed": seed, "cases": cases})
    rng = random.Random(seed)
    for i in range(cases):
        P = Series.scalar(N, [_random_fraction(rng) for _ in range(N)])
        Q = Series.scalar(N, [_random_fraction(rng) for _ in range(N)])
        mu = Series.scalar(N, [_random_fraction(rng) for _ in range(N)], constant=1)
        op = OperatorSpec(P, Q)
        base = residue_table(op)
        report.add(f"random-gauge-{i}", N, compare(residue_table(conjugate_operator(op, mu)), base))
        if i < 3:
            _, U = normalize_to_schrodinger(op)
            report.add(f"schrodinger-form-{i}", N, compare(residue_table(OperatorSpec.schrodinger(U)), base))
    return report


_FAC_NAMES = {"eckart": "fac-eckart", "poschl-teller": "fac-pt", "morse": "fac-morse"}


def _suite_factorization(family, N):
    report = VerifyReport(_FAC_NAMES[family])
    for n in range(1, N + 1):
        report.add("product", n, solvable.verify_factorization(family, n))
    for n in range(1, min(N, 8) + 1):
        U = solvable.family_potential(family, n)
        rho = residues_from_potential(U).coefficient(n)
        ok = rho == solvable.residue_polynomial(family, n)
        report.add("generic-sum", n, Check(ok, "" if ok else "family sum differs from the generic composition sum"))
    if family in ("eckart", "morse"):
        for n in range(1, N + 1):
            try:
                got = solvable.hypergeometric_residue_oracle(family, n, check_series=n <= 6)
                ok = got == solvable.residue_polynomial(family, n)
                check = Check(ok, "" if ok else "hypergeometric residue differs from the composition sum")
            except ArithmeticError as exc:
                check = Check(False, str(exc))
            report.add("hypergeometric", n, check)
    report.add("normalized-operator", min(N, 5), solvable.normalized_operator_check(family, min(N, 5)))
    return report


def suite_fac_eckart(N):
    return _suite_factorization("eckart", N)


def suite_fac_pt(N):
    return _suite_factorization("poschl-teller", N)


def suite_fac_morse(N):
    return _suite_factorization("morse", N)


def suite_csums(N):
    report = VerifyReport("csums")
    for cid in solvable.COROLLARIES:
        for n in range(1, N + 1):
            if cid in solvable._PARITY and n % 2 != solvable._PARITY[cid]:
                continue
            report.add(cid, n, solvable.verify_corollary(cid, n))
    return report


def suite_tableaux(N):
    report = VerifyReport("tableaux")
    for n in range(1, N + 1):
        report.add("third-row", n, solvable.tableaux_generating_identity(n))
        report.add("middle-row", n, solvable.middle_row_identity(n))
    return report


# Display of the first partner coefficients, written in commuting letters.
DARBOUX_DISPLAY = {
    1: {(1,): -1},
    2: {(1, 1): -2, (2,): -1},
    3: {(1, 1, 1): -2, (1, 2): -2, (3,): -1},
}


def suite_darboux(N):
    report = VerifyReport("darboux")
    for n in range(1, N + 1):
        report.add("residue-negation", n, verify_residue_negation(Series.free(n)))
    tilde = darboux_transform(Series.free(min(N, 3))).abelianize()
    for n in range(1, min(N, 3) + 1):
        ok = part_equal(tilde.grade(n), DARBOUX_DISPLAY[n])
        report.add("partner-display", n, Check(ok, "" if ok else f"partner grade {n} is {tilde.grade(n)}"))
    for n in range(1, min(N, 6) + 1):
        report.add("factorization", n, factorization_check(prepotential_from_potential(Series.free(n))))
        U = Series.free(n)
        back = darboux_transform(darboux_transform(U))
        report.add("involution", n, compare(back, U))
    return report


def suite_winv(N):
    report = VerifyReport("winv")
    for n in range(1, N + 1):
        rho = Series.free(n)
        W = prepotential_from_residues(rho)
        report.add("rho-W-rho", n, compare(residues_from_prepotential(W), rho))
        report.add("W-rho-W", n, compare(prepotential_from_residues(residues_from_prepotential(rho)), rho))
        U = Series.free(n)
        report.add(
            "prepotential-of-residues", n,
            compare(prepotential_from_residues(residues_from_potential(U)), prepotential_from_potential(U)),
        )
    for n in range(1, min(N, 5) + 1):
        W = Series.free(n)
        _, _, rho = delta_series_oracle(W)
        report.add("delta-oracle", n, compare(rho, residues_from_prepotential(W)))
    return report


def suite_kdv(N, abelian_extra=2):
    sign, witness = determine_kdv_sign()
    report = VerifyReport("kdv", notes={"sign": sign, "witness_n2": {str(k): v for k, v in witness.items()}})
    for n in range(1, N + 1):
        report.add("free", n, verify_evolution(n, sign))
    for n in range(1, N + abelian_extra + 1):
        report.add("abelian", n, verify_evolution(n, sign, commutative=True))
    return report


def suite_cube(N):
    try:
        c = cube_identity_constant(N)
    except ArithmeticError as exc:
        report = VerifyReport("cube")
        report.add("constant", N, Check(False, str(exc)))
        return report
    report = VerifyReport("cube", notes={"constant": f"{c.numerator}/{c.denominator}"})
    for n in range(2, N + 1):
        bad = None
        for p in compositions(n):
            if len(p) > 1:
                lhs, rhs = cube_identity_sides(p)
                if lhs != c * rhs:
                    bad = p
                    break
        report.add("all-compositions", n, Check(bad is None, "" if bad is None else f"fails at {list(bad)}"))
    return report


def suite_pt_series(N):
    report = VerifyReport("pt-series")
    for lam, mu in PT_SERIES_PARAMS:
        report.add(f"lam={lam},mu={mu}", N, solvable.pt_solution_check(lam, mu, N))
    return report


SUITES = {
    "rhoinv": suite_rhoinv,
    "frobenius": suite_frobenius,
    "gauge": suite_gauge,
    "fac-eckart": suite_fac_eckart,
    "fac-pt": suite_fac_pt,
    "fac-morse": suite_fac_morse,
    "csums": suite_csums,
    "tableaux": suite_tableaux,
    "darboux": suite_darboux,
    "winv": suite_winv,
    "kdv": suite_kdv,
    "cube": suite_cube,
    "pt-series": suite_pt_series,
}


def run_suite(name, N=None):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](DEFAULT_ORDERS[name] if N is None else N)
