from fractions import Fraction

import pytest

from oracles import free_rho, scalar_rho
from specres.frobenius import (
    DiffOp,
    NU,
    OperatorSpec,
    conjugate_operator,
    gauge_factor,
    monic_solution_exists,
    normalize_to_schrodinger,
    phi_composition_sum,
    explicit_gauge_potential,
    residue_table,
    solve_monic,
)
from specres.ratfunc import RatFunc
from specres.report import compare
from specres.series import Series, part_equal


def test_phi1_and_residue():
    phi = solve_monic(OperatorSpec.schrodinger(Series.free(2)))
    assert phi.coefficient(1, (1,)) == RatFunc.simple_pole(1)
    assert residue_table(OperatorSpec.schrodinger(Series.free(2))).grade(2) == {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)}


@pytest.mark.parametrize("N", [3, 5])
def test_monic_solution_is_annihilated(N):
    op = OperatorSpec(Series.free(N) * 2, Series.free(N))
    phi = solve_monic(op)
    assert phi.constant == 1
    assert op.diffop()(phi).is_zero()


@pytest.mark.parametrize("n", range(1, 7))
def test_residue_table_matches_brute_force(n):
    table = residue_table(OperatorSpec.schrodinger(Series.free(n)))
    assert part_equal(table.grade(n), free_rho(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_composition_sum_with_first_order_term(n):
    P = Series.scalar(n, [Fraction(k, 3) for k in range(1, n + 1)])
    op = OperatorSpec(P, Series.free(n))
    assert part_equal(solve_monic(op).grade(n), phi_composition_sum(op, n))


def test_monic_existence_two_ways():
    U = Series.scalar(3, [1, -1, 0])  # rho_2 = -1/2 + 1/2 = 0
    op = OperatorSpec.schrodinger(U)
    assert monic_solution_exists(op, 2) and monic_solution_exists(op, 2, method="direct")
    op = OperatorSpec.schrodinger(Series.scalar(3, [1, 0, 0]))
    assert not monic_solution_exists(op, 2) and not monic_solution_exists(op, 2, method="direct")
    assert monic_solution_exists(op, 1) is False


def test_scalar_residue_against_brute_force():
    U = [None, Fraction(1, 2), Fraction(-3), Fraction(2, 7), Fraction(5), Fraction(-1, 4)]
    table = residue_table(OperatorSpec.schrodinger(Series.scalar(5, U[1:])))
    for n in range(1, 6):
        assert table.coefficient(n) == scalar_rho(U, n)


def test_conjugation_preserves_residues_free():
    N = 4
    mu = Series.scalar(N, [1, Fraction(-2, 3), 0, 5], constant=1)
    op = OperatorSpec(Series.zero(N), Series.free(N))
    assert compare(residue_table(conjugate_operator(op, mu)), residue_table(op))


def test_gauge_factor_removes_first_order_term():
    N = 4
    P = Series.free(N)
    mu = gauge_factor(P)
    assert mu.D() * 2 == mu * P
    hat = conjugate_operator(OperatorSpec(P, Series.zero(N)), mu)
    assert hat.P.is_zero()


def test_normalization_routes_agree_for_commuting_coefficients():
    N = 5
    P = Series.scalar(N, [Fraction(1, 2), -1, 3, 0, Fraction(2, 5)])
    Q = Series.scalar(N, [2, 0, Fraction(-1, 3), 1, 1]) + Series.scalar(N, [1, 1, 0, 0, 0]) * NU
    op = OperatorSpec(P, Q)
    mu_g, U_g = normalize_to_schrodinger(op)
    mu_s, U_s = normalize_to_schrodinger(op, route="sigma")
    assert mu_g == mu_s
    assert U_g == U_s
    assert explicit_gauge_potential(op, mu_g) == U_g
    assert compare(residue_table(OperatorSpec.schrodinger(U_g)), residue_table(op))


def test_explicit_gauge_formula_holds_noncommutatively():
    N = 4
    op = OperatorSpec(Series.free(N), Series.free(N) * 3)
    mu, U = normalize_to_schrodinger(op)
    assert explicit_gauge_potential(op, mu) == U


def test_sigma_route_rejects_words():
    with pytest.raises(ValueError):
        normalize_to_schrodinger(OperatorSpec(Series.free(2), Series.free(2)), route="sigma")


def test_diffop_composition_matches_application():
    N = 4
    A = DiffOp({1: Series.free(N), 0: Series.scalar(N, [1, 2, 0, 0])}, N)
    B = DiffOp({2: Series.one(N), 0: Series.free(N)}, N)
    f = Series.scalar(N, [1, -1, 2, 3], constant=1)
    assert (A * B)(f) == A(B(f))


def test_operator_validation():
    with pytest.raises(ValueError):
        OperatorSpec(Series.one(2), Series.zero(2))
    with pytest.raises(ValueError):
        OperatorSpec(Series.zero(2), Series.zero(3))
