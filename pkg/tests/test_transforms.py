from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import scalar_series
from oracles import free_inverse, free_rho
from specres.frobenius import OperatorSpec, solve_monic
from specres.report import compare
from specres.series import Series, part_equal
from specres.transforms import (
    frobenius_residues,
    phi_from_ladder,
    potential_from_residues,
    potential_via_residue_ladder,
    residue_ladder,
    residues_from_potential,
    rho_nk,
)


@pytest.mark.parametrize("n", range(1, 9))
def test_forward_map_matches_brute_force(n):
    assert part_equal(residues_from_potential(Series.free(n)).grade(n), free_rho(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_inverse_map_matches_brute_force(n):
    assert part_equal(potential_from_residues(Series.free(n)).grade(n), free_inverse(n))


@pytest.mark.parametrize("N", [1, 4, 7])
def test_round_trips_free(N):
    U = Series.free(N)
    assert potential_from_residues(residues_from_potential(U)) == U
    assert residues_from_potential(potential_from_residues(U)) == U


@given(scalar_series(order=6, constant=0))
@settings(max_examples=25, deadline=None)
def test_round_trip_rational(U):
    assert potential_from_residues(residues_from_potential(U)) == U


def test_constant_term_rejected():
    with pytest.raises(ValueError):
        residues_from_potential(Series.one(2))


@pytest.mark.parametrize("n", range(1, 6))
def test_rho_nk_two_ways(n):
    U = Series.free(n)
    phi = solve_monic(OperatorSpec.schrodinger(U))
    for k in range(1, n + 1):
        assert part_equal(rho_nk(U, n, k, phi=phi), rho_nk(U, n, k, method="direct", phi=phi))


def test_rho_nk_diagonal_is_rho():
    U = Series.free(3)
    assert part_equal(rho_nk(U, 3, 3), free_rho(3))
    with pytest.raises(ValueError):
        rho_nk(U, 3, 4)


def test_ladder_from_residues_alone():
    N = 5
    U = Series.free(N)
    phi = solve_monic(OperatorSpec.schrodinger(U))
    rho = residues_from_potential(U)
    ladder = residue_ladder(rho)
    for n in range(1, N + 1):
        for k in range(1, n + 1):
            assert part_equal(ladder[n, k], rho_nk(U, n, k, phi=phi)), (n, k)
        # phi_n is recovered from its residues by partial fractions
        assert part_equal(phi_from_ladder(ladder, n), phi.grade(n))


def test_second_ladder_entry():
    rho = Series.free(2)
    ladder = residue_ladder(rho)
    # rho_{2,1} = phi_1(nu = -1) rho_1 = -rho_1^2 / 2
    assert ladder[2, 1] == {(1, 1): Fraction(-1, 2)}


@pytest.mark.parametrize("N", [3, 6])
def test_potential_via_ladder(N):
    U = Series.free(N)
    assert compare(potential_via_residue_ladder(residues_from_potential(U)), U)


def test_three_routes_agree():
    U = Series.free(5)
    assert compare(frobenius_residues(U), residues_from_potential(U))
