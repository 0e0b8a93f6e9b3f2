from fractions import Fraction
from math import factorial, prod

import pytest

from oracles import cut_compositions, s_weight
from specres.frobenius import OperatorSpec, residue_table
from specres.polynomial import MPoly
from specres.solvable import (
    COROLLARIES,
    FAMILIES,
    PotentialFamily,
    closed_form_product,
    composition_sum,
    corollary_product,
    eckart_bridge,
    family_potential,
    hypergeometric_residue_oracle,
    middle_row_identity,
    normalized_operator_check,
    potential_coefficient,
    product_coefficient,
    pt_candidate_solution,
    pt_solution_check,
    residue_polynomial,
    tableaux_generating_identity,
    verify_corollary,
    verify_factorization,
)

u, v = MPoly.var("u"), MPoly.var("v")
alpha, beta = MPoly.var("alpha"), MPoly.var("beta")


def brute_family_rho(family, n):
    total = MPoly.const(0)
    for p in cut_compositions(n):
        w = Fraction(n, s_weight(p) * s_weight(p[::-1]))
        total = total + prod((potential_coefficient(family, x) for x in p), start=MPoly.const(1)) * w
    return total


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", range(1, 8))
def test_family_sum_against_brute_force(family, n):
    assert residue_polynomial(family, n) == brute_family_rho(family, n)


@pytest.mark.parametrize("family", FAMILIES)
def test_family_residues_match_frobenius(family):
    N = 6
    table = residue_table(OperatorSpec.schrodinger(family_potential(family, N)))
    for n in range(1, N + 1):
        assert table.coefficient(n) == residue_polynomial(family, n)


def test_small_cases():
    eck3 = residue_polynomial("eckart", 3).subs({"u": 0})
    assert str(eck3) == "v + 2/3 v^2 + 1/12 v^3"
    assert residue_polynomial("morse", 3) == u ** 3 / 12 + u * v / 3
    assert closed_form_product("morse", 2) == u * u / 2 + v / 2
    assert residue_polynomial("eckart", 1) == u + v
    assert residue_polynomial("poschl-teller", 1) == u + v
    assert residue_polynomial("morse", 1) == u


@pytest.mark.parametrize("family,N", [("eckart", 10), ("poschl-teller", 10), ("morse", 12)])
def test_factorizations(family, N):
    for n in range(1, N + 1):
        check = verify_factorization(family, n)
        assert check, check.detail


def test_eckart_specialization_is_rising_product():
    for n in range(1, 10):
        lhs = residue_polynomial("eckart", n).subs({"u": 0}) * (factorial(n) * factorial(n - 1))
        rhs = prod((v + j * (j + 1) for j in range(n)), start=MPoly.const(1))
        assert lhs == rhs


def test_eckart_specialization_against_sympy_factor():
    sympy = pytest.importorskip("sympy")
    sv = sympy.symbols("v")
    n = 5
    poly = residue_polynomial("eckart", n).subs({"u": 0}) * (factorial(n) * factorial(n - 1))
    coeffs = [poly.coefficient({"v": e}) for e in range(n + 1)]
    expr = sum(sympy.Rational(c.numerator, c.denominator) * sv ** e for e, c in enumerate(coeffs))
    roots = sympy.roots(sympy.Poly(expr, sv))
    assert roots == {-j * (j + 1): 1 for j in range(n)}


def test_failure_reports_monomial():
    from specres.solvable import _first_monomial_difference

    assert "u^1" in _first_monomial_difference(u + v, v)


def test_custom_family():
    fam = PotentialFamily("custom", lambda k: u * k)
    assert residue_polynomial(fam, 3) == residue_polynomial("eckart", 3).subs({"u": 0}).subs({"v": u})
    with pytest.raises(ValueError):
        PotentialFamily("nope")


# -- corollaries -----------------------------------------------------------

def test_spec_examples():
    assert composition_sum("csum1", 2, 1) == 2
    assert composition_sum("csum1", 2, 2) == 1
    assert composition_sum("morse-odd", 3, 0) == 4
    assert product_coefficient("morse-even", 4, 1) == 10
    assert product_coefficient("morse-odd", 5, 1) == 20
    assert product_coefficient("corrid", 3, 0) == 16
    assert corollary_product("csum2", 4) == [0, 108, 9]
    assert composition_sum("csum2", 4, 1) == 108


@pytest.mark.parametrize("cid", COROLLARIES)
def test_corollaries(cid):
    for n in range(1, 13):
        try:
            check = verify_corollary(cid, n)
        except ValueError:
            continue
        assert check, check.detail


def test_csum2_is_eckart_on_antidiagonal():
    # at u = -v the Eckart potential is (k-1) v, so the sum picks up prod (p_i - 1)
    for n in range(2, 8):
        rho = residue_polynomial("eckart", n).subs({"u": -v}) * (factorial(n) * factorial(n - 1))
        for k in range(n + 1):
            assert rho.coefficient({"v": k}) == composition_sum("csum2", n, k)


@pytest.mark.parametrize("args", [("bogus", 3, 1), ("corrid", 4, 0), ("csum1", 0, 0), ("csum1", 3, 4), ("csum1", 3, -1)])
def test_invalid_arguments(args):
    with pytest.raises(ValueError):
        composition_sum(*args)
    with pytest.raises(ValueError):
        product_coefficient(*args)


# -- hypergeometric ----------------------------------------------------------

def test_eckart_bridge_identity_n2():
    b = {k: e.subs({"nu": 2}) for k, e in eckart_bridge().items()}
    lhs = alpha * beta * (alpha + 1) * (beta + 1)
    # a_{2,0} = 0 and a_{2,1} = 1
    assert lhs == ((u + v) * (u + v + 1) + v).subs(b)
    assert lhs != ((u + v) * (u + v + 2) + v).subs(b)


@pytest.mark.parametrize("family,N", [("eckart", 7), ("morse", 8)])
def test_hypergeometric_route(family, N):
    for n in range(1, N + 1):
        assert hypergeometric_residue_oracle(family, n) == residue_polynomial(family, n)


def test_hypergeometric_route_rejects_pt():
    with pytest.raises(ValueError):
        hypergeometric_residue_oracle("poschl-teller", 2)


@pytest.mark.parametrize("family", FAMILIES)
def test_normalized_operators(family):
    assert normalized_operator_check(family, 5)


def test_pt_series():
    assert pt_solution_check(0, 0, 4)
    assert pt_solution_check(1, 2, 5)
    assert pt_solution_check(Fraction(1, 2), Fraction(-1, 3), 5)
    assert pt_candidate_solution(1, 2, 3).constant == 1


def test_pt_series_detects_wrong_candidate():
    from specres import solvable

    original = solvable.pt_candidate_solution
    try:
        solvable.pt_candidate_solution = lambda lam, mu, N: original(lam, mu + 1, N)
        assert not solvable.pt_solution_check(1, 2, 4)
    finally:
        solvable.pt_candidate_solution = original


@pytest.mark.parametrize("n", range(1, 11))
def test_tableaux(n):
    assert tableaux_generating_identity(n)
    assert middle_row_identity(n)
