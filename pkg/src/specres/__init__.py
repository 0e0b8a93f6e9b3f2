"""Exact computation of spectral residues of formal Schrodinger operators.

Potentials, prepotentials and residue sequences are truncated power series
in ``z`` whose coefficients live in the free algebra on ``U_1, U_2, ...``,
in a polynomial ring over the rationals, or in rational functions of the
spectral parameter ``nu``.  Everything is exact.
"""

from .compositions import (
    compositions,
    cube_identity_constant,
    cube_identity_sides,
    weight_q,
    weight_s,
)
from .darboux import (
    darboux_transform,
    delta_series_oracle,
    prepotential_from_potential,
    prepotential_from_residues,
    residues_from_prepotential,
    verify_residue_negation,
)
from .frobenius import (
    DiffOp,
    OperatorSpec,
    conjugate_operator,
    monic_solution_exists,
    normalize_to_schrodinger,
    residue_table,
    solve_monic,
)
from .kdv import determine_kdv_sign, kdv_rhs, residue_time_derivative, verify_evolution
from .polynomial import MPoly
from .ratfunc import PoleOrderError, RatFunc, ratfunc_residue_at
from .series import Series, series_from_json, series_to_json
from .solvable import (
    PotentialFamily,
    closed_form_product,
    composition_sum,
    hypergeometric_residue_oracle,
    product_coefficient,
    pt_solution_check,
    residue_polynomial,
    tableaux_generating_identity,
    verify_factorization,
)
from .transforms import (
    potential_from_residues,
    potential_via_residue_ladder,
    residue_ladder,
    residues_from_potential,
    rho_nk,
)

__all__ = [
    "DiffOp", "MPoly", "OperatorSpec", "PoleOrderError", "PotentialFamily", "RatFunc", "Series",
    "closed_form_product", "composition_sum", "compositions", "conjugate_operator",
    "cube_identity_constant", "cube_identity_sides", "darboux_transform", "delta_series_oracle",
    "determine_kdv_sign", "hypergeometric_residue_oracle", "kdv_rhs", "monic_solution_exists",
    "normalize_to_schrodinger", "potential_from_residues", "potential_via_residue_ladder",
    "prepotential_from_potential", "prepotential_from_residues", "product_coefficient",
    "pt_solution_check", "ratfunc_residue_at", "residue_ladder", "residue_polynomial",
    "residue_table", "residue_time_derivative", "residues_from_potential",
    "residues_from_prepotential", "rho_nk", "series_from_json", "series_to_json",
    "solve_monic", "tableaux_generating_identity", "verify_evolution", "verify_factorization",
    "verify_residue_negation", "weight_q", "weight_s",
]
