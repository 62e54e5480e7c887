"""Exact symmetric-function algebra."""
from exchstat.symfunc.characters import character_table, mn_character, schur_power_sum_expansion
from exchstat.symfunc.fit import FitResult, fit_coefficients
from exchstat.symfunc.kostka import (
    KostkaMatrix,
    inverse_kostka_apply,
    inverse_kostka_matrix,
    kostka_apply,
    kostka_matrix,
    kostka_number,
)
from exchstat.symfunc.polys import (
    Basis,
    SymPoly,
    convert_basis,
    evaluate,
    monomial_value,
    schur_in_monomials,
    schur_via_characters,
)

__all__ = [
    "Basis",
    "FitResult",
    "KostkaMatrix",
    "SymPoly",
    "character_table",
    "convert_basis",
    "evaluate",
    "fit_coefficients",
    "inverse_kostka_apply",
    "inverse_kostka_matrix",
    "kostka_apply",
    "kostka_matrix",
    "kostka_number",
    "mn_character",
    "monomial_value",
    "schur_in_monomials",
    "schur_power_sum_expansion",
    "schur_via_characters",
]
