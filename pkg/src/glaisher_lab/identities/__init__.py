from .extras import agm, ellipk, ismail_valent_check, large_n_limit_check
from .families import (
    DEFAULT_TOL,
    Family,
    FamilyParams,
    integrand,
    lhs_quadrature,
    rhs_closed_form,
    verify,
)
from .lemmas import lemma2_closed_form, lemma2_consequence, verify_lemma2, verify_lemma2_consequence
from .sums import SumKind, expected_sum, finite_sum, sum_checks
from .symmetry import SymFamily, jacobian_deviation, symmetry_check

__all__ = [
    "DEFAULT_TOL", "Family", "FamilyParams", "SumKind", "SymFamily",
    "agm", "ellipk", "expected_sum", "finite_sum", "integrand", "ismail_valent_check",
    "jacobian_deviation", "large_n_limit_check", "lemma2_closed_form", "lemma2_consequence",
    "lhs_quadrature", "rhs_closed_form", "sum_checks", "symmetry_check", "verify",
    "verify_lemma2", "verify_lemma2_consequence",
]
