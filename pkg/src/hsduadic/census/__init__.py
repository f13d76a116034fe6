"""Counting functions for lengths and their growth constants."""

from .constants import (ConstantEstimate, L1_class_number, L1_digamma, L1_partial,
                        estimate_G_const, estimate_G_D, estimate_J, minus_prime_product,
                        minus_prime_product_exact)
from .functions import (A_q, B_D, D_a, G_a, chi_q, class_number, delta, f_a, g_a, li,
                        prime_order_census, reduced_forms, representability,
                        splitting_identity_report, xi_D)
from .report import CensusReport, run_census

__all__ = [
    "A_q", "B_D", "CensusReport", "ConstantEstimate", "D_a", "G_a", "L1_class_number",
    "L1_digamma", "L1_partial", "chi_q", "class_number", "delta", "estimate_G_D",
    "estimate_G_const", "estimate_J", "f_a", "g_a", "li", "minus_prime_product",
    "minus_prime_product_exact", "prime_order_census", "reduced_forms",
    "representability", "run_census", "splitting_identity_report", "xi_D",
]
