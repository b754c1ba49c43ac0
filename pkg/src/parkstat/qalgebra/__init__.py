"""Exact polynomials and rational functions in q, truncated power series,
q-numbers and the q-generating-function checks."""

from .identities import (verify_a_at_2, verify_pf_gf, verify_pf_gf_q1, verify_stanley_gf,
                         verify_upf_gf, verify_upf_gf_q1)
from .poly import Poly, poly_gcd
from .qnumbers import (BiPoly, Exp_q_series, a_inv_asc, exp_q_series, inversion_polynomial,
                       pf_q, q_binom, q_factorial, q_int, q_multinomial, q_pochhammer, upf_q)
from .qrat import QRat
from .series import TruncSeries, compose, invert_composition

__all__ = [
    "BiPoly", "Exp_q_series", "Poly", "QRat", "TruncSeries", "a_inv_asc", "compose",
    "exp_q_series", "inversion_polynomial", "invert_composition", "pf_q", "poly_gcd",
    "q_binom", "q_factorial", "q_int", "q_multinomial", "q_pochhammer", "upf_q",
    "verify_a_at_2", "verify_pf_gf", "verify_pf_gf_q1", "verify_stanley_gf",
    "verify_upf_gf", "verify_upf_gf_q1",
]
