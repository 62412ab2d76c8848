"""Quasi-complementary sequence sets over finite fields.

Six generator families with proven correlation peaks, exact (integer
histogram) correlation sweeps, the standard lower bounds, and optimality
factors.  See the demos directory for worked tours.
"""

__version__ = "0.1.0"

from .galois import FieldCtx, build_tower
from .characters import (ExactSum, UnitSymbol, additive_char, lift,
                         magnitude, msequence, mult_char, quadratic_char,
                         unit_conj, unit_mul)
from .constructions import (CSSet, FAMILIES, PolySpec, alphabet_count,
                            check_perm_difference, find_trace_zero, gen_A,
                            gen_B, gen_D, gen_E, gen_F, gen_periodic_C,
                            generate, phi_map)
from .correlation import (CorrReport, analyze, aperiodic_corr, bound_liu,
                          bound_periodic, bound_welch, float_corr_maxima,
                          liu_applicable, periodic_corr, reference_value_set,
                          rho_trend, set_corr, sweep, verify_claims)

__all__ = [
    "FieldCtx", "build_tower",
    "ExactSum", "UnitSymbol", "additive_char", "lift", "magnitude",
    "msequence", "mult_char", "quadratic_char", "unit_conj", "unit_mul",
    "CSSet", "FAMILIES", "PolySpec", "alphabet_count",
    "check_perm_difference", "find_trace_zero", "gen_A", "gen_B", "gen_D",
    "gen_E", "gen_F", "gen_periodic_C", "generate", "phi_map",
    "CorrReport", "analyze", "aperiodic_corr", "bound_liu", "bound_periodic",
    "bound_welch", "float_corr_maxima", "liu_applicable", "periodic_corr",
    "reference_value_set", "rho_trend", "set_corr", "sweep", "verify_claims",
]
