"""Lucas-Carmichael integers via base-(p+2) digit sums.

Square-free composites n with p + 1 | n + 1 for every prime p | n, tested
directly and through digit sums; bounded enumeration; and polynomial
families that produce such integers whenever all their factors are prime.
"""

__version__ = "0.1.0"

from .arith import Factorization, factorize, is_prime, is_squarefree, lcm_list, spf_sieve
from .digits import DigitExpansion, digit_sum, lemma21_residual, to_base
from .enumeration import compare_enumerations, enumerate_dfs, enumerate_oracle
from .errors import InvalidInputError, PreconditionError, TheoremViolation
from .families import (
    FamilySpec,
    builtin,
    derive_family,
    digit_sum_profile,
    evaluate,
    ktuple_search,
    verify_congruence_symbolic,
    verify_digit_ranges,
    verify_expansion_symbolic,
)
from .lc_core import (
    LcReport,
    analyze,
    digit_check,
    korselt_check,
    qr_bound_check,
    structural_audit,
    three_factor_form,
)
from .ratpoly import RatPoly, poly_add, poly_divisible, poly_eval, poly_mul
