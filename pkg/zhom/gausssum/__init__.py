from .poly import AffineForm, PolyBuilder, QuadPoly, prime_power
from .solver import detect_zero_case, eval_gauss_sum, one_var_sum, reduce_gauss_sum, two_var_sum

__all__ = [
    "AffineForm",
    "PolyBuilder",
    "QuadPoly",
    "prime_power",
    "eval_gauss_sum",
    "reduce_gauss_sum",
    "one_var_sum",
    "two_var_sum",
    "detect_zero_case",
]
