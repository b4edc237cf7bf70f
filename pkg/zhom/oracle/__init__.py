from .brute import (
    DEFAULT_SIZE_GUARD,
    brute_eval_A,
    brute_eval_CD,
    brute_gauss,
    brute_Z_arrow,
    brute_Z_back,
    check_size,
    count_by_weight,
)

__all__ = [
    "DEFAULT_SIZE_GUARD",
    "brute_eval_A",
    "brute_eval_CD",
    "brute_Z_arrow",
    "brute_Z_back",
    "brute_gauss",
    "count_by_weight",
    "check_size",
]
