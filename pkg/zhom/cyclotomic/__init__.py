from .approx import approx_complex, certified_sign_imag, certified_sign_real, format_approx
from .number import (
    CycNum,
    common_conductor,
    cyc_prod,
    cyc_sum,
    cyclotomic_coeffs,
    embed_conductor,
    euler_phi,
    format_cycnum,
    make_root,
    parse_cycnum,
)


def add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def sub(a: CycNum, b: CycNum) -> CycNum:
    return a - b


def mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def neg(a: CycNum) -> CycNum:
    return -a


def conj(z: CycNum) -> CycNum:
    return z.conj()


def galois(z: CycNum, k: int) -> CycNum:
    return z.galois(k)


def norm_sq(z: CycNum) -> CycNum:
    return z.norm_sq()


def rational_value(z: CycNum):
    return z.rational_value()


def is_root_of_unity(z: CycNum) -> bool:
    return z.is_root_of_unity()


def root_exponent(z: CycNum) -> tuple[int, int] | None:
    return z.root_exponent()


__all__ = [
    "CycNum",
    "make_root",
    "embed_conductor",
    "common_conductor",
    "cyc_sum",
    "cyc_prod",
    "cyclotomic_coeffs",
    "euler_phi",
    "format_cycnum",
    "parse_cycnum",
    "approx_complex",
    "format_approx",
    "certified_sign_real",
    "certified_sign_imag",
    "add",
    "sub",
    "mul",
    "neg",
    "conj",
    "galois",
    "norm_sq",
    "rational_value",
    "is_root_of_unity",
    "root_exponent",
]
