"""Exact arithmetic core: integer polynomials on the square-root-of-q grid,
their quotients, and sparse multivariate layers over them."""

from .errors import (
    DegreeMismatch,
    ExactAlgError,
    IdentityViolated,
    NonUnitConstantTerm,
    NotDivisible,
    NotPrime,
    OddUExponent,
    OrderDeficit,
    UnknownFamily,
    UnknownIdentity,
    ZeroPolynomial,
)
from .mpoly import M_ONE, M_ZERO, S, SYMBOLS, T, X, MPoly
from .mrat import MR_ONE, MR_ZERO, MRat
from .qrat import QR_ONE, QR_ZERO, QRat, q_number
from .serialize import (
    format_mpoly,
    format_mrat,
    format_qrat,
    format_upoly,
    to_json_value,
)
from .upoly import ONE, Q, U, ZERO, UPoly, q_power, u_power, upoly_gcd

__all__ = [
    "DegreeMismatch",
    "ExactAlgError",
    "IdentityViolated",
    "M_ONE",
    "M_ZERO",
    "MPoly",
    "MRat",
    "MR_ONE",
    "MR_ZERO",
    "NonUnitConstantTerm",
    "NotDivisible",
    "NotPrime",
    "ONE",
    "OddUExponent",
    "OrderDeficit",
    "Q",
    "QRat",
    "QR_ONE",
    "QR_ZERO",
    "S",
    "SYMBOLS",
    "T",
    "U",
    "UPoly",
    "UnknownFamily",
    "UnknownIdentity",
    "X",
    "ZERO",
    "ZeroPolynomial",
    "format_mpoly",
    "format_mrat",
    "format_qrat",
    "format_upoly",
    "q_number",
    "q_power",
    "to_json_value",
    "u_power",
    "upoly_gcd",
]
