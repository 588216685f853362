"""q-analogues of numbers, factorials, binomial coefficients, and shifted
factorials.

Positive (half-integer) bases produce integer polynomials on the square
root of q grid; negative bases produce canonical quotients via the
exponent-flip identity binom(n, j, -b) = q^(-b*j*(n-j)) * binom(n, j, b).
The row recurrence binom(n, j) = binom(n-1, j-1) + q^(b*j) * binom(n-1, j)
is the single source of truth for binomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .exactalg import (
    M_ONE,
    MR_ONE,
    ONE,
    QR_ONE,
    ZERO,
    MPoly,
    MRat,
    OddUExponent,
    QRat,
    UPoly,
    q_number,
)

__all__ = [
    "gauss_binomial",
    "q_factorial",
    "q_number",
    "qpoch",
    "q_binomial_derivative_at_1",
]

_rows: dict[Fraction, list[list[UPoly]]] = {}


def _u_exp(power: Fraction) -> int:
    ue = 2 * power
    if ue.denominator != 1:
        raise OddUExponent("exponent off the half-integer grid")
    return int(ue)


def gauss_binomial(n: int, j: int, base: int | Fraction = 1) -> UPoly | QRat:
    """q-binomial coefficient in base q**base (UPoly if base > 0, else QRat)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if j < 0 or j > n:
        return ZERO
    b = Fraction(base)
    if b == 0:
        raise ValueError("base must be nonzero")
    if b < 0:
        poly = gauss_binomial(n, j, -b)
        return QRat.q_power(b * j * (n - j)) * poly
    rows = _rows.setdefault(b, [[ONE]])
    while len(rows) <= n:
        m = len(rows)
        prev = rows[-1]
        row = [ONE]
        for k in range(1, m):
            row.append(prev[k - 1] + UPoly({_u_exp(b * k): 1}) * prev[k])
        row.append(ONE)
        rows.append(row)
    return rows[n][j]


def q_factorial(n: int, base: int | Fraction = 1) -> UPoly | QRat:
    """Product of the q-integers 1..n in base q**base."""
    if n < 0:
        raise ValueError("n must be non-negative")
    b = Fraction(base)
    if b < 0:
        poly = q_factorial(n, -b)
        return QRat.q_power(b * comb(n, 2)) * poly
    out = ONE
    for m in range(2, n + 1):
        out = out * UPoly({_u_exp(b * i): 1 for i in range(m)})
    return out


def qpoch(a, n: int, base: int | Fraction = 1):
    """Shifted factorial: product of (1 - a*q^(base*i)) for i in range(n).

    The result matches the algebra of a (UPoly, QRat, MPoly, or MRat);
    negative bases lift integer inputs to QRat.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if isinstance(a, Fraction):
        a = QRat.from_fraction(a)
    b = Fraction(base)
    acc = 1
    for i in range(n):
        power = b * i
        if power >= 0:
            qp = UPoly({_u_exp(power): 1})
        else:
            qp = QRat.q_power(power)
        acc = acc * (1 - a * qp)
    if isinstance(acc, int):
        if isinstance(a, MRat):
            return MR_ONE
        if isinstance(a, MPoly):
            return M_ONE
        if isinstance(a, QRat):
            return QR_ONE
        return ONE
    return acc


def q_binomial_derivative_at_1(n: int, j: int, base: int = 1) -> int:
    """d/dq of the q-binomial in base q**base, evaluated at q = 1."""
    if j < 0 or j > n:
        return 0
    num = comb(n, j) * j * (n - j) * base
    if num % 2:
        raise ArithmeticError("derivative at 1 must be an integer")
    return num // 2
