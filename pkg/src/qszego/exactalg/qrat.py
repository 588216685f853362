"""Rational functions in q on the u-grid: ratios of two UPoly values.

A QRat is always kept canonical: gcd(num, den) is a unit, the integer
contents of num and den are coprime, and den has positive leading
coefficient.  den is never zero.  Equality of canonical forms is plain
structural equality; cross-type comparisons cross-multiply.

Denominator-one values are the common case, so every operation takes a
fast path that skips gcd reduction when both operands are polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Union

from .errors import NotDivisible, ZeroPolynomial
from .upoly import ONE, ZERO, UPoly, upoly_gcd

Coercible = Union[int, UPoly, "QRat"]


def _as_upoly(v: int | UPoly) -> UPoly:
    return UPoly.const(v) if isinstance(v, int) else v


class QRat:
    """Canonical ratio num/den of integer polynomials in u (q = u**2)."""

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly, _canonical: bool = False):
        if _canonical:
            self.num = num
            self.den = den
            return
        if den.is_zero:
            raise ZeroPolynomial("zero denominator")
        if num.is_zero:
            self.num = ZERO
            self.den = ONE
            return
        if den == ONE:
            self.num = num
            self.den = den
            return
        g = upoly_gcd(num, den)
        if g != ONE:
            num = num.divexact(g)
            den = den.divexact(g)
        if den.lead_coeff < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(num: int | UPoly, den: int | UPoly = 1) -> "QRat":
        return QRat(_as_upoly(num), _as_upoly(den))

    @staticmethod
    def from_fraction(f: Fraction | int) -> "QRat":
        f = Fraction(f)
        return QRat(UPoly.const(f.numerator), UPoly.const(f.denominator))

    @staticmethod
    def q_power(e: int | Fraction) -> "QRat":
        """q**e for any half-integer e, negative exponents allowed."""
        e = Fraction(e)
        ue = 2 * e
        if ue.denominator != 1:
            raise ValueError("exponent off the half-integer grid")
        ue = int(ue)
        if ue >= 0:
            return QRat(UPoly({ue: 1}), ONE, _canonical=True)
        return QRat(ONE, UPoly({-ue: 1}), _canonical=True)

    # -- inspection ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == ONE

    def as_upoly(self) -> UPoly:
        if self.den != ONE:
            raise NotDivisible("denominator is not a unit")
        return self.num

    def _key(self):
        return (tuple(sorted(self.num._c.items())), tuple(sorted(self.den._c.items())))

    # -- arithmetic ------------------------------------------------------------

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, UPoly)):
            other = QRat.of(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "QRat":
        return QRat(-self.num, self.den, _canonical=True)

    def __add__(self, other) -> "QRat":
        if isinstance(other, (int, UPoly)):
            other = QRat.of(other)
        if not isinstance(other, QRat):
            return NotImplemented
        if self.den == ONE and other.den == ONE:
            return QRat(self.num + other.num, ONE, _canonical=True)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "QRat":
        if isinstance(other, (int, UPoly)):
            other = QRat.of(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QRat":
        return (-self) + other

    def __mul__(self, other) -> "QRat":
        if isinstance(other, (int, UPoly)):
            other = QRat.of(other)
        if not isinstance(other, QRat):
            return NotImplemented
        if self.den == ONE and other.den == ONE:
            return QRat(self.num * other.num, ONE, _canonical=True)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QRat":
        if isinstance(other, (int, UPoly)):
            other = QRat.of(other)
        if not isinstance(other, QRat):
            return NotImplemented
        if other.is_zero:
            raise ZeroPolynomial("division by zero")
        if self.den == ONE and other.den == ONE:
            try:
                return QRat(self.num.divexact(other.num), ONE, _canonical=True)
            except NotDivisible:
                pass
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "QRat":
        return QRat.of(other) / self

    def __pow__(self, n: int) -> "QRat":
        if n >= 0:
            return QRat(self.num**n, self.den**n, _canonical=True)
        if self.is_zero:
            raise ZeroPolynomial("negative power of zero")
        return QRat(self.den ** (-n), self.num ** (-n))

    # -- evaluation and substitution -------------------------------------------

    def eval_q(self, point: Fraction | int) -> Fraction:
        d = self.den.eval_q(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.eval_q(point) / d

    def eval_u(self, point: Fraction | int) -> Fraction:
        d = self.den.eval_u(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.eval_u(point) / d

    def subst_q_power(self, k: int | Fraction) -> "QRat":
        num = self.num.subst_q_power(k)
        den = self.den.subst_q_power(k)
        num = num if isinstance(num, QRat) else QRat(num, ONE, _canonical=True)
        den = den if isinstance(den, QRat) else QRat(den, ONE, _canonical=True)
        return num / den

    def subst_q_negate(self) -> "QRat":
        return QRat(self.num.subst_q_negate(), self.den.subst_q_negate())

    def __repr__(self) -> str:
        from .serialize import format_qrat

        return format_qrat(self)


QR_ZERO = QRat.of(0)
QR_ONE = QRat.of(1)


def q_number(m: int) -> QRat:
    """The q-integer (1 - q**m)/(1 - q), any integer m.

    For m >= 0 this is the polynomial 1 + q + ... + q**(m-1); for m < 0 the
    canonical form has the pure power q**|m| in the denominator.
    """
    if m >= 0:
        return QRat(UPoly.from_q({i: 1 for i in range(m)}), ONE, _canonical=True)
    k = -m
    num = -UPoly.from_q({i: 1 for i in range(k)})
    return QRat(num, UPoly.from_q({k: 1}))
