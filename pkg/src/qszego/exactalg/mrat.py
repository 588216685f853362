"""Rational functions in (s, t, x) over Q(q) with factored denominators.

An MRat keeps its denominator as a multiset of monic (leading coefficient
one under lex order) MPoly factors with multiplicities, never expanding
products unless an operation demands it.  Reduction only ever cancels a
whole denominator factor into the numerator by attempted exact division,
so no multivariate gcd is needed; equality is checked by cross
multiplication after cancelling shared factors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import NotDivisible, ZeroPolynomial
from .mpoly import MPoly
from .qrat import QRat
from .upoly import UPoly

Factors = tuple[tuple[MPoly, int], ...]
Coercible = Union[int, Fraction, UPoly, QRat, MPoly]


def _merge(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, (f, m) in b.items():
        out[k] = (f, out[k][1] + m) if k in out else (f, m)
    return out


class MRat:
    """Quotient of an MPoly by a product of monic MPoly factors."""

    __slots__ = ("num", "_den", "_den_poly")

    def __init__(self, num: MPoly, factors: Iterable[tuple[MPoly, int]] = ()):
        scale = QRat.of(1)
        table: dict = {}
        for f, m in factors:
            if m < 0:
                raise ValueError("negative factor multiplicity")
            if m == 0:
                continue
            if f.is_zero:
                raise ZeroPolynomial("zero denominator factor")
            if f.is_constant:
                scale = scale * f.as_qrat() ** m
                continue
            _, lc = f.lead()
            if not (lc.is_polynomial and lc.num.degree_u == 0 and lc.num.lead_coeff == 1):
                f = f * lc ** (-1)
                scale = scale * lc**m
            k = f._key()
            if k in table:
                table[k] = (f, table[k][1] + m)
            else:
                table[k] = (f, m)
        if num.is_zero:
            self.num = MPoly()
            self._den = {}
        else:
            self.num = num * scale ** (-1) if scale != QRat.of(1) else num
            self._den = table
            self._reduce()
        self._den_poly = None

    # -- constructors ----------------------------------------------------

    @staticmethod
    def of(num: Coercible | "MRat", den: Coercible | "MRat" = 1) -> "MRat":
        a = num if isinstance(num, MRat) else MRat(_as_mpoly(num))
        if isinstance(den, MRat):
            return a / den
        d = _as_mpoly(den)
        if d.is_zero:
            raise ZeroPolynomial("zero denominator")
        return a / MRat(d)

    # -- canonical pieces --------------------------------------------------

    @property
    def den_factors(self) -> Factors:
        return tuple(self._den[k] for k in sorted(self._den))

    @property
    def den_poly(self) -> MPoly:
        if self._den_poly is None:
            d = MPoly.const(1)
            for f, m in self.den_factors:
                d = d * f**m
            self._den_poly = d
        return self._den_poly

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return not self._den

    def as_mpoly(self) -> MPoly:
        out = self.num
        for f, m in self.den_factors:
            for _ in range(m):
                out = out.divexact(f)
        return out

    def as_qrat(self) -> QRat:
        num = self.num.as_qrat()
        den = self.den_poly.as_qrat()
        return num / den

    def _reduce(self) -> None:
        for k in sorted(self._den):
            f, m = self._den[k]
            while m > 0:
                try:
                    self.num = self.num.divexact(f)
                except NotDivisible:
                    break
                m -= 1
            if m == 0:
                del self._den[k]
            else:
                self._den[k] = (f, m)

    # -- arithmetic ----------------------------------------------------------

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, UPoly, QRat, MPoly)):
            other = MRat(_as_mpoly(other))
        if not isinstance(other, MRat):
            return NotImplemented
        if self._den.keys() == other._den.keys() and all(
            self._den[k][1] == other._den[k][1] for k in self._den
        ):
            return self.num == other.num
        left = self.num
        right = other.num
        mine = dict(self._den)
        theirs = dict(other._den)
        for k in list(mine):
            if k in theirs:
                c = min(mine[k][1], theirs[k][1])
                mine[k] = (mine[k][0], mine[k][1] - c)
                theirs[k] = (theirs[k][0], theirs[k][1] - c)
        for k in sorted(theirs):
            f, m = theirs[k]
            left = left * f**m
        for k in sorted(mine):
            f, m = mine[k]
            right = right * f**m
        return left == right

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "MRat":
        out = MRat.__new__(MRat)
        out.num = -self.num
        out._den = dict(self._den)
        out._den_poly = self._den_poly
        return out

    def __add__(self, other) -> "MRat":
        if isinstance(other, (int, Fraction, UPoly, QRat, MPoly)):
            other = MRat(_as_mpoly(other))
        if not isinstance(other, MRat):
            return NotImplemented
        if self.num.is_zero:
            return other
        if other.num.is_zero:
            return self
        lcm: dict = {}
        for k, (f, m) in self._den.items():
            lcm[k] = (f, m)
        for k, (f, m) in other._den.items():
            if k not in lcm or lcm[k][1] < m:
                lcm[k] = (f, m)
        left = self.num
        for k, (f, m) in lcm.items():
            extra = m - (self._den[k][1] if k in self._den else 0)
            if extra:
                left = left * f**extra
        right = other.num
        for k, (f, m) in lcm.items():
            extra = m - (other._den[k][1] if k in other._den else 0)
            if extra:
                right = right * f**extra
        return MRat(left + right, tuple(lcm.values()))

    __radd__ = __add__

    def __sub__(self, other) -> "MRat":
        if isinstance(other, (int, Fraction, UPoly, QRat, MPoly)):
            other = MRat(_as_mpoly(other))
        if not isinstance(other, MRat):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MRat":
        return (-self) + other

    def __mul__(self, other) -> "MRat":
        if isinstance(other, (int, Fraction, UPoly, QRat)):
            q = other if isinstance(other, QRat) else _scalar_qrat(other)
            if q.is_zero:
                return MRat(MPoly())
            out = MRat.__new__(MRat)
            out.num = self.num * q
            out._den = dict(self._den)
            out._den_poly = self._den_poly
            return out
        if isinstance(other, MPoly):
            other = MRat(other)
        if not isinstance(other, MRat):
            return NotImplemented
        if self.num.is_zero or other.num.is_zero:
            return MRat(MPoly())
        return MRat(
            self.num * other.num,
            tuple(_merge(self._den, other._den).values()),
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MRat":
        if isinstance(other, (int, Fraction, UPoly, QRat, MPoly)):
            other = MRat(_as_mpoly(other))
        if not isinstance(other, MRat):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "MRat":
        return self.inverse() * other

    def inverse(self) -> "MRat":
        if self.num.is_zero:
            raise ZeroPolynomial("inverse of zero")
        num = MPoly.const(1)
        for f, m in self.den_factors:
            num = num * f**m
        return MRat(num, ((self.num, 1),))

    def __pow__(self, n: int) -> "MRat":
        if n < 0:
            return self.inverse() ** (-n)
        out = MRat.__new__(MRat)
        out.num = self.num**n
        out._den = {k: (f, m * n) for k, (f, m) in self._den.items()} if n else {}
        out._den_poly = None
        return out

    # -- substitution and evaluation -------------------------------------

    def subst(self, **bindings) -> "MRat":
        num = self.num.subst(**bindings)
        factors = [(f.subst(**bindings), m) for f, m in self.den_factors]
        return MRat(num, factors)

    def subst_q_power(self, k: int | Fraction) -> "MRat":
        return MRat(
            self.num.subst_q_power(k),
            [(f.subst_q_power(k), m) for f, m in self.den_factors],
        )

    def subst_q_negate(self) -> "MRat":
        return MRat(
            self.num.subst_q_negate(),
            [(f.subst_q_negate(), m) for f, m in self.den_factors],
        )

    def eval(self, q=None, s=None, t=None, x=None) -> Fraction:
        d = Fraction(1)
        for f, m in self.den_factors:
            d *= f.eval(q=q, s=s, t=t, x=x) ** m
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.eval(q=q, s=s, t=t, x=x) / d

    def __repr__(self) -> str:
        from .serialize import format_mrat

        return format_mrat(self)


def _scalar_qrat(v: int | Fraction | UPoly) -> QRat:
    if isinstance(v, Fraction):
        return QRat.from_fraction(v)
    return QRat.of(v)


def _as_mpoly(v: Coercible) -> MPoly:
    if isinstance(v, MPoly):
        return v
    return MPoly.const(v)


MR_ZERO = MRat(MPoly())
MR_ONE = MRat(MPoly.const(1))
