"""Truncated formal power series in z over an exact coefficient algebra.

A series stores coefficients c[0..order] in a tuple; the algebra can be
any type with +, -, * and == (MPoly, MRat, QRat, Fraction).  Products
truncate to the shorter order, reciprocals need constant term exactly 1.

The identity catalog verifier never divides during its convolutions:
every series in an identity is scaled to one shared q-denominator (the
exact lcm of all coefficient denominators), so both sides become
polynomial series that are compared coefficient-by-coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .exactalg import MPoly, QRat, S, T, UPoly, upoly_gcd
from .exactalg.upoly import ONE, Q, q_power
from .exactalg.errors import NonUnitConstantTerm, UnknownIdentity
from .qfun import q_factorial, qpoch
from .report import SeriesRow
from .rogers import q_const, poch_mpoly, rs


@dataclass(frozen=True)
class TruncSeries:
    """Coefficients c[0..order] of a formal series in z."""

    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int):
        return self.coeffs[n]

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        return TruncSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return TruncSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        out = []
        for m in range(n + 1):
            acc = None
            for k in range(m + 1):
                term = self.coeffs[k] * other.coeffs[m - k]
                acc = term if acc is None else acc + term
            out.append(acc)
        return TruncSeries(tuple(out))

    def scale(self, c) -> "TruncSeries":
        return TruncSeries(tuple(v * c for v in self.coeffs))

    def reciprocal(self) -> "TruncSeries":
        c0 = self.coeffs[0]
        if not (c0 == 1):
            raise NonUnitConstantTerm("series reciprocal needs constant term 1")
        inv = [c0]
        zero = c0 - c0
        for m in range(1, self.order + 1):
            acc = zero
            for k in range(1, m + 1):
                acc = acc + self.coeffs[k] * inv[m - k]
            inv.append(zero - acc)
        return TruncSeries(tuple(inv))

    def first_mismatch(self, other: "TruncSeries") -> int | None:
        n = min(self.order, other.order)
        for m in range(n + 1):
            if not (self.coeffs[m] == other.coeffs[m]):
                return m
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.first_mismatch(other) is None


def series_of(term: Callable[[int], Any], order: int) -> TruncSeries:
    """Series with coefficient term(n) for 0 <= n <= order."""
    return TruncSeries(tuple(term(n) for n in range(order + 1)))


def q_exp(
    kind: str,
    coeff: MPoly | int,
    order: int,
    zpow: int = 1,
    base: int = 1,
) -> TruncSeries:
    """One of the three q-exponential families applied to coeff*z^zpow.

    kind "exp" uses 1/[n]!, "Exp" additionally q^(base*C(n,2)), and "e"
    uses 1/(q^base; q^base)_n.  Coefficients are exact MPoly values.
    """
    comp = _exp_component(kind, coeff, zpow, base)
    out = []
    for n in range(order + 1):
        num = comp.num(n)
        out.append(num * MPoly.const(QRat.of(1, comp.den(n))))
    return TruncSeries(tuple(out))


def _upoly_lcm(a: UPoly, b: UPoly) -> UPoly:
    return a.divexact(upoly_gcd(a, b)) * b


@dataclass(frozen=True)
class _Component:
    """One series factor: polynomial numerators over q-only denominators."""

    num: Callable[[int], MPoly]
    den: Callable[[int], UPoly]


def _exp_component(
    kind: str, coeff: MPoly | int, zpow: int = 1, base: int = 1
) -> _Component:
    if kind not in ("exp", "Exp", "e"):
        raise ValueError(f"unknown exponential kind {kind!r}")
    if base < 1:
        raise ValueError("base must be a positive integer")
    if zpow < 1:
        raise ValueError("zpow must be a positive integer")
    coeff = coeff if isinstance(coeff, MPoly) else MPoly.const(coeff)

    def num(n: int) -> MPoly:
        if n % zpow:
            return MPoly()
        k = n // zpow
        v = coeff**k
        if kind == "Exp":
            v = v * q_const(base * (k * (k - 1) // 2))
        return v

    def den(n: int) -> UPoly:
        if n % zpow:
            return ONE
        k = n // zpow
        if kind == "e":
            return qpoch(q_power(base), k, base)
        return q_factorial(k, base)

    return _Component(num, den)


def _data_component(f: Callable[[int], MPoly], base: int) -> _Component:
    """The series sum_n f(n) z^n / (q^base; q^base)_n."""
    return _Component(f, lambda n: qpoch(q_power(base), n, base))


@dataclass(frozen=True)
class _Sides:
    """Cleared polynomial forms of one identity's two sides."""

    lhs: list[MPoly]
    rhs: list[MPoly]
    q_den: UPoly


def _build_sides(
    lhs_parts: list[_Component],
    rhs_parts: list[_Component],
    order: int,
    lhs_scale: MPoly | None = None,
    rhs_scale: MPoly | None = None,
) -> _Sides:
    big = ONE
    for comp in lhs_parts + rhs_parts:
        for n in range(order + 1):
            big = _upoly_lcm(big, comp.den(n))

    def cleared(parts: list[_Component]) -> list[MPoly]:
        rows = []
        for comp in parts:
            row = []
            for n in range(order + 1):
                num = comp.num(n)
                row.append(MPoly() if num.is_zero else num * big.divexact(comp.den(n)))
            rows.append(row)
        acc = rows[0]
        for nxt in rows[1:]:
            acc = _poly_convolve(acc, nxt)
        return acc

    lhs, rhs = cleared(lhs_parts), cleared(rhs_parts)
    depth = max(len(lhs_parts), len(rhs_parts))
    for _ in range(depth - len(lhs_parts)):
        lhs = [c * big for c in lhs]
    for _ in range(depth - len(rhs_parts)):
        rhs = [c * big for c in rhs]
    if lhs_scale is not None:
        lhs = [c * lhs_scale for c in lhs]
    if rhs_scale is not None:
        rhs = [c * rhs_scale for c in rhs]
    big_total = big**depth
    return _Sides(lhs, rhs, big_total)


def _poly_convolve(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    out = []
    for m in range(len(a)):
        acc = MPoly()
        for k in range(m + 1):
            if a[k].is_zero or b[m - k].is_zero:
                continue
            acc = acc + a[k] * b[m - k]
        out.append(acc)
    return out


def _gf_sides(ident: str, order: int) -> _Sides:
    one = MPoly.const(1)
    if ident == "1.8":
        return _build_sides(
            [_exp_component("exp", one), _exp_component("Exp", -one)],
            [_Component(lambda n: one if n == 0 else MPoly(), lambda n: ONE)],
            order,
        )
    if ident == "1.12":
        return _build_sides(
            [_exp_component("e", one, zpow=2, base=2)],
            [_exp_component("e", -one), _exp_component("e", one)],
            order,
        )
    if ident == "1.14":
        return _build_sides(
            [_data_component(lambda n: rs(n), 1)],
            [_exp_component("e", one), _exp_component("e", S)],
            order,
        )
    if ident == "1.16":
        return _build_sides(
            [_data_component(lambda n: poch_mpoly(S, n, 1), 1), _exp_component("e", S)],
            [_exp_component("e", one)],
            order,
        )
    if ident == "1.22":
        def even_num(m: int) -> MPoly:
            return MPoly() if m % 2 else MPoly.const(QRat.of(qpoch(Q, m // 2, 2)))

        return _build_sides(
            [_exp_component("exp", one), _exp_component("exp", -one)],
            [_Component(even_num, lambda m: ONE if m % 2 else q_factorial(m))],
            order,
        )
    if ident in ("1.25", "1.25-neg"):
        shift = q_const(1) if ident == "1.25" else q_const(2)
        return _build_sides(
            [_exp_component("e", shift, base=2), _exp_component("e", one, base=2)],
            [_exp_component("e", one)],
            order,
        )
    if ident == "1.27":
        return _build_sides(
            [_data_component(lambda n: rs(2 * n), 2), _exp_component("e", -S)],
            [_exp_component("e", S * S, base=2), _exp_component("e", one, base=2)],
            order,
        )
    if ident == "1.28":
        return _build_sides(
            [_data_component(lambda n: rs(2 * n + 1), 2), _exp_component("e", -q_const(1) * S)],
            [_exp_component("e", S * S, base=2), _exp_component("e", one, base=2)],
            order,
            rhs_scale=one + S,
        )
    if ident == "1.33":
        return _build_sides(
            [_data_component(lambda n: rs(n, 2), 1), _exp_component("e", q_const(1) * S, zpow=2, base=2)],
            [_exp_component("e", S), _exp_component("e", one)],
            order,
        )
    if ident == "2.47":
        from .normalized import h_cleared

        return _build_sides(
            [_data_component(h_cleared, 1), _exp_component("e", q_const(1) * S * T, zpow=2, base=2)],
            [_exp_component("e", S), _exp_component("e", one)],
            order,
        )
    if ident == "2.63":
        from .normalized import H_cleared

        return _build_sides(
            [_data_component(H_cleared, 2), _exp_component("e", S * T)],
            [_exp_component("e", S * S, base=2), _exp_component("e", one, base=2)],
            order,
        )
    raise UnknownIdentity(ident)


def _true_coeff(cleared: MPoly, sides: _Sides) -> MPoly:
    """Undo the clearing scale on one coefficient, for failure reports."""
    return cleared * MPoly.const(QRat.of(1, sides.q_den))


def gf_check(ident: str, order: int = 12) -> SeriesRow:
    """Verify one generating-function identity through the given order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    sides = _gf_sides(ident, order)
    miss = None
    for m in range(order + 1):
        if not (sides.lhs[m] == sides.rhs[m]):
            miss = m
            break
    if miss is None:
        return SeriesRow(ident, order, True)
    return SeriesRow(
        ident, order, False,
        first_failing_order=miss,
        lhs_coeff=_true_coeff(sides.lhs[miss], sides),
        rhs_coeff=_true_coeff(sides.rhs[miss], sides),
    )


GF_IDS = (
    "1.8", "1.12", "1.14", "1.16", "1.22", "1.25", "1.27", "1.28",
    "1.33", "2.47", "2.63", "1.25-neg",
)
