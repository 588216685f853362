"""Rogers-Szego polynomials r_n(s, q) = sum_j [n j]_q s^j and their
classical identity suite.

Each polynomial is an MPoly in the symbol s whose coefficients are
Gaussian binomials of the requested base, so identity checks reduce to
exact equality of big-integer coefficient tables.  Identities whose
printed form divides by powers of s are checked in the equivalent
s-cleared polynomial form.
"""

from __future__ import annotations

from fractions import Fraction

from .exactalg import MPoly, QRat, S, UPoly, X
from .exactalg.upoly import Q, ZERO
from .exactalg.errors import UnknownIdentity
from .qfun import gauss_binomial, qpoch
from .report import CheckRow

_rs_cache: dict[tuple[int, Fraction], MPoly] = {}


def q_const(e: int | Fraction, c: int = 1) -> MPoly:
    """The constant MPoly c*q^e (e may be negative or half-integer)."""
    return MPoly.const(QRat.q_power(e) * c)


def rs(n: int, base: int | Fraction = 1) -> MPoly:
    """r_n(s, q^base) as an MPoly in s."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    key = (n, Fraction(base))
    got = _rs_cache.get(key)
    if got is None:
        got = MPoly()
        for j in range(n + 1):
            got = got + MPoly.term(1, s=j) * gauss_binomial(n, j, base)
        _rs_cache[key] = got
    return got


def _rs_or_zero(n: int, base: int | Fraction = 1) -> MPoly:
    return MPoly() if n < 0 else rs(n, base)


def rs_squared_arg(n: int, base: int | Fraction = 2) -> MPoly:
    """r_n(s^2, q^base): the base-`base` polynomial evaluated at s := s^2."""
    return rs(n, base).subst(s=S * S)


def poch_mpoly(a: MPoly, n: int, base: int | Fraction = 1) -> MPoly:
    """prod_{i=0}^{n-1} (1 - a * q^(base*i)) for an MPoly argument a."""
    out = MPoly.const(1)
    for i in range(n):
        out = out * (MPoly.const(1) - a * q_const(base * i))
    return out


def _shifted_s_product(k: int) -> MPoly:
    """prod_{i=0}^{k-1} (s + q^(2i+1)): the s-cleared form of s^(2k) (-q/s; q^2)_k."""
    out = MPoly.const(1)
    for i in range(k):
        out = out * (S + q_const(2 * i + 1))
    return out


def _alternating_binomial_sum(n: int, signed: bool = True) -> UPoly:
    """sum_k (-1)^k [n k]_q, or the unsigned sum when signed is False."""
    total = ZERO
    for k in range(n + 1):
        term = gauss_binomial(n, k)
        total = total - term if (signed and k % 2) else total + term
    return total


def _neg_q() -> UPoly:
    return UPoly({2: -1})


def check(ident: str, n: int) -> CheckRow:
    """Verify one catalog identity at index n and return its report row."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    params = {"n": n}
    if ident == "1.19":
        lhs = rs(n)
        rhs = (
            (MPoly.const(1) + S) * _rs_or_zero(n - 1)
            + (q_const(n - 1) - 1) * S * _rs_or_zero(n - 2)
        )
        if n == 0:
            rhs = MPoly.const(1)
    elif ident == "1.20":
        if n < 2:
            return CheckRow(ident, params, True, witness="skipped: defined for n >= 2")
        lhs = rs(n)
        rhs = (
            MPoly.const(1) + q_const(n - 2) * (1 + Q) * S + S * S
        ) * _rs_or_zero(n - 2)
        if n >= 4:
            rhs = rhs - (
                (1 - q_const(n - 3)) * (1 - q_const(n - 2)) * S * S * _rs_or_zero(n - 4)
            )
    elif ident == "1.21":
        lhs = (_alternating_binomial_sum(2 * n), _alternating_binomial_sum(2 * n + 1))
        rhs = (qpoch(Q, n, 2), ZERO)
        ok = lhs[0] == rhs[0] and lhs[1] == rhs[1]
        return CheckRow(
            ident, params, ok, expected=list(rhs), computed=list(lhs),
            witness=None if ok else [lhs[0] - rhs[0], lhs[1] - rhs[1]],
        )
    elif ident == "1.21-neg":
        lhs = (_alternating_binomial_sum(2 * n, signed=False),)
        rhs = (qpoch(Q, n, 2),)
        ok = lhs[0] == rhs[0]
        return CheckRow(
            ident, params, ok, expected=list(rhs), computed=list(lhs),
            witness=None if ok else lhs[0] - rhs[0],
        )
    elif ident == "1.23":
        lhs = rs(n).subst(s=q_const(1, -1))
        rhs = MPoly.const(QRat.of(qpoch(Q, (n + 1) // 2, 2)))
    elif ident == "1.26":
        lhs = rs(n, 2).subst(s=q_const(1))
        rhs = MPoly.const(QRat.of(qpoch(_neg_q(), n, 1)))
    elif ident == "1.29":
        lhs = rs(2 * n)
        rhs = MPoly()
        for k in range(n + 1):
            rhs = rhs + (
                MPoly.const(QRat.of(qpoch(_neg_q(), k, 1)))
                * q_const(k * (k - 1) // 2)
                * MPoly.term(1, s=k)
                * gauss_binomial(n, k, 2)
                * rs_squared_arg(n - k)
            )
    elif ident == "1.30":
        lhs = rs(2 * n + 1)
        rhs = MPoly()
        for k in range(n + 1):
            rhs = rhs + (
                MPoly.const(QRat.of(qpoch(_neg_q(), k, 1)))
                * q_const(k * (k + 1) // 2)
                * MPoly.term(1, s=k)
                * gauss_binomial(n, k, 2)
                * rs_squared_arg(n - k)
            )
        rhs = (MPoly.const(1) + S) * rhs
    elif ident == "1.31":
        lhs = rs(2 * n)
        rhs = MPoly()
        for k in range(n + 1):
            rhs = rhs + (
                MPoly.term(1, s=k)
                * _shifted_s_product(k)
                * poch_mpoly(-S, n - k, 2)
                * gauss_binomial(n, k, 2)
            )
    elif ident == "1.32":
        lhs = rs(2 * n + 1)
        rhs_a = MPoly()
        rhs_b = MPoly()
        for k in range(n + 1):
            common = MPoly.term(1, s=k) * _shifted_s_product(k) * gauss_binomial(n, k, 2)
            rhs_a = rhs_a + common * poch_mpoly(-S, n + 1 - k, 2)
            rhs_b = rhs_b + common * poch_mpoly(q_const(2, -1) * S, n - k, 2)
        rhs_b = (MPoly.const(1) + S) * rhs_b
        ok = lhs == rhs_a and lhs == rhs_b
        return CheckRow(
            ident, params, ok, expected=lhs, computed=[rhs_a, rhs_b],
            witness=None if ok else [lhs - rhs_a, lhs - rhs_b],
        )
    elif ident == "1.34":
        lhs = rs(n, 2)
        rhs = MPoly()
        for j in range(n // 2 + 1):
            term = (
                q_const(j * j, (-1) ** j)
                * MPoly.const(QRat.of(qpoch(Q, j, 2)))
                * gauss_binomial(n, 2 * j)
                * MPoly.term(1, s=j)
                * _rs_or_zero(n - 2 * j)
            )
            rhs = rhs + term
    elif ident == "1.35":
        lhs = rs(n, 2)
        rhs = MPoly()
        for j in range(n // 2 + 1):
            tail = MPoly.const(1)
            for i in range(n - 2 * j):
                tail = tail * (S + q_const(i))
            rhs = rhs + (
                gauss_binomial(n, 2 * j)
                * MPoly.const(QRat.of(qpoch(Q, j, 2)))
                * poch_mpoly(q_const(1) * S, j, 2)
                * tail
            )
    elif ident == "1.36":
        even = MPoly()
        for k in range(2 * n + 1):
            term = poch_mpoly(-S, k, 1) * gauss_binomial(2 * n, k) * rs(2 * n - k, 2)
            even = even - term if k % 2 else even + term
        odd = MPoly()
        for k in range(2 * n + 2):
            term = (
                poch_mpoly(-S, k, 1)
                * gauss_binomial(2 * n + 1, k)
                * rs(2 * n + 1 - k, 2)
            )
            odd = odd - term if k % 2 else odd + term
        expected_even = MPoly.const(QRat.of(qpoch(Q, n, 2))) * poch_mpoly(
            q_const(1) * S, n, 2
        )
        ok = even == expected_even and odd == MPoly()
        return CheckRow(
            ident, params, ok, expected=[expected_even, MPoly()],
            computed=[even, odd],
            witness=None if ok else [even - expected_even, odd],
        )
    elif ident == "2.14":
        lhs = rs(n).subst(s=q_const(2) * X)
        rhs = (MPoly.const(1) - q_const(1) * X) * rs(n).subst(s=q_const(1) * X) + (
            q_const(n + 1) * X * rs(n).subst(s=X)
        )
    elif ident == "2.59":
        lhs = (S * S + 1) * rs_squared_arg(n, 1)
        rhs = rs_squared_arg(n + 1, 1) + (1 - q_const(n)) * S * S * (
            rs_squared_arg(n - 1, 1) if n >= 1 else MPoly()
        )
    else:
        raise UnknownIdentity(ident)
    ok = lhs == rhs
    return CheckRow(
        ident, params, ok, expected=lhs, computed=rhs,
        witness=None if ok else lhs - rhs,
    )


CHECK_IDS = (
    "1.19", "1.20", "1.21", "1.23", "1.26", "1.29", "1.30", "1.31",
    "1.32", "1.34", "1.35", "1.36", "2.14", "2.59", "1.21-neg",
)
