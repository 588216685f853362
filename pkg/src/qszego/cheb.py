"""q-Chebyshev polynomials of three kinds and product factorizations.

Each kind is an MPoly in (x, s) with exact q-coefficients, built from
its three-term recurrence (the source of truth); the closed sums are
verified against it.  The factorization checks compare alternating and
odd-power evaluations of the base polynomials with Pochhammer-times-
Chebyshev products, all as exact q-rational constants.
"""

from __future__ import annotations

from .exactalg import MPoly, Q, QRat, S, UnknownIdentity, UPoly, X
from .qfun import gauss_binomial, qpoch
from .report import CheckRow
from .rogers import q_const, rs

_caches: dict[str, list[MPoly]] = {"U": [], "T": [], "V": []}


def _extend(kind: str, m: int) -> None:
    rows = _caches[kind]
    if not rows:
        if kind == "U":
            rows.append(MPoly.const(1))
            rows.append((MPoly.const(1) + q_const(1)) * X)
        elif kind == "T":
            rows.append(MPoly.const(1))
            rows.append(X)
        else:
            rows.append(MPoly.const(1))
            rows.append((MPoly.const(1) + q_const(1)) * X + q_const(1) * S)
    while len(rows) <= m:
        k = len(rows)
        if kind == "U":
            nxt = (1 + q_const(k)) * X * rows[k - 1] + q_const(k - 1) * S * rows[k - 2]
        elif kind == "T":
            nxt = (1 + q_const(k - 1)) * X * rows[k - 1] + q_const(k - 1) * S * rows[k - 2]
        else:
            nxt = (1 + q_const(2 * k - 1)) * X * rows[k - 1] - q_const(2 * k - 1) * S * S * rows[k - 2]
        rows.append(nxt)


def cheb_u(m: int) -> MPoly:
    """Second-kind polynomial U_m(x, s, q); U_{-1} = 0."""
    if m < -1:
        raise ValueError("index must be at least -1")
    if m == -1:
        return MPoly()
    _extend("U", m)
    return _caches["U"][m]


def cheb_t(m: int) -> MPoly:
    """First-kind polynomial T_m(x, s, q)."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    _extend("T", m)
    return _caches["T"][m]


def cheb_v(m: int) -> MPoly:
    """Third-kind polynomial V_m(x, s, q)."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    _extend("V", m)
    return _caches["V"][m]


def _q_int(n: int) -> UPoly:
    """The q-integer [n] = 1 + q + ... + q^(n-1)."""
    return UPoly({2 * i: 1 for i in range(n)})


def u_closed(n: int) -> MPoly:
    """sum_k q^(k^2) [n-k k] (-q^(k+1); q)_(n-2k) s^k x^(n-2k)."""
    out = MPoly()
    for k in range(n // 2 + 1):
        c = (
            UPoly({2 * k * k: 1})
            * gauss_binomial(n - k, k)
            * qpoch(UPoly({2 * (k + 1): -1}), n - 2 * k, 1)
        )
        out = out + MPoly.term(QRat.of(c), s=k, x=n - 2 * k)
    return out


def t_closed(n: int) -> MPoly:
    """sum_k q^(k^2) [n]/[n-k] [n-k k] (-q; q)_(n-1) /
    ((-q; q)_k (-q^(n-k); q)_k) s^k x^(n-2k)."""
    if n == 0:
        return MPoly.const(1)
    neg_q = UPoly({2: -1})
    out = MPoly()
    for k in range(n // 2 + 1):
        num = (
            UPoly({2 * k * k: 1})
            * _q_int(n)
            * gauss_binomial(n - k, k)
            * qpoch(neg_q, n - 1, 1)
        )
        den = (
            _q_int(n - k)
            * qpoch(neg_q, k, 1)
            * qpoch(UPoly({2 * (n - k): -1}), k, 1)
        )
        out = out + MPoly.term(QRat.of(num, den), s=k, x=n - 2 * k)
    return out


def _neg_q_poch(n: int) -> UPoly:
    return qpoch(UPoly({2: -1}), n, 1)


CHECK_IDS = ("2.9", "2.11", "2.15", "2.16", "2.17", "2.15-neg")


def check(ident: str, n: int, m: int = 0) -> CheckRow:
    """Verify one catalog identity at (n, m) and return its report row."""
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    params = {"n": n} if ident in ("2.9", "2.11") else {"n": n, "m": m}
    if ident == "2.9":
        lhs, rhs = cheb_u(n), u_closed(n)
    elif ident == "2.11":
        lhs, rhs = cheb_t(n), t_closed(n)
    elif ident in ("2.15", "2.15-neg"):
        lhs = rs(2 * n).subst(s=q_const(m, -1))
        poch = _neg_q_poch(n) if ident.endswith("neg") else qpoch(Q, n, 2)
        rhs = MPoly.const(QRat.of(poch)) * cheb_t(m).subst(x=1, s=q_const(2 * n, -1))
    elif ident == "2.16":
        if n == 0:
            return CheckRow(ident, params, witness="skipped: defined for n >= 1")
        lhs = rs(2 * n - 1).subst(s=q_const(m, -1))
        rhs = MPoly.const(QRat.of(qpoch(Q, n, 2))) * cheb_u(m - 1).subst(
            x=1, s=q_const(2 * n, -1)
        )
    elif ident == "2.17":
        lhs = rs(n, 2).subst(s=q_const(2 * m + 1))
        rhs = MPoly.const(QRat.of(_neg_q_poch(n))) * cheb_v(m).subst_q_negate().subst(
            x=1, s=q_const(n, -1)
        )
    else:
        raise UnknownIdentity(ident)
    return CheckRow(ident, params, lhs == rhs, expected=rhs, computed=lhs)
