"""Normalized families f, F and their two-parameter generalizations h, H.

f(n) and F(n) are MPoly values in s whose coefficients carry the exact
q-Pochhammer normalizers as QRat denominators.  h(n) and H(n) are
rational in t: the cleared polynomial forms h(n)*(-qt; q)_n and
H(n)*(q t^2; q^2)_n are memoized MPoly values in (s, t), and the MRat
views attach the factored denominators.
"""

from __future__ import annotations

from .exactalg import MPoly, MRat, QRat, S, T, UPoly
from .exactalg.upoly import ONE as ONE_U, Q
from .exactalg.errors import UnknownIdentity
from .qfun import gauss_binomial, qpoch
from .report import CheckRow
from .rogers import q_const, rs, rs_squared_arg

_caches: dict[str, dict[int, MPoly]] = {"f": {}, "F": {}, "h": {}, "H": {}}


def _neg_q_poch(n: int):
    """(-q; q)_n as a UPoly."""
    return qpoch(UPoly({2: -1}), n, 1)


def _q_q2_poch(n: int):
    """(q; q^2)_n as a UPoly."""
    return qpoch(Q, n, 2)


def f_norm(n: int) -> MPoly:
    """f(n, s, q) = r_n(s, q^2) / (-q; q)_n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    got = _caches["f"].get(n)
    if got is None:
        got = rs(n, 2) * MPoly.const(QRat.of(1, _neg_q_poch(n)))
        _caches["f"][n] = got
    return got


def F_norm(n: int) -> MPoly:
    """F(n, s, q) = r_n(-s, q) / (q; q^2)_floor((n+1)/2)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    got = _caches["F"].get(n)
    if got is None:
        got = rs(n).subst(s=-S) * MPoly.const(QRat.of(1, _q_q2_poch((n + 1) // 2)))
        _caches["F"][n] = got
    return got


def h_t_den(n: int) -> MPoly:
    """(-qt; q)_n = prod_{i=1}^{n} (1 + q^i t)."""
    out = MPoly.const(1)
    for i in range(1, n + 1):
        out = out * (MPoly.const(1) + q_const(i) * T)
    return out


def H_t_den(n: int) -> MPoly:
    """(q t^2; q^2)_n = prod_{i=0}^{n-1} (1 - q^(2i+1) t^2)."""
    out = MPoly.const(1)
    for i in range(n):
        out = out * (MPoly.const(1) - q_const(2 * i + 1) * T * T)
    return out


def h_cleared(n: int) -> MPoly:
    """h(n, s, t, q) * (-qt; q)_n, a polynomial in (s, t)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    got = _caches["h"].get(n)
    if got is None:
        got = MPoly()
        for j in range(n + 1):
            term = MPoly.const((-1) ** j) * gauss_binomial(n, j)
            for i in range(j):
                term = term * (q_const(2 * i + 1) * T - S)
            for i in range(j + 1, n + 1):
                term = term * (MPoly.const(1) + q_const(i) * T)
            got = got + term
        _caches["h"][n] = got
    return got


def H_cleared(n: int) -> MPoly:
    """H(n, s, t, q) * (q t^2; q^2)_n, a polynomial in (s, t)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    got = _caches["H"].get(n)
    if got is None:
        got = MPoly()
        for j in range(n + 1):
            term = MPoly.const(1) * gauss_binomial(n, j, 2)
            for i in range(2 * j):
                term = term * (q_const(i) * T - S)
            for i in range(j, n):
                term = term * (MPoly.const(1) - q_const(2 * i + 1) * T * T)
            got = got + term
        _caches["H"][n] = got
    return got


def h_general(n: int) -> MRat:
    """h(n, s, t, q) as a rational function with factored denominator."""
    factors = tuple(
        (MPoly.const(1) + q_const(i) * T, 1) for i in range(1, n + 1)
    )
    return MRat(h_cleared(n), factors)


def H_general(n: int) -> MRat:
    """H(n, s, t, q) as a rational function with factored denominator."""
    factors = tuple(
        (MPoly.const(1) - q_const(2 * i + 1) * T * T, 1) for i in range(n)
    )
    return MRat(H_cleared(n), factors)


def _theorem_sum_f(n: int) -> MPoly:
    """sum_j (-1)^j [n j]_q prod_{i<j}(q^(2i+1) - s) / (-q; q)_j,
    cleared by (-q; q)_n so coefficients stay integer polynomials."""
    suffix = [ONE_U] * (n + 2)
    for j in range(n - 1, -1, -1):
        suffix[j] = UPoly({0: 1, 2 * (j + 1): 1}) * suffix[j + 1]
    out = MPoly()
    for j in range(n + 1):
        term = MPoly.const(QRat.of(gauss_binomial(n, j) * suffix[j] * (-1) ** j))
        for i in range(j):
            term = term * (q_const(2 * i + 1) - S)
        out = out + term
    return out


def _theorem_sum_F_even(n: int) -> MPoly:
    """sum_k [n k]_{q^2} prod_{j=0}^{2k-1}(q^j - s) / (q; q^2)_k,
    cleared by (q; q^2)_n so coefficients stay integer polynomials."""
    suffix = [ONE_U] * (n + 2)
    for k in range(n - 1, -1, -1):
        suffix[k] = UPoly({0: 1, 2 * (2 * k + 1): -1}) * suffix[k + 1]
    out = MPoly()
    for k in range(n + 1):
        term = MPoly.const(QRat.of(gauss_binomial(n, k, 2) * suffix[k]))
        for j in range(2 * k):
            term = term * (q_const(j) - S)
        out = out + term
    return out


def _theorem_sum_F_odd(n: int) -> MPoly:
    """sum_k [n k]_{q^2} prod_{j=0}^{2k}(q^j - s) / (q; q^2)_{k+1},
    cleared by (q; q^2)_{n+1} so coefficients stay integer polynomials."""
    suffix = [ONE_U] * (n + 2)
    for k in range(n - 1, -1, -1):
        suffix[k] = UPoly({0: 1, 2 * (2 * k + 3): -1}) * suffix[k + 1]
    out = MPoly()
    for k in range(n + 1):
        term = MPoly.const(QRat.of(gauss_binomial(n, k, 2) * suffix[k]))
        for j in range(2 * k + 1):
            term = term * (q_const(j) - S)
        out = out + term
    return out


def kupershmidt_value(ident: str, n: int, m: int, mutate: bool = False) -> QRat:
    """The closed-form value of f/F at s = q-power, as a QRat."""
    total = QRat.of(0)
    if ident == "2.6":
        for j in range(m + 1):
            term = (
                QRat.q_power(j * j + (1 if mutate else 0)) * ((-1) ** j)
                * QRat.of(gauss_binomial(m, j, 2))
                * qpoch(QRat.q_power(n - j + 1), j, 1)
            )
            total = total + term
    elif ident == "2.7":
        for k in range(m // 2 + 1):
            kk = 2 * k
            term = (
                QRat.q_power(kk * (kk - 1) // 2)
                * QRat.of(gauss_binomial(m, kk))
                * qpoch(QRat.q_power(2 * n - 2 * k + 2), k, 2)
            )
            total = total + term
    elif ident == "2.8":
        for k in range((m - 1) // 2 + 1 if m >= 1 else 0):
            kk = 2 * k + 1
            term = (
                QRat.q_power(kk * (kk - 1) // 2)
                * QRat.of(gauss_binomial(m, kk))
                * qpoch(QRat.q_power(2 * n - 2 * k + 2), k, 2)
            )
            total = total + term
    else:
        raise UnknownIdentity(ident)
    return total


def _h_expansion_sum(n: int) -> MPoly:
    """sum_j (-1)^j q^(j^2) (q;q^2)_j [n 2j]_q (st)^j r_(n-2j)(s, q)."""
    out = MPoly()
    for j in range(n // 2 + 1):
        term = (
            q_const(j * j, (-1) ** j)
            * MPoly.const(QRat.of(_q_q2_poch(j)))
            * gauss_binomial(n, 2 * j)
            * MPoly.term(1, s=j, t=j)
            * rs(n - 2 * j)
        )
        out = out + term
    return out


def _H_expansion_sum(n: int) -> MPoly:
    """sum_j (-1)^j q^C(j,2) (-q;q)_j [n j]_{q^2} (st)^j r_(n-j)(s^2, q^2)."""
    out = MPoly()
    for j in range(n + 1):
        term = (
            q_const(j * (j - 1) // 2, (-1) ** j)
            * MPoly.const(QRat.of(_neg_q_poch(j)))
            * gauss_binomial(n, j, 2)
            * MPoly.term(1, s=j, t=j)
            * rs_squared_arg(n - j)
        )
        out = out + term
    return out


def check(ident: str, n: int, m: int = 0) -> CheckRow:
    """Verify one catalog identity at (n, m) and return its report row."""
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    params = {"n": n, "m": m} if ident in ("2.6", "2.7", "2.8", "2.6-neg") else {"n": n}
    if ident == "2.3":
        lhs, rhs = rs(n, 2), _theorem_sum_f(n)
    elif ident == "2.4":
        lhs, rhs = rs(2 * n).subst(s=-S), _theorem_sum_F_even(n)
    elif ident == "2.5":
        lhs, rhs = rs(2 * n + 1).subst(s=-S), _theorem_sum_F_odd(n)
    elif ident in ("2.6", "2.6-neg"):
        lhs = f_norm(n).subst(s=q_const(2 * m + 1))
        rhs = MPoly.const(kupershmidt_value("2.6", n, m, mutate=ident.endswith("neg")))
    elif ident == "2.7":
        lhs = F_norm(2 * n).subst(s=q_const(m))
        rhs = MPoly.const(kupershmidt_value("2.7", n, m))
    elif ident == "2.8":
        lhs = F_norm(2 * n + 1).subst(s=q_const(m))
        rhs = MPoly.const(kupershmidt_value("2.8", n, m))
    elif ident == "2.46-rec":
        lhs = h_general(n)
        if n == 0:
            rhs = MRat.of(1)
        else:
            rec = MRat.of(MPoly.const(1) + S) * h_general(n - 1)
            if n >= 2:
                rec = rec + MRat.of((q_const(n - 1) - 1) * S) * h_general(n - 2)
            den = MRat(MPoly.const(1), ((MPoly.const(1) + q_const(n) * T, 1),))
            rhs = rec * den
    elif ident == "2.46-exp":
        lhs, rhs = h_cleared(n), _h_expansion_sum(n)
    elif ident == "2.61-rec":
        lhs = H_general(n)
        if n == 0:
            rhs = MRat.of(1)
        else:
            rec = MRat.of(
                MPoly.const(1) + S * S - q_const(2 * n - 2) * (1 + Q) * S * T
            ) * H_general(n - 1)
            if n >= 2:
                rec = rec - MRat.of((1 - q_const(2 * n - 2)) * S * S) * H_general(n - 2)
            den = MRat(
                MPoly.const(1),
                ((MPoly.const(1) - q_const(2 * n - 1) * T * T, 1),),
            )
            rhs = rec * den
    elif ident == "2.62":
        lhs, rhs = H_cleared(n), _H_expansion_sum(n)
    else:
        raise UnknownIdentity(ident)
    ok = lhs == rhs
    return CheckRow(
        ident, params, ok, expected=lhs, computed=rhs,
        witness=None if ok else lhs - rhs,
    )


CHECK_IDS = (
    "2.3", "2.4", "2.5", "2.6", "2.7", "2.8",
    "2.46-rec", "2.46-exp", "2.61-rec", "2.62", "2.6-neg",
)
