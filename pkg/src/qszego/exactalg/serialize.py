"""Canonical JSON encoding and pretty printing for exact values.

A polynomial value becomes a sorted array of rows [u_exp, s_exp, t_exp,
x_exp, "coeff"] with integer coefficients rendered as decimal strings (u
is the internal square root of q, so q^k sits at u_exp 2k).  A quotient
becomes {"num": rows, "den": rows} after clearing every coefficient
denominator, so the same value always encodes to the same bytes.
"""

from __future__ import annotations

from fractions import Fraction

from .mpoly import MPoly
from .mrat import MRat
from .qrat import QRat
from .upoly import ONE, UPoly, upoly_gcd


def _upoly_rows(p: UPoly, s: int = 0, t: int = 0, x: int = 0) -> list:
    return [[e, s, t, x, str(c)] for e, c in sorted(p.terms())]


def _mpoly_rows(p: MPoly) -> list:
    rows = []
    for (s, t, x) in sorted(p._c):
        rows.extend(_upoly_rows(p._c[(s, t, x)].as_upoly(), s, t, x))
    rows.sort(key=lambda r: (r[1], r[2], r[3], r[0]))
    return rows


def _coeff_lcm(polys) -> UPoly:
    acc = ONE
    for p in polys:
        for v in p._c.values():
            d = v.den
            if d.degree_u > 0 or d.lead_coeff != 1:
                acc = acc.divexact(upoly_gcd(acc, d)) * d
    return acc


def to_json_value(v):
    """Encode an exact value (or plain report scalar) to JSON data."""
    if isinstance(v, UPoly):
        return _upoly_rows(v)
    if isinstance(v, QRat):
        if v.is_polynomial:
            return _upoly_rows(v.num)
        return {"num": _upoly_rows(v.num), "den": _upoly_rows(v.den)}
    if isinstance(v, MPoly):
        clear = _coeff_lcm([v])
        if clear == ONE:
            return _mpoly_rows(v)
        return {"num": _mpoly_rows(v * clear), "den": _upoly_rows(clear)}
    if isinstance(v, MRat):
        num, den = v.num, v.den_poly
        clear = _coeff_lcm([num, den])
        if clear != ONE:
            num = num * clear
            den = den * clear
        if den == MPoly.const(1):
            return _mpoly_rows(num)
        return {"num": _mpoly_rows(num), "den": _mpoly_rows(den)}
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (bool, int, str, float)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [to_json_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): to_json_value(x) for k, x in v.items()}
    raise TypeError(f"cannot encode {type(v).__name__}")


# -- pretty printing ----------------------------------------------------------


def _q_power_str(e: int) -> str:
    if e == 0:
        return ""
    if e == 2:
        return "q"
    if e % 2 == 0:
        return f"q^{e // 2}"
    return f"q^({e}/2)"


def format_upoly(p: UPoly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for e, c in sorted(p.terms()):
        qs = _q_power_str(e)
        if not qs:
            piece = str(c)
        elif c == 1:
            piece = qs
        elif c == -1:
            piece = f"-{qs}"
        else:
            piece = f"{c}*{qs}"
        parts.append(piece)
    return " + ".join(parts).replace("+ -", "- ")


def format_qrat(r: QRat) -> str:
    if r.is_polynomial:
        return format_upoly(r.num)
    return f"({format_upoly(r.num)})/({format_upoly(r.den)})"


def _monomial_str(s: int, t: int, x: int) -> str:
    parts = []
    for name, e in (("s", s), ("t", t), ("x", x)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_mpoly(p: MPoly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for (s, t, x) in sorted(p._c):
        c = p._c[(s, t, x)]
        cs = format_qrat(c)
        mono = _monomial_str(s, t, x)
        if not mono:
            piece = f"({cs})" if " " in cs else cs
        elif cs == "1":
            piece = mono
        elif cs == "-1":
            piece = f"-{mono}"
        elif " " in cs or "/" in cs:
            piece = f"({cs})*{mono}"
        else:
            piece = f"{cs}*{mono}"
        parts.append(piece)
    return " + ".join(parts).replace("+ -", "- ")


def format_mrat(r: MRat) -> str:
    num = format_mpoly(r.num)
    if r.is_polynomial:
        return num
    dens = []
    for f, m in r.den_factors:
        fs = format_mpoly(f)
        dens.append(f"({fs})" if m == 1 else f"({fs})^{m}")
    return f"({num})/{'*'.join(dens)}"
