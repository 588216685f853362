"""Sparse multivariate polynomials in the symbols (s, t, x) over Q(q).

An MPoly maps exponent triples (s_exp, t_exp, x_exp) to QRat coefficients;
zero coefficients are never stored and the zero polynomial is the empty
map.  Substituting s = t = x = 1 therefore always yields a QRat.

Monomial order everywhere is lex on the exponent triple; exact division by
a single divisor uses it and aborts at the first leading term that proves a
nonzero remainder.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .errors import NotDivisible, ZeroPolynomial
from .qrat import QRat
from .upoly import ONE as U_ONE
from .upoly import UPoly

SYMBOLS = ("s", "t", "x")
Expo = tuple[int, int, int]
Scalar = Union[int, UPoly, QRat]


def _as_qrat(v: Scalar | Fraction) -> QRat:
    if isinstance(v, QRat):
        return v
    if isinstance(v, Fraction):
        return QRat.from_fraction(v)
    return QRat.of(v)


def _clean(c: dict[Expo, QRat]) -> dict[Expo, QRat]:
    return {e: v for e, v in c.items() if not v.is_zero}


class MPoly:
    """Polynomial in (s, t, x) with QRat coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Expo, QRat] | None = None):
        self._c = _clean(dict(coeffs)) if coeffs else {}

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(v: Scalar | Fraction) -> "MPoly":
        q = _as_qrat(v)
        out = MPoly.__new__(MPoly)
        out._c = {} if q.is_zero else {(0, 0, 0): q}
        return out

    @staticmethod
    def sym(name: str) -> "MPoly":
        e = [0, 0, 0]
        e[SYMBOLS.index(name)] = 1
        return MPoly({tuple(e): QRat.of(1)})

    @staticmethod
    def term(coeff: Scalar | Fraction, s: int = 0, t: int = 0, x: int = 0) -> "MPoly":
        q = _as_qrat(coeff)
        out = MPoly.__new__(MPoly)
        out._c = {} if q.is_zero else {(s, t, x): q}
        return out

    # -- inspection ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {(0, 0, 0)}

    def degree(self, name: str) -> int:
        """Degree in one symbol, -1 for the zero polynomial."""
        if not self._c:
            return -1
        i = SYMBOLS.index(name)
        return max(e[i] for e in self._c)

    def uses(self, name: str) -> bool:
        i = SYMBOLS.index(name)
        return any(e[i] for e in self._c)

    def coeff(self, s: int = 0, t: int = 0, x: int = 0) -> QRat:
        return self._c.get((s, t, x), QRat.of(0))

    def coeffs_in(self, name: str) -> dict[int, "MPoly"]:
        """Split by the power of one symbol; values do not contain it."""
        i = SYMBOLS.index(name)
        out: dict[int, dict[Expo, QRat]] = {}
        for e, v in self._c.items():
            rest = list(e)
            k = rest[i]
            rest[i] = 0
            out.setdefault(k, {})[tuple(rest)] = v
        return {k: MPoly(d) for k, d in sorted(out.items())}

    def as_qrat(self) -> QRat:
        if not self._c:
            return QRat.of(0)
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return self._c[(0, 0, 0)]

    def as_upoly(self) -> UPoly:
        return self.as_qrat().as_upoly()

    def lead(self) -> tuple[Expo, QRat]:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no leading term")
        e = max(self._c)
        return e, self._c[e]

    def _key(self):
        return tuple(sorted((e, v._key()) for e, v in self._c.items()))

    # -- arithmetic -----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, UPoly, QRat, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._c == other._c

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "MPoly":
        out = MPoly.__new__(MPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __add__(self, other) -> "MPoly":
        if isinstance(other, (int, UPoly, QRat, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            nv = c.get(e)
            nv = v if nv is None else nv + v
            if nv.is_zero:
                c.pop(e, None)
            else:
                c[e] = nv
        out = MPoly.__new__(MPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        if isinstance(other, (int, UPoly, QRat, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, UPoly, QRat, Fraction)):
            q = _as_qrat(other)
            if q.is_zero:
                return MPoly()
            out = MPoly.__new__(MPoly)
            out._c = _clean({e: v * q for e, v in self._c.items()})
            return out
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return MPoly()
        if all(v.is_polynomial for v in a.values()) and all(
            v.is_polynomial for v in b.values()
        ):
            acc: dict[Expo, UPoly] = {}
            for ea, va in a.items():
                ua = va.num
                for eb, vb in b.items():
                    e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
                    p = ua * vb.num
                    old = acc.get(e)
                    acc[e] = p if old is None else old + p
            out = MPoly.__new__(MPoly)
            out._c = {
                e: QRat(u, U_ONE, _canonical=True) for e, u in acc.items() if not u.is_zero
            }
            return out
        acc2: dict[Expo, QRat] = {}
        for ea, va in a.items():
            for eb, vb in b.items():
                e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
                p = va * vb
                old = acc2.get(e)
                acc2[e] = p if old is None else old + p
        out = MPoly.__new__(MPoly)
        out._c = _clean(acc2)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of an MPoly; use MRat")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def divexact(self, other: "MPoly") -> "MPoly":
        """Exact quotient by a single divisor under lex order.

        Raises NotDivisible at the first leading term that cannot be
        eliminated, which for single-divisor division proves the remainder
        is nonzero.
        """
        if other.is_zero:
            raise ZeroPolynomial("division by zero polynomial")
        if self.is_zero:
            return MPoly()
        ed, cd = other.lead()
        rem = dict(self._c)
        quot: dict[Expo, QRat] = {}
        while rem:
            er = max(rem)
            if any(er[i] < ed[i] for i in range(3)):
                raise NotDivisible("leading monomial not divisible")
            em = (er[0] - ed[0], er[1] - ed[1], er[2] - ed[2])
            qc = rem[er] / cd
            quot[em] = qc
            for e, v in other._c.items():
                ne = (e[0] + em[0], e[1] + em[1], e[2] + em[2])
                nv = rem.get(ne)
                nv = -(qc * v) if nv is None else nv - qc * v
                if nv.is_zero:
                    rem.pop(ne, None)
                else:
                    rem[ne] = nv
        return MPoly(quot)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.divexact(self)
            return True
        except NotDivisible:
            return False

    # -- substitution and evaluation -----------------------------------------

    def subst(self, **bindings) -> "MPoly":
        """Substitute symbols by values (scalars, Fractions, or MPoly)."""
        for name in bindings:
            if name not in SYMBOLS:
                raise ValueError(f"unknown symbol {name!r}")
        vals = {n: (v if isinstance(v, MPoly) else MPoly.const(v)) for n, v in bindings.items()}
        out = MPoly()
        powers: dict[tuple[str, int], MPoly] = {}

        def vpow(name: str, k: int) -> MPoly:
            key = (name, k)
            got = powers.get(key)
            if got is None:
                got = vals[name] ** k
                powers[key] = got
            return got

        for e, v in self._c.items():
            term = MPoly.term(v)
            for i, name in enumerate(SYMBOLS):
                if e[i] == 0:
                    continue
                if name in vals:
                    term = term * vpow(name, e[i])
                else:
                    mono = [0, 0, 0]
                    mono[i] = e[i]
                    term = term * MPoly({tuple(mono): QRat.of(1)})
            out = out + term
        return out

    def subst_q_power(self, k: int | Fraction) -> "MPoly":
        return MPoly({e: v.subst_q_power(k) for e, v in self._c.items()})

    def subst_q_negate(self) -> "MPoly":
        return MPoly({e: v.subst_q_negate() for e, v in self._c.items()})

    def eval(
        self,
        q: Fraction | int | None = None,
        s: Fraction | int | None = None,
        t: Fraction | int | None = None,
        x: Fraction | int | None = None,
    ) -> Fraction:
        """Evaluate at rational points; every used symbol must be bound."""
        pts = {"s": s, "t": t, "x": x}
        for name, v in pts.items():
            if v is None and self.uses(name):
                raise ValueError(f"symbol {name} unbound")
        if q is None:
            raise ValueError("q unbound")
        total = Fraction(0)
        for e, v in self._c.items():
            f = v.eval_q(q)
            for i, name in enumerate(SYMBOLS):
                if e[i]:
                    f *= Fraction(pts[name]) ** e[i]
            total += f
        return total

    def __repr__(self) -> str:
        from .serialize import format_mpoly

        return format_mpoly(self)


M_ZERO = MPoly()
M_ONE = MPoly.const(1)
S = MPoly.sym("s")
T = MPoly.sym("t")
X = MPoly.sym("x")
