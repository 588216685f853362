"""Exact univariate polynomials in the internal variable u, with q = u**2.

Everything in this package computes on the "u-grid": the single formal
variable is u and the base q is represented as u**2, so objects with
half-integer q-exponents (square roots of q, bases q**(k/2)) live in one
polynomial ring with plain integer exponents.

A UPoly is a sparse map {u_exponent: coefficient} with arbitrary-precision
integer coefficients and non-negative exponents.  Zero coefficients are
never stored; the zero polynomial is the empty map.  Instances are
immutable by convention: no method mutates self.

A UPoly is a "q-polynomial" when every stored u-exponent is even.  Only
q-polynomials can be evaluated at a rational value of q, substituted with
q -> -q, or differentiated with respect to q; other operations work on the
full grid.

Multiplication switches to Kronecker packing (coefficients packed into one
big integer with enough headroom per slot, balanced digits recovered by
byte slicing) once the schoolbook term-pair count gets large.  Python's
big-int multiply then does the heavy lifting.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import NotDivisible, OddUExponent, ZeroPolynomial

IntLike = Union[int, "UPoly"]


def _clean(c: dict[int, int]) -> dict[int, int]:
    return {e: v for e, v in c.items() if v}


class UPoly:
    """Sparse integer polynomial in u (q = u**2)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = _clean(dict(coeffs)) if coeffs else {}
        for e in c:
            if e < 0:
                raise ValueError("UPoly exponents must be non-negative")
        self._c = c

    # -- constructors ----------------------------------------------------

    @staticmethod
    def const(v: int) -> "UPoly":
        return UPoly({0: v})

    @staticmethod
    def from_q(coeffs: Mapping[int, int]) -> "UPoly":
        """Build from {q_exponent: coefficient}."""
        return UPoly({2 * e: v for e, v in coeffs.items()})

    # -- inspection ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree_u(self) -> int:
        """Largest u-exponent, -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    @property
    def is_q_polynomial(self) -> bool:
        return all(e % 2 == 0 for e in self._c)

    @property
    def lead_coeff(self) -> int:
        if not self._c:
            return 0
        return self._c[max(self._c)]

    def coeff_u(self, e: int) -> int:
        return self._c.get(e, 0)

    def coeff_q(self, e: int) -> int:
        return self._c.get(2 * e, 0)

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (u_exponent, coefficient) in increasing exponent order."""
        return iter(sorted(self._c.items()))

    def content(self) -> int:
        """Positive gcd of the coefficients, 0 for the zero polynomial."""
        from math import gcd

        g = 0
        for v in self._c.values():
            g = gcd(g, v)
        return g

    # -- arithmetic ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "UPoly":
        return UPoly({e: -v for e, v in self._c.items()})

    def __add__(self, other) -> "UPoly":
        if isinstance(other, int):
            other = UPoly.const(other)
        if not isinstance(other, UPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            nv = c.get(e, 0) + v
            if nv:
                c[e] = nv
            else:
                c.pop(e, None)
        out = UPoly.__new__(UPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "UPoly":
        if isinstance(other, int):
            other = UPoly.const(other)
        if not isinstance(other, UPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UPoly":
        return (-self) + other

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return UPoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, UPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        if len(a) * len(b) <= 64:
            out: dict[int, int] = {}
            for ea, va in a.items():
                for eb, vb in b.items():
                    e = ea + eb
                    nv = out.get(e, 0) + va * vb
                    if nv:
                        out[e] = nv
                    else:
                        del out[e]
            res = UPoly.__new__(UPoly)
            res._c = out
            return res
        return _mul_packed(a, b)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative power of a UPoly; use QRat")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift_u(self, k: int) -> "UPoly":
        """Multiply by u**k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        return UPoly({e + k: v for e, v in self._c.items()})

    # -- division --------------------------------------------------------

    def divexact(self, other: "UPoly") -> "UPoly":
        """Exact quotient self/other in Z[u]; NotDivisible otherwise.

        Greedy leading-term division decides Z[u]-divisibility: when the
        quotient exists over Z its leading coefficient is forced at every
        step, so any non-exact coefficient ratio or leftover remainder
        proves non-divisibility.
        """
        if isinstance(other, int):
            other = UPoly.const(other)
        if other.is_zero:
            raise ZeroPolynomial("division by zero polynomial")
        if self.is_zero:
            return ZERO
        r = dict(self._c)
        db = other.degree_u
        lb = other._c[db]
        q: dict[int, int] = {}
        while r:
            dr = max(r)
            if dr < db:
                raise NotDivisible("remainder of lower degree", remainder=UPoly(r))
            c = r[dr]
            if c % lb:
                raise NotDivisible("leading coefficient not divisible", remainder=UPoly(r))
            t = c // lb
            q[dr - db] = t
            for e, bc in other._c.items():
                ne = e + dr - db
                nv = r.get(ne, 0) - t * bc
                if nv:
                    r[ne] = nv
                else:
                    r.pop(ne, None)
        return UPoly(q)

    def divides(self, other: "UPoly") -> bool:
        try:
            other.divexact(self)
            return True
        except NotDivisible:
            return False

    def divmod_rational(self, other: "UPoly") -> tuple[dict[int, Fraction], "UPoly"]:
        """Quotient/remainder over Q[u]; remainder cleared to Z coefficients.

        Returns (quotient as {exp: Fraction}, remainder scaled by the lcm of
        its coefficient denominators so it is an integer polynomial).  The
        remainder is zero iff self is divisible by other over Q[u].
        """
        if other.is_zero:
            raise ZeroPolynomial("division by zero polynomial")
        r: dict[int, Fraction] = {e: Fraction(v) for e, v in self._c.items()}
        db = other.degree_u
        lb = other._c[db]
        q: dict[int, Fraction] = {}
        while r and max(r) >= db:
            dr = max(r)
            t = r[dr] / lb
            q[dr - db] = t
            for e, bc in other._c.items():
                ne = e + dr - db
                nv = r.get(ne, Fraction(0)) - t * bc
                if nv:
                    r[ne] = nv
                else:
                    r.pop(ne, None)
        if not r:
            return q, ZERO
        from math import lcm

        scale = 1
        for v in r.values():
            scale = lcm(scale, v.denominator)
        rem = UPoly({e: int(v * scale) for e, v in r.items()})
        return q, rem

    # -- evaluation and substitution --------------------------------------

    def eval_u(self, point: Fraction | int) -> Fraction:
        """Evaluate at a rational value of u."""
        p = Fraction(point)
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * p**e
        return total

    def eval_q(self, point: Fraction | int) -> Fraction:
        """Evaluate at a rational value of q; needs a q-polynomial."""
        if not self.is_q_polynomial:
            raise OddUExponent("half-integer q-exponents present; evaluate in u instead")
        p = Fraction(point)
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * p ** (e // 2)
        return total

    def subst_q_power(self, k: int | Fraction):
        """Substitute q -> q**k; k a nonzero integer or half-integer.

        Each u-exponent e maps to e*k, which must stay an integer.  A
        negative k produces negative exponents; the result is then returned
        as a QRat with a pure u-power denominator.
        """
        k = Fraction(k)
        if k == 0:
            raise ValueError("k must be nonzero")
        if k.denominator not in (1, 2):
            raise ValueError("k must be an integer or half-integer")
        new: dict[int, int] = {}
        for e, v in self._c.items():
            ne = e * k
            if ne.denominator != 1:
                raise OddUExponent("substitution leaves the integer u-grid")
            new[int(ne)] = v
        if not new or min(new) >= 0:
            return UPoly(new)
        from .qrat import QRat

        shift = -min(new)
        num = UPoly({e + shift: v for e, v in new.items()})
        return QRat.of(num, UPoly({shift: 1}))

    def subst_q_negate(self) -> "UPoly":
        """Substitute q -> -q; needs a q-polynomial."""
        if not self.is_q_polynomial:
            raise OddUExponent("q -> -q undefined for half-integer q-exponents")
        return UPoly({e: (v if (e // 2) % 2 == 0 else -v) for e, v in self._c.items()})

    def derivative_q(self) -> "UPoly":
        """Formal d/dq; needs a q-polynomial."""
        if not self.is_q_polynomial:
            raise OddUExponent("d/dq undefined for half-integer q-exponents")
        return UPoly({e - 2: (e // 2) * v for e, v in self._c.items() if e >= 2})

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        from .serialize import format_upoly

        return format_upoly(self)


ZERO = UPoly()
ONE = UPoly({0: 1})
U = UPoly({1: 1})
Q = UPoly({2: 1})


def q_power(e: int | Fraction) -> UPoly:
    """The monomial q**e for e >= 0 on the half-integer grid."""
    e = Fraction(e)
    ue = 2 * e
    if ue.denominator != 1:
        raise OddUExponent("exponent off the half-integer grid")
    if ue < 0:
        raise ValueError("negative exponent; use QRat.q_power")
    return UPoly({int(ue): 1})


def u_power(e: int) -> UPoly:
    if e < 0:
        raise ValueError("negative exponent; use QRat")
    return UPoly({e: 1})


def _mul_packed(a: dict[int, int], b: dict[int, int]) -> UPoly:
    """Kronecker-packed product of two coefficient maps."""
    da, db = max(a), max(b)
    amax = max(abs(v) for v in a.values())
    bmax = max(abs(v) for v in b.values())
    bound = amax * bmax * min(len(a), len(b))
    bits = bound.bit_length() + 2
    nbytes = (bits + 7) // 8
    B = nbytes * 8
    pa = 0
    for e, v in a.items():
        pa += v << (B * e)
    pb = 0
    for e, v in b.items():
        pb += v << (B * e)
    prod = pa * pb
    slots = da + db + 1
    half = 1 << (B - 1)
    # Add half to every slot so all balanced digits become non-negative and
    # no borrows cross slot boundaries; then read slots back as byte slices.
    offset = int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * slots, "little")
    total = prod + offset
    raw = total.to_bytes(slots * nbytes, "little")
    out: dict[int, int] = {}
    for i in range(slots):
        d = int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") - half
        if d:
            out[i] = d
    res = UPoly.__new__(UPoly)
    res._c = out
    return res


def _pseudo_rem(a: UPoly, b: UPoly) -> UPoly:
    """Pseudo-remainder of a by b (integer arithmetic)."""
    da, db = a.degree_u, b.degree_u
    lb = b.lead_coeff
    r = a
    for _ in range(da - db + 1):
        dr = r.degree_u
        if dr < db:
            break
        lr = r.lead_coeff
        r = r * lb - b * lr * u_power(dr - db)
    return r


def _primitive(a: UPoly) -> UPoly:
    if a.is_zero:
        return a
    c = a.content()
    if a.lead_coeff < 0:
        c = -c
    return UPoly({e: v // c for e, v in a._c.items()})


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Gcd in Z[u] including integer content, positive leading coefficient."""
    from math import gcd as igcd

    if a.is_zero and b.is_zero:
        return ZERO
    cont = igcd(a.content(), b.content())
    a, b = _primitive(a), _primitive(b)
    while not b.is_zero:
        r = _primitive(_pseudo_rem(a, b))
        a, b = b, r
    return a * cont
