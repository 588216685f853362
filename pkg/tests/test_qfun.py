"""Oracle tests for q-binomials, q-factorials, and shifted factorials.

The implementation uses the Pascal-style row recurrence; these tests check
it against the independent product formula, both symbolically (sympy
polynomial division) and numerically (Fraction arithmetic at rational q).
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qszego.exactalg import MPoly, MRat, ONE, Q, QRat, S, T, UPoly
from qszego.qfun import (
    gauss_binomial,
    q_binomial_derivative_at_1,
    q_factorial,
    qpoch,
)


def _binom_product_at(n: int, j: int, qv: Fraction) -> Fraction:
    num = Fraction(1)
    den = Fraction(1)
    for i in range(1, j + 1):
        num *= 1 - qv ** (n - j + i)
        den *= 1 - qv**i
    return num / den


def _sympy_binom(n: int, j: int):
    q = sympy.Symbol("q")
    num = sympy.prod([1 - q ** (n - j + i) for i in range(1, j + 1)])
    den = sympy.prod([1 - q**i for i in range(1, j + 1)])
    quo, rem = sympy.div(sympy.expand(num), sympy.expand(den), q)
    assert rem == 0
    return sympy.Poly(quo, q).all_coeffs()[::-1]


@pytest.mark.parametrize("n,j", [(0, 0), (4, 2), (6, 3), (7, 2), (9, 4)])
def test_binomial_matches_product_formula_symbolically(n, j):
    ours = gauss_binomial(n, j)
    coeffs = _sympy_binom(n, j)
    assert {2 * e: int(c) for e, c in enumerate(coeffs) if c} == dict(ours.terms())


@given(st.integers(0, 12), st.integers(-2, 14))
def test_binomial_matches_product_formula_numerically(n, j):
    qv = Fraction(3, 5)
    expected = _binom_product_at(n, j, qv) if 0 <= j <= n else Fraction(0)
    got = gauss_binomial(n, j)
    assert got.eval_q(qv) == expected


@given(st.integers(0, 12), st.integers(0, 12))
def test_binomial_symmetry(n, j):
    if j <= n:
        assert gauss_binomial(n, j) == gauss_binomial(n, n - j)


@given(st.integers(0, 10), st.integers(0, 10), st.integers(1, 3))
def test_binomial_base_is_substitution(n, j, k):
    lifted = gauss_binomial(n, j).subst_q_power(k)
    assert lifted == gauss_binomial(n, j, k)


def test_binomial_half_integer_base():
    half = Fraction(1, 2)
    lifted = gauss_binomial(4, 2).subst_q_power(half)
    assert lifted == gauss_binomial(4, 2, half)
    assert gauss_binomial(4, 2, half).eval_u(Fraction(2)) == _binom_product_at(
        4, 2, Fraction(2)
    )


@given(st.integers(0, 9), st.integers(0, 9), st.integers(1, 3))
def test_binomial_negative_base_flip(n, j, k):
    if j > n:
        return
    qv = Fraction(2, 7)
    expected = _binom_product_at(n, j, qv ** (-k)) if j <= n else Fraction(0)
    got = gauss_binomial(n, j, -k)
    assert got.eval_q(qv) == expected


@pytest.mark.parametrize("n", range(7))
def test_q_factorial_matches_product(n):
    q = sympy.Symbol("q")
    expect = sympy.expand(
        sympy.prod([sum(q**i for i in range(m)) for m in range(1, n + 1)])
    )
    got = sympy.expand(
        sum(int(c) * q ** (e // 2) for e, c in q_factorial(n).terms())
    )
    assert got == expect


def test_q_factorial_negative_base():
    qv = Fraction(3, 2)
    expect = Fraction(1)
    for m in range(1, 5):
        expect *= sum(qv ** (-2 * i) for i in range(m))
    assert q_factorial(4, -2).eval_q(qv) == expect


@pytest.mark.parametrize(
    "a,n,base,expect",
    [
        (1, 0, 1, "1"),
        (Q, 3, 1, "(1-q)(1-q^2)(1-q^3)"),
        (Q, 2, 2, "(1-q)(1-q^3)"),
    ],
)
def test_qpoch_frozen(a, n, base, expect):
    table = {
        "1": ONE,
        "(1-q)(1-q^2)(1-q^3)": (ONE - Q) * (ONE - Q * Q) * (ONE - Q * Q * Q),
        "(1-q)(1-q^3)": (ONE - Q) * (ONE - Q * Q * Q),
    }
    assert qpoch(a, n, base) == table[expect]


@given(st.integers(0, 8), st.integers(1, 3))
def test_qpoch_splits_as_product(n, k):
    qv = Fraction(4, 9)
    got = qpoch(Q, n, k).eval_q(qv)
    expect = Fraction(1)
    for i in range(n):
        expect *= 1 - qv * qv ** (k * i)
    assert got == expect


def test_qpoch_polymorphic_types():
    assert isinstance(qpoch(Q, 2), UPoly)
    assert isinstance(qpoch(QRat.of(1, ONE - Q), 2), QRat)
    assert isinstance(qpoch(S, 2), MPoly)
    assert isinstance(qpoch(MRat.of(T), 2), MRat)
    assert isinstance(qpoch(S, 0), MPoly)
    assert isinstance(qpoch(MRat.of(T), 0), MRat)
    assert qpoch(S, 2) == (MPoly.const(1) - S) * (MPoly.const(1) - S * QRat.of(Q))


def test_qpoch_negative_base():
    qv = Fraction(5, 3)
    got = qpoch(1, 3, -1)
    expect = Fraction(1)
    for i in range(3):
        expect *= 1 - qv ** (-i)
    assert got.eval_q(qv) == expect


@given(st.integers(0, 10), st.integers(0, 10), st.integers(1, 3))
def test_derivative_at_1_matches_sympy(n, j, k):
    if j > n:
        assert q_binomial_derivative_at_1(n, j, k) == 0
        return
    q = sympy.Symbol("q")
    poly = sum(int(c) * q ** Fraction(e, 2) for e, c in gauss_binomial(n, j, k).terms())
    expect = sympy.diff(poly, q).subs(q, 1)
    assert q_binomial_derivative_at_1(n, j, k) == int(expect)
