"""Oracle tests for the s-polynomial family and its identity catalog.

The polynomials are built from the Pascal-row q-binomials; these tests
pin small cases against frozen expansions, check evaluations against an
independent Fraction-arithmetic oracle, and run every catalog identity
over a grid, including the negative control that must fail.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qszego.exactalg import MPoly, QRat, S
from qszego.rogers import CHECK_IDS, check, q_const, rs


def _binom_at(n: int, j: int, qv: Fraction) -> Fraction:
    num = Fraction(1)
    den = Fraction(1)
    for i in range(1, j + 1):
        num *= 1 - qv ** (n - j + i)
        den *= 1 - qv**i
    return num / den


def _rs_at(n: int, sv: Fraction, qv: Fraction) -> Fraction:
    return sum((_binom_at(n, j, qv) * sv**j for j in range(n + 1)), Fraction(0))


def test_small_polynomials_frozen():
    one = MPoly.const(1)
    assert rs(0) == one
    assert rs(1) == one + S
    assert rs(2) == one + (one + q_const(1)) * S + S * S
    row3 = one + q_const(1) + q_const(2)
    assert rs(3) == one + row3 * S + row3 * S * S + S * S * S


@given(st.integers(0, 12))
@settings(deadline=None)
def test_matches_fraction_oracle(n):
    qv, sv = Fraction(2, 7), Fraction(3, 5)
    assert rs(n).eval(q=qv, s=sv) == _rs_at(n, sv, qv)


@given(st.integers(0, 10))
@settings(deadline=None)
def test_base_two_matches_fraction_oracle(n):
    qv, sv = Fraction(2, 7), Fraction(3, 5)
    assert rs(n, base=2).eval(q=qv, s=sv) == _rs_at(n, sv, qv * qv)


@given(st.integers(0, 12))
@settings(deadline=None)
def test_collapses_to_binomial_power_at_q_one(n):
    sv = Fraction(4, 3)
    assert rs(n).eval(q=1, s=sv) == (1 + sv) ** n


@given(st.integers(0, 12))
@settings(deadline=None)
def test_coefficient_palindrome(n):
    rows = rs(n).coeffs_in("s")
    for j in range(n + 1):
        assert rows[j] == rows[n - j]


def test_degree_and_endpoints():
    for n in range(1, 9):
        p = rs(n)
        assert p.degree("s") == n
        assert p.coeff(s=0) == QRat.of(1)
        assert p.coeff(s=n) == QRat.of(1)


@pytest.mark.parametrize("ident", [i for i in CHECK_IDS if i != "1.21-neg"])
def test_catalog_identity_over_grid(ident):
    for n in range(11):
        row = check(ident, n)
        assert row.passed, f"{ident} fails at n={n}: {row}"


@pytest.mark.parametrize("ident", ["1.21", "1.23", "1.26"])
def test_deep_rows_for_alternating_family(ident):
    for n in range(11, 16):
        assert check(ident, n).passed


def test_low_rows_of_two_term_recurrence_are_skipped():
    row = check("1.20", 1)
    assert row.passed and "skip" in str(row.witness)


def test_negative_control_fails_from_first_nontrivial_row():
    assert check("1.21-neg", 0).passed
    for n in range(1, 8):
        row = check("1.21-neg", n)
        assert not row.passed, "unsigned variant must fail"


def test_check_rejects_unknown_identity():
    from qszego.exactalg.errors import UnknownIdentity

    with pytest.raises(UnknownIdentity):
        check("0.0", 1)
