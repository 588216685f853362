"""Oracle tests for truncated series and the generating-function catalog.

Frozen low-order coefficients pin the three q-exponential families; the
functional equations are checked as whole truncated series, then every
catalog identity runs at a moderate order, with the negative control's
failure row frozen exactly.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qszego.exactalg import MPoly, ONE, Q, QRat, S
from qszego.exactalg.errors import NonUnitConstantTerm, UnknownIdentity
from qszego.qfun import qpoch
from qszego.rogers import poch_mpoly, q_const, rs
from qszego.series import GF_IDS, TruncSeries, gf_check, q_exp, series_of


def _const(num, den=1) -> MPoly:
    return MPoly.const(QRat.of(num, den))


def _one_series(order: int) -> TruncSeries:
    return series_of(lambda n: _const(1 if n == 0 else 0), order)


def test_euler_expansion_frozen_to_second_order():
    got = q_exp("e", 1, 2)
    assert got.coeff(0) == _const(1)
    assert got.coeff(1) == _const(1, ONE - Q)
    assert got.coeff(2) == _const(1, (ONE - Q) * (ONE - Q**2))


def test_plain_and_big_exponential_second_coefficients():
    assert q_exp("exp", 1, 2).coeff(2) == _const(1, ONE + Q)
    assert q_exp("Exp", 1, 2).coeff(2) == _const(Q, ONE + Q)


def test_reciprocal_of_geometric_prefix():
    s = series_of(lambda n: _const(1), 2)
    inv = s.reciprocal()
    assert inv.coeffs == (_const(1), _const(-1), _const(0))
    assert s * inv == _one_series(2)


def test_reciprocal_requires_unit_constant_term():
    s = series_of(lambda n: _const(2), 3)
    with pytest.raises(NonUnitConstantTerm):
        s.reciprocal()


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6))
@settings(deadline=None)
def test_reciprocal_round_trip(tail):
    coeffs = (Fraction(1),) + tuple(Fraction(v) for v in tail)
    s = TruncSeries(coeffs)
    assert s * s.reciprocal() == TruncSeries((Fraction(1),) + (Fraction(0),) * len(tail))


def test_shift_equals_one_minus_z_factor():
    order = 12
    shifted = q_exp("e", q_const(1), order)
    step = series_of(lambda n: _const({0: 1, 1: -1}.get(n, 0)), order)
    assert shifted == step * q_exp("e", 1, order)


def test_inverse_pair_of_exponentials():
    order = 12
    prod = q_exp("exp", 1, order) * q_exp("Exp", -MPoly.const(1), order)
    assert prod == _one_series(order)


def test_moment_sum_recovered_from_exponential_product():
    order = 10
    prod = q_exp("e", 1, order) * q_exp("e", S, order)
    for n in range(order + 1):
        assert prod.coeff(n) * _const(qpoch(Q, n, 1)) == rs(n)


def test_shifted_factorial_series_cancels_one_exponential():
    order = 10
    lhs = series_of(
        lambda n: poch_mpoly(S, n, 1) * _const(1, qpoch(Q, n, 1)), order
    ) * q_exp("e", S, order)
    assert lhs == q_exp("e", 1, order)


def test_first_mismatch_reports_lowest_differing_order():
    a = series_of(lambda n: _const(n), 5)
    b = series_of(lambda n: _const(n if n != 3 else 7), 5)
    assert a.first_mismatch(b) == 3
    assert a.first_mismatch(a) is None


@pytest.mark.parametrize("ident", [i for i in GF_IDS if i != "1.25-neg"])
def test_catalog_identity_to_order_ten(ident):
    row = gf_check(ident, order=10)
    assert row.passed, f"{ident}: first failure at {row.first_failing_order}"
    assert row.first_failing_order is None


def test_negative_control_failure_row_frozen():
    row = gf_check("1.25-neg", order=6)
    assert not row.passed
    assert row.first_failing_order == 1
    assert row.lhs_coeff == _const(ONE + Q**2, ONE - Q**2)
    assert row.rhs_coeff == _const(1, ONE - Q)


def test_rows_are_deterministic():
    assert gf_check("1.12", order=8) == gf_check("1.12", order=8)


def test_unknown_identity_rejected():
    with pytest.raises(UnknownIdentity):
        gf_check("bogus", order=4)
