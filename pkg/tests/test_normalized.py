"""Oracle tests for the normalized families and their identity checks.

Small members are frozen against hand expansions, the two-parameter
families are pinned by their full specialization lattices, evaluation
identities run over (n, m) grids including negative exponents, and the
corrected forms are each paired with a test documenting that the
uncorrected variant fails.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qszego.exactalg import MPoly, MRat, ONE, Q as QU, QRat, S, T, UPoly
from qszego.exactalg.errors import NotDivisible
from qszego.normalized import (
    CHECK_IDS,
    F_norm,
    H_cleared,
    H_general,
    H_t_den,
    check,
    f_norm,
    h_cleared,
    h_general,
    h_t_den,
    kupershmidt_value,
)
from qszego.qfun import gauss_binomial, qpoch
from qszego.rogers import q_const, rs

ONE_P = MPoly.const(1)
Q_P = MPoly.const(QRat.q_power(1))


def test_first_members_frozen():
    assert f_norm(0) == ONE_P
    assert f_norm(1) == MPoly.const(QRat.of(ONE, ONE + QU)) * (ONE_P + S)
    assert F_norm(1) == MPoly.const(QRat.of(ONE, ONE - QU)) * (ONE_P - S)
    assert h_cleared(1) == ONE_P + S
    assert h_t_den(1) == ONE_P + Q_P * T
    assert h_cleared(2) == ONE_P + (ONE_P + Q_P) * S + S * S + (q_const(2) - q_const(1)) * S * T
    assert H_cleared(1) == ONE_P + S * S - (ONE_P + Q_P) * S * T
    assert H_t_den(1) == ONE_P - Q_P * T * T


def test_printed_first_member_of_capital_family_fails():
    printed = ONE_P + (ONE_P + Q_P) * S + S * S
    assert H_cleared(1) != printed
    assert H_general(1) != MRat(printed, ((H_t_den(1), 1),))


@given(st.integers(0, 10))
@settings(deadline=None)
def test_lattice_of_small_family(n):
    assert h_cleared(n).subst(t=1) == f_norm(n) * h_t_den(n).subst(t=1)
    assert h_cleared(n).subst(t=0) == rs(n)
    assert h_cleared(n).subst(s=0) == ONE_P


@given(st.integers(0, 10))
@settings(deadline=None)
def test_lattice_of_capital_family(n):
    assert H_cleared(n).subst(t=1) == F_norm(2 * n) * H_t_den(n).subst(t=1)
    lhs = (ONE_P - S) * H_cleared(n).subst(t=q_const(1))
    rhs = (ONE_P - Q_P) * F_norm(2 * n + 1) * H_t_den(n).subst(t=q_const(1))
    assert lhs == rhs
    even = sum(
        (MPoly.term(gauss_binomial(n, j, 2), s=2 * j) for j in range(n + 1)),
        MPoly.const(0),
    )
    assert H_cleared(n).subst(t=0) == even
    assert H_cleared(n).subst(s=0) == ONE_P


@pytest.mark.parametrize("ident", ["2.3", "2.4", "2.5"])
def test_sum_identities_over_grid(ident):
    for n in range(11):
        assert check(ident, n).passed


@pytest.mark.parametrize("ident", ["2.6", "2.7", "2.8"])
def test_power_evaluations_over_grid(ident):
    for n in range(7):
        for m in range(7):
            row = check(ident, n, m)
            assert row.passed, f"{ident} fails at n={n}, m={m}"


@pytest.mark.parametrize("ident", ["2.46-rec", "2.46-exp", "2.61-rec", "2.62"])
def test_recurrence_and_expansion_over_grid(ident):
    for n in range(9):
        assert check(ident, n).passed


def test_negative_control_fails_everywhere():
    for n in range(4):
        for m in range(3):
            assert not check("2.6-neg", n, m).passed


def test_printed_recurrence_sign_fails_from_third_member():
    n = 2
    rec = MRat.of(
        ONE_P + S * S - q_const(2 * n - 2) * (1 + Q_P) * S * T
    ) * H_general(n - 1)
    plus = rec + MRat.of((1 - q_const(2 * n - 2)) * S * S) * H_general(n - 2)
    minus = rec - MRat.of((1 - q_const(2 * n - 2)) * S * S) * H_general(n - 2)
    den = MRat(ONE_P, ((ONE_P - q_const(2 * n - 1) * T * T, 1),))
    assert plus * den != H_general(n)
    assert minus * den == H_general(n)


def test_printed_expansion_without_poch_factor_fails_from_second_member():
    printed = ONE_P + S * S - S * T
    assert H_cleared(1) != printed


def test_printed_series_weight_carries_denominator():
    assert h_general(1) == MRat(ONE_P + S, ((h_t_den(1), 1),))
    assert h_general(1) != MRat.of(ONE_P + S)


def _alternating_sum(n: int, m: int) -> UPoly:
    total = UPoly()
    for j in range(n + 1):
        sign = -1 if j % 2 else 1
        total = total + UPoly({2 * m * j: sign}) * gauss_binomial(n, j, 2)
    return total


def test_alternating_sums_divisible_by_odd_poch():
    for n in range(13):
        for m in range(7):
            divisor = qpoch(QU, (n + 1) // 2, 2)
            _alternating_sum(n, m).divexact(divisor)


def test_wrong_divisor_is_rejected():
    with pytest.raises(NotDivisible):
        _alternating_sum(3, 1).divexact(qpoch(QU, 3, 2))


@given(st.integers(0, 8), st.integers(0, 4))
@settings(deadline=None)
def test_negative_power_reindexing_small_family(n, m):
    lhs = f_norm(n).subst(s=q_const(-(2 * m + 1))).as_qrat()
    rhs = QRat.q_power(-(2 * m + 1) * n) * f_norm(n).subst(s=q_const(2 * m + 1)).as_qrat()
    assert lhs == rhs


@given(st.integers(0, 6), st.integers(0, 4))
@settings(deadline=None)
def test_negative_power_reindexing_capital_family(n, m):
    even_l = F_norm(2 * n).subst(s=q_const(-m)).as_qrat()
    even_r = QRat.q_power(-2 * m * n) * F_norm(2 * n).subst(s=q_const(m)).as_qrat()
    assert even_l == even_r
    odd_l = F_norm(2 * n + 1).subst(s=q_const(-m)).as_qrat()
    odd_r = QRat.q_power(-m * (2 * n + 1)) * F_norm(2 * n + 1).subst(s=q_const(m)).as_qrat()
    assert odd_l == -odd_r


def test_third_power_evaluation_closed_form():
    for n in range(13):
        got = f_norm(n).subst(s=q_const(3)).as_qrat()
        want = QRat.of(ONE - QU + UPoly({2 * (n + 1): 1}))
        assert got == want


def test_first_power_evaluation_is_one():
    for n in range(13):
        assert f_norm(n).subst(s=q_const(1)).as_qrat() == QRat.of(1)


def _power_sum(n: int, exp: int, base: int, signed: bool) -> UPoly:
    total = UPoly()
    for j in range(n + 1):
        sign = -1 if signed and j % 2 else 1
        total = total + UPoly({exp * j: sign}) * gauss_binomial(n, j, base)
    return total


def test_tail_stabilization_of_small_family():
    n = 30
    den = qpoch(UPoly({2: -1}), n, 1)
    for m in range(1, 5):
        num = _power_sum(n, 2 * (2 * m + 1), 2, signed=False)
        diff = num - qpoch(QU, m, 2) * den
        assert min(e for e, _ in diff.terms()) >= 32


def test_tail_stabilization_of_capital_family():
    n = 30
    den = qpoch(QU, n // 2, 2)
    for m in range(1, 5):
        num = _power_sum(n, 2 * m, 1, signed=True)
        diff = num - qpoch(UPoly({2: -1}), m - 1, 1) * den
        assert diff.is_zero or min(e for e, _ in diff.terms()) >= 32


def test_even_evaluation_spot_value():
    assert kupershmidt_value("2.7", 1, 2) == QRat.of(UPoly({0: 1, 2: 1, 6: -1}))


def test_check_ids_cover_catalog():
    assert set(CHECK_IDS) == {
        "2.3", "2.4", "2.5", "2.6", "2.7", "2.8",
        "2.46-rec", "2.46-exp", "2.61-rec", "2.62", "2.6-neg",
    }
