"""Oracle tests for exact limit extraction and the limit identities.

Vanishing orders and limits are pinned against hand values, the
derivative engine is checked against closed derivative formulas
(factorial-weighted powers for the alternating sums, triangle-number
weights for binomial derivatives), and the catalog runs over full
parameter grids including the corrected odd-index identity and skip
and failure rows.
"""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qszego.exactalg import (
    OddUExponent,
    NotPrime,
    ONE,
    OrderDeficit,
    Q,
    UnknownIdentity,
    UPoly,
    ZeroPolynomial,
)
from qszego.limits import (
    LIMIT_IDS,
    c_p_minus1,
    derivative_at_one,
    exact_limit,
    f_sum,
    f_sum_signless,
    limit_theorem_check,
    padic,
    v_p_factorial,
    vanishing_order,
)
from qszego.qfun import gauss_binomial, qpoch


def _neg_q_poch(n):
    return qpoch(UPoly({2: -1}), n, 1)


def _neg_q_q2_poch(n):
    return qpoch(UPoly({2: -1}), n, 2)


def test_vanishing_orders_frozen():
    assert vanishing_order(qpoch(Q, 2, 2), 1) == 2
    assert vanishing_order(ONE + Q, 1) == 0
    assert vanishing_order(ONE + Q, -1) == 1
    assert vanishing_order(f_sum(2, 1, 0, 4), 1) == 1
    assert vanishing_order(qpoch(Q, 2, 2), -1) == 0
    assert vanishing_order(UPoly({1: 1}) - ONE, 1) == 1
    with pytest.raises(ZeroPolynomial):
        vanishing_order(UPoly(), 1)


@given(st.integers(1, 12), st.integers(1, 12))
@settings(deadline=None)
def test_limit_of_simple_ratio(a, b):
    lhs = ONE - UPoly({2 * a: 1})
    rhs = ONE - UPoly({2 * b: 1})
    assert exact_limit(lhs, rhs, 1) == Fraction(a, b)


def test_limit_edge_cases():
    with pytest.raises(OrderDeficit):
        exact_limit(ONE - UPoly({4: 1}), (ONE - Q) * (ONE - Q), 1)
    with pytest.raises(ZeroPolynomial):
        exact_limit(ONE, UPoly(), 1)
    assert exact_limit(UPoly(), ONE - Q, -1) == 0
    assert exact_limit((ONE - Q) * (ONE - Q), ONE - Q, 1) == 0


def test_alternating_sum_frozen():
    assert f_sum(2, 1, 0, 4) == UPoly({0: 1, 2: -1, 10: -1, 8: 1})
    assert f_sum_signless(2, 0, 1, 2) == UPoly({0: 1, 2: 1, 6: 1, 4: 1})
    with pytest.raises(OddUExponent):
        f_sum(2, Fraction(1, 3), 0, 1)


def test_derivatives_of_monomials():
    assert derivative_at_one(UPoly({6: 1}), 2) == 6
    assert derivative_at_one(UPoly({1: 1}), 1) == Fraction(1, 2)
    assert derivative_at_one(UPoly({4: 3, 0: 5}), 0) == 8


def test_binomial_derivative_closed_form():
    for n in range(9):
        for j in range(n + 1):
            for k in (1, 2, 3):
                want = (j * (j + 1) // 2) * math.comb(n, j + 1) * k
                assert derivative_at_one(gauss_binomial(n, j, k), 1) == want


def test_alternating_sum_derivative_closed_form():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(0, 3)
        r = Fraction(rng.randint(0, 6), 2)
        m = rng.randint(0, 4)
        k = rng.randint(1, 5)
        poly = f_sum(2 * n, r, m, k)
        for i in range(n):
            assert derivative_at_one(poly, i) == 0
        want = math.factorial(2 * n) * (r - Fraction(k, 2)) ** n
        assert derivative_at_one(poly, n) == want


def test_odd_alternating_sum_derivative_closed_form():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(0, 2)
        r = Fraction(rng.randint(0, 4), 2)
        m = rng.randint(0, 4)
        k = rng.randint(1, 4)
        poly = f_sum(2 * n + 1, r, m, k)
        for i in range(n + 1):
            assert derivative_at_one(poly, i) == 0
        want = (
            -(n + 1)
            * (r - Fraction(k, 2)) ** n
            * math.factorial(2 * n + 1)
            * ((2 * n + 1) * r + m)
        )
        assert derivative_at_one(poly, n + 1) == want


def test_half_power_pochhammer_ratio_vanishes():
    for n in range(4):
        for m in range(3):
            for k in (1, 2, 3):
                num = qpoch(UPoly({k + 2 * m: 1}), 2 * n, k)
                value = exact_limit(num, qpoch(Q, n, 2), 1)
                assert value == (1 if n == 0 else 0)


def test_even_odd_denominator_bridge():
    for n in range(5):
        assert exact_limit(_neg_q_poch(2 * n), _neg_q_q2_poch(n), -1) == 2**n
    for n in range(3):
        for m in range(3):
            for k in (1, 2, 3):
                small = limit_theorem_check("2.19", n=n, m=m, p=k)
                big = limit_theorem_check("2.25", n=n, m=m, k=k)
                assert big.computed == 2**n * small.computed


@pytest.mark.parametrize("ident", [i for i in LIMIT_IDS if i != "2.23-neg"])
def test_catalog_over_grid(ident):
    for n in range(4):
        for m in range(5):
            for k in range(1, 5):
                for r in (0, 1, 2, Fraction(3, 2)):
                    row = limit_theorem_check(ident, n=n, m=m, k=k, r=r, p=k)
                    assert row.passed, (ident, n, m, k, r)


def test_spec_point_values():
    assert limit_theorem_check("2.23", n=1, m=1, k=2).computed == 2
    assert limit_theorem_check("2.27", n=1, r=1, m=0, k=4).computed == 2
    assert limit_theorem_check("2.31", n=0, r=3, m=4, k=1).computed == 7
    assert limit_theorem_check("2.25", n=1, k=1, m=0).computed == 2


def test_corrected_identity_flags_its_reading():
    row = limit_theorem_check("2.26", n=2, m=1, k=2)
    assert row.passed and "corrected" in row.witness


def test_parity_guard_produces_skip_rows():
    for ident in ("2.32", "2.33"):
        row = limit_theorem_check(ident, n=2, r=1, m=1, k=2)
        assert row.passed and "skip" in row.witness
        row = limit_theorem_check(ident, n=2, r=Fraction(1, 2), m=1, k=2)
        assert row.passed and "skip" in row.witness


def test_negative_control():
    for m in range(3):
        assert limit_theorem_check("2.23-neg", n=0, m=m, k=3).passed
    for n in range(1, 4):
        for k in (1, 2, 3):
            assert not limit_theorem_check("2.23-neg", n=n, m=1, k=k).passed


def test_padic_values():
    assert padic(3, 45) == (2, 9)
    assert padic(2, 7) == (0, 1)
    assert padic(5, -250) == (3, 125)
    with pytest.raises(NotPrime):
        padic(6, 10)
    with pytest.raises(ValueError):
        padic(3, 0)


def test_factorial_valuation_matches_direct_count():
    for p in (2, 3, 5, 7):
        for n in range(31):
            direct = padic(p, math.factorial(n))[0] if n else 0
            assert v_p_factorial(p, n) == direct


def test_cofactor_values_frozen():
    want = [1, 5, 3, 45, 27, 135, 81, 405, 243, 10935]
    assert [c_p_minus1(3, 2, n) for n in range(10)] == want
    assert c_p_minus1(5, 0, 4) == 5**2
    assert c_p_minus1(7, 3, 1) == 7


def test_unknown_identity_rejected():
    with pytest.raises(UnknownIdentity):
        limit_theorem_check("9.9", n=1)
    with pytest.raises(ValueError):
        limit_theorem_check("2.23", n=-1)
    with pytest.raises(ValueError):
        limit_theorem_check("2.27", n=1, r=Fraction(1, 3))
