"""Divisibility scanner tests with frozen cofactors and oracle cross-checks."""

from fractions import Fraction

import pytest
import sympy as sp

from qszego.conjectures import (
    check_conj_2_1,
    check_conj_2_2,
    check_conj_2_3,
    reduced_odd_divisor,
    reduced_part_divisor,
    scan_conj_2_1,
    scan_conj_2_1_negative,
    scan_conj_2_2,
    scan_conj_2_3,
)
from qszego.exactalg import NotPrime, ONE, Q, UPoly, ZERO
from qszego.limits import c_p_minus1, f_sum, f_sum_signless
from qszego.qfun import qpoch


def test_point_cofactors_frozen():
    row = check_conj_2_1(2, 0, 0)
    assert row.holds and row.witness == ONE
    assert row.evaluations == {"q=1": Fraction(1), "q=-1": Fraction(1)}

    row = check_conj_2_1(3, 1, 0)
    assert row.holds and row.witness == ONE

    # target 1 - q + q^2 - q^3 factors as (1 - q)(1 + q^2)
    row = check_conj_2_1(2, 1, 1)
    assert row.holds and row.witness == UPoly({0: 1, 4: 1})

    row = check_conj_2_2(3, 1, 1)
    assert row.holds and row.witness == ONE

    row = check_conj_2_2(2, 2, 0)
    assert row.holds and row.witness == UPoly({0: 1, 2: 1})

    row = check_conj_2_3(3, 2, 1)
    assert row.holds and row.witness == UPoly({0: 1, 2: -1, 4: 1, 6: -1, 8: 1})

    row = check_conj_2_3(3, 2, 2)
    assert row.holds and row.witness == UPoly({0: 1, 2: -1, 8: 1, 12: -1, 16: 1})


def test_divisor_construction_frozen():
    assert reduced_odd_divisor(3, 3) == UPoly({0: 1, 2: -2, 4: 1})
    assert reduced_odd_divisor(5, 5) == UPoly({0: 1, 2: -2, 4: 1, 6: -1, 8: 2, 10: -1})
    one_q = ONE + UPoly({2: 1})
    assert reduced_part_divisor(3, 4) == one_q * one_q * UPoly({0: 1, 4: 1}) * UPoly({0: 1, 8: 1})
    assert reduced_odd_divisor(7, 0) == ONE
    assert reduced_part_divisor(5, 0) == ONE


def test_divisor_reduces_to_half_pochhammer_at_two():
    for n in range(13):
        assert reduced_odd_divisor(2, n) == qpoch(Q, (n + 1) // 2, 2)


def test_zero_target_holds_trivially():
    for n in (1, 3, 5):
        row = check_conj_2_1(n, 0, 2)
        assert row.holds and row.witness == ZERO
        assert row.evaluations == {"q=1": Fraction(0), "q=-1": Fraction(0)}


def test_round_trip_reconstruction():
    for row in scan_conj_2_1(8, 4, 2):
        n, m, k = row.params["n"], row.params["m"], row.params["k"]
        assert row.holds
        assert row.witness * qpoch(Q, (n + 1) // 2, 2) == f_sum(n, 0, m, 2**k)
    for p in (2, 3, 5):
        for row in scan_conj_2_2(p, 8, 3):
            n, m = row.params["n"], row.params["m"]
            assert row.holds
            assert row.witness * reduced_odd_divisor(p, n) == f_sum(n, 0, m, p)
    for p in (3, 5):
        for row in scan_conj_2_3(p, 1, 8):
            n = row.params["n"]
            assert row.holds
            assert row.witness * reduced_part_divisor(p, n) == f_sum_signless(n, 0, 3, 2 * p)


def test_acceptance_grids_hold():
    rows = scan_conj_2_1(12, 6, 3)
    assert len(rows) == 13 * 7 * 4 and all(r.holds for r in rows)
    for p in (2, 3, 5, 7):
        rows = scan_conj_2_2(p, 12, 6)
        assert len(rows) == 13 * 7 and all(r.holds for r in rows)
    for p in (3, 5, 7):
        for m in range(4):
            rows = scan_conj_2_3(p, m, 10)
            assert len(rows) == 11 and all(r.holds for r in rows)


def test_cofactor_boundary_values():
    for p in (3, 5, 7):
        for m in range(4):
            for row in scan_conj_2_3(p, m, 9):
                n = row.params["n"]
                assert row.evaluations["q=1"] == 1
                assert row.evaluations["q=-1"] == c_p_minus1(p, m, n)


def test_frozen_alternating_value_list():
    rows = scan_conj_2_3(3, 2, 9)
    got = [row.evaluations["q=-1"] for row in rows]
    assert got == [1, 5, 3, 45, 27, 135, 81, 405, 243, 10935]


def test_negative_control_fails_everywhere():
    rows = scan_conj_2_1_negative(6)
    assert len(rows) == 7
    for row in rows:
        assert row.verdict == "fails"
        assert row.witness != ZERO
        assert row.evaluations is None


def test_deterministic_ordering_and_json_shape():
    rows = scan_conj_2_1(2, 1, 1)
    tuples = [(r.params["n"], r.params["m"], r.params["k"]) for r in rows]
    assert tuples == sorted(tuples)
    assert rows == scan_conj_2_1(2, 1, 1)

    data = rows[0].as_json()
    assert set(data) == {"conjecture", "params", "verdict", "witness", "evaluations"}
    assert data["conjecture"] == "2.1" and data["verdict"] == "holds"
    assert isinstance(data["witness"], list)
    assert data["evaluations"] == {"q=1": "1", "q=-1": "1"}

    failing = scan_conj_2_1_negative(1)[1].as_json()
    assert failing["verdict"] == "fails" and failing["evaluations"] is None


def test_pochhammer_nesting():
    # (q; -q)_n == (q; q^2)_floor((n+1)/2) * (-q^2; q^2)_floor(n/2)
    for n in range(9):
        lhs = ONE
        for i in range(n):
            lhs = lhs * (ONE - UPoly({2 * (1 + i): (-1) ** i}))
        rhs = qpoch(Q, (n + 1) // 2, 2) * qpoch(UPoly({4: -1}), n // 2, 2)
        assert lhs == rhs


def test_scans_coincide_at_two():
    base_two = [r for r in scan_conj_2_1(8, 4, 1) if r.params["k"] == 1]
    prime_two = scan_conj_2_2(2, 8, 4)
    assert [r.witness for r in base_two] == [r.witness for r in prime_two]
    assert [r.verdict for r in base_two] == [r.verdict for r in prime_two]


def _q_binomial_triangle(n, base):
    row = [sp.Integer(1)]
    for size in range(1, n + 1):
        new = [sp.Integer(1)]
        for j in range(1, size):
            new.append(sp.expand(row[j - 1] + base**j * row[j]))
        new.append(sp.Integer(1))
        row = new
    return row


def _to_sympy(p, q):
    return sum(sp.Integer(c) * q ** (e // 2) for e, c in p.terms())


def test_targets_match_independent_oracle():
    q = sp.symbols("q")
    for (n, m, k, signed) in [(2, 1, 2, True), (5, 3, 4, True), (6, 0, 1, True),
                              (3, 5, 6, False), (4, 3, 10, False)]:
        triangle = _q_binomial_triangle(n, q**k)
        oracle = sp.expand(sum(
            (-1 if signed else 1) ** j * triangle[j] * q ** (m * j)
            for j in range(n + 1)
        ))
        mine = f_sum(n, 0, m, k) if signed else f_sum_signless(n, 0, m, k)
        assert sp.expand(_to_sympy(mine, q) - oracle) == 0

    quo, rem = sp.div(_to_sympy(f_sum(2, 0, 1, 2), q), 1 - q, q)
    assert rem == 0
    assert sp.expand(quo - _to_sympy(check_conj_2_1(2, 1, 1).witness, q)) == 0


def test_input_validation():
    with pytest.raises(ValueError):
        check_conj_2_1(-1, 0, 0)
    with pytest.raises(ValueError):
        check_conj_2_1(2, -1, 0)
    with pytest.raises(NotPrime):
        check_conj_2_2(6, 2, 0)
    with pytest.raises(NotPrime):
        check_conj_2_3(9, 0, 2)
    with pytest.raises(ValueError):
        check_conj_2_3(2, 0, 2)
    with pytest.raises(ValueError):
        check_conj_2_2(3, 2, -1)
