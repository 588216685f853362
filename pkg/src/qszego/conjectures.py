"""Divisibility scanners for the three open q-binomial conjectures.

Each scanned tuple attempts an exact integer polynomial division of an
alternating or odd-power sum by its conjectured divisor.  A successful
division yields the cofactor and its values at q = 1 and q = -1; a
failed one is a first-class result carrying the nonzero remainder, so
grid scans double as counterexample hunts and never raise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .exactalg import NotDivisible, Q, UPoly, to_json_value
from .limits import ensure_prime, f_sum, f_sum_signless, padic
from .qfun import qpoch


@dataclass(frozen=True)
class ScanResult:
    """Outcome of one divisibility attempt."""

    conjecture_id: str
    params: dict[str, Any]
    verdict: str
    witness: UPoly
    evaluations: dict[str, Fraction] | None = None

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def as_json(self) -> dict[str, Any]:
        return {
            "conjecture": self.conjecture_id,
            "params": to_json_value(self.params),
            "verdict": self.verdict,
            "witness": to_json_value(self.witness),
            "evaluations": to_json_value(self.evaluations),
        }


def _divide(conjecture_id: str, params: dict[str, Any], target: UPoly, divisor: UPoly) -> ScanResult:
    try:
        cofactor = target.divexact(divisor)
    except NotDivisible as exc:
        remainder = exc.remainder if exc.remainder is not None else target
        return ScanResult(conjecture_id, params, "fails", remainder)
    evaluations = {"q=1": cofactor.eval_q(1), "q=-1": cofactor.eval_q(-1)}
    return ScanResult(conjecture_id, params, "holds", cofactor, evaluations)


def check_conj_2_1(n: int, m: int, k: int) -> ScanResult:
    """Divide sum_j (-1)^j q^(mj) [n j]_{q^(2^k)} by (q; q^2)_floor((n+1)/2)."""
    if n < 0 or m < 0 or k < 0:
        raise ValueError("bounds must be nonnegative")
    target = f_sum(n, 0, m, 2**k)
    divisor = qpoch(Q, (n + 1) // 2, 2)
    return _divide("2.1", {"n": n, "m": m, "k": k}, target, divisor)


def scan_conj_2_1(n_max: int, m_max: int, k_max: int) -> list[ScanResult]:
    """All tuples with n <= n_max, m <= m_max, k <= k_max, in tuple order."""
    return [
        check_conj_2_1(n, m, k)
        for n in range(n_max + 1)
        for m in range(m_max + 1)
        for k in range(k_max + 1)
    ]


def reduced_odd_divisor(p: int, n: int) -> UPoly:
    """prod_{j=1}^{floor((n+1)/2)} (1 - q^((2j-1)/V_p(2j-1)))."""
    out = UPoly({0: 1})
    for j in range(1, (n + 1) // 2 + 1):
        _, part = padic(p, 2 * j - 1)
        out = out * (UPoly({0: 1}) - UPoly({2 * ((2 * j - 1) // part): 1}))
    return out


def check_conj_2_2(p: int, n: int, m: int) -> ScanResult:
    """Divide sum_j (-1)^j q^(mj) [n j]_{q^p} by the reduced odd divisor."""
    ensure_prime(p)
    if n < 0 or m < 0:
        raise ValueError("bounds must be nonnegative")
    target = f_sum(n, 0, m, p)
    divisor = reduced_odd_divisor(p, n)
    return _divide("2.2", {"p": p, "n": n, "m": m}, target, divisor)


def scan_conj_2_2(p: int, n_max: int, m_max: int) -> list[ScanResult]:
    """All tuples with n <= n_max, m <= m_max for the prime p."""
    return [
        check_conj_2_2(p, n, m)
        for n in range(n_max + 1)
        for m in range(m_max + 1)
    ]


def reduced_part_divisor(p: int, n: int) -> UPoly:
    """prod_{k=1}^{n} (1 + q^(k/V_p(k)))."""
    out = UPoly({0: 1})
    for k in range(1, n + 1):
        _, part = padic(p, k)
        out = out * (UPoly({0: 1}) + UPoly({2 * (k // part): 1}))
    return out


def check_conj_2_3(p: int, m: int, n: int) -> ScanResult:
    """Extract the cofactor of sum_j q^((2m+1)j) [n j]_{q^(2p)}."""
    ensure_prime(p)
    if p == 2:
        raise ValueError("requires an odd prime")
    if n < 0 or m < 0:
        raise ValueError("bounds must be nonnegative")
    target = f_sum_signless(n, 0, 2 * m + 1, 2 * p)
    divisor = reduced_part_divisor(p, n)
    return _divide("2.3", {"p": p, "m": m, "n": n}, target, divisor)


def scan_conj_2_3(p: int, m: int, n_max: int) -> list[ScanResult]:
    """Cofactor extraction for n = 0..n_max at fixed p and m."""
    return [check_conj_2_3(p, m, n) for n in range(n_max + 1)]


def scan_conj_2_1_negative(n_max: int) -> list[ScanResult]:
    """Control scan with a one-factor-too-long divisor; must fail."""
    rows = []
    for n in range(n_max + 1):
        target = f_sum(n, 0, 1, 2)
        divisor = qpoch(Q, (n + 1) // 2 + 1, 2)
        rows.append(_divide("2.1-neg", {"n": n, "m": 1, "k": 1}, target, divisor))
    return rows
