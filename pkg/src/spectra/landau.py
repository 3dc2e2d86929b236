"""Landau's function, partition counts, and numeric checks of the analytic bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from .numtheory import FactoredNat, divisor_count, sieve_primes

# n0 = 2^5 3^3 5^2 7 11 13 17 19, the extremal argument for the divisor bound.
N0_FACTORS = FactoredNat.from_exponents({2: 5, 3: 3, 5: 2, 7: 1, 11: 1, 13: 1, 17: 1, 19: 1})
N0 = N0_FACTORS.value

ET_CONSTANT = 2 * math.pi / math.sqrt(6)
LANDAU_LOWER, LANDAU_UPPER = 0.99, 1.08
LANDAU_FROM = 810
GUARD = 1e-9


@lru_cache(maxsize=8)
def _landau_table(n: int) -> tuple[int, ...]:
    # best[b] = largest product of distinct-prime powers with cost <= b
    best = [1] * (n + 1)
    for p in sieve_primes(n):
        powers = []
        pk = p
        while pk <= n:
            powers.append(pk)
            pk *= p
        for b in range(n, p - 1, -1):
            cur = best[b]
            for pk in powers:
                if pk > b:
                    break
                cand = best[b - pk] * pk
                if cand > cur:
                    cur = cand
            best[b] = cur
    return tuple(best)


def landau_table(n: int) -> tuple[int, ...]:
    """(g(0), g(1), ..., g(n)) from one knapsack pass."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _landau_table(n)


def landau_g(n: int) -> int:
    """Largest element order in Sym_n."""
    return landau_table(n)[n]


def landau_ratio(n: int) -> float:
    if n < 2:
        raise ValueError("ratio needs n >= 2")
    return math.log(landau_g(n)) / math.sqrt(n * math.log(n))


def landau_bracket_holds(n: int) -> bool:
    r = landau_ratio(n)
    return LANDAU_LOWER - GUARD <= r <= LANDAU_UPPER + GUARD


@lru_cache(maxsize=8)
def _partition_table(n: int) -> tuple[int, ...]:
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = g1 + k
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return tuple(p)


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    return _partition_table(max(n, 64))[n]


def partitions(n: int) -> Iterator[list[int]]:
    """Partitions of n as ascending lists (Kelleher's accel_asc, iterative)."""
    if n == 0:
        yield []
        return
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        ell = k + 1
        while x <= y:
            a[k] = x
            a[ell] = y
            yield a[: k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[: k + 1]


# ---------------------------------------------------------------------------
# constants and the divisor bound
# ---------------------------------------------------------------------------

def alpha0() -> float:
    ln = math.log(N0)
    return math.log(divisor_count(N0_FACTORS)) * math.log(ln) / ln


def divisor_bound(n: int) -> float:
    """alpha0 * log n / log log n."""
    ln = math.log(n)
    return alpha0() * ln / math.log(ln)


def divisor_bound_holds(n: int, sigma: int) -> bool:
    rhs = divisor_bound(n)
    return math.log(sigma) <= rhs + GUARD * abs(rhs)


def divisor_counts_upto(limit: int) -> np.ndarray:
    """sigma(k) for 0 <= k <= limit (index 0 unused)."""
    sigma = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        sigma[d::d] += 1
    return sigma


def divisor_bound_violations(limit: int, start: int = 2) -> list[int]:
    """All start <= n <= limit with log sigma(n) > alpha0 log n / log log n."""
    sigma = divisor_counts_upto(limit)
    n = np.arange(start, limit + 1, dtype=np.float64)
    ln = np.log(n)
    rhs = alpha0() * ln / np.log(ln)
    lhs = np.log(sigma[start:].astype(np.float64))
    bad = lhs > rhs + GUARD * np.abs(rhs)
    return (np.flatnonzero(bad) + start).tolist()


def et_main_term(n: int) -> float:
    """exp((2 pi / sqrt 6) sqrt(n / log n)), the leading term for |omega(Sym_n)|."""
    return math.exp(ET_CONSTANT * math.sqrt(n / math.log(n)))


def et_ratio(count: int, n: int) -> float:
    """log(count) / sqrt(n / log n); a diagnostic, nothing is asserted on it."""
    return math.log(count) / math.sqrt(n / math.log(n))


@dataclass(frozen=True)
class AnalyticConstants:
    n0: int
    sigma_n0: int
    alpha0: float
    mu_exponent: float  # 2 pi / sqrt 6 - 2.16 alpha0
    chain_holds: bool
    et_main_term: Callable[[int], float]


def analytic_constants() -> AnalyticConstants:
    a0 = alpha0()
    c = ET_CONSTANT - 2.16 * a0
    return AnalyticConstants(
        n0=N0,
        sigma_n0=divisor_count(N0_FACTORS),
        alpha0=a0,
        mu_exponent=c,
        chain_holds=c > 0.26,
        et_main_term=et_main_term,
    )


@dataclass(frozen=True)
class BoundsReport:
    n: int
    g_value: int
    ratio: float | None
    alpha0: float
    et_main_term: float | None
    in_landau_bracket: bool | None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "g_value": str(self.g_value),
            "ratio": self.ratio,
            "alpha0": self.alpha0,
            "et_main_term": self.et_main_term,
            "in_landau_bracket": self.in_landau_bracket,
        }


def bounds_report(n: int) -> BoundsReport:
    g = landau_g(n)
    ratio = landau_ratio(n) if n >= 2 else None
    bracket = None
    if n >= LANDAU_FROM:
        bracket = landau_bracket_holds(n)
    return BoundsReport(
        n=n,
        g_value=g,
        ratio=ratio,
        alpha0=alpha0(),
        et_main_term=et_main_term(n) if n >= 2 else None,
        in_landau_bracket=bracket,
    )
