import math
from functools import reduce

import pytest

from spectra.landau import (
    alpha0,
    analytic_constants,
    bounds_report,
    divisor_bound,
    divisor_bound_holds,
    divisor_bound_violations,
    divisor_counts_upto,
    landau_bracket_holds,
    landau_g,
    landau_ratio,
    landau_table,
    partition_count,
    partitions,
)


def brute_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in brute_partitions(n - k, k):
            yield (k,) + rest


def brute_landau(n):
    return max(reduce(math.lcm, p, 1) for p in brute_partitions(n))


@pytest.mark.parametrize("n,expected", [(1, 1), (5, 6), (7, 12)])
def test_landau_examples(n, expected):
    assert brute_landau(n) == expected
    assert landau_g(n) == expected


def test_landau_matches_brute_force():
    table = landau_table(30)
    for n in range(0, 31):
        assert table[n] == brute_landau(n)


def test_landau_non_decreasing():
    t = landau_table(2000)
    assert all(a <= b for a, b in zip(t, t[1:]))


def test_landau_ratio_small():
    assert landau_ratio(2) == pytest.approx(math.log(2) / math.sqrt(2 * math.log(2)))
    assert landau_ratio(2) == pytest.approx(0.5887, abs=1e-4)
    with pytest.raises(ValueError):
        landau_ratio(1)


@pytest.mark.parametrize("n", [810, 1000, 1500, 2000, 3000, 4096])
def test_landau_bracket(n):
    assert 0.99 <= landau_ratio(n) <= 1.08
    assert landau_bracket_holds(n)


def test_partitions_generator():
    for n in range(0, 16):
        got = sorted(tuple(sorted(p, reverse=True)) for p in partitions(n))
        assert got == sorted(brute_partitions(n))


@pytest.mark.parametrize("n,expected", [(0, 1), (5, 7), (10, 42)])
def test_partition_count(n, expected):
    assert sum(1 for _ in brute_partitions(n)) == expected
    assert partition_count(n) == expected


def test_partition_count_recurrence_vs_enumeration():
    for n in range(30):
        assert partition_count(n) == sum(1 for _ in partitions(n))


def test_alpha0_and_chain():
    n0 = 2**5 * 3**3 * 5**2 * 7 * 11 * 13 * 17 * 19
    expected = math.log(2304) * math.log(math.log(n0)) / math.log(n0)
    c = analytic_constants()
    assert c.n0 == n0 and c.sigma_n0 == 2304
    assert c.alpha0 == pytest.approx(expected, rel=1e-12)
    assert 2 * math.pi / math.sqrt(6) - 2.16 * c.alpha0 > 0.26
    assert c.chain_holds
    assert c.et_main_term(100) == pytest.approx(math.exp(2 * math.pi / math.sqrt(6) * math.sqrt(100 / math.log(100))))


def test_divisor_bound_at_12():
    assert math.log(6) <= alpha0() * math.log(12) / math.log(math.log(12))
    assert divisor_bound_holds(12, 6)


def test_divisor_counts_sieve():
    sigma = divisor_counts_upto(500)
    for n in range(1, 501):
        assert sigma[n] == sum(1 for d in range(1, n + 1) if n % d == 0)


def test_divisor_bound_fails_only_at_two():
    # log log 2 < 0 makes the right-hand side negative at n = 2
    assert divisor_bound(2) < 0
    assert divisor_bound_violations(10**5) == [2]
    assert divisor_bound_violations(10**5, start=3) == []


def test_bounds_report():
    r = bounds_report(810)
    assert r.in_landau_bracket is True
    assert r.g_value == landau_g(810)
    assert bounds_report(1).ratio is None
