"""Elementary and primitive-prime-divisor number theory.

Everything here is pure and deterministic.  Factorization uses trial
division followed by a seeded Pollard-Brent rho with a hard effort bound;
when the bound is hit a :class:`FactorizationBudgetExceeded` is raised
rather than returning a partial answer.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterable, Mapping, Sequence

import numpy as np

TRIAL_LIMIT = 10**6
DEFAULT_FACTOR_LIMIT = 2_000_000
_RHO_SEED = 0x5EED

# Pairs (a, i) with empty R_i(a).
ZSIGMONDY_EXCEPTIONS = frozenset({(2, 1), (2, 6), (-2, 2), (-2, 3), (3, 1), (-3, 2)})
# r_i*(a) for exceptional pairs where it is nevertheless defined.
SPECIAL_STAR = {(-2, 3): 9, (2, 6): 9, (-3, 2): 8}

_factor_limit = DEFAULT_FACTOR_LIMIT


class FactorizationBudgetExceeded(ArithmeticError):
    """factorization budget exceeded"""


def set_factor_limit(limit: int) -> None:
    """Set the default rho iteration budget used by :func:`factorize`."""
    global _factor_limit
    if limit < 1:
        raise ValueError("factor limit must be positive")
    _factor_limit = limit


# ---------------------------------------------------------------------------
# primes
# ---------------------------------------------------------------------------

def sieve_primes(limit: int) -> list[int]:
    """Primes <= limit, ascending (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).tolist()


@lru_cache(maxsize=1)
def _trial_primes() -> tuple[int, ...]:
    return tuple(sieve_primes(TRIAL_LIMIT))


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# The bases above are a deterministic witness set below this bound.
_MR_DETERMINISTIC = 3_317_044_064_679_887_385_961_981


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below ~3.3e24, seeded-probabilistic above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_mr_round(n, d, s, a) for a in _MR_BASES):
        return False
    if n < _MR_DETERMINISTIC:
        return True
    rng = random.Random(n ^ _RHO_SEED)
    return all(_mr_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(16))


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactoredNat:
    """A positive integer together with its prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("FactoredNat needs a positive value")
        prod = 1
        for p, e in self.factors:
            if e < 1:
                raise ValueError(f"non-positive exponent for {p}")
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors do not multiply to {self.value}")

    @classmethod
    def from_exponents(cls, exps: Mapping[int, int]) -> "FactoredNat":
        items = tuple(sorted((p, e) for p, e in exps.items() if e > 0))
        value = 1
        for p, e in items:
            value *= p**e
        return cls(value, items)

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def prime_powers(self) -> list[int]:
        return [p**e for p, e in self.factors]

    def divides(self, other: "FactoredNat") -> bool:
        exps = other.exponents
        return all(exps.get(p, 0) >= e for p, e in self.factors)

    def __int__(self) -> int:
        return self.value


def _brent(n: int, seed: int, budget: list[int]) -> int:
    """One Pollard-Brent run; returns a nontrivial factor or n on failure."""
    rng = random.Random(seed)
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            budget[0] -= min(m, r - k)
            if budget[0] < 0:
                raise FactorizationBudgetExceeded(
                    f"factorization budget exceeded on {n}"
                )
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def _split(n: int, out: dict[int, int], budget: list[int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, out, budget)
        _split(r, out, budget)
        return
    seed = _RHO_SEED
    while True:
        d = _brent(n, seed, budget)
        if 1 < d < n:
            break
        seed += 1
    _split(d, out, budget)
    _split(n // d, out, budget)


def factorize(n: int, limit: int | None = None) -> FactoredNat:
    """Complete factorization of n >= 1.

    ``limit`` caps the total number of rho iterations; exceeding it raises
    :class:`FactorizationBudgetExceeded`.
    """
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    exps: dict[int, int] = {}
    m = n
    for i, p in enumerate(_trial_primes()):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            exps[p] = e
        # Large prime cofactors would otherwise walk the whole table.
        if i == 168 and m > 1 and is_prime(m):
            break
    if m > 1:
        if m < TRIAL_LIMIT**2 or is_prime(m):
            exps[m] = exps.get(m, 0) + 1
        else:
            budget = [limit if limit is not None else _factor_limit]
            _split(m, exps, budget)
    return FactoredNat.from_exponents(exps)


def divisor_count(n: FactoredNat) -> int:
    """sigma(n) in the counting sense: the number of divisors of n."""
    return math.prod(e + 1 for _, e in n.factors)


def min_sym_degree(n: FactoredNat) -> int:
    """Least degree d such that Sym_d has an element of order n."""
    return sum(n.prime_powers())


# ---------------------------------------------------------------------------
# orders and primitive prime divisors
# ---------------------------------------------------------------------------

def _check_base(a: int) -> None:
    if abs(a) <= 1:
        raise ValueError(f"base must satisfy |a| > 1, got {a}")


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/mZ)^*."""
    if m == 1:
        return 1
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    a %= m
    # Carmichael-free approach: phi(m) via factorization, then strip primes.
    fm = factorize(m)
    phi = math.prod((p - 1) * p ** (e - 1) for p, e in fm.factors)
    order = phi
    for p, _ in factorize(phi).factors:
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def order_e(s: int, a: int) -> int:
    """e(s, a): the least i with s | a^i - 1, with the special rule at s = 2.

    For s = 2 and odd a the value is 1 if a = 1 (mod 4) and 2 otherwise.
    """
    _check_base(a)
    if s < 1:
        raise ValueError("s must be positive")
    if s == 2:
        if a % 2 == 0:
            raise ValueError("e(2, a) needs odd a")
        return 1 if a % 4 == 1 else 2
    if s % 2 == 0:
        raise ValueError("e(s, a) is defined for odd s or s = 2")
    if math.gcd(s, a) != 1:
        raise ValueError(f"gcd({s}, {a}) != 1")
    return multiplicative_order(a, s)


def part_and_copart(a: int, b: int) -> tuple[int, int]:
    """The b-part of a and |a| divided by it."""
    if a == 0:
        raise ValueError("b-part of 0 is undefined")
    if not is_prime(b):
        raise ValueError(f"{b} is not prime")
    m, part = abs(a), 1
    while m % b == 0:
        m //= b
        part *= b
    return part, m


def _mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


@lru_cache(maxsize=4096)
def cyclotomic_value(i: int, a: int) -> int:
    """Phi_i(a) via the Mobius product over divisors of i."""
    num, den = 1, 1
    for d in range(1, i + 1):
        if i % d:
            continue
        mu = _mobius(i // d)
        if mu == 1:
            num *= a**d - 1
        elif mu == -1:
            den *= a**d - 1
    q, r = divmod(num, den)
    assert r == 0
    return q


@dataclass(frozen=True)
class PpdReport:
    base: int
    index: int
    ppd_set: frozenset[int]
    canonical: int | None
    star: int | None
    exceptional: bool

    @property
    def star_defined(self) -> bool:
        return self.star is not None


@lru_cache(maxsize=65536)
def primitive_prime_divisors(a: int, i: int) -> PpdReport:
    """R_i(a), the canonical (smallest) member, and r_i*(a)."""
    _check_base(a)
    if i < 1:
        raise ValueError("index must be positive")
    # Every primitive prime divisor of a^i - 1 divides Phi_i(a).
    phi = abs(cyclotomic_value(i, a))
    candidates = factorize(phi).primes
    ppd = frozenset(r for r in candidates if order_e(r, a) == i)
    canonical = min(ppd) if ppd else None
    star = None
    if canonical is not None:
        star, _ = part_and_copart(a**i - 1, canonical)
    star = SPECIAL_STAR.get((a, i), star)
    return PpdReport(
        base=a,
        index=i,
        ppd_set=ppd,
        canonical=canonical,
        star=star,
        exceptional=(a, i) in ZSIGMONDY_EXCEPTIONS,
    )


def gcd_closed_form(a: int, s: int, t: int, kind: str) -> int:
    """Closed forms for gcd(a^s - 1, a^t - 1) and gcd(a^s + 1, a^t - 1).

    ``kind`` is ``"minus-minus"`` or ``"plus-minus"``.  Values are absolute.
    """
    _check_base(a)
    if s < 1 or t < 1:
        raise ValueError("exponents must be positive")
    g = math.gcd(s, t)
    if kind == "minus-minus":
        return abs(a**g - 1)
    if kind == "plus-minus":
        if (s // g) % 2 == 1 and (t // g) % 2 == 0:
            return abs(a**g + 1)
        return math.gcd(2, a - 1)
    raise ValueError(f"unknown kind {kind!r}")


def lcm_all(values: Iterable[int]) -> int:
    return reduce(math.lcm, (abs(v) for v in values), 1)


@dataclass(frozen=True)
class LcmClassification:
    star: int
    lcm: int
    divides: bool
    clause: int | None  # 1 or 2, None when star does not divide
    witness: int | None  # position in the term list
    # second statement: gcd(star, a - 1) != 1 forces a 2- or 3-power
    shares_with_a_minus_1: bool = False
    small_prime_power: bool = field(default=True)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def divides_lcm_classifier(
    s: int, alpha: int, a: int, terms: Sequence[tuple[int, int]]
) -> LcmClassification:
    """Check whether r*_{s^alpha}(a) divides lcm(a^n_i - eps_i) and classify it.

    Clause 1: some n_i is divisible by s^alpha.  Clause 2: s = 2 and some
    term with eps_i = -1 has n_i divisible by s^(alpha-1).
    """
    if not is_prime(s) or alpha < 1:
        raise ValueError("need a prime s and alpha >= 1")
    rep = primitive_prime_divisors(a, s**alpha)
    if rep.star is None:
        raise ValueError(f"r* undefined for ({a}, {s**alpha})")
    for n_i, eps in terms:
        if n_i < 1 or eps not in (1, -1):
            raise ValueError(f"bad term {(n_i, eps)}")
    big = lcm_all(a**n_i - eps for n_i, eps in terms)
    divides = big % rep.star == 0
    clause = witness = None
    if divides:
        for idx, (n_i, _) in enumerate(terms):
            if n_i % s**alpha == 0:
                clause, witness = 1, idx
                break
        else:
            if s == 2:
                for idx, (n_i, eps) in enumerate(terms):
                    if eps == -1 and n_i % 2 ** (alpha - 1) == 0:
                        clause, witness = 2, idx
                        break
    shares = math.gcd(rep.star, a - 1) != 1
    small = True
    if shares:
        small = (s**alpha == 2 and _is_power_of(rep.star, 2)) or (
            s**alpha == 3 and _is_power_of(rep.star, 3)
        )
    return LcmClassification(rep.star, big, divides, clause, witness, shares, small)
