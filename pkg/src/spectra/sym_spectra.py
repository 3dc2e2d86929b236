"""Spectra of symmetric and alternating groups, and the divisibility-maximal filter."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .numtheory import FactoredNat, min_sym_degree, sieve_primes


@dataclass(frozen=True)
class Spectrum:
    """A finite set of positive integers kept in ascending order.

    ``factored`` optionally maps each element to its factorization, which
    lets :func:`mu_filter` compare exponents instead of dividing big
    integers.  ``divisor_closed`` marks sets known to be closed under taking
    divisors (every genuine spectrum is).
    """

    elements: tuple[int, ...]
    factored: Mapping[int, FactoredNat] | None = field(default=None, compare=False, repr=False)
    divisor_closed: bool = field(default=False, compare=False)

    @classmethod
    def from_values(cls, values: Iterable[int], factored=None, divisor_closed=False) -> "Spectrum":
        elems = tuple(sorted(set(values)))
        if elems and elems[0] < 1:
            raise ValueError("spectrum elements must be positive")
        return cls(elems, factored, divisor_closed)

    @classmethod
    def from_factored(cls, items: Iterable[FactoredNat], divisor_closed=False) -> "Spectrum":
        fmap = {f.value: f for f in items}
        return cls(tuple(sorted(fmap)), fmap, divisor_closed)

    @property
    def count(self) -> int:
        return len(self.elements)

    @property
    def length_nats(self) -> float:
        return output_length(self)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m) -> bool:
        return int(m) in self._members

    @property
    def _members(self) -> frozenset[int]:
        cached = self.__dict__.get("_member_set")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_member_set", cached)
        return cached


def output_length(s: Spectrum | Iterable[int]) -> float:
    """Sum of natural logarithms of the elements."""
    values = s.elements if isinstance(s, Spectrum) else s
    return math.fsum(math.log(v) for v in values)


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

def _choice_lists(n: int, family: str) -> tuple[list[int], list[list[tuple[int, int, int]]]]:
    """Per prime, the admissible (exponent, prime power, degree cost) choices."""
    primes = sieve_primes(n)
    choices = []
    for p in primes:
        opts = [(0, 1, 0)]
        e, pk = 1, p
        while pk <= n:
            cost = pk + 2 if (family == "alt" and p == 2) else pk
            if cost <= n:
                opts.append((e, pk, cost))
            e += 1
            pk *= p
        choices.append(opts)
    return primes, choices


def _dfs(n, primes, choices, start, cost, exps, out):
    k = len(primes)
    i = start
    if i == k or n - cost < primes[i]:
        out.append(FactoredNat.from_exponents(dict(exps)))
        return
    p = primes[i]
    for e, _, c in choices[i]:
        if cost + c > n:
            continue
        if e:
            exps.append((p, e))
        _dfs(n, primes, choices, i + 1, cost + c, exps, out)
        if e:
            exps.pop()


def _omega(n: int, family: str, threads: int = 1) -> Spectrum:
    if n < 1:
        raise ValueError("degree must be >= 1")
    primes, choices = _choice_lists(n, family)
    if not primes:
        return Spectrum.from_factored([FactoredNat(1)], divisor_closed=True)

    def subtree(opt):
        e, _, c = opt
        out: list[FactoredNat] = []
        _dfs(n, primes, choices, 1, c, [(primes[0], e)] if e else [], out)
        return out

    first = [opt for opt in choices[0] if opt[2] <= n]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(subtree, first))
    else:
        parts = [subtree(opt) for opt in first]
    return Spectrum.from_factored((f for part in parts for f in part), divisor_closed=True)


def omega_symmetric(n: int, threads: int = 1) -> Spectrum:
    """All element orders of Sym_n: every m with l(m) <= n."""
    return _omega(n, "sym", threads)


def omega_alternating(n: int, threads: int = 1) -> Spectrum:
    """All element orders of Alt_n.

    An even order with 2-part 2^a needs a 2^a-cycle plus a transposition,
    so the 2-component costs 2^a + 2 degrees; odd orders cost l(m).
    """
    return _omega(n, "alt", threads)


def element_cost(family: str, m: FactoredNat) -> int:
    cost = min_sym_degree(m)
    if family.lower() == "alt" and m.value % 2 == 0:
        cost += 2
    return cost


def contains_order(family: str, n: int, m: FactoredNat) -> bool:
    fam = family.lower()
    if fam not in ("sym", "alt"):
        raise ValueError(f"unknown family {family!r}")
    return element_cost(fam, m) <= n


# ---------------------------------------------------------------------------
# maximal elements
# ---------------------------------------------------------------------------

def _mu_closed(s: Spectrum) -> list[int]:
    # In a divisor-closed set, m is non-maximal iff m*p is present for a prime p.
    primes = sorted({p for f in s.factored.values() for p in f.primes})
    present = s._members
    return [m for m in s.elements if not any(m * p in present for p in primes)]


def _mu_indexed(s: Spectrum) -> list[int]:
    accepted: list[dict[int, int]] = []
    result: list[int] = []
    by_prime: dict[int, list[int]] = {}
    for m in reversed(s.elements):
        f = s.factored[m]
        exps = f.exponents
        if not exps:
            dominated = bool(accepted)
        else:
            p = min(exps, key=lambda q: len(by_prime.get(q, ())))
            dominated = False
            for idx in by_prime.get(p, ()):
                a = accepted[idx]
                if all(a.get(q, 0) >= e for q, e in exps.items()):
                    dominated = True
                    break
        if dominated:
            continue
        idx = len(accepted)
        accepted.append(exps)
        result.append(m)
        for q in exps:
            by_prime.setdefault(q, []).append(idx)
    return result


def _mu_pairwise(s: Spectrum) -> list[int]:
    result: list[int] = []
    for m in reversed(s.elements):
        if not any(a % m == 0 for a in result):
            result.append(m)
    return result


def mu_filter(s: Spectrum) -> Spectrum:
    """Elements of s maximal under divisibility."""
    if not s.elements:
        return Spectrum(())
    if s.factored is not None and s.divisor_closed:
        keep = _mu_closed(s)
    elif s.factored is not None:
        keep = _mu_indexed(s)
    else:
        keep = _mu_pairwise(s)
    fmap = None if s.factored is None else {m: s.factored[m] for m in keep}
    return Spectrum.from_values(keep, fmap)


def divisor_closure(values: Iterable[int]) -> set[int]:
    """All divisors of all values (small inputs only)."""
    out: set[int] = set()
    for v in values:
        d = 1
        while d * d <= v:
            if v % d == 0:
                out.add(d)
                out.add(v // d)
            d += 1
    return out


def is_antichain(values: Iterable[int]) -> bool:
    vals = sorted(values)
    return not any(
        vals[j] % vals[i] == 0 for i in range(len(vals)) for j in range(i + 1, len(vals))
    )
