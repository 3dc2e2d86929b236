"""Semisimple spectra and witness orders for finite simple classical groups.

Only the pieces with explicit formulas are computed: the semisimple orders
of linear and unitary groups, the witness orders used to embed
mu(Sym_n) into a classical group, and the parameter spaces whose size
governs the running time of the brute-force generator.  Orders for the
remaining (mixed) parameters are not evaluated; those parameters are
emitted as shapes only.
"""

from __future__ import annotations

import logging
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .landau import partition_count, partitions
from .numtheory import (
    FactoredNat,
    FactorizationBudgetExceeded,
    cyclotomic_value,
    factorize,
    lcm_all,
    part_and_copart,
    primitive_prime_divisors,
)
from .sym_spectra import Spectrum, mu_filter, omega_symmetric

log = logging.getLogger(__name__)

FAMILIES = ("PSL", "PSU", "PSp", "OmegaOdd", "POmegaPlus", "POmegaMinus")
LINEAR_UNITARY = ("PSL", "PSU")
ORTHOGONAL_EVEN = ("POmegaPlus", "POmegaMinus")

# (family, n, q) that are not simple; formulas are still evaluated.
_NOT_SIMPLE = {("PSL", 2, 2), ("PSL", 2, 3), ("PSU", 2, 2), ("PSU", 2, 3), ("PSU", 3, 2), ("PSp", 2, 2)}


class UnsupportedCase(ValueError):
    """The witness construction does not cover this parameter combination."""


class InexactDivision(ArithmeticError):
    pass


class WitnessNotAbsorbed(AssertionError):
    pass


@dataclass(frozen=True)
class GroupId:
    family: str
    n: int
    q: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError("rank/dimension must be >= 2")
        f = factorize(self.q) if self.q >= 2 else None
        if f is None or len(f.factors) != 1:
            raise ValueError(f"{self.q} is not a prime power")
        if (self.family, self.n, self.q) in _NOT_SIMPLE:
            warnings.warn(f"{self.family}_{self.n}({self.q}) is not simple", stacklevel=3)

    @property
    def p(self) -> int:
        return factorize(self.q).factors[0][0]

    @property
    def f(self) -> int:
        return factorize(self.q).factors[0][1]

    @property
    def eps(self) -> int:
        """+1 or -1: the sign for linear/unitary and plus/minus orthogonal types."""
        return -1 if self.family in ("PSU", "POmegaMinus") else 1

    @property
    def label(self) -> str:
        return f"{self.family}_{self.n}({self.q})"

    def as_dict(self) -> dict:
        return {"family": self.family, "n": self.n, "q": self.q}


@dataclass(frozen=True)
class SemisimpleParam:
    parts: tuple[int, ...]
    eps: int = 1

    def __post_init__(self):
        if not self.parts or any(x < 1 for x in self.parts):
            raise ValueError("parts must be a non-empty tuple of positive integers")
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")


def c_denominator(param: SemisimpleParam, n: int, q: int) -> int:
    """The correction c(n_1, ..., n_t) dividing the lcm of (eps q)^{n_i} - 1."""
    parts, eps = param.parts, param.eps
    t, total = len(parts), sum(parts)
    if total > n:
        raise ValueError(f"parts sum to {total} > {n}")
    eq1 = abs(eps * q - 1)
    if t + n - total > 2:
        return 1
    if t == 2 and total == n:
        return math.gcd(n // math.gcd(parts[0], parts[1]), eq1)
    if t == 1 and total == n - 1:
        return math.gcd(n, eq1)
    if t == 1 and total == n:
        return abs(q - eps) * math.gcd(n, eq1)
    raise AssertionError(f"no case for {parts} with n={n}")  # unreachable


def _prime_support_within(c: int, m: int) -> bool:
    while c > 1:
        g = math.gcd(c, m)
        if g == 1:
            return False
        while c % g == 0:
            c //= g
    return True


@lru_cache(maxsize=4096)
def _cyclotomic_factors(d: int, base: int, limit: int | None) -> FactoredNat:
    return factorize(abs(cyclotomic_value(d, base)), limit)


@lru_cache(maxsize=4096)
def power_minus_one_factors(base: int, k: int, limit: int | None = None) -> FactoredNat:
    """Factorization of |base^k - 1| assembled from cyclotomic pieces."""
    exps: dict[int, int] = {}
    for d in range(1, k + 1):
        if k % d == 0:
            for p, e in _cyclotomic_factors(d, base, limit).factors:
                exps[p] = exps.get(p, 0) + e
    f = FactoredNat.from_exponents(exps)
    assert f.value == abs(base**k - 1)
    return f


class _SemisimpleEvaluator:
    """Evaluates lcm((eps q)^{n_i} - 1) / c with memoisation on distinct parts."""

    def __init__(self, group: GroupId, factor_limit: int | None = None):
        self.group = group
        self.base = group.eps * group.q
        self.eq1 = abs(self.base - 1)
        self.factored = True
        try:
            self.terms = [None] + [
                power_minus_one_factors(self.base, k, factor_limit) for k in range(1, group.n + 1)
            ]
        except FactorizationBudgetExceeded:
            log.info("falling back to unfactored values for %s", group.label)
            self.factored = False
            self.terms = [None] + [abs(self.base**k - 1) for k in range(1, group.n + 1)]
        self._lcm: dict[tuple[int, ...], tuple[int, dict[int, int] | None]] = {}

    def _lcm_of(self, distinct: tuple[int, ...]):
        hit = self._lcm.get(distinct)
        if hit is None:
            if self.factored:
                exps: dict[int, int] = {}
                for k in distinct:
                    for p, e in self.terms[k].factors:
                        if e > exps.get(p, 0):
                            exps[p] = e
                value = math.prod(p**e for p, e in exps.items())
                hit = (value, exps)
            else:
                hit = (lcm_all(self.terms[k] for k in distinct), None)
            self._lcm[distinct] = hit
        return hit

    def value(self, parts) -> tuple[int, FactoredNat | None]:
        g = self.group
        c = c_denominator(SemisimpleParam(tuple(parts), g.eps), g.n, g.q)
        assert _prime_support_within(c, self.eq1), (parts, c)
        big, exps = self._lcm_of(tuple(sorted(set(parts))))
        v, r = divmod(big, c)
        if r:
            raise InexactDivision(f"c={c} does not divide lcm for parts {parts} in {g.label}")
        if exps is None:
            return v, None
        if c > 1:
            exps = dict(exps)
            for p, e in factorize(c).factors:
                exps[p] -= e
        return v, FactoredNat.from_exponents(exps)


def _check_linear_unitary(group: GroupId) -> None:
    if group.family not in LINEAR_UNITARY:
        raise ValueError(f"semisimple values are only formulated for PSL/PSU, not {group.family}")


def nu_semisimple(group: GroupId, threads: int = 1, factor_limit: int | None = None) -> Spectrum:
    """All lcm((eps q)^{n_i} - 1) / c over multisets with sum <= n.

    The result contains every maximal semisimple order of the group.
    """
    _check_linear_unitary(group)
    ev = _SemisimpleEvaluator(group, factor_limit)

    def level(k: int) -> dict[int, FactoredNat | None]:
        out: dict[int, FactoredNat | None] = {}
        for parts in partitions(k):
            v, f = ev.value(parts)
            out[v] = f
        return out

    levels = range(1, group.n + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(level, levels))
    else:
        results = [level(k) for k in levels]
    merged: dict[int, FactoredNat | None] = {}
    for r in results:
        merged.update(r)
    fmap = {v: f for v, f in merged.items()} if ev.factored else None
    return Spectrum.from_values(merged, fmap)


def mu_semisimple(group: GroupId, threads: int = 1, factor_limit: int | None = None) -> Spectrum:
    """mu of the semisimple spectrum for PSL/PSU."""
    return mu_filter(nu_semisimple(group, threads, factor_limit))


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------

def _star_defined(base: int, k: int) -> bool:
    return primitive_prime_divisors(base, k).star is not None


def _psu2_special(a: FactoredNat, n: int) -> int:
    if n < 8:
        raise UnsupportedCase(f"PSU_{n}(2): the special witness is only constructed for n >= 8")
    rest = [pk for pk in a.prime_powers() if pk != 2]
    t = len(rest) + 1
    total = sum(rest)
    d = 1 if t > 1 else math.gcd(n, 3)
    core = lcm_all(2**pk + 1 for pk in rest)
    if total == n - 2:
        num = 2 * core
    elif total == n - 3:
        num = 4 * core
    else:
        raise UnsupportedCase(f"PSU_{n}(2): odd-part degree {total} is not n-2 or n-3")
    v, r = divmod(num, d)
    if r:
        raise InexactDivision(f"{d} does not divide {num}")
    return v


def witness_b(a: FactoredNat, group: GroupId) -> int:
    """The witness order b_a in the classical group attached to a in mu(Sym_n).

    For PSU_n(2) and a with 2-part exactly 2 the replacement value phi(a)
    is returned instead (it lies outside the semisimple spectrum).
    """
    n, q, fam = group.n, group.q, group.family
    pps = a.prime_powers()
    if not pps:
        raise ValueError("a must be > 1")
    if sum(pps) > n:
        raise ValueError(f"{a.value} does not occur in Sym_{n}")

    if fam in LINEAR_UNITARY:
        base = group.eps * q
        if all(_star_defined(base, pk) for pk in pps):
            ev = _SemisimpleEvaluator(group)
            return ev.value(pps)[0]
        if fam == "PSU" and q == 2 and 2 in pps:
            return _psu2_special(a, n)
        raise UnsupportedCase(f"r* undefined for some part of {a.value} in {group.label}")

    # symplectic and orthogonal: term q^{p^k} + (-1)^p
    signs = {pk: (1 if pk % 2 == 0 else -1) for pk in pps}
    if fam in ("PSp", "OmegaOdd"):
        denom = math.gcd(2, q - 1)
        return _exact(lcm_all(q**pk + s for pk, s in signs.items()), denom)

    eps = group.eps
    denom = math.gcd(4, q - eps)
    if sum(pps) < n:
        big = lcm_all(q**pk + s for pk, s in signs.items())
        return big // math.gcd(big, denom)
    if len(pps) == 1 and pps[0] & (pps[0] - 1) == 0:
        # n = a is a power of 2
        if eps == -1:
            return _exact(q**n + 1, math.gcd(2, q - 1))
        return part_and_copart(q**n - 1, 2)[1]
    pluses = sum(1 for s in signs.values() if s == 1)
    want_odd = eps == -1
    if (pluses % 2 == 1) != want_odd:
        odd = [pk for pk in pps if pk % 2]
        even = any(pk % 2 == 0 for pk in pps)
        if not odd or not (len(pps) <= 2 or not even):
            raise UnsupportedCase(f"sign adjustment not covered for a={a.value} in {group.label}")
        signs[max(odd)] = 1
    big = lcm_all(q**pk + s for pk, s in signs.items())
    return big // math.gcd(big, denom)


def _exact(num: int, den: int) -> int:
    v, r = divmod(num, den)
    if r:
        raise InexactDivision(f"{den} does not divide {num}")
    return v


@dataclass(frozen=True)
class PhiReport:
    group: GroupId
    mu_sym: tuple[int, ...]
    mu_pprime_count: int
    assignment: dict[int, int]
    candidates: dict[int, tuple[int, ...]]
    injective: bool
    disjoint: bool
    partial: bool  # PSU_n(2): special values checked for distinctness only
    special: dict[int, int]

    @property
    def passed(self) -> bool:
        return self.injective and (self.partial or self.mu_pprime_count >= len(self.mu_sym))


def _matching(cands: dict[int, tuple[int, ...]]) -> dict[int, int] | None:
    import networkx as nx

    G = nx.Graph()
    left = [("a", a) for a in cands]
    G.add_nodes_from(left, bipartite=0)
    for a, cs in cands.items():
        for A in cs:
            G.add_edge(("a", a), ("A", A))
    match = nx.bipartite.hopcroft_karp_matching(G, top_nodes=left)
    out = {a: match[("a", a)][1] for a in cands if ("a", a) in match}
    return out if len(out) == len(cands) else None


def injection_phi_check(group: GroupId, threads: int = 1) -> PhiReport:
    """Embed mu(Sym_n) into the semisimple maximal orders of a PSL/PSU group.

    Each a is sent to a maximal semisimple order divisible by its witness.
    The argument behind this assumes n > 3; smaller n are computed anyway.
    """
    _check_linear_unitary(group)
    mu_sym = mu_filter(omega_symmetric(group.n))
    mu_pp = mu_semisimple(group, threads)
    cands: dict[int, tuple[int, ...]] = {}
    special: dict[int, int] = {}
    for a in mu_sym:
        fa = mu_sym.factored[a]
        b = witness_b(fa, group)
        if group.family == "PSU" and group.q == 2 and 2 in fa.prime_powers():
            special[a] = b
            continue
        hits = tuple(A for A in mu_pp if A % b == 0)
        if not hits:
            raise WitnessNotAbsorbed(f"b_{a} = {b} divides no semisimple maximal order of {group.label}")
        cands[a] = hits
    used: dict[int, int] = {}
    disjoint = True
    for a, hits in cands.items():
        for A in hits:
            if A in used:
                disjoint = False
            used[A] = a
    assignment = {a: hits[0] for a, hits in cands.items()}
    if len(set(assignment.values())) != len(assignment):
        assignment = _matching(cands) or assignment
    injective = len(set(assignment.values())) == len(assignment)
    if special:
        images = list(assignment.values()) + list(special.values())
        injective = injective and len(set(images)) == len(images)
    return PhiReport(
        group=group,
        mu_sym=mu_sym.elements,
        mu_pprime_count=mu_pp.count,
        assignment=assignment,
        candidates=cands,
        injective=injective,
        disjoint=disjoint,
        partial=bool(special),
        special=special,
    )


# ---------------------------------------------------------------------------
# parameter spaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FirstTerm:
    value: int
    p: int
    k: int  # exponent: p^k - 1, or (p^k + i) / 2
    i: int | None = None  # None for the linear/unitary form


@dataclass(frozen=True)
class MixedParam:
    shape: str  # "linear-unitary" or "symplectic-orthogonal"
    first: FirstTerm | None
    residual: tuple[tuple[int, ...], ...]
    value: int | None = None  # semisimple order where a formula is available


def linear_first_terms(n: int, p: int) -> list[FirstTerm]:
    out, k = [], 1
    while p**k - 1 <= n:
        out.append(FirstTerm(p**k - 1, p, k))
        k += 1
    return out


def symplectic_first_terms(n: int, p: int) -> list[FirstTerm]:
    """All (p^k + i)/2 <= n with i in 1..4; the exact table per type is not fixed."""
    out, k = [], 1
    while (p**k + 1) // 2 <= n:
        for i in (1, 2, 3, 4):
            if (p**k + i) % 2 == 0 and (p**k + i) // 2 <= n:
                out.append(FirstTerm((p**k + i) // 2, p, k, i))
        k += 1
    return out


def enumerate_parameters(group: GroupId) -> Iterator[MixedParam]:
    n, p = group.n, group.p
    if group.family in LINEAR_UNITARY:
        ev = _SemisimpleEvaluator(group)
        for parts in partitions(n):
            yield MixedParam("linear-unitary", None, (tuple(parts),), ev.value(parts)[0])
        for ft in linear_first_terms(n, p):
            for parts in partitions(n - ft.value):
                yield MixedParam("linear-unitary", ft, (tuple(parts),))
        return
    for ft in [None, *symplectic_first_terms(n, p)]:
        rem = n - (ft.value if ft else 0)
        for m1 in range(rem + 1):
            for a in partitions(m1):
                a = tuple(a)
                for b in partitions(rem - m1):
                    yield MixedParam("symplectic-orthogonal", ft, (a, tuple(b)))


@lru_cache(maxsize=None)
def enumerated_partition_count(k: int) -> int:
    """Number of partitions of k, by walking the generator."""
    return sum(1 for _ in partitions(k))


def _pair_count(rem: int, count) -> int:
    return sum(count(m) * count(rem - m) for m in range(rem + 1))


@dataclass(frozen=True)
class ParamCountReport:
    group: GroupId
    first_terms: int
    raw_count: int
    dedup_count: int
    bound: float | None  # p(n) log2(2n + 2), linear/unitary only
    bound_holds: bool | None

    def as_dict(self) -> dict:
        return {
            "group": self.group.as_dict(),
            "first_terms": self.first_terms,
            "raw_count": self.raw_count,
            "dedup_count": self.dedup_count,
            "bound": self.bound,
            "bound_holds": self.bound_holds,
        }


def parameter_space_report(group: GroupId, enumerate_counts: bool = True) -> ParamCountReport:
    """Size of the parameter space; partition counts come from walking the
    generator (``enumerate_counts``) or from the pentagonal recurrence."""
    count = enumerated_partition_count if enumerate_counts else partition_count
    n, p = group.n, group.p
    if group.family in LINEAR_UNITARY:
        firsts = linear_first_terms(n, p)
        raw = count(n) + sum(count(n - ft.value) for ft in firsts)
        bound = partition_count(n) * math.log2(2 * n + 2)
        return ParamCountReport(group, len(firsts), raw, raw, bound, raw < bound)
    firsts = symplectic_first_terms(n, p)
    raw = _pair_count(n, count) + sum(_pair_count(n - ft.value, count) for ft in firsts)
    distinct = sorted({ft.value for ft in firsts})
    dedup = _pair_count(n, count) + sum(_pair_count(n - v, count) for v in distinct)
    return ParamCountReport(group, len(firsts), raw, dedup, None, None)
