"""Brute-force ground truth.

Partition oracles for Sym_n / Alt_n, and exhaustive element orders for
small classical matrix groups over GF(q), computed in the quotient by the
centre.  None of this shares code paths with the generators it checks.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import reduce
import numpy as np

from .landau import partitions
from .sym_spectra import Spectrum

SYM_ALT_CAP = 60
GROUP_ORDER_CAP = 10**7


def oracle_sym_alt(n: int, family: str) -> Spectrum:
    fam = family.lower()
    if fam not in ("sym", "alt"):
        raise ValueError(f"unknown family {family!r}")
    if not 1 <= n <= SYM_ALT_CAP:
        raise ValueError(f"oracle degree must be in [1, {SYM_ALT_CAP}]")
    orders = set()
    for part in partitions(n):
        if fam == "alt" and sum(1 for x in part if x % 2 == 0) % 2:
            continue
        orders.add(reduce(math.lcm, part, 1))
    return Spectrum.from_values(orders, divisor_closed=True)


@dataclass(frozen=True)
class SpectrumDiff:
    only_left: tuple[int, ...]
    only_right: tuple[int, ...]

    @property
    def empty(self) -> bool:
        return not self.only_left and not self.only_right

    def __bool__(self) -> bool:
        return not self.empty


def oracle_compare(lhs: Spectrum, rhs: Spectrum) -> SpectrumDiff:
    a, b = set(lhs.elements), set(rhs.elements)
    return SpectrumDiff(tuple(sorted(a - b)), tuple(sorted(b - a)))


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------

# Conway-style irreducible polynomials, low coefficient first, monic.
_IRREDUCIBLE = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (2, 2, 1),  # x^2 + 2x + 2 (primitive)
}


class GF:
    """GF(q) for small q, elements encoded as 0..q-1 with table arithmetic."""

    def __init__(self, q: int):
        p, f = _prime_power(q)
        self.q, self.p, self.f = q, p, f
        if f == 1:
            idx = np.arange(q)
            self.add = (idx[:, None] + idx[None, :]) % q
            self.mul = (idx[:, None] * idx[None, :]) % q
        else:
            poly = _IRREDUCIBLE[q]
            digits = [self._digits(x) for x in range(q)]
            self.add = np.array(
                [[self._encode([(u + v) % p for u, v in zip(a, b)]) for b in digits] for a in digits]
            )
            self.mul = np.array([[self._polymul(a, b, poly) for b in digits] for a in digits])
        self.neg = np.array([int(np.flatnonzero(self.add[x] == 0)[0]) for x in range(q)])
        self.inv = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            self.inv[x] = int(np.flatnonzero(self.mul[x] == 1)[0])

    def _digits(self, x: int) -> list[int]:
        return [(x // self.p**i) % self.p for i in range(self.f)]

    def _encode(self, digs) -> int:
        return sum(d * self.p**i for i, d in enumerate(digs))

    def _polymul(self, a, b, poly) -> int:
        p, f = self.p, self.f
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        for d in range(2 * f - 2, f - 1, -1):
            c = prod[d]
            if c:
                for i in range(f + 1):
                    prod[d - f + i] = (prod[d - f + i] - c * poly[i]) % p
        return self._encode(prod[:f])

    def power(self, x: int, k: int) -> int:
        r = 1
        for _ in range(k):
            r = int(self.mul[r, x])
        return r

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Batched product of (N, d, d) arrays (B may be a single (d, d))."""
        if B.ndim == 2:
            B = np.broadcast_to(B, A.shape)
        d = A.shape[-1]
        C = np.zeros(A.shape, dtype=np.int64)
        for i in range(d):
            for j in range(d):
                acc = self.mul[A[:, i, 0], B[:, 0, j]]
                for k in range(1, d):
                    acc = self.add[acc, self.mul[A[:, i, k], B[:, k, j]]]
                C[:, i, j] = acc
        return C

    def det(self, M: np.ndarray) -> int:
        """Determinant of one square matrix by Gaussian elimination."""
        M = [list(map(int, row)) for row in M]
        d = len(M)
        det = 1
        for c in range(d):
            piv = next((r for r in range(c, d) if M[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                M[c], M[piv] = M[piv], M[c]
                det = int(self.neg[det])
            det = int(self.mul[det, M[c][c]])
            inv = int(self.inv[M[c][c]])
            for r in range(c + 1, d):
                if M[r][c]:
                    fac = int(self.mul[M[r][c], inv])
                    for k in range(c, d):
                        M[r][k] = int(self.add[M[r][k], self.neg[self.mul[fac, M[c][k]]]])
        return det


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            f, m = 0, q
            while m % p == 0:
                m //= p
                f += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, f
    raise ValueError(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# matrix groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixGroupSpec:
    family: str  # SL, SU or Sp
    dimension: int
    q: int

    def __post_init__(self):
        if self.family not in ("SL", "SU", "Sp"):
            raise ValueError(f"unknown matrix family {self.family!r}")
        if self.family == "Sp" and self.dimension % 2:
            raise ValueError("Sp needs even dimension")
        _prime_power(self.q)
        if self.q > 13:
            raise ValueError("field order must be <= 13")

    @property
    def order(self) -> int:
        d, q = self.dimension, self.q
        if self.family == "SL":
            return q ** (d * (d - 1) // 2) * math.prod(q**i - 1 for i in range(2, d + 1))
        if self.family == "SU":
            return q ** (d * (d - 1) // 2) * math.prod(q**i - (-1) ** i for i in range(2, d + 1))
        m = d // 2
        return q ** (m * m) * math.prod(q ** (2 * i) - 1 for i in range(1, m + 1))

    @property
    def center_size(self) -> int:
        d, q = self.dimension, self.q
        if self.family == "SL":
            return math.gcd(d, q - 1)
        if self.family == "SU":
            return math.gcd(d, q + 1)
        return math.gcd(2, q - 1)

    @property
    def field_order(self) -> int:
        # SU(d, q) lives over GF(q^2).
        return self.q**2 if self.family == "SU" else self.q


class OracleError(RuntimeError):
    pass


class _Sampler:
    """Random form-preserving determinant-1 matrices for one group."""

    def __init__(self, spec: MatrixGroupSpec, field: GF, rng: random.Random):
        self.spec, self.F, self.rng = spec, field, rng
        d = spec.dimension
        if spec.family == "Sp":
            m = d // 2
            J = np.zeros((d, d), dtype=np.int64)
            one, mone = 1, int(field.neg[1])
            for i in range(m):
                J[i, m + i] = one
                J[m + i, i] = mone
            self.J = J
        if spec.family == "SU":
            # x -> x^q on GF(q^2)
            self.conj = np.array([field.power(x, spec.q) for x in range(field.q)])

    def _random_matrix(self) -> np.ndarray:
        d, q = self.spec.dimension, self.F.q
        return np.array([[self.rng.randrange(q) for _ in range(d)] for _ in range(d)], dtype=np.int64)

    def _herm(self, u, v) -> int:
        F = self.F
        acc = 0
        for x, y in zip(u, v):
            acc = int(F.add[acc, F.mul[x, self.conj[y]]])
        return acc

    def sample(self) -> np.ndarray:
        fam, F, d = self.spec.family, self.F, self.spec.dimension
        if fam == "SL":
            while True:
                M = self._random_matrix()
                det = F.det(M)
                if det:
                    M[0] = F.mul[int(F.inv[det]), M[0]]
                    return M
        if fam == "Sp":
            while True:
                M = self._random_matrix()
                MT = M.T[None]
                lhs = F.matmul(F.matmul(MT, self.J), M[None])[0]
                if np.array_equal(lhs, self.J):
                    return M
        # unitary: build orthonormal columns one at a time
        q = F.q
        while True:
            cols: list[list[int]] = []
            for _ in range(d):
                for _attempt in range(10_000):
                    v = [self.rng.randrange(q) for _ in range(d)]
                    if self._herm(v, v) == 1 and all(self._herm(v, c) == 0 for c in cols):
                        cols.append(v)
                        break
                else:
                    break
            if len(cols) < d:
                continue
            M = np.array(cols, dtype=np.int64).T
            det = F.det(M)
            inv = int(F.inv[det])
            M[:, -1] = F.mul[inv, M[:, -1]]
            return M


def _keys(batch: np.ndarray) -> list[bytes]:
    flat = batch.reshape(len(batch), -1).astype(np.uint8)
    return [row.tobytes() for row in flat]


def _generate(spec: MatrixGroupSpec, F: GF, seed: int) -> np.ndarray:
    """Enumerate the whole group as an (N, d, d) array."""
    d, target = spec.dimension, spec.order
    if spec.family == "SL" and d == 2:
        q = F.q
        vals = np.array(np.meshgrid(*[np.arange(q)] * 4, indexing="ij")).reshape(4, -1).T
        ad = F.mul[vals[:, 0], vals[:, 3]]
        bc = F.mul[vals[:, 1], vals[:, 2]]
        det = F.add[ad, F.neg[bc]]
        mats = vals[det == 1].reshape(-1, 2, 2)
        if len(mats) != target:
            raise OracleError(f"scan found {len(mats)} elements, expected {target}")
        return mats

    rng = random.Random(seed)
    sampler = _Sampler(spec, F, rng)
    gens: list[np.ndarray] = []
    identity = np.eye(d, dtype=np.int64)
    for _round in range(12):
        gens.append(sampler.sample())
        if len(gens) < 2:
            gens.append(sampler.sample())
        seen = {_keys(identity[None])[0]}
        elements = [identity[None]]
        frontier = identity[None]
        while len(frontier):
            new_batches = []
            for g in gens:
                prod = F.matmul(frontier, g)
                fresh = []
                for key, idx in zip(_keys(prod), range(len(prod))):
                    if key not in seen:
                        seen.add(key)
                        fresh.append(idx)
                if fresh:
                    new_batches.append(prod[fresh])
            if len(seen) > GROUP_ORDER_CAP or len(seen) > target:
                raise OracleError(f"closure exceeded {min(target, GROUP_ORDER_CAP)} elements")
            frontier = np.concatenate(new_batches) if new_batches else np.zeros((0, d, d), np.int64)
            if len(frontier):
                elements.append(frontier)
        if len(seen) == target:
            return np.concatenate(elements)
    raise OracleError(f"generated subgroup never reached order {target}")


def _is_scalar(batch: np.ndarray) -> np.ndarray:
    d = batch.shape[-1]
    diag = batch[:, np.arange(d), np.arange(d)]
    off = batch.copy()
    off[:, np.arange(d), np.arange(d)] = 0
    return (off.reshape(len(batch), -1) == 0).all(axis=1) & (diag == diag[:, :1]).all(axis=1)


def element_orders(spec: MatrixGroupSpec, seed: int = 0) -> np.ndarray:
    """Order of every element modulo the centre, one entry per group element."""
    if spec.order > GROUP_ORDER_CAP:
        raise OracleError(f"group order {spec.order} exceeds cap {GROUP_ORDER_CAP}")
    F = GF(spec.field_order)
    G = _generate(spec, F, seed)
    if len(G) != spec.order:
        raise OracleError(f"enumerated {len(G)} elements, formula says {spec.order}")
    centre = int(_is_scalar(G).sum())
    if centre != spec.center_size:
        raise OracleError(f"centre has {centre} elements, formula says {spec.center_size}")
    orders = np.zeros(len(G), dtype=np.int64)
    P = G.copy()
    k = 1
    while (orders == 0).any():
        hit = (orders == 0) & _is_scalar(P)
        orders[hit] = k
        k += 1
        if k > 10_000:
            raise OracleError("element order search did not terminate")
        P = F.matmul(P, G)
    return orders


def oracle_matrix_group(spec: MatrixGroupSpec, seed: int = 0) -> Spectrum:
    """Element orders of the central quotient (e.g. PSL, PSU, PSp)."""
    return Spectrum.from_values(element_orders(spec, seed).tolist(), divisor_closed=True)


def coprime_part(spec_orders: Spectrum, p: int) -> Spectrum:
    """Orders coprime to p (the semisimple part of a spectrum)."""
    return Spectrum.from_values((m for m in spec_orders if m % p), divisor_closed=True)
