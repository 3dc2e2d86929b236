"""Benchmark harness: element counts, output length and wall-clock time per group."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import Iterable

from .classical import GroupId, mu_semisimple, nu_semisimple
from .landau import et_ratio
from .sym_spectra import Spectrum, mu_filter, omega_alternating, omega_symmetric

SYM_CAP = 150
CLASSICAL_CAP = 40
CSV_HEADER = ("family", "n", "q", "set", "count", "length_nats", "elapsed_ms", "ratio")


class PlanError(ValueError):
    pass


@dataclass(frozen=True)
class BenchRecord:
    family: str
    n: int
    q: int | None
    set: str  # omega | mu | nu_pprime | mu_pprime
    count: int
    length_nats: float
    elapsed_ms: float | None
    ratio: float | None = None  # log(count) / sqrt(n / log n), Sym rows only

    def row(self) -> list:
        return [
            self.family,
            self.n,
            "" if self.q is None else self.q,
            self.set,
            self.count,
            repr(self.length_nats),
            "" if self.elapsed_ms is None else f"{self.elapsed_ms:.3f}",
            "" if self.ratio is None else repr(self.ratio),
        ]


def compute_set(family: str, n: int, q: int | None, kind: str, threads: int = 1) -> Spectrum:
    fam = family.lower()
    if fam in ("sym", "alt"):
        omega = (omega_symmetric if fam == "sym" else omega_alternating)(n, threads)
        if kind == "omega":
            return omega
        if kind == "mu":
            return mu_filter(omega)
        raise PlanError(f"set {kind!r} is not available for {family}")
    group = GroupId(family_name(fam), n, q)
    if kind == "mu_pprime":
        return mu_semisimple(group, threads)
    if kind == "nu_pprime":
        return nu_semisimple(group, threads)
    raise PlanError(f"set {kind!r} is not available for {family}")


_FAMILY_NAMES = {
    "psl": "PSL",
    "psu": "PSU",
    "psp": "PSp",
    "omega": "OmegaOdd",
    "pomega+": "POmegaPlus",
    "pomega-": "POmegaMinus",
}


def family_name(flag: str) -> str:
    try:
        return _FAMILY_NAMES[flag.lower()]
    except KeyError:
        raise PlanError(f"unknown family {flag!r}") from None


def check_plan(family: str, ns: Iterable[int]) -> None:
    cap = SYM_CAP if family.lower() in ("sym", "alt") else CLASSICAL_CAP
    for n in ns:
        if n < 1 or n > cap:
            raise PlanError(f"n={n} outside [1, {cap}] for {family}")


def bench_report(
    family: str,
    ns: Iterable[int],
    kind: str,
    q: int | None = None,
    threads: int = 1,
    timing: bool = True,
) -> list[BenchRecord]:
    ns = list(ns)
    check_plan(family, ns)
    records = []
    for n in ns:
        t0 = time.perf_counter()
        s = compute_set(family, n, q, kind, threads)
        elapsed = (time.perf_counter() - t0) * 1000 if timing else None
        ratio = None
        if family.lower() == "sym" and n >= 2:
            ratio = et_ratio(s.count, n)
        records.append(
            BenchRecord(family.lower(), n, q, kind, s.count, s.length_nats, elapsed, ratio)
        )
    return records


def to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


def strictly_increasing(records: list[BenchRecord]) -> bool:
    return all(
        b.count > a.count and b.length_nats > a.length_nats
        for a, b in zip(records, records[1:])
    )
