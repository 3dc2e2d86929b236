"""Command-line interface.

Examples::

    spectra spectrum --family sym --n 12 --mu --format text
    spectra classical --family psu --n 3 --q 3 --mu
    spectra ppd --a 2 --i 6
    spectra bench --family sym --n 20,40,60 --set omega
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import numtheory
from .bench import PlanError, bench_report, compute_set, family_name, to_csv, CLASSICAL_CAP, SYM_CAP
from .classical import (
    GroupId,
    InexactDivision,
    LINEAR_UNITARY,
    UnsupportedCase,
    WitnessNotAbsorbed,
    parameter_space_report,
    witness_b,
)
from .landau import bounds_report
from .oracle import OracleError
from .sym_spectra import Spectrum, mu_filter, omega_symmetric


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    out = []
    for chunk in text.split(","):
        if "-" in chunk.strip()[1:]:
            lo, hi = chunk.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(chunk))
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--factor-limit", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--no-timing", action="store_true")

    parser = argparse.ArgumentParser(prog="spectra", description="Element-order spectra of finite simple groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", parents=[common], help="omega or mu of Sym_n / Alt_n")
    sp.add_argument("--family", choices=("sym", "alt"), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mu", action="store_true")

    mp = sub.add_parser("mu", parents=[common], help="mu of Sym_n / Alt_n")
    mp.add_argument("--family", choices=("sym", "alt"), required=True)
    mp.add_argument("--n", type=int, required=True)

    cp = sub.add_parser("classical", parents=[common], help="classical groups")
    cp.add_argument("--family", required=True, help="psl|psu|psp|omega|pomega+|pomega-")
    cp.add_argument("--n", type=int, required=True)
    cp.add_argument("--q", type=int, required=True)
    mode = cp.add_mutually_exclusive_group()
    mode.add_argument("--mu", action="store_true", help="maximal semisimple orders")
    mode.add_argument("--witnesses", action="store_true", help="witness orders for mu(Sym_n)")
    mode.add_argument("--params", action="store_true", help="parameter-space counts")

    lp = sub.add_parser("landau", parents=[common], help="Landau's function and bounds")
    lp.add_argument("--n", type=int, required=True)

    pp = sub.add_parser("ppd", parents=[common], help="primitive prime divisors of a^i - 1")
    pp.add_argument("--a", type=int, required=True)
    pp.add_argument("--i", type=int, required=True)

    gp = sub.add_parser("gcdform", parents=[common], help="closed-form gcds")
    gp.add_argument("--a", type=int, required=True)
    gp.add_argument("--s", type=int, required=True)
    gp.add_argument("--t", type=int, required=True)
    gp.add_argument("--kind", choices=("minus-minus", "plus-minus"), required=True)

    op = sub.add_parser("oracle-check", parents=[common], help="compare generators with brute force")
    op.add_argument("--max-n", type=int, default=40)

    bp = sub.add_parser("bench", parents=[common], help="CSV timing report")
    bp.add_argument("--family", required=True, help="sym|alt|psl|psu")
    bp.add_argument("--n", type=_int_list, required=True, help="e.g. 20,40,60 or 10-20")
    bp.add_argument("--q", type=int, default=None)
    bp.add_argument("--set", dest="kind", choices=("omega", "mu", "nu_pprime", "mu_pprime"), default=None)
    return parser


def _spectrum_payload(group: dict, kind: str, s: Spectrum, elapsed_ms) -> dict:
    return {
        "group": group,
        "set": kind,
        "values": [str(v) for v in s.elements],
        "count": s.count,
        "length_nats": s.length_nats,
        "elapsed_ms": elapsed_ms,
    }


def _emit(payload, args, out) -> None:
    if args.format == "json":
        out.write(json.dumps(payload) + "\n")
        return
    if isinstance(payload, dict) and "values" in payload:
        for v in payload["values"]:
            out.write(f"{v}\n")
        return
    rows = payload if isinstance(payload, list) else [payload]
    for row in rows:
        out.write(" ".join(f"{k}={v}" for k, v in row.items()) + "\n")


def _timed(fn, args):
    t0 = time.perf_counter()
    result = fn()
    elapsed = None if args.no_timing else round((time.perf_counter() - t0) * 1000, 3)
    return result, elapsed


def _group(args) -> GroupId:
    try:
        fam = family_name(args.family)
    except PlanError as e:
        raise UsageError(str(e)) from None
    if args.n < 2 or args.n > CLASSICAL_CAP:
        raise UsageError(f"--n must be in [2, {CLASSICAL_CAP}]")
    try:
        return GroupId(fam, args.n, args.q)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _run(args, out) -> int:
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    if args.factor_limit is not None:
        if args.factor_limit < 1:
            raise UsageError("--factor-limit must be >= 1")
        numtheory.set_factor_limit(args.factor_limit)

    cmd = args.command
    if cmd in ("spectrum", "mu"):
        if args.n < 1 or args.n > SYM_CAP:
            raise UsageError(f"--n must be in [1, {SYM_CAP}]")
        kind = "mu" if cmd == "mu" or args.mu else "omega"
        s, ms = _timed(lambda: compute_set(args.family, args.n, None, kind, args.threads), args)
        _emit(_spectrum_payload({"family": args.family, "n": args.n}, kind, s, ms), args, out)
        return 0

    if cmd == "classical":
        group = _group(args)
        if args.params:
            rep, _ = _timed(lambda: parameter_space_report(group, enumerate_counts=False), args)
            _emit(rep.as_dict(), args, out)
            return 0
        if args.witnesses:
            mu_sym = mu_filter(omega_symmetric(group.n))
            rows = []
            for a in mu_sym:
                try:
                    b = str(witness_b(mu_sym.factored[a], group))
                except UnsupportedCase as e:
                    b = None
                    rows.append({"a": str(a), "b": b, "note": str(e)})
                    continue
                rows.append({"a": str(a), "b": b})
            _emit(rows if args.format == "text" else {"group": group.as_dict(), "witnesses": rows}, args, out)
            return 0
        if group.family not in LINEAR_UNITARY:
            raise UsageError("semisimple spectra are available for psl/psu only")
        kind = "mu_pprime" if args.mu else "nu_pprime"
        s, ms = _timed(lambda: compute_set(args.family, group.n, group.q, kind, args.threads), args)
        _emit(_spectrum_payload(group.as_dict(), kind, s, ms), args, out)
        return 0

    if cmd == "landau":
        if args.n < 0 or args.n > 10_000:
            raise UsageError("--n must be in [0, 10000]")
        _emit(bounds_report(args.n).as_dict(), args, out)
        return 0

    if cmd == "ppd":
        if abs(args.a) < 2 or args.i < 1:
            raise UsageError("need |a| > 1 and i >= 1")
        rep = numtheory.primitive_prime_divisors(args.a, args.i)
        _emit(
            {
                "a": args.a,
                "i": args.i,
                "ppd_set": [str(r) for r in sorted(rep.ppd_set)],
                "canonical": None if rep.canonical is None else str(rep.canonical),
                "star": None if rep.star is None else str(rep.star),
                "exceptional": rep.exceptional,
            },
            args,
            out,
        )
        return 0

    if cmd == "gcdform":
        if abs(args.a) < 2 or args.s < 1 or args.t < 1:
            raise UsageError("need |a| > 1 and positive s, t")
        v = numtheory.gcd_closed_form(args.a, args.s, args.t, args.kind)
        _emit({"a": args.a, "s": args.s, "t": args.t, "kind": args.kind, "value": str(v)}, args, out)
        return 0

    if cmd == "oracle-check":
        from .checks import run_oracle_checks

        rows = run_oracle_checks(max_n=args.max_n, seed=args.seed, threads=args.threads)
        _emit(rows if args.format == "text" else {"checks": rows}, args, out)
        return 0 if all(r["status"] == "pass" for r in rows) else 1

    if cmd == "bench":
        fam = args.family.lower()
        kind = args.kind or ("omega" if fam in ("sym", "alt") else "mu_pprime")
        if fam not in ("sym", "alt") and args.q is None:
            raise UsageError("--q is required for classical families")
        try:
            recs = bench_report(fam, args.n, kind, args.q, args.threads, timing=not args.no_timing)
        except PlanError as e:
            raise UsageError(str(e)) from None
        out.write(to_csv(recs))
        return 0

    raise UsageError(f"unknown command {cmd}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args, sys.stdout)
    except UsageError as e:
        print(f"spectra: error: {e}", file=sys.stderr)
        return 2
    except (AssertionError, InexactDivision, WitnessNotAbsorbed, OracleError) as e:
        print(f"spectra: internal check failed: {e}", file=sys.stderr)
        return 1
    except numtheory.FactorizationBudgetExceeded as e:
        print(f"spectra: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
