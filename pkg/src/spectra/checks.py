"""The comparison suite behind ``spectra oracle-check``."""

from __future__ import annotations

from .classical import GroupId, mu_semisimple, witness_b
from .numtheory import factorize
from .oracle import MatrixGroupSpec, coprime_part, oracle_compare, oracle_matrix_group, oracle_sym_alt
from .sym_spectra import mu_filter, omega_alternating, omega_symmetric

# (name, classical group, matrix group whose central quotient it is)
MATRIX_CASES = [
    ("PSL2(5)", GroupId("PSL", 2, 5), MatrixGroupSpec("SL", 2, 5)),
    ("PSL2(7)", GroupId("PSL", 2, 7), MatrixGroupSpec("SL", 2, 7)),
    ("PSL2(9)", GroupId("PSL", 2, 9), MatrixGroupSpec("SL", 2, 9)),
    ("PSL2(11)", GroupId("PSL", 2, 11), MatrixGroupSpec("SL", 2, 11)),
    ("PSL3(2)", GroupId("PSL", 3, 2), MatrixGroupSpec("SL", 3, 2)),
    ("PSU3(3)", GroupId("PSU", 3, 3), MatrixGroupSpec("SU", 3, 3)),
]


def semisimple_oracle_mu(spec: MatrixGroupSpec, p: int, seed: int = 0):
    return mu_filter(coprime_part(oracle_matrix_group(spec, seed), p))


def run_oracle_checks(max_n: int = 40, seed: int = 0, threads: int = 1) -> list[dict]:
    rows = []
    for fam, gen in (("sym", omega_symmetric), ("alt", omega_alternating)):
        bad = [n for n in range(1, max_n + 1) if oracle_compare(gen(n, threads), oracle_sym_alt(n, fam))]
        rows.append({
            "check": f"omega_{fam} vs partitions, n<={max_n}",
            "status": "fail" if bad else "pass",
            "detail": ",".join(map(str, bad)),
        })
    for name, group, spec in MATRIX_CASES:
        diff = oracle_compare(mu_semisimple(group, threads), semisimple_oracle_mu(spec, group.p, seed))
        rows.append({
            "check": f"mu_p' {name} vs matrix oracle",
            "status": "fail" if diff else "pass",
            "detail": f"left={list(diff.only_left)} right={list(diff.only_right)}" if diff else "",
        })
    b = witness_b(factorize(2), GroupId("PSp", 2, 3))
    omega = oracle_matrix_group(MatrixGroupSpec("Sp", 4, 3), seed)
    rows.append({
        "check": "witness b_2 in omega(PSp4(3))",
        "status": "pass" if b in omega else "fail",
        "detail": f"b={b}",
    })
    return rows
