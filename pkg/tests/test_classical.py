import math

import pytest

from spectra.classical import (
    GroupId,
    SemisimpleParam,
    UnsupportedCase,
    c_denominator,
    enumerate_parameters,
    injection_phi_check,
    linear_first_terms,
    mu_semisimple,
    nu_semisimple,
    parameter_space_report,
    power_minus_one_factors,
    symplectic_first_terms,
    witness_b,
)
from spectra.landau import partition_count
from spectra.numtheory import factorize
from spectra.oracle import MatrixGroupSpec, coprime_part, oracle_matrix_group
from spectra.sym_spectra import mu_filter, omega_symmetric


def prime_support(m):
    return set(factorize(m).primes)


def test_group_id_validation():
    g = GroupId("PSL", 3, 9)
    assert (g.p, g.f, g.eps) == (3, 2, 1)
    assert GroupId("PSU", 3, 4).eps == -1
    with pytest.raises(ValueError):
        GroupId("PSL", 3, 6)
    with pytest.raises(ValueError):
        GroupId("PSX", 3, 2)
    with pytest.warns(UserWarning, match="not simple"):
        GroupId("PSL", 2, 3)


@pytest.mark.parametrize("parts,n,q,eps,expected", [
    ((1, 1), 2, 7, 1, 2),
    ((2,), 2, 7, 1, 12),
    ((1, 2), 5, 7, 1, 1),
    ((1, 2), 5, 3, -1, 1),
    ((3,), 3, 3, -1, 4),  # (q+1)(3, -4)
    ((2,), 3, 4, 1, 3),  # (3, 3)
])
def test_c_denominator(parts, n, q, eps, expected):
    assert c_denominator(SemisimpleParam(parts, eps), n, q) == expected


def test_c_prime_support():
    for n in range(2, 9):
        for q in (2, 3, 4, 5, 7, 8, 9):
            for eps in (1, -1):
                eq1 = abs(eps * q - 1)
                for k in range(1, n + 1):
                    for parts in _parts(k):
                        c = c_denominator(SemisimpleParam(parts, eps), n, q)
                        assert prime_support(c) <= prime_support(eq1) if c > 1 else True


def _parts(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _parts(n - k, k):
            yield (k,) + rest


def test_power_minus_one_factors():
    for base in (2, -2, 3, -3, 5, -4):
        for k in range(1, 25):
            assert power_minus_one_factors(base, k).value == abs(base**k - 1)


def test_nu_contains_expected_values():
    nu = nu_semisimple(GroupId("PSL", 2, 7))
    assert {3, 4} <= set(nu.elements)


@pytest.mark.parametrize("fam,n,q,expected", [
    ("PSL", 2, 7, (3, 4)),
    ("PSL", 3, 2, (3, 7)),
    ("PSU", 3, 3, (7, 8)),
    ("PSL", 2, 9, (4, 5)),
    ("PSL", 2, 5, (2, 3)),
])
def test_mu_semisimple_examples(fam, n, q, expected):
    assert mu_semisimple(GroupId(fam, n, q)).elements == expected


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
def test_mu_psl2_closed_form(q):
    d = math.gcd(2, q - 1)
    expected = tuple(sorted({(q - 1) // d, (q + 1) // d}))
    assert mu_semisimple(GroupId("PSL", 2, q)).elements == expected


@pytest.mark.parametrize("q", [5, 7, 9, 11])
def test_mu_psl2_matches_oracle(q):
    group = GroupId("PSL", 2, q)
    oracle = mu_filter(coprime_part(oracle_matrix_group(MatrixGroupSpec("SL", 2, q)), group.p))
    assert mu_semisimple(group).elements == oracle.elements


def test_psl33_against_oracle():
    group = GroupId("PSL", 3, 3)
    oracle = mu_filter(coprime_part(oracle_matrix_group(MatrixGroupSpec("SL", 3, 3)), 3))
    assert mu_semisimple(group).elements == oracle.elements


def test_unfactored_fallback_agrees():
    g = GroupId("PSU", 12, 5)
    a = nu_semisimple(g)
    b = nu_semisimple(g, factor_limit=1)
    assert a.elements == b.elements
    assert mu_filter(a).elements == mu_filter(b).elements


def test_threads_deterministic():
    g = GroupId("PSL", 18, 3)
    assert nu_semisimple(g, threads=8).elements == nu_semisimple(g).elements


def test_nu_rejects_other_families():
    with pytest.raises(ValueError):
        nu_semisimple(GroupId("PSp", 3, 3))


def test_witness_examples():
    assert witness_b(factorize(2), GroupId("PSp", 2, 3)) == 5
    assert witness_b(factorize(4), GroupId("POmegaPlus", 4, 3)) == 5
    assert (3**4 - 1) == 16 * 5
    assert witness_b(factorize(14), GroupId("PSU", 9, 2)) == 2 * (2**7 + 1)


def test_witness_psp_in_oracle():
    omega = oracle_matrix_group(MatrixGroupSpec("Sp", 4, 3))
    for fam in ("PSp", "OmegaOdd"):
        g = GroupId(fam, 2, 3)
        for a in mu_filter(omega_symmetric(2)):
            assert witness_b(factorize(a), g) in omega


def test_witness_linear_divides_mu():
    g = GroupId("PSL", 7, 3)
    mu = mu_semisimple(g)
    for a in mu_filter(omega_symmetric(7)):
        b = witness_b(factorize(a), g)
        assert any(A % b == 0 for A in mu)


def test_witness_orthogonal_sign_rules():
    # l(a) = n, all-minus terms: POmega- needs one plus, POmega+ keeps all minus
    a = factorize(15)  # 3 + 5 = 8
    minus = witness_b(a, GroupId("POmegaMinus", 8, 3))
    plus = witness_b(a, GroupId("POmegaPlus", 8, 3))
    assert plus == math.lcm(3**3 - 1, 3**5 - 1) // math.gcd(math.lcm(3**3 - 1, 3**5 - 1), 4)
    flipped = math.lcm(3**3 - 1, 3**5 + 1)
    assert minus == flipped // math.gcd(flipped, 4)
    # n = a a power of two
    assert witness_b(factorize(8), GroupId("POmegaMinus", 8, 3)) == (3**8 + 1) // 2


def test_witness_orthogonal_unsupported():
    # a = 2 * 3 * 5 with l(a) = n = 10, plus type needs a sign flip with p_1 = 2 and t = 3
    with pytest.raises(UnsupportedCase):
        witness_b(factorize(30), GroupId("POmegaPlus", 10, 3))


def test_witness_psu2_small_n_unsupported():
    with pytest.raises(UnsupportedCase):
        witness_b(factorize(6), GroupId("PSU", 5, 2))


@pytest.mark.parametrize("fam,n,q", [("PSL", 6, 2), ("PSL", 2, 7), ("PSU", 5, 3), ("PSL", 12, 4)])
def test_injection(fam, n, q):
    r = injection_phi_check(GroupId(fam, n, q))
    assert r.passed and not r.partial
    assert r.mu_pprime_count >= len(r.mu_sym)


def test_injection_psl62_sizes():
    r = injection_phi_check(GroupId("PSL", 6, 2))
    assert r.mu_sym == (4, 5, 6)
    r = injection_phi_check(GroupId("PSL", 2, 7))
    assert r.mu_sym == (2,) and r.mu_pprime_count == 2


def test_injection_psu2_partial():
    r = injection_phi_check(GroupId("PSU", 9, 2))
    assert r.partial and r.injective
    assert r.special[14] == 258


def test_first_terms():
    assert [ft.value for ft in linear_first_terms(10, 2)] == [1, 3, 7]
    assert [ft.value for ft in linear_first_terms(2, 2)] == [1]
    fts = symplectic_first_terms(5, 3)
    assert any(ft.value == 2 and ft.k == 1 and ft.i == 1 for ft in fts)


def test_param_enumeration_small():
    params = list(enumerate_parameters(GroupId("PSL", 2, 4)))
    bare = [p.residual[0] for p in params if p.first is None]
    assert sorted(bare) == [(1, 1), (2,)]
    assert any(p.first is not None and p.first.value == 1 for p in params)
    assert all(p.value is not None for p in params if p.first is None)


def test_param_enumeration_psp():
    g = GroupId("PSp", 5, 3)
    pairs = [p for p in enumerate_parameters(g) if p.first and (p.first.k, p.first.i) == (1, 1)]
    assert pairs[0].first.value == 2
    assert all(sum(map(sum, p.residual)) == 3 for p in pairs)
    assert len(pairs) == sum(partition_count(m) * partition_count(3 - m) for m in range(4))


@pytest.mark.parametrize("fam,n,q", [("PSL", 10, 2), ("PSU", 12, 3), ("PSp", 7, 3), ("POmegaMinus", 6, 5)])
def test_param_counts_match_enumeration(fam, n, q):
    g = GroupId(fam, n, q)
    rep = parameter_space_report(g)
    assert rep.raw_count == sum(1 for _ in enumerate_parameters(g))
    assert rep == parameter_space_report(g, enumerate_counts=False)


def test_param_bound_psl10():
    rep = parameter_space_report(GroupId("PSL", 10, 2))
    assert rep.bound == pytest.approx(42 * math.log2(22))
    assert rep.raw_count < rep.bound and rep.bound_holds
