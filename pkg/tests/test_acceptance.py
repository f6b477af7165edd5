"""Acceptance criteria, one test per criterion.

The terminal summary prints one PASS/FAIL line per criterion (see conftest.py).
"""

import itertools
import time
from fractions import Fraction
from math import factorial

import numpy as np
import pytest

from haar_immanant.closedform import averaged_immanant, matrix_element_integral
from haar_immanant.haar import mc_average_df
from haar_immanant.matrixfn import hermitian_spectrum, random_psd
from haar_immanant.partitions import all_partitions, syt_count
from haar_immanant.schur import power_sums, schur_at_ones, schur_at_spectrum
from haar_immanant.symchar import character_table, class_table, irreducible_character
from haar_immanant.verify import (
    phi_derivative,
    verify_exact_mw,
    verify_monotonicity,
    verify_phi_suite,
    verify_schur_inequality,
    verify_orthogonality_suite,
)

from oracles import phi_brute, syt_brute

criterion = pytest.mark.criterion


@criterion("1", "all-ones spectrum gives delta(sigma, e) for m <= 6, < 1 s")
def test_criterion_1_orthogonality_at_identity():
    start = time.perf_counter()
    worst = 0.0
    for m in range(1, 7):
        ones = np.ones(m)
        for c in class_table(m).classes:
            expected = 1.0 if c == (1,) * m else 0.0
            worst = max(worst, abs(matrix_element_integral(ones, c) - expected))
    elapsed = time.perf_counter() - start
    assert worst <= 1e-12
    assert verify_orthogonality_suite(6).ok
    assert elapsed < 1.0, f"took {elapsed:.2f} s"


@criterion("2", "I(A,e) - I(A,(12)) = l1 l2 on 20 pairs; 13/6 and 1/6 at (1,2)")
def test_criterion_2_two_by_two():
    rng = np.random.default_rng(2)
    for l1, l2 in rng.uniform(0.05, 10, size=(20, 2)):
        diff = matrix_element_integral([l1, l2], (1, 1)) - matrix_element_integral([l1, l2], (2,))
        assert diff == pytest.approx(l1 * l2, rel=1e-12)
    assert matrix_element_integral([1.0, 2.0], (1, 1)) == pytest.approx(13 / 6, rel=1e-12)
    assert matrix_element_integral([1.0, 2.0], (2,)) == pytest.approx(1 / 6, rel=1e-12)


def _rank_one_cases():
    rng = np.random.default_rng(3)
    for n in range(2, 7):
        lam = float(rng.uniform(0.5, 3))
        spec = [lam] + [0.0] * (n - 1)
        for m in range(1, n + 1):
            yield n, m, lam, [matrix_element_integral(spec, c) for c in class_table(m).classes]


@criterion("3a", "rank-1 spectra: I(A,sigma) independent of sigma")
def test_criterion_3a_rank_one_sigma_independent():
    for n, m, lam, values in _rank_one_cases():
        ref = max(abs(v) for v in values)
        assert max(values) - min(values) <= 1e-12 * ref, (n, m)


@criterion("3b", "rank-1 spectra: I(A,sigma) = l^m / s_[m](1^n) as stated")
def test_criterion_3b_rank_one_stated_value():
    # The stated value omits the 1/m! from chi(e) chi(sigma) / m!; the computed
    # value is l^m / (m! s_[m](1^n)), confirmed by Monte Carlo in
    # test_closedform.py::test_rank_one_integral_by_mc. Left failing on purpose.
    mismatches = []
    for n, m, lam, values in _rank_one_cases():
        stated = lam**m / schur_at_ones((m,), n)
        if abs(values[0] - stated) > 1e-12 * stated:
            mismatches.append((n, m, values[0] / stated))
    assert not mismatches, f"{len(mismatches)} (n, m) cases off by the ratio 1/m!, e.g. {mismatches[:3]}"


@criterion("4", "closed-form average vs Monte Carlo, n = 2..4, 5 spectra, 1e5 samples, 4 sigma")
@pytest.mark.slow
def test_criterion_4_closed_form_vs_monte_carlo():
    start = time.perf_counter()
    failures = []
    for n in (2, 3, 4):
        for trial in range(5):
            a = random_psd(n, 1000 * n + trial)
            spec = hermitian_spectrum(a)
            for k, eta in enumerate(all_partitions(n)):
                est = mc_average_df(a, irreducible_character(eta), 100_000, seed=100 * trial + k)
                cf = averaged_immanant(spec, eta).value
                if abs(est.mean.real - cf) > 4 * est.std_error + 1e-12 * abs(cf):
                    failures.append((n, trial, eta, cf, est.mean.real, est.std_error))
    elapsed = time.perf_counter() - start
    assert not failures, failures
    assert elapsed < 300, f"took {elapsed:.0f} s"


@criterion("5", "averaged monotonicity for n = 2..6 over 100 spectra, margin >= -1e-9, < 2 min")
def test_criterion_5_averaged_monotonicity():
    start = time.perf_counter()
    for n in range(2, 7):
        report = verify_monotonicity(n, 100, seed=500 + n)
        assert report.ok, report.summary()
        assert report.worst_margin >= -1e-9
    elapsed = time.perf_counter() - start
    assert elapsed < 120, f"took {elapsed:.0f} s"


@criterion("6", "exact d_[eta](A) <= d_[eta'](A) on 100 PSD matrices, n <= 5")
def test_criterion_6_exact_induced_direction():
    for n in range(2, 6):
        report = verify_exact_mw(n, 100, seed=600 + n)
        assert report.ok, report.summary()


@criterion("7", "det(A) <= d_eta(A) / chi_eta(e) on 100 PSD matrices, n <= 5")
def test_criterion_7_schur_inequality():
    for n in range(1, 6):
        report = verify_schur_inequality(n, 100, seed=700 + n)
        assert report.ok, report.summary()


@criterion("8", "averaged immanant vanishes when eta has more parts than the rank, n <= 5")
def test_criterion_8_rank_vanishing():
    rng = np.random.default_rng(8)
    for n in range(1, 6):
        for k in range(0, n + 1):
            for _ in range(5):
                spec = np.concatenate([rng.uniform(0.1, 4, size=k), np.zeros(n - k)])
                scale = 1e-10 * max(spec.sum(), 1.0) ** n
                p = power_sums(spec, n)
                table = class_table(n)
                weights = np.array(
                    [size / factorial(n) * np.prod([p[j - 1] for j in c]) for c, size in zip(table.classes, table.sizes)]
                )
                for eta in all_partitions(n):
                    if len(eta) <= k:
                        continue
                    assert abs(averaged_immanant(spec, eta).value) <= scale
                    # the Frobenius sum itself, without the rank short cut
                    raw = weights @ np.array(irreducible_character(eta).values, dtype=float)
                    assert abs(raw) * syt_count(eta) / schur_at_ones(eta, n) <= scale


@criterion("9", "character orthogonality m <= 7, SYT counts m <= 5, Frobenius = hook-content m, n <= 6")
def test_criterion_9_character_infrastructure():
    for m in range(1, 8):
        table = class_table(m)
        chars = character_table(m)
        assert sum(chi.at_identity**2 for chi in chars.values()) == factorial(m)
        rows = list(chars.values())
        for x, y in itertools.product(rows, repeat=2):
            inner = sum(Fraction(s * a * b) for s, a, b in zip(table.sizes, x.values, y.values)) / factorial(m)
            assert inner == (1 if x is y else 0)
        for i, j in itertools.product(range(len(table.classes)), repeat=2):
            col = sum(chi.values[i] * chi.values[j] for chi in rows)
            expected = factorial(m) // table.sizes[i] if i == j else 0
            assert col == expected
    for m in range(1, 6):
        for eta in all_partitions(m):
            assert syt_count(eta) == syt_brute(eta)
    for m in range(1, 7):
        for n in range(1, 7):
            for eta in all_partitions(m):
                assert abs(schur_at_spectrum(eta, np.ones(n)) - schur_at_ones(eta, n)) <= 1e-10 * max(
                    1, schur_at_ones(eta, n)
                )


@criterion("10", "phi grid checks on 1000 triples; derivative sign matches central difference")
def test_criterion_10_phi_monotone():
    report = verify_phi_suite(1000, seed=10)
    assert report.ok and report.trials == 1000, report.summary()
    rng = np.random.default_rng(10)
    h = 1e-6
    checked = 0
    for _ in range(1000):
        a, b = np.exp(rng.uniform(-2, 2, size=2))
        n = int(rng.integers(1, 13))
        x = rng.uniform(0, n)
        d = float(phi_derivative(a, b, n, x))
        if abs(d) <= 1e-8:
            continue
        fd = (phi_brute(a, b, n, x + h) - phi_brute(a, b, n, x - h)) / (2 * h)
        assert np.sign(fd) == np.sign(d), (a, b, n, x, d, fd)
        checked += 1
    assert checked > 900
