import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from haar_immanant.partitions import all_partitions, ssyt_count, syt_count
from haar_immanant.schur import power_sums, schur_at_ones, schur_at_spectrum, schur_values

from oracles import schur_jacobi_trudi, schur_monomial


def test_power_sums():
    np.testing.assert_allclose(power_sums([1, 1], 2), [2, 2])
    np.testing.assert_allclose(power_sums([1, 2], 2), [3, 5])
    np.testing.assert_allclose(power_sums([3, 0, 0], 4), [3, 9, 27, 81])


@pytest.mark.parametrize("l1,l2", [(1.0, 2.0), (0.3, 5.0), (2.5, 2.5)])
def test_two_variable_closed_forms(l1, l2):
    assert schur_at_spectrum((2,), [l1, l2]) == pytest.approx(l1**2 + l2**2 + l1 * l2, rel=1e-13)
    assert schur_at_spectrum((1, 1), [l1, l2]) == pytest.approx(l1 * l2, rel=1e-13)


def test_small_shape_against_tableau_monomials():
    assert schur_at_spectrum((2, 1), [1, 1, 0]) == pytest.approx(2.0, rel=1e-13)
    assert schur_monomial((2, 1), [1, 1, 0]) == 2.0
    assert ssyt_count((2, 1), 2) == 2


def test_schur_at_ones():
    assert schur_at_ones((2,), 2) == 3
    assert schur_at_ones((1, 1), 2) == 1
    for n in range(1, 6):
        assert schur_at_ones((1,) * (n + 1), n) == 0


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_frobenius_agrees_with_hook_content(m, n):
    for eta in all_partitions(m):
        expected = schur_at_ones(eta, n)
        assert schur_at_spectrum(eta, np.ones(n)) == pytest.approx(expected, rel=1e-10, abs=1e-10)


@pytest.mark.parametrize("m", range(1, 6))
def test_frobenius_agrees_with_jacobi_trudi(m):
    rng = np.random.default_rng(m)
    spec = rng.random(4) * 2
    for eta in all_partitions(m, max_parts=4):
        assert schur_at_spectrum(eta, spec) == pytest.approx(schur_jacobi_trudi(eta, spec), rel=1e-10)


@pytest.mark.parametrize("m", range(1, 7))
def test_sum_over_dimensions_is_trace_power(m):
    rng = np.random.default_rng(10 + m)
    spec = rng.random(5)
    total = sum(syt_count(eta) * s for eta, s in schur_values(spec, m).items())
    assert total == pytest.approx(spec.sum() ** m, rel=1e-10)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(0, 5), min_size=1, max_size=5), st.integers(1, 5), st.randoms())
def test_symmetric_under_permutation(spec, m, rnd):
    shuffled = spec[:]
    rnd.shuffle(shuffled)
    for eta in all_partitions(m):
        a, b = schur_at_spectrum(eta, spec), schur_at_spectrum(eta, shuffled)
        assert a == pytest.approx(b, rel=1e-12, abs=1e-12 * (1 + sum(spec)) ** m)


@pytest.mark.parametrize("k", range(1, 5))
def test_rank_support(k):
    rng = np.random.default_rng(k)
    spec = np.concatenate([rng.random(k) + 0.1, np.zeros(5 - k)])
    for m in range(1, 6):
        for eta, s in schur_values(spec, m).items():
            if len(eta) > k:
                assert abs(s) <= 1e-10 * spec.sum() ** m
