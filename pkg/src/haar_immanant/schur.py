"""Schur polynomial evaluation.

Values at a spectrum come from the Frobenius expansion over power sums,
which has no Vandermonde denominator and so stays well conditioned at
repeated eigenvalues such as the all-ones point.
"""

from __future__ import annotations

from math import factorial
from typing import Sequence

import numpy as np

from .matrixfn import as_spectrum
from .partitions import Partition, all_partitions, as_partition, ssyt_count
from .symchar import class_table, irreducible_character


def power_sums(spec: Sequence, m: int) -> np.ndarray:
    """``p[k-1] = sum_i spec_i**k`` for ``k = 1..m``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    lam = as_spectrum(spec)
    return np.array([np.sum(lam**k) for k in range(1, m + 1)])


def _class_weights(spec, m: int) -> np.ndarray:
    """``(|c| / m!) * p_c(spec)`` for each class ``c`` of S_m."""
    p = power_sums(spec, m)
    table = class_table(m)
    weights = [
        size / factorial(m) * np.prod([p[k - 1] for k in cycle_type])
        for cycle_type, size in zip(table.classes, table.sizes)
    ]
    return np.array(weights)


def _nonzero_count(spec) -> int:
    return int(np.count_nonzero(as_spectrum(spec)))


def schur_at_spectrum(eta: Sequence[int], spec: Sequence):
    """``s_eta(spec)``; exactly zero when ``eta`` has more parts than nonzero entries."""
    eta = as_partition(eta)
    if len(eta) > _nonzero_count(spec):
        return 0.0
    chi = np.array(irreducible_character(eta).values, dtype=float)
    return (_class_weights(spec, sum(eta)) @ chi).item()


def schur_values(spec: Sequence, m: int) -> dict[Partition, float | complex]:
    """``s_eta(spec)`` for every partition of ``m``, sharing one power-sum pass."""
    weights = _class_weights(spec, m)
    k = _nonzero_count(spec)
    out = {}
    for eta in all_partitions(m):
        if len(eta) > k:
            out[eta] = 0.0
        else:
            chi = np.array(irreducible_character(eta).values, dtype=float)
            out[eta] = (weights @ chi).item()
    return out


def schur_at_ones(eta: Sequence[int], n: int) -> int:
    """``s_eta(1, ..., 1)`` with ``n`` ones, by the hook-content formula."""
    return ssyt_count(eta, n)
