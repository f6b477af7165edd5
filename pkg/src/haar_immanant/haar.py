"""Haar-random unitaries and Monte Carlo conjugation averages.

Worker ``w`` of a run seeded with ``seed`` draws from
``numpy.random.SeedSequence(seed, spawn_key=(w,))``. Each worker processes
its share of samples in fixed-size batches; batch and worker moments are
combined with the pairwise (Chan et al.) update in index order, so a run is
bit-reproducible for a fixed ``(seed, samples, workers)``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .matrixfn import check_degree, class_vector, as_matrix, class_sums
from .partitions import as_partition, pad
from .symchar import ClassFunction, representative

BATCH = 4096
WORKERS_ENV = "HAAR_IMMANANT_WORKERS"


def default_workers() -> int:
    return max(1, int(os.environ.get(WORKERS_ENV, "1")))


def haar_unitaries(n: int, size: int, rng) -> np.ndarray:
    """``size`` independent Haar unitaries of shape ``(size, n, n)``.

    Ginibre QR with each column of Q rescaled by the phase of the matching
    diagonal entry of R; without that correction QR output is not Haar.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rng = np.random.default_rng(rng)
    z = (rng.standard_normal((size, n, n)) + 1j * rng.standard_normal((size, n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[..., None, :]


def haar_unitary(n: int, rng=None) -> np.ndarray:
    return haar_unitaries(n, 1, rng)[0]


def conjugate(a: np.ndarray, u: np.ndarray) -> np.ndarray:
    """``u A u*`` (broadcasts over a stack of ``u``)."""
    return u @ a @ np.conj(np.swapaxes(u, -1, -2))


@dataclass(frozen=True)
class MCEstimate:
    mean: complex
    std_error: float
    std_error_imag: float
    samples: int
    seed: int
    workers: int = 1

    def within(self, target: complex, k: float = 4.0) -> bool:
        """``|Re(mean - target)| <= k * std_error``; real parts only."""
        return abs(self.mean.real - complex(target).real) <= k * self.std_error

    def to_dict(self) -> dict:
        return {
            "mean": [self.mean.real, self.mean.imag],
            "std_error": self.std_error,
            "std_error_imag": self.std_error_imag,
            "samples": self.samples,
            "seed": self.seed,
            "workers": self.workers,
        }


@dataclass
class _Moments:
    count: int = 0
    mean: complex = 0j
    m2_re: float = 0.0
    m2_im: float = 0.0

    @classmethod
    def of(cls, x: np.ndarray) -> "_Moments":
        x = np.asarray(x, dtype=complex)
        mu = x.mean()
        dev = x - mu
        return cls(x.size, complex(mu), float(np.sum(dev.real**2)), float(np.sum(dev.imag**2)))

    def merge(self, other: "_Moments") -> "_Moments":
        if other.count == 0:
            return self
        if self.count == 0:
            return other
        total = self.count + other.count
        delta = other.mean - self.mean
        weight = self.count * other.count / total
        return _Moments(
            total,
            self.mean + delta * other.count / total,
            self.m2_re + other.m2_re + delta.real**2 * weight,
            self.m2_im + other.m2_im + delta.imag**2 * weight,
        )


def _worker_moments(estimator, n: int, count: int, seed: int, worker: int, batch: int) -> _Moments:
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(worker,)))
    acc = _Moments()
    done = 0
    while done < count:
        size = min(batch, count - done)
        acc = acc.merge(_Moments.of(estimator(haar_unitaries(n, size, rng))))
        done += size
    return acc


def monte_carlo(
    estimator: Callable[[np.ndarray], np.ndarray],
    n: int,
    samples: int,
    seed: int,
    workers: int | None = None,
    batch: int = BATCH,
) -> MCEstimate:
    """Mean and standard error of ``estimator(u)`` over Haar ``u`` in U_n.

    ``estimator`` receives a ``(B, n, n)`` stack and returns ``B`` values.
    """
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    workers = default_workers() if workers is None else workers
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    workers = min(workers, samples)
    base, extra = divmod(samples, workers)
    counts = [base + (w < extra) for w in range(workers)]
    if workers == 1:
        parts = [_worker_moments(estimator, n, counts[0], seed, 0, batch)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_worker_moments, estimator, n, counts[w], seed, w, batch)
                for w in range(workers)
            ]
            parts = [f.result() for f in futures]
    total = _Moments()
    for part in parts:
        total = total.merge(part)
    var_re = total.m2_re / (total.count - 1)
    var_im = total.m2_im / (total.count - 1)
    return MCEstimate(
        mean=total.mean,
        std_error=float(np.sqrt(var_re / total.count)),
        std_error_imag=float(np.sqrt(var_im / total.count)),
        samples=total.count,
        seed=seed,
        workers=workers,
    )


def mc_average_df(a, f: ClassFunction, samples: int, seed: int, workers: int | None = None) -> MCEstimate:
    """Estimate ``integral d_f(u A u*) du``."""
    arr = as_matrix(a)
    check_degree(arr.shape[0], f.m)
    weights = class_vector(f)

    def estimator(us):
        return class_sums(conjugate(arr, us), f.m) @ weights

    return monte_carlo(estimator, arr.shape[0], samples, seed, workers)


def mc_permutation_product(
    a, perm: Sequence[int], samples: int, seed: int, workers: int | None = None
) -> MCEstimate:
    """Estimate ``integral prod_i (u A u*)[i, perm[i]] du`` for an explicit permutation."""
    arr = as_matrix(a)
    perm = np.asarray(perm, dtype=np.intp)
    m = len(perm)
    if sorted(perm.tolist()) != list(range(m)):
        raise ValueError(f"not a permutation of 0..{m - 1}: {perm.tolist()}")
    check_degree(arr.shape[0], m)
    rows = np.arange(m)

    def estimator(us):
        return conjugate(arr, us)[:, rows, perm].prod(axis=-1)

    return monte_carlo(estimator, arr.shape[0], samples, seed, workers)


def mc_matrix_element_product(
    a, sigma: Sequence[int], m: int | None = None, samples: int = 100_000, seed: int = 0,
    workers: int | None = None,
) -> MCEstimate:
    """Estimate the matrix-element integral for a representative of cycle type ``sigma``."""
    sigma = as_partition(sigma)
    if m is not None and m != sum(sigma):
        raise ValueError(f"cycle type {sigma} is not of degree {m}")
    return mc_permutation_product(a, representative(sigma), samples, seed, workers)


def mc_diagonal_power_product(
    a, gamma: Sequence[int], samples: int, seed: int, workers: int | None = None
) -> MCEstimate:
    """Estimate ``integral prod_i (u A u*)[i, i] ** gamma[i] du`` with ``gamma`` a partition of n."""
    arr = as_matrix(a)
    n = arr.shape[0]
    gamma = as_partition(gamma)
    if sum(gamma) != n:
        raise ValueError(f"gamma {gamma} must be a partition of {n}")
    powers = np.array(pad(gamma, n))

    def estimator(us):
        diag = np.diagonal(conjugate(arr, us), axis1=-2, axis2=-1)
        return np.prod(diag**powers, axis=-1)

    return monte_carlo(estimator, n, samples, seed, workers)
