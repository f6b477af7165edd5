"""Generalized matrix functions, the permanent and Hermitian spectra."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import ResourceLimitError
from .symchar import ClassFunction, class_table, cycle_type_of

MAX_PERMUTATION_DEGREE = 10
MAX_PERMANENT_SIZE = 24
HERMITIAN_TOL = 1e-10


def as_matrix(a) -> np.ndarray:
    """Square, finite 2-D array; kept real when the input is real."""
    arr = np.asarray(a)
    if arr.dtype.kind not in "fc":
        arr = arr.astype(float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


@lru_cache(maxsize=None)
def permutation_classes(m: int) -> tuple[np.ndarray, np.ndarray]:
    """All permutations of ``0..m-1`` as an ``(m!, m)`` array and their class indices."""
    if m > MAX_PERMUTATION_DEGREE:
        raise ResourceLimitError(f"degree {m} exceeds limit {MAX_PERMUTATION_DEGREE}")
    table = class_table(m)
    perms = np.array(list(permutations(range(m))), dtype=np.intp).reshape(-1, m)
    idx = np.array([table.index(cycle_type_of(p)) for p in perms], dtype=np.intp)
    perms.setflags(write=False)
    idx.setflags(write=False)
    return perms, idx


def check_degree(n: int, m: int):
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    if m > n:
        raise ValueError(f"degree {m} exceeds matrix size {n}")
    if m > MAX_PERMUTATION_DEGREE:
        raise ResourceLimitError(f"degree {m} exceeds limit {MAX_PERMUTATION_DEGREE}")


def class_sums(a, m: int | None = None) -> np.ndarray:
    """``S_c = sum_{sigma in c} prod_{i<m} A[i, sigma(i)]`` for every class ``c`` of S_m.

    Works on a single matrix or a stack of shape ``(..., n, n)``; the class
    axis is appended last. Any class-function immanant is then a dot product.
    """
    arr = np.asarray(a)
    n = arr.shape[-1]
    m = n if m is None else m
    check_degree(n, m)
    perms, idx = permutation_classes(m)
    rows = np.arange(m)
    terms = arr[..., rows, perms].prod(axis=-1)  # (..., m!)
    n_classes = len(class_table(m).classes)
    onehot = np.zeros((len(perms), n_classes))
    onehot[np.arange(len(perms)), idx] = 1.0
    return terms @ onehot


def class_vector(f: ClassFunction) -> np.ndarray:
    values = [complex(v) for v in f.values]
    if all(v.imag == 0 for v in values):
        return np.array([v.real for v in values])
    return np.array(values)


def matrix_function(a, f: ClassFunction, m: int | None = None):
    """``d_f(A) = sum_{sigma in S_m} f(sigma) prod_{i<m} A[i, sigma(i)]``.

    ``m`` defaults to the degree of ``f``; values below the matrix size use
    the leading ``m`` rows.
    """
    arr = as_matrix(a)
    m = f.m if m is None else m
    if m != f.m:
        raise ValueError(f"class function is on S_{f.m}, requested degree {m}")
    value = class_sums(arr, m) @ class_vector(f)
    return value.item()


def permanent_naive(a) -> complex:
    arr = as_matrix(a)
    n = arr.shape[0]
    if n == 0:
        return 1.0
    if n > MAX_PERMUTATION_DEGREE:
        raise ResourceLimitError(f"naive permanent limited to n <= {MAX_PERMUTATION_DEGREE}")
    perms, _ = permutation_classes(n)
    return arr[np.arange(n), perms].prod(axis=-1).sum().item()


def permanent(a):
    """Permanent by Ryser's formula, visiting column subsets in Gray-code order."""
    arr = as_matrix(a)
    n = arr.shape[0]
    if n > MAX_PERMANENT_SIZE:
        raise ResourceLimitError(f"permanent limited to n <= {MAX_PERMANENT_SIZE}, got {n}")
    if n == 0:
        return 1.0
    row_sums = np.zeros(n, dtype=arr.dtype)
    total = 0
    in_subset = [False] * n
    gray = 0
    for k in range(1, 1 << n):
        new_gray = k ^ (k >> 1)
        j = (gray ^ new_gray).bit_length() - 1
        gray = new_gray
        if in_subset[j]:
            row_sums -= arr[:, j]
        else:
            row_sums += arr[:, j]
        in_subset[j] = not in_subset[j]
        term = np.prod(row_sums)
        total += term if gray.bit_count() % 2 == 0 else -term
    return ((-1) ** n * total).item()


def hermitian_check(a, tol: float = HERMITIAN_TOL) -> np.ndarray:
    arr = as_matrix(a)
    dev = np.abs(arr - arr.conj().T)
    if dev.max(initial=0.0) > tol:
        i, j = np.unravel_index(np.argmax(dev), dev.shape)
        raise ValueError(
            f"matrix is not Hermitian: |A[{i},{j}] - conj(A[{j},{i}])| = {dev[i, j]:.3e} > {tol:g}"
        )
    return arr


def hermitian_spectrum(a, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, sorted descending."""
    arr = hermitian_check(a).astype(complex)
    n = arr.shape[0]
    work = (arr + arr.conj().T) / 2
    scale = np.linalg.norm(work)
    if scale == 0.0:
        return np.zeros(n)
    off_diagonal = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        if np.linalg.norm(work[off_diagonal]) <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotate(work, p, q)
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.sort(np.diag(work).real)[::-1]


def _jacobi_rotate(work: np.ndarray, p: int, q: int):
    b = work[p, q]
    mag = abs(b)
    if mag == 0.0:
        return
    phase = b / mag
    app, aqq = work[p, p].real, work[q, q].real
    tau = (aqq - app) / (2 * mag)
    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1 + tau * tau))
    c = 1 / np.sqrt(1 + t * t)
    s = t * c
    # diag(1, conj(phase)) makes the pivot real, then a real Givens rotation
    rot = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
    cols = [p, q]
    work[:, cols] = work[:, cols] @ rot
    work[cols, :] = rot.conj().T @ work[cols, :]
    work[p, q] = work[q, p] = 0.0


def random_psd(n: int, seed: int) -> np.ndarray:
    """``G G*`` for a seeded complex Ginibre matrix ``G``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rng = np.random.default_rng(seed)
    g = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    x = g @ g.conj().T
    return (x + x.conj().T) / 2


def as_spectrum(values: Sequence) -> np.ndarray:
    """Spectrum as a 1-D array; real dtype when all imaginary parts vanish."""
    arr = np.asarray(values)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("spectrum must be a non-empty 1-D sequence")
    if arr.dtype.kind not in "fc":
        arr = arr.astype(float)
    if arr.dtype.kind == "c" and np.all(arr.imag == 0):
        arr = arr.real.copy()
    if not np.all(np.isfinite(arr)):
        raise ValueError("spectrum has non-finite entries")
    return arr


def psd_spectrum(values: Sequence, tol: float = 1e-10) -> np.ndarray:
    """Validate a nonnegative real spectrum and return it sorted descending."""
    arr = np.asarray(values, dtype=complex)
    if np.any(np.abs(arr.imag) > tol):
        raise ValueError("PSD spectrum must be real")
    real = arr.real
    if np.any(real < -tol):
        raise ValueError(f"PSD spectrum has a negative entry {real.min():g}")
    return np.sort(np.clip(real, 0.0, None))[::-1]
