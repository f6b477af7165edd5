"""Exact Haar conjugation averages of immanants and matrix-element products.

All values depend on the matrix only through its spectrum:

* averaged immanant: ``chi_eta(e) * s_eta(spec) / s_eta(1^n)``
* averaged induced immanant: Kostka-weighted sum of averaged immanants
* matrix-element integral over ``prod_i (u A u*)[i, sigma(i)]``:
  ``sum_eta s_eta(spec) / s_eta(1^n) * chi_eta(e) / m! * chi_eta(sigma)``
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .haar import MCEstimate, mc_diagonal_power_product
from .matrixfn import as_spectrum
from .partitions import Partition, all_partitions, as_partition, multinomial, syt_count
from .schur import schur_at_ones, schur_at_spectrum, schur_values
from .symchar import ClassFunction, class_table, decompose, irreducible_character, kostka


@dataclass(frozen=True)
class AveragedImmanant:
    eta: Partition
    value: float | complex
    s_eta_at_spec: float | complex
    s_eta_at_ones: int
    chi_e: int
    rank_deficient: bool = False

    def to_dict(self) -> dict:
        return {
            "eta": list(self.eta),
            "value": self.value,
            "ingredients": {
                "s_eta_at_spec": self.s_eta_at_spec,
                "s_eta_at_ones": self.s_eta_at_ones,
                "chi_e": self.chi_e,
            },
            "rank_deficient": self.rank_deficient,
        }


def averaged_immanant(spec: Sequence, eta: Sequence[int]) -> AveragedImmanant:
    """Haar average of the ``eta`` immanant (leading ``|eta|`` rows) over conjugates of A."""
    lam = as_spectrum(spec)
    eta = as_partition(eta)
    n, m = len(lam), sum(eta)
    chi_e = syt_count(eta)
    if len(eta) > n:
        return AveragedImmanant(eta, 0.0, 0.0, 0, chi_e, True)
    if m > n:
        raise ValueError(f"partition {eta} has weight {m} > n = {n}")
    s_spec = schur_at_spectrum(eta, lam)
    s_ones = schur_at_ones(eta, n)
    deficient = len(eta) > int((lam != 0).sum())
    return AveragedImmanant(eta, chi_e * s_spec / s_ones, s_spec, s_ones, chi_e, deficient)


def averaged_immanants(spec: Sequence, m: int | None = None) -> dict[Partition, float | complex]:
    """Averaged immanants for every partition of ``m`` (default ``n``), in one pass."""
    lam = as_spectrum(spec)
    n = len(lam)
    m = n if m is None else m
    if m > n:
        raise ValueError(f"degree {m} exceeds n = {n}")
    s = schur_values(lam, m)
    return {eta: syt_count(eta) * s[eta] / schur_at_ones(eta, n) for eta in all_partitions(m)}


def averaged_induced_immanant(spec: Sequence, eta: Sequence[int]) -> float | complex:
    """Haar average of ``d_[eta]``: ``sum_lambda K[lambda, eta] * averaged_immanant(lambda)``."""
    lam = as_spectrum(spec)
    eta = as_partition(eta)
    m = sum(eta)
    if m > len(lam):
        raise ValueError(f"partition {eta} has weight {m} > n = {len(lam)}")
    averages = averaged_immanants(lam, m)
    return sum(kostka(mu, eta) * averages[mu] for mu in all_partitions(m))


def averaged_induced_immanants(spec: Sequence) -> dict[Partition, float | complex]:
    lam = as_spectrum(spec)
    n = len(lam)
    averages = averaged_immanants(lam, n)
    parts = all_partitions(n)
    return {
        eta: sum(kostka(mu, eta) * averages[mu] for mu in parts if kostka(mu, eta))
        for eta in parts
    }


def induced_average_via_diagonal(
    a, eta: Sequence[int], samples: int, seed: int, workers: int | None = None
) -> MCEstimate:
    """Monte Carlo route: ``multinomial(eta) * integral prod_i (A^u)_ii^{eta_i}``."""
    eta = as_partition(eta)
    est = mc_diagonal_power_product(a, eta, samples, seed, workers)
    scale = multinomial(eta, sum(eta))
    return MCEstimate(
        est.mean * scale, est.std_error * scale, est.std_error_imag * scale,
        est.samples, est.seed, est.workers,
    )


def matrix_element_integral(spec: Sequence, sigma: Sequence[int]) -> float | complex:
    """``integral prod_{i<m} (u A u*)[i, sigma(i)] du`` for ``sigma`` of the given cycle type."""
    lam = as_spectrum(spec)
    sigma = as_partition(sigma)
    n, m = len(lam), sum(sigma)
    if m > n:
        raise ValueError(f"cycle type {sigma} has degree {m} > n = {n}")
    s = schur_values(lam, m)
    total = 0.0
    for eta in all_partitions(m, max_parts=n):
        chi = irreducible_character(eta)
        total += s[eta] / schur_at_ones(eta, n) * chi.at_identity / factorial(m) * chi(sigma)
    return total


def matrix_element_integrals(spec: Sequence, m: int) -> dict[Partition, float | complex]:
    lam = as_spectrum(spec)
    return {c: matrix_element_integral(lam, c) for c in class_table(m).classes}


def character_multiplicities(chi: ClassFunction) -> dict[Partition, int]:
    """Irreducible multiplicities of ``chi``; raises unless they are nonnegative integers."""
    mult = decompose(chi)
    bad = {eta: v for eta, v in mult.items() if Fraction(v).denominator != 1 or v < 0}
    if bad:
        shown = ", ".join(f"{list(k)}: {v}" for k, v in bad.items())
        raise ValueError(f"class function is not a character (multiplicities {shown})")
    return {eta: int(v) for eta, v in mult.items() if v}


def trace_on_submodule(spec: Sequence, chi_v: ClassFunction, order: str = "classes"):
    """Trace of the averaged tensor-power operator on an S_m submodule with character ``chi_v``.

    ``order="classes"`` sums class sizes times matrix-element integrals;
    ``order="irreducibles"`` sums multiplicities times averaged immanants.
    """
    lam = as_spectrum(spec)
    mult = character_multiplicities(chi_v)
    m = chi_v.m
    if m > len(lam):
        raise ValueError(f"degree {m} exceeds n = {len(lam)}")
    if order == "classes":
        table = class_table(m)
        return sum(
            size * float(value) * matrix_element_integral(lam, c)
            for c, size, value in zip(table.classes, table.sizes, chi_v.values)
            if value
        )
    if order == "irreducibles":
        averages = averaged_immanants(lam, m)
        return sum(k * averages[eta] for eta, k in mult.items())
    raise ValueError(f"unknown order {order!r}")
