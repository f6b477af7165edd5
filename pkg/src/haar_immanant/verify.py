"""Inequality verification campaigns on closed-form and exact values.

Every check records a signed margin normalized by the size of the compared
quantities. A case passes when the margin is at least ``-MARGIN_TOL``;
margins in ``(-MARGIN_TOL, 0)`` still pass but are counted as warnings.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np

from .closedform import averaged_immanants, averaged_induced_immanants, matrix_element_integral
from .matrixfn import class_sums, permanent, random_psd
from .partitions import all_partitions, as_partition, dominates, multinomial, pad, syt_count
from .symchar import class_table, induced_character, irreducible_character

MARGIN_TOL = 1e-9


@dataclass
class CaseRecord:
    eta: list[int]
    eta_prime: list[int] | None
    spectrum: list[float]
    lhs: float
    rhs: float
    margin: float


@dataclass
class VerificationReport:
    suite: str
    n: int
    trials: int
    seed: int | None
    passed: int = 0
    checks: int = 0
    warnings: int = 0
    worst_margin: float = math.inf
    cases: list[CaseRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.checks

    def record(
        self, eta, eta_prime, spectrum, lhs: float, rhs: float,
        scale: float | None = None, tol: float = MARGIN_TOL,
    ):
        """Record ``lhs >= rhs``."""
        scale = max(abs(lhs), abs(rhs)) if scale is None else scale
        margin = (lhs - rhs) / scale if scale > 0 else 0.0
        self.checks += 1
        if margin >= -tol:
            self.passed += 1
            if margin < 0:
                self.warnings += 1
        self.worst_margin = min(self.worst_margin, margin)
        self.cases.append(
            CaseRecord(
                list(eta),
                None if eta_prime is None else list(eta_prime),
                [float(x) for x in spectrum],
                float(lhs),
                float(rhs),
                float(margin),
            )
        )

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "checks": self.checks,
            "passed": self.passed,
            "warnings": self.warnings,
            "worst_margin": self.worst_margin if self.checks else None,
            "ok": self.ok,
        }

    def to_dict(self, cases: bool = True) -> dict:
        out = self.summary()
        if cases:
            out["cases"] = [asdict(c) for c in self.cases]
        return out


def random_psd_spectrum(n: int, rng, normalize: str | None = None) -> np.ndarray:
    """Squared magnitudes of complex Gaussians, sorted descending.

    ``normalize`` may be ``"trace"`` or ``"det"`` to rescale to unit trace or
    unit determinant.
    """
    rng = np.random.default_rng(rng)
    lam = np.abs(rng.standard_normal(n) + 1j * rng.standard_normal(n)) ** 2 / 2
    if normalize == "trace":
        lam = lam / lam.sum()
    elif normalize == "det":
        lam = lam / np.prod(lam) ** (1 / n)
    elif normalize is not None:
        raise ValueError(f"unknown normalization {normalize!r}")
    return np.sort(lam)[::-1]


def comparable_pairs(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    parts = all_partitions(n)
    return [(a, b) for a in parts for b in parts if a != b and dominates(a, b)]


def monotonicity_margins(spec: Sequence[float]) -> list[tuple[tuple, tuple, float, float]]:
    """``(eta, eta', lhs, rhs)`` for each strictly comparable pair, normalized averages."""
    n = len(spec)
    induced = averaged_induced_immanants(spec)
    norm = {eta: induced[eta] / multinomial(eta, n) for eta in induced}
    return [(a, b, norm[a], norm[b]) for a, b in comparable_pairs(n)]


def verify_monotonicity(
    n: int, trials: int, seed: int, normalize: str | None = None
) -> VerificationReport:
    """Averaged monotonicity: normalized averaged induced immanants decrease down dominance."""
    if not 2 <= n <= 7:
        raise ValueError(f"monotonicity suite supports 2 <= n <= 7, got {n}")
    rng = np.random.default_rng(seed)
    report = VerificationReport("monotonicity", n, trials, seed)
    for _ in range(trials):
        spec = random_psd_spectrum(n, rng, normalize)
        for a, b, lhs, rhs in monotonicity_margins(spec):
            report.record(a, b, spec, lhs, rhs)
    return report


def _power_matrix(eta: Sequence[int], b: np.ndarray) -> np.ndarray:
    exponents = np.array(pad(eta, len(b)), dtype=float)
    return b[None, :] ** exponents[:, None]


def permanent_inequality_sides(eta, eta_prime, b) -> tuple[float, float]:
    b = np.asarray(b, dtype=float)
    if np.any(b < 0):
        raise ValueError("b must be nonnegative")
    eta, eta_prime = as_partition(eta), as_partition(eta_prime)
    if not dominates(eta, eta_prime):
        raise ValueError(f"{eta} does not dominate {eta_prime}")
    return permanent(_power_matrix(eta, b)), permanent(_power_matrix(eta_prime, b))


def verify_permanent_inequality(eta, eta_prime, b) -> bool:
    """``per(b_j ** eta_i) >= per(b_j ** eta'_i)`` for a dominating pair."""
    lhs, rhs = permanent_inequality_sides(eta, eta_prime, b)
    scale = max(abs(lhs), abs(rhs))
    return scale == 0 or (lhs - rhs) / scale >= -MARGIN_TOL


def verify_permanent_suite(n: int, trials: int, seed: int) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = VerificationReport("perm-ineq", n, trials, seed)
    for _ in range(trials):
        b = random_psd_spectrum(n, rng)
        for a, a_prime in comparable_pairs(n):
            lhs, rhs = permanent_inequality_sides(a, a_prime, b)
            report.record(a, a_prime, b, lhs, rhs)
    return report


def phi(a: float, b: float, n: float, x):
    """Permanent of ``[[a^x, b^x], [a^(n-x), b^(n-x)]]``."""
    x = np.asarray(x, dtype=float)
    return a**x * b ** (n - x) + a ** (n - x) * b**x


def phi_derivative(a: float, b: float, n: float, x):
    x = np.asarray(x, dtype=float)
    return (a**x * b ** (n - x) - b**x * a ** (n - x)) * np.log(a / b)


def phi_monotone_check(a: float, b: float, n: float, grid: Sequence[float]) -> bool:
    """``phi`` is nondecreasing on ``grid`` (all points >= n/2) and its derivative is >= 0 there."""
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    grid = np.asarray(grid, dtype=float)
    if np.any(np.diff(grid) < 0):
        raise ValueError("grid must be ascending")
    if np.any(grid < n / 2):
        raise ValueError(f"grid points must be >= n/2 = {n / 2}")
    values = phi(a, b, n, grid)
    tol = 1e-12 * np.max(np.abs(values), initial=0.0)
    deriv = phi_derivative(a, b, n, grid)
    dtol = 1e-12 * np.max(np.abs(values) * abs(np.log(a / b)), initial=0.0)
    return bool(np.all(np.diff(values) >= -tol) and np.all(deriv >= -dtol))


def verify_phi_suite(trials: int, seed: int, grid_points: int = 8) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = VerificationReport("phi", 0, trials, seed)
    for _ in range(trials):
        a, b = np.exp(rng.uniform(-2, 2, size=2))
        n = int(rng.integers(1, 13))
        grid = np.sort(rng.uniform(n / 2, n, size=grid_points))
        values = phi(a, b, n, grid)
        scale = float(np.max(np.abs(values)))
        report.record([n], None, [a, b], float(np.min(np.diff(values))), 0.0, scale, 1e-12)
        slope = float(np.min(phi_derivative(a, b, n, grid)))
        report.record([n], None, [a, b], slope, 0.0, scale * abs(np.log(a / b)) or 1.0, 1e-12)
    return report


def two_part_partitions(n: int) -> list[tuple[int, ...]]:
    return [eta for eta in all_partitions(n) if len(eta) <= 2]


def verify_james_liebeck_avg(n: int, trials: int, seed: int) -> VerificationReport:
    """``avg d_eta / chi_eta(e) <= avg per`` for partitions with at most two parts."""
    if not 2 <= n <= 6:
        raise ValueError(f"James-Liebeck suite supports 2 <= n <= 6, got {n}")
    rng = np.random.default_rng(seed)
    report = VerificationReport("james-liebeck", n, trials, seed)
    for _ in range(trials):
        spec = random_psd_spectrum(n, rng)
        averages = averaged_immanants(spec)
        per = averages[(n,)]
        for eta in two_part_partitions(n):
            report.record(eta, (n,), spec, per, averages[eta] / syt_count(eta))
    return report


def convexity_identity_residual(spec: Sequence[float], eta: Sequence[int]) -> float:
    """Relative residual of the convex-combination identity for a two-part ``eta``.

    With ``eta' = (eta_1 + 1, eta_2 - 1)`` the induced characters satisfy
    ``[eta] = [eta'] + chi_eta``, so the normalized average of ``[eta]`` is the
    weighted mean of the normalized averages of ``[eta']`` and ``chi_eta``.
    """
    eta = as_partition(eta)
    if len(eta) != 2:
        raise ValueError(f"need a two-part partition, got {eta}")
    n = sum(eta)
    eta_prime = as_partition((eta[0] + 1, eta[1] - 1))
    if induced_character(eta) != induced_character(eta_prime) + irreducible_character(eta):
        raise AssertionError(f"[{eta}] != [{eta_prime}] + chi_{eta}")
    induced = averaged_induced_immanants(spec)
    averages = averaged_immanants(spec)
    w_prime, w_eta = multinomial(eta_prime, n), syt_count(eta)
    lhs = induced[eta] / multinomial(eta, n)
    rhs = (induced[eta_prime] / w_prime * w_prime + averages[eta] / w_eta * w_eta) / (w_prime + w_eta)
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs))


def verify_orthogonality_suite(n: int, m: int | None = None, tol: float = 1e-12) -> VerificationReport:
    """Matrix-element integrals at the all-ones spectrum against ``delta(sigma, e)``.

    Checks degree ``m``, or every degree up to ``n`` when ``m`` is omitted.
    """
    if m is not None and not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    report = VerificationReport("theorem9", n, 1, None)
    degrees = range(1, n + 1) if m is None else [m]
    ones = np.ones(n)
    for k in degrees:
        for c in class_table(k).classes:
            expected = 1.0 if c == (1,) * k else 0.0
            err = abs(matrix_element_integral(ones, c) - expected)
            report.record(c, None, ones, -err, 0.0, 1.0, tol)
    return report


def verify_theorem9_orthogonality(n: int, m: int | None = None) -> bool:
    return verify_orthogonality_suite(n, m).ok


def _psd_matrix_checks(
    suite: str, n: int, trials: int, seed: int,
    check: Callable[[np.ndarray, VerificationReport], None],
) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = VerificationReport(suite, n, trials, seed)
    for _ in range(trials):
        check(random_psd(n, int(rng.integers(2**63))), report)
    return report


def _induced_values(a: np.ndarray) -> dict[tuple[int, ...], float]:
    n = a.shape[0]
    sums = class_sums(a, n)
    return {
        eta: float(np.real(sums @ np.array(induced_character(eta).values, dtype=float)))
        for eta in all_partitions(n)
    }


def verify_exact_mw(n: int, trials: int, seed: int) -> VerificationReport:
    """Unaveraged direction on random PSD matrices: ``d_[eta](A) <= d_[eta'](A)``."""

    def check(a, report):
        values = _induced_values(a)
        spec = np.linalg.eigvalsh(a)[::-1]
        for x, y in comparable_pairs(n):
            report.record(x, y, spec, values[y], values[x])

    return _psd_matrix_checks("mw-exact", n, trials, seed, check)


def verify_schur_inequality(n: int, trials: int, seed: int) -> VerificationReport:
    """``det(A) <= d_eta(A) / chi_eta(e)`` on random PSD matrices."""

    def check(a, report):
        sums = class_sums(a, n)
        spec = np.linalg.eigvalsh(a)[::-1]
        det = float(np.real(np.prod(spec)))
        for eta in all_partitions(n):
            chi = np.array(irreducible_character(eta).values, dtype=float)
            value = float(np.real(sums @ chi)) / syt_count(eta)
            report.record(eta, (1,) * n, spec, value, det)

    return _psd_matrix_checks("schur", n, trials, seed, check)


SUITES = {
    "monotonicity": lambda n, trials, seed: verify_monotonicity(n, trials, seed),
    "perm-ineq": lambda n, trials, seed: verify_permanent_suite(n, trials, seed),
    "phi": lambda n, trials, seed: verify_phi_suite(trials, seed),
    "james-liebeck": lambda n, trials, seed: verify_james_liebeck_avg(n, trials, seed),
    "theorem9": lambda n, trials, seed: verify_orthogonality_suite(n),
    "mw-exact": lambda n, trials, seed: verify_exact_mw(n, trials, seed),
    "schur": lambda n, trials, seed: verify_schur_inequality(n, trials, seed),
}
