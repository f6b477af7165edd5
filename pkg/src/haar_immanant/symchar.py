"""Conjugacy classes and characters of the symmetric group.

Characters are exact: values are Python ints (or Fractions after division).
Classes are indexed by cycle type and listed identity first, i.e. in the
reverse of :func:`all_partitions` order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from numbers import Rational
from typing import Sequence

from .errors import ResourceLimitError
from .partitions import Partition, all_partitions, as_partition

MAX_DEGREE = 14


def z_factor(cycle_type: Sequence[int]) -> int:
    """Centralizer order ``prod k^{m_k} m_k!`` of a permutation of this cycle type."""
    return prod(k**mk * factorial(mk) for k, mk in Counter(cycle_type).items())


@dataclass(frozen=True)
class ConjClassTable:
    m: int
    classes: tuple[Partition, ...]
    sizes: tuple[int, ...]

    def index(self, cycle_type: Sequence[int]) -> int:
        return _class_index(self.m)[as_partition(cycle_type)]


@lru_cache(maxsize=None)
def class_table(m: int) -> ConjClassTable:
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    if m > MAX_DEGREE:
        raise ResourceLimitError(f"degree {m} exceeds limit {MAX_DEGREE}")
    classes = tuple(reversed(all_partitions(m)))
    sizes = tuple(factorial(m) // z_factor(c) for c in classes)
    return ConjClassTable(m, classes, sizes)


@lru_cache(maxsize=None)
def _class_index(m: int) -> dict[Partition, int]:
    return {c: i for i, c in enumerate(class_table(m).classes)}


@dataclass(frozen=True)
class ClassFunction:
    """Values of a class function on S_m, parallel to ``class_table(m).classes``."""

    m: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(class_table(self.m).classes):
            raise ValueError(
                f"class function on S_{self.m} needs {len(class_table(self.m).classes)} values, "
                f"got {len(self.values)}"
            )

    @classmethod
    def from_mapping(cls, m: int, mapping: dict) -> "ClassFunction":
        table = class_table(m)
        return cls(m, tuple(mapping[c] for c in table.classes))

    def __call__(self, cycle_type: Sequence[int]):
        return self.values[class_table(self.m).index(cycle_type)]

    @property
    def at_identity(self):
        return self.values[0]

    def _check(self, other: "ClassFunction"):
        if other.m != self.m:
            raise ValueError(f"degree mismatch: S_{self.m} vs S_{other.m}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.m, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.m, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, scalar) -> "ClassFunction":
        return ClassFunction(self.m, tuple(scalar * a for a in self.values))

    __rmul__ = __mul__

    def inner(self, other: "ClassFunction"):
        """``(1/m!) sum_sigma f(sigma) g(sigma)`` for real-valued class functions."""
        self._check(other)
        sizes = class_table(self.m).sizes
        total = sum(s * a * b for s, a, b in zip(sizes, self.values, other.values))
        if all(isinstance(v, Rational) for v in self.values + other.values):
            return Fraction(total, factorial(self.m))
        return total / factorial(self.m)


# Murnaghan-Nakayama on beta-sets: removing a rim hook of length k moves one
# bead from position b to b - k; the sign counts beads jumped over.


def _beta_set(shape: Partition) -> tuple[int, ...]:
    length = len(shape)
    return tuple(part + length - 1 - i for i, part in enumerate(shape))


def _shape_from_beta(beta: Sequence[int]) -> Partition:
    length = len(beta)
    ordered = sorted(beta, reverse=True)
    return tuple(b - (length - 1 - i) for i, b in enumerate(ordered) if b - (length - 1 - i) > 0)


@lru_cache(maxsize=None)
def _mn(shape: Partition, cycle_type: Partition) -> int:
    if not cycle_type:
        return 1 if not shape else 0
    k, rest = cycle_type[0], cycle_type[1:]
    beta = _beta_set(shape)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        new_beta = [target if c == b else c for c in beta]
        total += (-1) ** jumped * _mn(_shape_from_beta(new_beta), rest)
    return total


def character_value(eta: Sequence[int], cycle_type: Sequence[int]) -> int:
    eta, cycle_type = as_partition(eta), as_partition(cycle_type)
    if sum(eta) != sum(cycle_type):
        raise ValueError(f"weights differ: {eta} vs {cycle_type}")
    return _mn(eta, cycle_type)


def irreducible_character(eta: Sequence[int]) -> ClassFunction:
    return _irreducible(as_partition(eta))


@lru_cache(maxsize=None)
def _irreducible(eta: Partition) -> ClassFunction:
    m = sum(eta)
    return ClassFunction(m, tuple(_mn(eta, c) for c in class_table(m).classes))


def character_table(m: int) -> dict[Partition, ClassFunction]:
    """Irreducible characters of S_m keyed by partition, in ``all_partitions`` order."""
    return {eta: irreducible_character(eta) for eta in all_partitions(m)}


def sign_character(m: int) -> ClassFunction:
    return ClassFunction(m, tuple((-1) ** (m - len(c)) for c in class_table(m).classes))


def trivial_character(m: int) -> ClassFunction:
    return ClassFunction(m, (1,) * len(class_table(m).classes))


def regular_character(m: int) -> ClassFunction:
    values = [0] * len(class_table(m).classes)
    values[0] = factorial(m)
    return ClassFunction(m, tuple(values))


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: Partition) -> int:
    # Strip the largest letter: its cells form a horizontal strip of size content[-1].
    if not content:
        return 1 if not shape else 0
    if sum(shape) != sum(content) or len(shape) > len(content):
        return 0
    k, rest = content[-1], content[:-1]
    total = 0
    for inner in _horizontal_strip_removals(shape, k):
        total += _kostka(inner, rest)
    return total


def _horizontal_strip_removals(shape: Partition, k: int):
    """Shapes ``mu`` with ``shape / mu`` a horizontal strip of ``k`` cells."""
    rows = len(shape)
    # shape[i+1] <= mu[i] <= shape[i]
    def rec(i: int, remaining: int, acc: list[int]):
        if i == rows:
            if remaining == 0:
                yield tuple(p for p in acc if p > 0)
            return
        lower = shape[i + 1] if i + 1 < rows else 0
        for mu_i in range(shape[i], lower - 1, -1):
            take = shape[i] - mu_i
            if take > remaining:
                break
            yield from rec(i + 1, remaining - take, acc + [mu_i])

    yield from rec(0, k, [])


def kostka(lam: Sequence[int], eta: Sequence[int]) -> int:
    """Number of SSYT of shape ``lam`` and content ``eta``."""
    lam, eta = as_partition(lam), as_partition(eta)
    if sum(lam) != sum(eta):
        raise ValueError(f"weights differ: {lam} vs {eta}")
    return _kostka(lam, eta)


def induced_character(eta: Sequence[int]) -> ClassFunction:
    """Permutation character of S_m on cosets of the Young subgroup of ``eta``."""
    return _induced(as_partition(eta))


@lru_cache(maxsize=None)
def _induced(eta: Partition) -> ClassFunction:
    m = sum(eta)
    total = ClassFunction(m, (0,) * len(class_table(m).classes))
    for lam in all_partitions(m):
        k = _kostka(lam, eta)
        if k:
            total = total + k * irreducible_character(lam)
    return total


def decompose(chi: ClassFunction) -> dict[Partition, Fraction]:
    """Multiplicities of each irreducible in ``chi`` via exact inner products."""
    return {eta: chi.inner(irreducible_character(eta)) for eta in all_partitions(chi.m)}


def representative(cycle_type: Sequence[int]) -> tuple[int, ...]:
    """A permutation (as an image tuple on ``0..m-1``) of the given cycle type.

    Cycles are laid out on consecutive points, longest first.
    """
    cycle_type = as_partition(cycle_type)
    perm, start = [], 0
    for length in cycle_type:
        perm.extend(start + (j + 1) % length for j in range(length))
        start += length
    return tuple(perm)


def cycle_type_of(perm: Sequence[int]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))
