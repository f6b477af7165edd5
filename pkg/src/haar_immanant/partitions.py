"""Integer partitions, dominance order and tableau counting.

Partitions are plain tuples of positive integers in weakly decreasing order,
stored without trailing zeros.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import NoPathError

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple (trailing zeros dropped)."""
    values = [int(p) for p in parts]
    if any(p < 0 for p in values):
        raise ValueError(f"partition parts must be nonnegative: {values}")
    while values and values[-1] == 0:
        values.pop()
    if 0 in values:
        raise ValueError(f"zero part inside partition: {values}")
    for a, b in zip(values, values[1:]):
        if a < b:
            raise ValueError(f"partition parts must be weakly decreasing: {values}")
    if not values:
        raise ValueError("empty partition")
    return tuple(values)


def weight(eta: Sequence[int]) -> int:
    return sum(eta)


def all_partitions(m: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order.

    >>> all_partitions(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if max_parts is not None and max_parts < 1:
        raise ValueError(f"max_parts must be positive, got {max_parts}")
    return list(_partitions(m, m, max_parts if max_parts is not None else m))


@lru_cache(maxsize=None)
def _partitions(m: int, largest: int, slots: int) -> tuple[Partition, ...]:
    if m == 0:
        return ((),)
    if slots == 0:
        return ()
    out = []
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first, slots - 1):
            out.append((first,) + rest)
    return tuple(out)


def _prefix_sums(eta: Sequence[int], length: int) -> list[int]:
    sums, acc = [], 0
    for i in range(length):
        acc += eta[i] if i < len(eta) else 0
        sums.append(acc)
    return sums


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff every prefix sum of ``a`` is at least that of ``b``."""
    if sum(a) != sum(b):
        raise ValueError(f"partitions have different weights: {tuple(a)} vs {tuple(b)}")
    length = max(len(a), len(b))
    return all(x >= y for x, y in zip(_prefix_sums(a, length), _prefix_sums(b, length)))


def dominance_path(a: Sequence[int], b: Sequence[int]) -> list[Partition]:
    """A strictly decreasing chain from ``a`` down to ``b`` in dominance order.

    Each step moves a single cell from one row to a lower row. The source row is
    searched bottom-up and the target row nearest-first; the first move that
    keeps the result a partition dominating ``b`` is taken.
    """
    a, b = as_partition(a), as_partition(b)
    if not dominates(a, b):
        raise NoPathError(f"{a} does not dominate {b}")
    path = [a]
    current = list(a)
    while tuple(current) != b:
        current = _greedy_move(current, b)
        path.append(tuple(current))
    return path


def _greedy_move(current: list[int], target: Partition) -> list[int]:
    rows = len(current)
    for src in range(rows - 1, -1, -1):
        for dst in range(src + 1, rows + 1):
            cand = current + [0]
            cand[src] -= 1
            cand[dst] += 1
            if any(x < y for x, y in zip(cand, cand[1:])):
                continue
            while cand and cand[-1] == 0:
                cand.pop()
            if dominates(cand, target):
                return cand
    raise NoPathError(f"no covering move from {tuple(current)} toward {target}")


def is_dominance_path(steps: Sequence[Sequence[int]]) -> bool:
    """Check the chain invariants: equal weights, two-part moves, strict descent."""
    if not steps:
        return False
    m = sum(steps[0])
    for prev, nxt in zip(steps, steps[1:]):
        if sum(nxt) != m:
            return False
        length = max(len(prev), len(nxt))
        p = list(prev) + [0] * (length - len(prev))
        q = list(nxt) + [0] * (length - len(nxt))
        diffs = sorted(x - y for x, y in zip(p, q) if x != y)
        if diffs != [-1, 1] or not dominates(prev, nxt) or tuple(prev) == tuple(nxt):
            return False
    return True


def conjugate(eta: Sequence[int]) -> Partition:
    if not eta:
        return ()
    return tuple(sum(1 for part in eta if part > j) for j in range(eta[0]))


def hook_lengths(eta: Sequence[int]) -> list[int]:
    cols = conjugate(eta)
    return [eta[i] - j + cols[j] - i - 1 for i in range(len(eta)) for j in range(eta[i])]


def contents(eta: Sequence[int]) -> list[int]:
    return [j - i for i in range(len(eta)) for j in range(eta[i])]


def syt_count(eta: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``eta`` (hook length formula)."""
    eta = as_partition(eta)
    count, rem = divmod(factorial(sum(eta)), prod(hook_lengths(eta)))
    assert rem == 0
    return count


def ssyt_count(eta: Sequence[int], n: int) -> int:
    """Number of semistandard tableaux of shape ``eta`` with entries in ``1..n``.

    Uses the hook-content formula; equals the dimension of the irreducible
    polynomial GL_n module of highest weight ``eta``.
    """
    eta = as_partition(eta)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if len(eta) > n:
        return 0
    count, rem = divmod(prod(n + c for c in contents(eta)), prod(hook_lengths(eta)))
    assert rem == 0
    return count


def multinomial(eta: Sequence[int], n: int) -> int:
    """``n! / prod(eta_i!)``."""
    if sum(eta) != n:
        raise ValueError(f"partition {tuple(eta)} does not have weight {n}")
    return factorial(n) // prod(factorial(p) for p in eta)


def pad(eta: Sequence[int], length: int) -> Partition:
    if len(eta) > length:
        raise ValueError(f"{tuple(eta)} has more than {length} parts")
    return tuple(eta) + (0,) * (length - len(eta))
