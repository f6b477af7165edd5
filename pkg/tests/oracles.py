"""Brute-force reference computations, independent of the library code paths."""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from math import prod

import numpy as np


def partitions_brute(m):
    """Every weakly decreasing tuple summing to m, via compositions."""
    out = set()
    for k in range(1, m + 1):
        for combo in itertools.product(range(1, m + 1), repeat=k):
            if sum(combo) == m:
                out.add(tuple(sorted(combo, reverse=True)))
    return out


def cells(shape):
    return [(i, j) for i, row in enumerate(shape) for j in range(row)]


def is_semistandard(shape, filling):
    for (i, j), v in filling.items():
        if j > 0 and filling[(i, j - 1)] > v:
            return False
        if i > 0 and filling[(i - 1, j)] >= v:
            return False
    return True


def ssyt_brute(shape, n):
    cs = cells(shape)
    return sum(
        1
        for values in itertools.product(range(1, n + 1), repeat=len(cs))
        if is_semistandard(shape, dict(zip(cs, values)))
    )


def syt_brute(shape):
    """Standard tableaux: fillings by a permutation of 1..m that are row and column increasing."""
    cs = cells(shape)
    count = 0
    for values in itertools.permutations(range(1, len(cs) + 1)):
        if is_semistandard(shape, dict(zip(cs, values))):
            count += 1
    return count


def kostka_brute(shape, content):
    cs = cells(shape)
    letters = range(1, len(content) + 1)
    want = Counter({k + 1: c for k, c in enumerate(content) if c})
    count = 0
    for values in itertools.product(letters, repeat=len(cs)):
        if Counter(values) == want and is_semistandard(shape, dict(zip(cs, values))):
            count += 1
    return count


def sign(perm):
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def _poly_mul(p, q):
    out = defaultdict(int)
    for a, x in p.items():
        for b, y in q.items():
            out[tuple(i + j for i, j in zip(a, b))] += x * y
    return out


def character_frobenius(shape, cycle_type):
    """chi_shape(cycle_type) as the coefficient of x^(shape + delta) in a_delta * p_cycle_type.

    Uses exact integer polynomial arithmetic in ``len(shape)`` variables.
    """
    m = sum(shape)
    k = max(len(shape), 1)
    lam = tuple(shape) + (0,) * (k - len(shape))
    delta = tuple(k - 1 - i for i in range(k))
    poly = defaultdict(int)
    for perm in itertools.permutations(range(k)):
        poly[tuple(delta[perm[i]] for i in range(k))] += sign(perm)
    for r in cycle_type:
        power_sum = {tuple(r if i == v else 0 for i in range(k)): 1 for v in range(k)}
        poly = _poly_mul(poly, power_sum)
    assert sum(lam) == m
    return poly.get(tuple(l + d for l, d in zip(lam, delta)), 0)


def permutation_of_type(cycle_type):
    perm, start = [], 0
    for length in cycle_type:
        perm.extend(start + (j + 1) % length for j in range(length))
        start += length
    return perm


def cycles(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        out.append(cyc)
    return out


def induced_by_cosets(eta, cycle_type):
    """Fixed ordered set partitions of type eta: assign whole cycles to blocks of sizes eta_i."""
    lengths = [len(c) for c in cycles(permutation_of_type(cycle_type))]
    count = 0
    for assignment in itertools.product(range(len(eta)), repeat=len(lengths)):
        sizes = [0] * len(eta)
        for block, length in zip(assignment, lengths):
            sizes[block] += length
        count += sizes == list(eta)
    return count


def complete_homogeneous(spec, k):
    if k < 0:
        return 0.0
    if k == 0:
        return 1.0
    return sum(prod(c) for c in itertools.combinations_with_replacement(spec, k))


def schur_jacobi_trudi(shape, spec):
    size = len(shape)
    mat = np.array(
        [[complete_homogeneous(spec, shape[i] - i + j) for j in range(size)] for i in range(size)]
    )
    return float(np.linalg.det(mat))


def schur_monomial(shape, spec):
    """Sum over SSYT of shape with letters 1..n of the monomial x^T."""
    n = len(spec)
    cs = cells(shape)
    total = 0.0
    for values in itertools.product(range(n), repeat=len(cs)):
        if is_semistandard(shape, dict(zip(cs, [v + 1 for v in values]))):
            total += prod(spec[v] for v in values)
    return total


def permanent_naive(a):
    a = np.asarray(a)
    n = a.shape[0]
    return sum(prod(a[i, p[i]] for i in range(n)) for p in itertools.permutations(range(n)))


def immanant_naive(a, char_of_perm, m):
    a = np.asarray(a)
    return sum(
        char_of_perm(p) * prod(a[i, p[i]] for i in range(m))
        for p in itertools.permutations(range(m))
    )


def covers_brute(a, b, parts, dominates):
    """a covers b: a strictly dominates b with nothing strictly between."""
    if a == b or not dominates(a, b):
        return False
    return not any(c not in (a, b) and dominates(a, c) and dominates(c, b) for c in parts)


def phi_brute(a, b, n, x):
    """phi as the permanent of the 2x2 power matrix."""
    return permanent_naive(np.array([[a**x, b**x], [a ** (n - x), b ** (n - x)]]))
