"""Brute-force cross-checks that share no code path with the formula route.

Adjacency here is read straight off gcd(a - b, n), distances come from a
plain BFS out of every vertex, and spectra are compared through exact
power sums: if tr(M^k) equals sum(m * v**k) for k = 1..n then, by Newton's
identities, M and the predicted multiset have the same characteristic
polynomial. All comparison arithmetic is on Python integers.

The complex-exponential definitions of c(r, n) and of the unity sum are
kept here as well; they only serve to check the exact versions.
"""

from __future__ import annotations

import cmath
from collections import deque
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import CapExceeded, Disconnected, MultiplicityMismatch, SameVertex
from .icg_core import DEFAULT_ORACLE_CAP, IcgSpec

# Plain numpy array of nonnegative integers, shape (n, n).
DenseIntMatrix = np.ndarray


@dataclass(frozen=True)
class VerificationReport:
    matched: bool
    checked_moments: int
    # (order k, trace of M^k, predicted power sum)
    first_mismatch: tuple[int, int, int] | None = None


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the oracle cap {cap}")


def _neighbors(spec: IcgSpec) -> list[list[int]]:
    n, ds = spec.n, set(spec.divisors)
    return [[b for b in range(n) if b != a and gcd(a - b, n) in ds] for a in range(n)]


def full_distance_matrix(spec: IcgSpec, cap: int = DEFAULT_ORACLE_CAP) -> DenseIntMatrix:
    n = spec.n
    _check_cap(n, cap)
    adj = _neighbors(spec)
    out = np.full((n, n), -1, dtype=np.int64)
    for src in range(n):
        row = out[src]
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if row[w] < 0:
                    row[w] = row[u] + 1
                    queue.append(w)
        if (row < 0).any():
            raise Disconnected(f"{spec} is disconnected")
    return out


def verify_circulant(m: DenseIntMatrix) -> bool:
    m = np.asarray(m)
    n = m.shape[0]
    if m.shape != (n, n):
        return False
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return bool((m == m[0][idx]).all())


def power_traces(m: DenseIntMatrix, order: int) -> list[int]:
    """Exact tr(M^k) for k = 1..order.

    Only powers up to ceil(order/2) are formed; the rest use
    tr(A @ B) = sum(A * B.T).
    """
    a = np.asarray(m).astype(object)
    half = (order + 1) // 2
    powers = [None, a]
    for _ in range(2, half + 1):
        powers.append(powers[-1].dot(a))
    traces = []
    for k in range(1, order + 1):
        i = k // 2
        j = k - i
        if i == 0:
            traces.append(int(np.trace(a)))
        else:
            traces.append(int((powers[i] * powers[j].T).sum()))
    return traces


def verify_spectrum_by_moments(
    m: DenseIntMatrix, predicted, cap: int = DEFAULT_ORACLE_CAP
) -> VerificationReport:
    """Compare tr(M^k) with the predicted power sums for k = 1..n."""
    n = np.asarray(m).shape[0]
    _check_cap(n, cap)
    table = [(int(v), int(mult)) for v, mult in predicted]
    total = sum(mult for _, mult in table)
    if total != n:
        raise MultiplicityMismatch(f"multiplicities sum to {total}, expected {n}")
    traces = power_traces(m, n)
    for k, tr in enumerate(traces, start=1):
        expected = sum(mult * v**k for v, mult in table)
        if tr != expected:
            return VerificationReport(False, k, (k, tr, expected))
    return VerificationReport(True, n)


def pairwise_distance_sum(m: DenseIntMatrix) -> int:
    m = np.asarray(m)
    return int(np.triu(m, k=1).astype(object).sum())


def brute_common_neighbors(spec: IcgSpec, a: int, b: int) -> int:
    n = spec.n
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"vertices must lie in 0..{n - 1}")
    if a == b:
        raise SameVertex("common neighbors need two distinct vertices")
    ds = set(spec.divisors)
    return sum(
        1
        for v in range(n)
        if v not in (a, b) and gcd(v - a, n) in ds and gcd(v - b, n) in ds
    )


def ramanujan_sum_complex(r: int, n: int) -> complex:
    """c(r, n) straight from its definition as a sum of roots of unity."""
    return sum(cmath.exp(2j * cmath.pi * a * r / n) for a in range(1, n + 1) if gcd(a, n) == 1)


def unity_sum_complex(r: int, n: int) -> complex:
    return sum(cmath.exp(2j * cmath.pi * i * r / n) for i in range(n))
