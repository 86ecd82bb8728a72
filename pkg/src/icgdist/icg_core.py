"""Integral circulant graphs ICG_n(D): construction, validation and the
adjacency spectrum.

Vertices are the residues 0..n-1 and a ~ b iff gcd(a - b, n) lies in D.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterable

import numpy as np

from .errors import (
    AsymmetricSymbol,
    CapExceeded,
    EmptyDivisorSet,
    ImproperDivisor,
    ModulusTooSmall,
    NonDivisor,
)
from .numtheory import check_int64, euler_phi, proper_divisors, ramanujan_sum

DEFAULT_ORACLE_CAP = 256


@dataclass(frozen=True)
class IcgSpec:
    """The pair (n, D). Construction validates and normalizes D."""

    n: int
    divisors: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if n <= 1:
            raise ModulusTooSmall(f"modulus must exceed 1, got {n}")
        ds = sorted(set(self.divisors))
        if not ds:
            raise EmptyDivisorSet("divisor set is empty")
        for d in ds:
            if d <= 0 or d == n:
                raise ImproperDivisor(f"{d} is not a proper positive divisor of {n}")
            if n % d:
                raise NonDivisor(f"{d} does not divide {n}")
        object.__setattr__(self, "divisors", tuple(ds))

    def __str__(self):
        return f"ICG_{self.n}({','.join(map(str, self.divisors))})"


def validate(n: int, divisors: Iterable[int]) -> IcgSpec:
    return IcgSpec(n, tuple(divisors))


@dataclass(frozen=True)
class GcdClass:
    divisor: int
    members: frozenset[int]


def _check_class_divisor(n: int, d: int) -> None:
    if n <= 1:
        raise ModulusTooSmall(f"modulus must exceed 1, got {n}")
    if d <= 0 or d >= n:
        raise ImproperDivisor(f"{d} is not a proper positive divisor of {n}")
    if n % d:
        raise NonDivisor(f"{d} does not divide {n}")


def gcd_class(n: int, d: int) -> GcdClass:
    """G_n(d) = {k : gcd(k, n) = d, 1 <= k < n}, built as d * (units mod n/d)."""
    _check_class_divisor(n, d)
    m = n // d
    return GcdClass(d, frozenset(d * u for u in range(1, m) if gcd(u, m) == 1))


def symbol_set(spec: IcgSpec) -> frozenset[int]:
    out: set[int] = set()
    for d in spec.divisors:
        out |= gcd_class(spec.n, d).members
    return frozenset(out)


def degree(spec: IcgSpec) -> int:
    return sum(euler_phi(spec.n // d) for d in spec.divisors)


def is_connected(spec: IcgSpec) -> bool:
    return reduce(gcd, spec.divisors) == 1


@dataclass(frozen=True)
class IndexedSpectrum:
    """Integer eigenvalues indexed by r = 0..n-1.

    ``multiset`` lists (value, multiplicity) pairs in descending value order.
    """

    values: tuple[int, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, r):
        return self.values[r]

    @cached_property
    def multiset(self) -> tuple[tuple[int, int], ...]:
        return to_multiset(self.values)

    @property
    def energy(self) -> int:
        return sum(abs(v) for v in self.values)

    def count(self, value: int) -> int:
        return self.values.count(value)


def to_multiset(values: Iterable[int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(Counter(values).items(), key=lambda vm: -vm[0]))


def merge_table(table: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Normalize a (value, multiplicity) table: merge repeats, drop zero
    multiplicities, sort descending."""
    acc: Counter[int] = Counter()
    for value, mult in table:
        acc[value] += mult
    return tuple(sorted(((v, m) for v, m in acc.items() if m), key=lambda vm: -vm[0]))


def spectrum_from_divisor_weights(n: int, weights: dict[int, int]) -> IndexedSpectrum:
    """Eigenvalues sum_d w_d * c(r, n/d) of the circulant whose first-row
    entry at j is w_{gcd(j, n)}.

    The value at r depends only on gcd(r, n), so each divisor class is
    evaluated once and broadcast.
    """
    by_gcd = {}
    values = []
    for r in range(n):
        g = gcd(r, n)
        if g not in by_gcd:
            total = sum(w * ramanujan_sum(g, n // d) for d, w in weights.items() if w)
            by_gcd[g] = check_int64(total)
        values.append(by_gcd[g])
    return IndexedSpectrum(tuple(values))


def adjacency_spectrum(spec: IcgSpec) -> IndexedSpectrum:
    return spectrum_from_divisor_weights(spec.n, {d: 1 for d in spec.divisors})


def adjacency_matrix(spec: IcgSpec, cap: int = DEFAULT_ORACLE_CAP) -> np.ndarray:
    n = spec.n
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the matrix cap {cap}")
    ds = set(spec.divisors)
    row = np.array([1 if j and gcd(j, n) in ds else 0 for j in range(n)], dtype=np.int64)
    return np.stack([np.roll(row, i) for i in range(n)])


def recognize_integral_symbol(n: int, symbols: Iterable[int]) -> tuple[int, ...] | None:
    """Return D with symbols == union of G_n(d) over D, or None if the symbol
    set is not a union of whole gcd classes."""
    if n <= 1:
        raise ModulusTooSmall(f"modulus must exceed 1, got {n}")
    s = set(symbols)
    if any(not 0 < x < n for x in s):
        raise ValueError(f"symbols must lie in 1..{n - 1}")
    if any(n - x not in s for x in s):
        raise AsymmetricSymbol("symbol set is not closed under negation mod n")
    if not s:
        return None
    touched = Counter(gcd(x, n) for x in s)
    for d, count in touched.items():
        if count != euler_phi(n // d):
            return None
    return tuple(sorted(touched))


def all_divisor_sets(n: int, connected_only: bool = True):
    """Yield every nonempty subset of the proper divisors of n as an IcgSpec."""
    pds = proper_divisors(n)
    for mask in range(1, 1 << len(pds)):
        ds = tuple(d for i, d in enumerate(pds) if mask >> i & 1)
        if connected_only and reduce(gcd, ds) != 1:
            continue
        yield IcgSpec(n, ds)
