"""Distance-class decomposition and exact distance spectra of ICG_n(D).

The distance matrix of a circulant graph is circulant, and in ICG_n(D) the
distance from 0 to v depends only on gcd(v, n). The distance eigenvalues
are therefore integer combinations of Ramanujan sums:

    mu_r = sum over proper divisors d of  dist(d) * c(r, n/d).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from types import MappingProxyType
from typing import Mapping

from .errors import ClassInconsistency, Disconnected
from .icg_core import (
    IcgSpec,
    IndexedSpectrum,
    is_connected,
    spectrum_from_divisor_weights,
    symbol_set,
)
from .numtheory import proper_divisors


@dataclass(frozen=True)
class DistanceDecomposition:
    spec: IcgSpec
    class_distance: Mapping[int, int]
    diameter: int

    def layers(self) -> dict[int, tuple[int, ...]]:
        """Map each distance p to the divisors at that distance."""
        out: dict[int, list[int]] = {}
        for d, p in sorted(self.class_distance.items()):
            out.setdefault(p, []).append(d)
        return {p: tuple(ds) for p, ds in sorted(out.items())}


@dataclass(frozen=True)
class FirstRow:
    entries: tuple[int, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, j):
        return self.entries[j]


def _require_connected(spec: IcgSpec) -> None:
    if not is_connected(spec):
        raise Disconnected(f"{spec} is disconnected (gcd of divisors is not 1)")


def bfs_from_zero(n: int, symbols) -> list[int | None]:
    """Distances from vertex 0 in the circulant graph G(n, symbols).

    Each BFS layer is the sumset of the previous layer with the symbol set,
    done with n-bit masks: shifting a mask by s adds s to every member.
    """
    full = (1 << n) - 1
    frontier = 1
    seen = 1
    dist: list[int | None] = [None] * n
    dist[0] = 0
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for s in symbols:
            nxt |= ((frontier << s) | (frontier >> (n - s))) & full
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
        v = nxt
        while v:
            low = v & -v
            dist[low.bit_length() - 1] = level
            v ^= low
    return dist


@lru_cache(maxsize=4096)
def distance_classes(spec: IcgSpec) -> DistanceDecomposition:
    _require_connected(spec)
    n = spec.n
    dist = bfs_from_zero(n, sorted(symbol_set(spec)))
    class_distance: dict[int, int] = {}
    for v in range(1, n):
        if dist[v] is None:
            raise Disconnected(f"vertex {v} unreachable in {spec}")
        g = gcd(v, n)
        seen = class_distance.setdefault(g, dist[v])
        if seen != dist[v]:
            raise ClassInconsistency(
                f"{spec}: gcd class {g} has vertices at distances {seen} and {dist[v]}"
            )
    if set(class_distance) != set(proper_divisors(n)):
        raise ClassInconsistency(f"{spec}: classes do not cover all proper divisors")
    return DistanceDecomposition(
        spec, MappingProxyType(class_distance), max(class_distance.values())
    )


def distance_first_row(spec: IcgSpec) -> FirstRow:
    n = spec.n
    cd = distance_classes(spec).class_distance
    return FirstRow((0,) + tuple(cd[gcd(j, n)] for j in range(1, n)))


@lru_cache(maxsize=4096)
def distance_spectrum(spec: IcgSpec) -> IndexedSpectrum:
    return spectrum_from_divisor_weights(spec.n, distance_classes(spec).class_distance)


def distance_energy(spec: IcgSpec) -> int:
    return distance_spectrum(spec).energy


def diameter(spec: IcgSpec) -> int:
    return distance_classes(spec).diameter


def wiener_index(spec: IcgSpec) -> int:
    """Sum of distances over unordered vertex pairs, n * mu_0 / 2."""
    twice = spec.n * distance_spectrum(spec)[0]
    assert twice % 2 == 0
    return twice // 2


def spectral_radius(spec: IcgSpec) -> int:
    spectrum = distance_spectrum(spec)
    mu0 = spectrum[0]
    assert mu0 == max(abs(v) for v in spectrum.values), "mu_0 is not the spectral radius"
    return mu0
