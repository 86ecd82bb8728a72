"""Exact arithmetic functions: factorization, divisors, totient, Moebius,
radical, Ramanujan sums and unity sums.

Everything here works on plain Python integers; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod

from .errors import SpectrumOverflow

INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def k(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Prime factorization by trial division (fine for n up to ~1e10)."""
    _check_positive(n)
    factors = []
    m = n
    for p in (2, 3):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            factors.append((p, e))
    p = 5
    while p * p <= m:
        for q in (p, p + 2):
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            if e:
                factors.append((q, e))
        p += 6
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n).factors == ((n, 1),)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n in ascending order."""
    _check_positive(n)
    small, large = [], []
    for i in range(1, isqrt(n) + 1):
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
    return tuple(small + large[::-1])


def proper_divisors(n: int) -> tuple[int, ...]:
    return divisors(n)[:-1]


def euler_phi(n: int) -> int:
    _check_positive(n)
    result = n
    for p, _ in factorize(n).factors:
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    _check_positive(n)
    f = factorize(n)
    if not f.is_squarefree():
        return 0
    return -1 if f.k % 2 else 1


def radical(n: int) -> int:
    """Largest square-free divisor of n, i.e. the product of its distinct primes."""
    _check_positive(n)
    return prod(factorize(n).primes)


@lru_cache(maxsize=1 << 16)
def ramanujan_sum(r: int, n: int) -> int:
    """c(r, n) from the Moebius/totient closed form.

    Depends on r only through gcd(r, n); r = 0 gives gcd n and hence phi(n).
    """
    _check_positive(n)
    q = n // gcd(r, n)
    mu = mobius(q)
    if mu == 0:
        return 0
    return mu * (euler_phi(n) // euler_phi(q))


def unity_sum(r: int, n: int) -> int:
    """Sum of omega_n^(i*r) over i = 0..n-1: n when n divides r, else 0."""
    _check_positive(n)
    return n if r % n == 0 else 0


def check_int64(value: int) -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise SpectrumOverflow(f"value {value} does not fit in a signed 64-bit integer")
    return value
