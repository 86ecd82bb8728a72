"""Closed-form distance spectra and energies of unitary Cayley graphs
X_n = ICG_n(1), plus two families of distance-equienergetic pairs.

X_n falls into one of four cases by the shape of n: prime, power of two,
odd composite, or even with an odd prime divisor. Each case has its own
spectrum template and energy formula.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import (
    ClosedFormMismatch,
    ModulusTooSmall,
    NotPrime,
    OddModulus,
    OrderViolation,
    PTooSmall,
    SNotReduced,
)
from .icg_core import IcgSpec, merge_table
from .numtheory import euler_phi, factorize, is_prime, mobius, radical, ramanujan_sum


class UcgKind(enum.Enum):
    PRIME = "Prime"
    POWER_OF_TWO = "PowerOfTwo"
    ODD_COMPOSITE = "OddComposite"
    EVEN_WITH_ODD_PRIME = "EvenWithOddPrime"


@dataclass(frozen=True)
class UcgCase:
    n: int
    kind: UcgKind
    phi: int
    k: int  # number of distinct primes
    m: int  # radical
    primes: tuple[int, ...]


def _check_modulus(n: int) -> None:
    if n <= 1:
        raise ModulusTooSmall(f"modulus must exceed 1, got {n}")


def classify_ucg(n: int) -> UcgCase:
    _check_modulus(n)
    f = factorize(n)
    if f.factors == ((n, 1),):
        kind = UcgKind.PRIME
    elif f.primes == (2,):
        kind = UcgKind.POWER_OF_TWO
    elif n % 2:
        kind = UcgKind.ODD_COMPOSITE
    else:
        kind = UcgKind.EVEN_WITH_ODD_PRIME
    return UcgCase(n, kind, euler_phi(n), f.k, radical(n), f.primes)


def _two_minus_p_product(primes) -> int:
    return prod(2 - p for p in primes)


def _odd_squarefree_correction(case: UcgCase) -> int:
    """Extra mass missed by the odd-composite closed forms.

    Their derivation takes |2 - phi(n)/phi(l)| = phi(n)/phi(l) - 2 for every
    square-free l | n with mu(l) = -1. For odd n that only breaks at l = n,
    which exists exactly when mu(n) = -1; the phi(n) residues with
    gcd(i, n) = 1 then contribute 1 each instead of -1.
    """
    return 2 * case.phi if mobius(case.n) == -1 else 0


def abs_sum_closed_form(n: int, shift: int, squarefree_correction: bool = True) -> int:
    """Closed form of sum_i |c(i, n) + shift|.

    shift=2 is meant for odd composite n (sum over i = 1..n), shift=1 for
    even n with an odd prime divisor (sum over i = 0..n-1; the two ranges
    give the same value since c(n, n) = c(0, n)).

    With ``squarefree_correction=False`` the shift=2 form omits the term for
    square-free n with an odd number of prime factors, and is then wrong
    for n such as 105.
    """
    case = classify_ucg(n)
    k, m, phi = case.k, case.m, case.phi
    tail = _two_minus_p_product(case.primes)
    if shift == 2:
        value = 2 * n - 2 * m + phi * 2**k + 2 * tail
        if squarefree_correction:
            value += _odd_squarefree_correction(case)
        return value
    if shift == 1:
        return n - m + phi * 2**k + tail
    raise ValueError(f"shift must be 1 or 2, got {shift}")


def eigen_abs_sum(n: int, shift: int) -> int:
    """Direct sum of |c(i, n) + shift| over a full residue system, checked
    against the (corrected) closed form."""
    _check_modulus(n)
    if shift not in (1, 2):
        raise ValueError(f"shift must be 1 or 2, got {shift}")
    direct = sum(abs(ramanujan_sum(i, n) + shift) for i in range(n))
    closed = abs_sum_closed_form(n, shift)
    if direct != closed:
        raise ClosedFormMismatch(
            f"sum |c(i,{n}) + {shift}| = {direct} but closed form gives {closed}"
        )
    return direct


def ucg_distance_energy(n: int, squarefree_correction: bool = True) -> int:
    """DE(X_n) by the case formula.

    ``squarefree_correction`` only matters in the odd composite case; see
    ``abs_sum_closed_form``.
    """
    case = classify_ucg(n)
    phi, k, m = case.phi, case.k, case.m
    if case.kind is UcgKind.PRIME:
        return 2 * (n - 1)
    if case.kind is UcgKind.POWER_OF_TWO:
        return 4 * (n - 2)
    if case.kind is UcgKind.ODD_COMPOSITE:
        value = 2 * (2 * n + phi * (2 ** (k - 1) - 1) - m - 2 + _two_minus_p_product(case.primes))
        if squarefree_correction:
            value += _odd_squarefree_correction(case)
        return value
    half = n // 2
    mu0 = 5 * half - 2 * (phi + 1)
    return (
        2 * n
        - 2 * m
        + phi * 2 ** (k + 1)
        - (2 + 2 * phi)
        - (2 * phi - 2)
        + mu0
        + abs(2 * (phi - 1) - half)
    )


def ucg_distance_spectrum(n: int) -> tuple[tuple[int, int], ...]:
    """Distance spectrum of X_n as a descending (value, multiplicity) table."""
    case = classify_ucg(n)
    phi = case.phi
    if case.kind is UcgKind.PRIME:
        return merge_table([(n - 1, 1), (-1, n - 1)])
    if case.kind is UcgKind.POWER_OF_TWO:
        return merge_table([(3 * n // 2 - 2, 1), (n // 2 - 2, 1), (-2, n - 2)])
    if case.kind is UcgKind.ODD_COMPOSITE:
        rest = [(-2 - ramanujan_sum(r, n), 1) for r in range(1, n)]
        return merge_table([(2 * (n - 1) - phi, 1)] + rest)
    half = n // 2
    table = [(5 * half - 2 * (phi + 1), 1), (2 * (phi - 1) - half, 1)]
    table += [(-2 - 2 * ramanujan_sum(r, n), 1) for r in range(1, n) if r != half]
    return merge_table(table)


def common_neighbors(n: int, s: int) -> int:
    """Common neighbours of vertices a, b of X_n with a - b = s (mod n)."""
    _check_modulus(n)
    if not 1 <= s <= n - 1:
        raise SNotReduced(f"s must lie in 1..{n - 1}, got {s}")
    value = Fraction(n)
    for p in factorize(n).primes:
        value *= 1 - Fraction(1 if s % p == 0 else 2, p)
    assert value.denominator == 1
    return int(value)


def nullity(n: int) -> int:
    """Multiplicity of 0 in the adjacency spectrum of X_n."""
    _check_modulus(n)
    return n - radical(n)


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def lehmer_check(n: int) -> Sign:
    """Sign of 2(phi(n) - 1) - n/2, the distance eigenvalue of X_n at r = n/2.

    Zero exactly when n = 4m with m odd and 2 phi(m) = m + 1; m = 2^(2^j) - 1
    (a product of the first Fermat primes) gives n = 12, 60, 1020, ...
    """
    if n % 2:
        raise OddModulus(f"n must be even, got {n}")
    _check_modulus(n)
    value = 2 * (euler_phi(n) - 1) - n // 2
    return Sign((value > 0) - (value < 0))


@dataclass(frozen=True)
class FamilyPair:
    left: IcgSpec
    right: IcgSpec
    predicted_energy: int
    predicted_left: tuple[tuple[int, int], ...]
    predicted_right: tuple[tuple[int, int], ...]


def _require_prime(*ps: int) -> None:
    for p in ps:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")


def pq_one_p_spectrum(p: int, q: int) -> tuple[tuple[int, int], ...]:
    """Distance spectrum of ICG_pq(1, p) for distinct odd primes p, q."""
    return merge_table([(p * q + p - 2, 1), (p - 2, q - 1), (-2, p * q - q)])


def family_3p(p: int) -> FamilyPair:
    """The pair (ICG_3p(1), ICG_3p(1, p)), equal energy 12(p - 1)."""
    _require_prime(p)
    if p <= 3:
        raise PTooSmall(f"p must exceed 3, got {p}")
    n = 3 * p
    return FamilyPair(
        left=IcgSpec(n, (1,)),
        right=IcgSpec(n, (1, p)),
        predicted_energy=12 * (p - 1),
        predicted_left=ucg_distance_spectrum(n),
        predicted_right=pq_one_p_spectrum(p, 3),
    )


def two_pq_eigenvalue(p: int, q: int, r: int) -> int:
    """Distance eigenvalue of ICG_2pq(1, p) at index r, read from which of
    2, p, q divide r."""
    key = (r % 2 == 0, r % p == 0, r % q == 0)
    return {
        (False, False, False): -2,
        (True, False, False): -2,
        (False, True, False): -2 * p - 2,
        (True, True, False): 2 * p - 2,
        (False, False, True): -2,
        (True, False, True): -2,
        (False, True, True): p * q - 2 * p - 2,
        (True, True, True): 3 * p * q + 2 * p - 2,
    }[key]


def two_pq_spectrum(p: int, q: int) -> tuple[tuple[int, int], ...]:
    """Distance spectrum of ICG_2pq(1, p) for distinct odd primes p, q."""
    return merge_table(
        [
            (3 * p * q + 2 * p - 2, 1),
            (p * q - 2 * p - 2, 1),
            (-2 * p - 2, q - 1),
            (2 * p - 2, q - 1),
            (-2, 2 * p * q - 2 * q),
        ]
    )


def family_2pq(p: int, q: int) -> FamilyPair:
    """The pair (ICG_2pq(1, p), ICG_2pq(1, q)), equal energy 12pq - 4p - 4q - 4."""
    _require_prime(p, q)
    if not p > q > 3:
        raise OrderViolation(f"need p > q > 3, got p={p}, q={q}")
    n = 2 * p * q
    return FamilyPair(
        left=IcgSpec(n, (1, p)),
        right=IcgSpec(n, (1, q)),
        predicted_energy=12 * p * q - 4 * p - 4 * q - 4,
        predicted_left=two_pq_spectrum(p, q),
        predicted_right=two_pq_spectrum(q, p),
    )
