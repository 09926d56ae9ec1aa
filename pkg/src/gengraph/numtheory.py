"""Exact elementary number theory on Python integers."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, prod


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __post_init__(self) -> None:
        assert prod(p**e for p, e in self.factors) == self.n


@dataclass(frozen=True)
class RadicalPair:
    n: int
    n0: int


def factorize(n: int) -> Factorization:
    """Trial-division factorization, primes ascending."""
    _check_positive(n)
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n).factors:
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    fac = factorize(n).factors
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def radical(n: int) -> RadicalPair:
    return RadicalPair(n, prod(factorize(n).primes))


def num_prime_factors(n: int) -> int:
    """Number of distinct primes dividing n."""
    return len(factorize(n).factors)


def least_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError(f"{n} has no prime factor")
    return factorize(n).factors[0][0]


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n).factors == ((n, 1),)


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def divisors(n: int) -> list[int]:
    _check_positive(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def units(n: int) -> list[int]:
    """The unit group U(n) as residues in [0, n)."""
    _check_positive(n)
    return [a for a in range(n) if gcd(a, n) == 1]


def ramanujan_sum(q: int, j: int) -> int:
    """c_q(j) through the Mobius closed form mu(d) phi(q) / phi(d), d = q / gcd(q, j).

    Negative and large j are reduced mod q, so c_q is q-periodic.
    """
    _check_positive(q)
    d = q // gcd(q, j % q)
    return mobius(d) * (euler_phi(q) // euler_phi(d))


def ramanujan_sum_divisor(q: int, j: int) -> int:
    """c_q(j) as sum over d | gcd(q, j) of d * mu(q / d); independent of the closed form."""
    _check_positive(q)
    g = gcd(q, j % q)
    return sum(d * mobius(q // d) for d in divisors(g))


def is_perfect_square(m: int) -> bool:
    return m >= 0 and isqrt(m) ** 2 == m


def squarefree_decomposition(m: int) -> tuple[int, int]:
    """Split m >= 0 as c**2 * D with D square-free; returns (c, D). m = 0 gives (0, 0)."""
    if m < 0:
        raise ValueError("expected a non-negative integer")
    if m == 0:
        return 0, 0
    c, D = 1, 1
    for p, e in factorize(m).factors:
        c *= p ** (e // 2)
        if e % 2:
            D *= p
    return c, D
