import cmath
import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from gengraph.numtheory import (
    divisors,
    euler_phi,
    factorize,
    is_perfect_square,
    is_power_of_two,
    is_prime,
    least_prime_factor,
    mobius,
    num_prime_factors,
    radical,
    ramanujan_sum,
    ramanujan_sum_divisor,
    squarefree_decomposition,
    units,
)

positive = st.integers(min_value=1, max_value=10**6)


@given(positive)
def test_factorize_matches_sympy(n):
    assert dict(factorize(n).factors) == sympy.factorint(n)


@given(positive)
def test_phi_mobius_divisors_match_sympy(n):
    assert euler_phi(n) == sympy.totient(n)
    assert mobius(n) == sympy.mobius(n)
    assert divisors(n) == sympy.divisors(n)


@given(positive)
def test_radical_is_product_of_distinct_primes(n):
    assert radical(n).n0 == math.prod(sympy.primefactors(n))
    assert num_prime_factors(n) == len(sympy.primefactors(n))


@given(st.integers(2, 10**6))
def test_least_prime_factor_and_primality(n):
    assert least_prime_factor(n) == min(sympy.primefactors(n))
    assert is_prime(n) == sympy.isprime(n)


def test_units_small():
    assert units(9) == [1, 2, 4, 5, 7, 8]
    assert units(1) == [0]
    assert len(units(45)) == euler_phi(45) == 24


def _ramanujan_by_roots(q, j):
    total = sum(cmath.exp(2j * cmath.pi * a * j / q) for a in range(1, q + 1) if math.gcd(a, q) == 1)
    return round(total.real)


@given(st.integers(1, 60), st.integers(-200, 200))
def test_ramanujan_three_ways(q, j):
    closed = ramanujan_sum(q, j)
    assert closed == ramanujan_sum_divisor(q, j) == _ramanujan_by_roots(q, j)


@given(st.integers(0, 10**7))
def test_squarefree_decomposition(m):
    c, d = squarefree_decomposition(m)
    assert c * c * d == m
    if m:
        assert mobius(d) != 0


@pytest.mark.parametrize("n,expected", [(1, True), (2, True), (96, False), (1024, True)])
def test_power_of_two(n, expected):
    assert is_power_of_two(n) is expected


def test_perfect_square():
    assert is_perfect_square(1024) and not is_perfect_square(4896)


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        divisors(-3)
