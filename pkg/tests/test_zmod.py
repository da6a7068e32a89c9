import pytest
from hypothesis import given
from hypothesis import strategies as st
from math import gcd

from cyclic_hcs.zmod import (
    Params,
    divisors,
    is_twice_odd_prime_power,
    order_of,
    part_of,
    two_adic_valuation,
)


def order_by_addition(x, M):
    k, acc = 1, x % M
    while acc != 0:
        acc = (acc + x) % M
        k += 1
    return k


def factorize(v):
    out, p = {}, 2
    while p * p <= v:
        while v % p == 0:
            out[p] = out.get(p, 0) + 1
            v //= p
        p += 1
    if v > 1:
        out[v] = out.get(v, 0) + 1
    return out


@pytest.mark.parametrize("x, M, expected", [(10, 60, 6), (0, 60, 1), (17, 60, 60)])
def test_order_of(x, M, expected):
    assert order_of(x, M) == expected
    assert order_by_addition(x, M) == expected


@given(st.integers(1, 500), st.integers(0, 2000))
def test_order_is_minimal_annihilator(M, x):
    k = order_of(x, M)
    assert k * gcd(x, M) == M
    assert k * x % M == 0
    assert all(j * x % M for j in range(1, k))


@pytest.mark.parametrize("x, expected", [(8, 3), (12, 2), (7, 0)])
def test_two_adic_valuation(x, expected):
    assert two_adic_valuation(x) == expected


def test_two_adic_valuation_exhaustive():
    for e in range(21):
        for odd in range(1, 100, 2):
            assert two_adic_valuation(2**e * odd) == e


def test_two_adic_valuation_rejects_zero():
    with pytest.raises(ValueError):
        two_adic_valuation(0)


@pytest.mark.parametrize("v, m, n, expected", [(19, 10, 6, 9), (0, 7, 3, 0), (14, 2, 14, 0)])
def test_part_of(v, m, n, expected):
    assert part_of(v, Params(m, n)) == expected


@given(st.integers(2, 12), st.integers(1, 12), st.data())
def test_same_part_iff_difference_in_subgroup(m, n, data):
    p = Params(m, n)
    v = data.draw(st.integers(0, p.M - 1))
    w = data.draw(st.integers(0, p.M - 1))
    assert (part_of(v, p) == part_of(w, p)) == ((v - w) % m == 0)


@pytest.mark.parametrize("v, expected", [(18, True), (12, False), (4, False)])
def test_is_twice_odd_prime_power(v, expected):
    assert is_twice_odd_prime_power(v) is expected


def test_is_twice_odd_prime_power_against_factorization():
    for v in range(4, 2000, 2):
        f = factorize(v // 2)
        expected = len(f) == 1 and 2 not in f
        assert is_twice_odd_prime_power(v) == expected, v


def test_divisors():
    assert divisors(60) == [1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60]
    assert divisors(1) == [1]


def test_params_validation():
    assert Params(10, 6).M == 60
    assert Params(10, 6).num_edges == 1620
    with pytest.raises(ValueError):
        Params(1, 4)
    with pytest.raises(ValueError):
        Params(2, 0)
    with pytest.raises(ValueError):
        Params(2**16, 2**16)
