"""Arithmetic in the cyclic group Z_M and the part structure of K_{m x n}.

Vertices of K_{m x n} are the residues 0..M-1 with M = m*n; the parts are the
cosets of the subgroup of order n generated by m, so a vertex v lies in part
v mod m.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

MAX_ORDER = 2**31


@dataclass(frozen=True)
class Params:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 2 or self.n < 1:
            raise ValueError(f"need m >= 2 and n >= 1, got m={self.m}, n={self.n}")
        if self.m * self.n > MAX_ORDER:
            raise ValueError(f"group order {self.m * self.n} exceeds {MAX_ORDER}")

    @property
    def M(self) -> int:
        return self.m * self.n

    @property
    def num_edges(self) -> int:
        return self.m * (self.m - 1) * self.n * self.n // 2

    def __str__(self) -> str:
        return f"K_{{{self.m}x{self.n}}}"


def order_of(x: int, M: int) -> int:
    """Order of x in the additive group Z_M."""
    if M < 1:
        raise ValueError("M must be positive")
    return M // gcd(x % M, M)


def two_adic_valuation(x: int) -> int:
    """Largest e with 2**e dividing x."""
    if x == 0:
        raise ValueError("2-adic valuation of 0 is undefined")
    x = abs(x)
    return (x & -x).bit_length() - 1


def part_of(v: int, params: Params) -> int:
    return v % params.m


def divisors(x: int) -> list[int]:
    small, large = [], []
    for k in range(1, isqrt(x) + 1):
        if x % k == 0:
            small.append(k)
            if k != x // k:
                large.append(x // k)
    return small + large[::-1]


def prime_factors(x: int) -> list[int]:
    out, p = [], 2
    while p * p <= x:
        if x % p == 0:
            out.append(p)
            while x % p == 0:
                x //= p
        p += 1
    if x > 1:
        out.append(x)
    return out


def odd_prime_power_base(x: int) -> int | None:
    """Return p if x = p**a for an odd prime p and a >= 1, else None."""
    if x < 3 or x % 2 == 0:
        return None
    p = None
    for k in range(3, isqrt(x) + 1, 2):
        if x % k == 0:
            p = k
            break
    if p is None:
        return x
    while x % p == 0:
        x //= p
    return p if x == 1 else None


def is_twice_odd_prime_power(v: int) -> bool:
    """True iff v = 2 * p**a with p an odd prime and a >= 1."""
    return v % 2 == 0 and odd_prime_power_base(v // 2) is not None
