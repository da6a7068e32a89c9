"""Existence and non-existence predicates for cyclic HCS of K_{m x n}."""

from __future__ import annotations

from dataclasses import dataclass

from .zmod import Params, is_twice_odd_prime_power, two_adic_valuation


@dataclass(frozen=True)
class Verdict:
    exists: bool
    reason: str

    def __bool__(self) -> bool:
        return self.exists


def degree_parity_ok(params: Params) -> bool:
    return (params.m - 1) * params.n % 2 == 0


def ell_cycle_obstruction(m: int, n: int, ell: int) -> str | None:
    """Tag of the forbidden pattern met by a cyclic ell-cycle system, if any.

    Only meaningful when ell divides the edge count m(m-1)n^2/2; the caller
    is responsible for passing an admissible length.
    """
    if n % 2:
        raise ValueError("the obstruction battery assumes n even")
    v_ell = two_adic_valuation(ell)
    v_n = two_adic_valuation(n)
    if m % 4 == 0 and v_ell == two_adic_valuation(m) + 2 * v_n - 1:
        return "a"
    if m % 4 == 1 and v_ell == two_adic_valuation(m - 1) + 2 * v_n - 1:
        return "b"
    if m % 4 in (2, 3) and n % 4 == 2 and ell % 4 != 0:
        return "c"
    if m % 4 in (2, 3) and n % 4 == 0 and v_ell == 2 * v_n:
        return "d"
    return None


def cyclic_hcs_obstructed(params: Params) -> bool:
    return params.m % 4 in (0, 3) and params.n % 4 == 2


def exists_cyclic_symmetric_even_m(params: Params) -> Verdict:
    m, n = params.m, params.n
    if m % 2:
        raise ValueError("only an even number of parts is covered")
    if n % 2:
        return Verdict(False, "n odd: vertex degree (m-1)n is odd")
    if n % 4 == 2 and m % 4 != 2:
        return Verdict(False, f"m≡{m % 4} (mod 4) and n≡2 (mod 4)")
    if n % 4 == 0:
        return Verdict(True, "n≡0 (mod 4)")
    return Verdict(True, "m≡2 (mod 4) and n≡2 (mod 4)")


def jm_condition(v: int) -> bool:
    """Cyclic and symmetric HCS of K_v - I exists (v even, v >= 4)."""
    return v % 8 in (2, 4) and not is_twice_odd_prime_power(v)


def schroeder_condition(m: int, n: int) -> bool:
    """phi_n-symmetric (not necessarily cyclic) HCS of K_{m x n} exists."""
    return n % 4 != 2 or m % 4 in (1, 2)


def odd_orbit_parity_target(params: Params) -> int:
    m, n = params.m, params.n
    if n % 2:
        raise ValueError("parity law needs n even")
    return (m * (m - 1) * n * n // 8) % 2
