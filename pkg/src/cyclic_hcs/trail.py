"""Closed trails [c_0, ..., c_{r-1}]_x and the difference lists they carry.

A closed trail is the concatenation of the base path translated by
0, x, 2x, ..., (d-1)x where d is the order of the stride x.  Cycles are plain
tuples of residues; two cycles are the same object when their undirected edge
sets agree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .zmod import Params, divisors, order_of, prime_factors

Cycle = tuple[int, ...]

# failure codes for is_valid_hamiltonian_cycle
LENGTH = "length"
COSETS = "cosets"
PART_EDGE = "part_edge"
PERIOD = "period"


@dataclass(frozen=True)
class ClosedTrail:
    base: tuple[int, ...]
    stride: int

    def __post_init__(self) -> None:
        if not self.base:
            raise ValueError("a closed trail needs at least one base vertex")
        object.__setattr__(self, "base", tuple(int(c) for c in self.base))
        object.__setattr__(self, "stride", int(self.stride))

    @property
    def r(self) -> int:
        return len(self.base)

    def reduced(self, M: int) -> "ClosedTrail":
        return ClosedTrail(tuple(c % M for c in self.base), self.stride % M)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.base)) + f"]_{self.stride}"


class DifferenceMultiset(Counter):
    """Multiset of nonzero residues of Z_M; +d and -d are separate keys."""

    @classmethod
    def signed(cls, values: Iterable[int], M: int) -> "DifferenceMultiset":
        out = cls()
        for v in values:
            out[v % M] += 1
            out[-v % M] += 1
        return out

    def representatives(self, M: int) -> list[int]:
        """Sorted list of min(d, M-d), one per +-pair (with multiplicity)."""
        reps = []
        for d, k in self.items():
            if d <= M - d:
                reps.extend([d] * (k if 2 * d != M else k // 2))
        return sorted(reps)


class TrailCheck(NamedTuple):
    ok: bool
    failures: tuple[str, ...]
    detail: str

    def __bool__(self) -> bool:
        return self.ok


def expand(trail: ClosedTrail, params: Params) -> Cycle:
    M = params.M
    d = order_of(trail.stride, M)
    return tuple((c + k * trail.stride) % M for k in range(d) for c in trail.base)


def is_valid_hamiltonian_cycle(trail: ClosedTrail, params: Params) -> TrailCheck:
    """Check that the trail expands to a hamiltonian cycle of K_{m x n}.

    All failing clauses are reported: LENGTH when d*r != M (or M < 3), COSETS
    when two base entries share a coset of <x>, PART_EDGE when some step stays
    inside a part.  A trail that passes those but whose cycle is fixed by more
    than <x> (e.g. [0,1]_2 in Z_4) fails with PERIOD: its partial differences
    would count each difference more than once.
    """
    M, m = params.M, params.m
    base, x = trail.base, trail.stride
    failures, notes = [], []
    d = order_of(x, M)
    if d * trail.r != M:
        failures.append(LENGTH)
        notes.append(f"d*r = {d}*{trail.r} != {M}")
    elif M < 3:
        failures.append(LENGTH)
        notes.append("a cycle needs at least 3 vertices")
    g = M // d  # index of <x>; cosets of <x> are the classes mod g
    if len({c % g for c in base}) != len(base):
        failures.append(COSETS)
        notes.append(f"base entries repeat a coset of <{x % M}>")
    for u, v in _period_edges(base, x):
        if (v - u) % m == 0:
            failures.append(PART_EDGE)
            notes.append(f"edge {u % M}-{v % M} lies inside part {u % m}")
            break
    if not failures and _has_extra_symmetry(trail, params):
        failures.append(PERIOD)
        notes.append(f"cycle is fixed by more than <{x % M}>")
    return TrailCheck(not failures, tuple(failures), "; ".join(notes))


def _has_extra_symmetry(trail: ClosedTrail, params: Params) -> bool:
    """True iff some shift beyond <x> maps the (valid) trail's cycle to itself.

    A stabilizer strictly above <x> = <r> contains r/p for a prime p | r, and
    since the cycle is already <x>-invariant it suffices to move the r edges
    of one period.  Vertex c_j + k*x sits at position j + k*r.
    """
    M, r = params.M, trail.r
    d = M // r
    base = [c % M for c in trail.base]
    index = {c % r: j for j, c in enumerate(base)}
    inv = pow((trail.stride % M) // r, -1, d) if d > 1 else 0

    def position(v: int) -> int:
        j = index[v % r]
        k = ((v - base[j]) % M // r * inv) % d
        return j + k * r

    edges = _period_edges(base, trail.stride)
    for p in prime_factors(r):
        g = r // p
        if all((position((u + g) % M) - position((v + g) % M)) % M in (1, M - 1)
               for u, v in edges):
            return True
    return False


def _period_edges(base: Sequence[int], x: int) -> list[tuple[int, int]]:
    edges = list(zip(base, base[1:]))
    edges.append((base[-1], base[0] + x))
    return edges


def partial_differences(trail: ClosedTrail, params: Params) -> DifferenceMultiset:
    check = is_valid_hamiltonian_cycle(trail, params)
    if not check:
        raise ValueError(f"invalid trail {trail}: {check.detail}")
    return DifferenceMultiset.signed(
        (v - u for u, v in _period_edges(trail.base, trail.stride)), params.M
    )


def list_of_differences(cycle: Sequence[int], params: Params) -> DifferenceMultiset:
    L = len(cycle)
    return DifferenceMultiset.signed(
        (cycle[(h + 1) % L] - cycle[h] for h in range(L)), params.M
    )


def edge_set(cycle: Sequence[int], M: int) -> frozenset[tuple[int, int]]:
    L = len(cycle)
    return frozenset(
        (min(a, b), max(a, b))
        for a, b in ((cycle[h] % M, cycle[(h + 1) % L] % M) for h in range(L))
    )


def translate(cycle: Sequence[int], g: int, M: int) -> Cycle:
    return tuple((v + g) % M for v in cycle)


def same_cycle(c1: Sequence[int], c2: Sequence[int], M: int) -> bool:
    return edge_set(c1, M) == edge_set(c2, M)


def stabilizer_order(cycle: Sequence[int], params: Params) -> int:
    # Stab is a subgroup of Z_M, so the smallest fixing divisor g generates it.
    M = params.M
    edges = edge_set(cycle, M)
    for g in divisors(M):
        if edge_set(translate(cycle, g, M), M) == edges:
            return M // g
    raise AssertionError("unreachable: translation by M fixes every cycle")


def orbit_length(trail: ClosedTrail, params: Params) -> int:
    return params.M // order_of(trail.stride, params.M)


def orbit(trail: ClosedTrail, params: Params) -> list[Cycle]:
    check = is_valid_hamiltonian_cycle(trail, params)
    if not check:
        raise ValueError(f"invalid trail {trail}: {check.detail}")
    cycle = expand(trail, params)
    return [translate(cycle, i, params.M) for i in range(orbit_length(trail, params))]


def sigma(trail: ClosedTrail, params: Params) -> int:
    """Telescoped sum c_0 - c_r over one period, i.e. -x mod M."""
    return -trail.stride % params.M


def is_phi_symmetric(trail: ClosedTrail, params: Params) -> bool:
    """Fixed by v -> v + m iff the orbit length divides m."""
    return params.m % orbit_length(trail, params) == 0
