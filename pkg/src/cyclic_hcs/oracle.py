"""Exhaustive search for cyclic HCS base-cycle sets at desk scale.

Every orbit of hamiltonian cycles contains a cycle through 0 that uses the
edge 0 -> delta for any difference delta it carries.  The search therefore
always takes the smallest still uncovered difference delta, and enumerates
the trails [0, delta, c_2, ..., c_{r-1}]_x (or [0]_delta when r = 1) for every
divisor d = M/r, pruning through a residue-indexed occupancy table.  Each
orbit is reached through exactly one representative, so each solution is
produced once.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd

from .constructor import BaseCycleSet
from .trail import ClosedTrail, expand
from .verifier import verify_full
from .zmod import Params, divisors

DEFAULT_CAP = 16


class OracleCapExceeded(ValueError):
    pass


class _BudgetExhausted(Exception):
    pass


@dataclass
class SearchResult:
    solutions: list[BaseCycleSet]
    exhausted: bool
    nodes: int
    budget_hit: bool = False


def oracle_cap() -> int:
    raw = os.environ.get("HCS_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_CAP


def canonical_trail(trail: ClosedTrail, params: Params) -> tuple[tuple[int, ...], int]:
    """Least (base, stride) over all translates, start points and directions."""
    M = params.M
    cyc = expand(trail, params)
    L, r = len(cyc), trail.r
    best = None
    for seq in (cyc, cyc[::-1]):
        for p in range(L):
            shifted = [(seq[(p + k) % L] - seq[p]) % M for k in range(r + 1)]
            cand = (tuple(shifted[:r]), shifted[r])
            if best is None or cand < best:
                best = cand
    return best


def canonical_form(design: BaseCycleSet) -> tuple:
    return tuple(sorted(canonical_trail(t, design.params) for t in design.trails))


def search_base_sets(
    params: Params,
    mode: str = "first",
    budget: int | None = None,
    cap: int | None = None,
) -> SearchResult:
    """Backtracking search over base-cycle sets of a cyclic HCS of K_{m x n}.

    ``mode`` is "first" or "all".  Beyond the cap (default 16, or the
    HCS_ORACLE_CAP variable) a node budget is required.
    """
    if mode not in ("first", "all"):
        raise ValueError(f"mode must be 'first' or 'all', got {mode!r}")
    M, m = params.M, params.m
    cap = oracle_cap() if cap is None else cap
    if M > cap and budget is None:
        raise OracleCapExceeded(f"M={M} exceeds the oracle cap {cap}; pass a budget")

    used = bytearray(M)
    for x in range(0, M, m):
        used[x] = 1  # differences inside a part are never available
    found: list[list[ClosedTrail]] = []
    chosen: list[ClosedTrail] = []
    nodes = 0
    divs = divisors(M)

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _BudgetExhausted

    def take(delta: int) -> bool:
        if used[delta] or used[-delta % M] or delta == -delta % M:
            return False
        used[delta] = used[-delta % M] = 1
        return True

    def give(delta: int) -> None:
        used[delta] = used[-delta % M] = 0

    def extend(path: list[int], residues: set[int], r: int, d: int) -> bool:
        """Grow the base path to length r, then close it with a stride of order d."""
        tick()
        if len(path) == r:
            for k in range(1, d + 1):
                if d > 1 and gcd(k, d) != 1:
                    continue
                x = (r * k) % M
                delta = (path[0] + x - path[-1]) % M
                if take(delta):
                    chosen.append(ClosedTrail(tuple(path), x))
                    stop = recurse()
                    chosen.pop()
                    give(delta)
                    if stop:
                        return True
            return False
        last = path[-1]
        for c in range(M):
            if c % r in residues:
                continue
            delta = (c - last) % M
            if take(delta):
                path.append(c)
                residues.add(c % r)
                stop = extend(path, residues, r, d)
                residues.discard(c % r)
                path.pop()
                give(delta)
                if stop:
                    return True
        return False

    def recurse() -> bool:
        tick()
        delta = next((x for x in range(1, M // 2 + 1) if not used[x]), None)
        if delta is None:
            found.append(list(chosen))
            return mode == "first"
        for d in divs:
            r = M // d
            if r == 1:
                if gcd(delta, M) == 1 and take(delta):
                    chosen.append(ClosedTrail((0,), delta))
                    stop = recurse()
                    chosen.pop()
                    give(delta)
                    if stop:
                        return True
                continue
            if delta % r == 0 or not take(delta):
                continue
            stop = extend([0, delta], {0, delta % r}, r, d)
            give(delta)
            if stop:
                return True
        return False

    budget_hit = False
    try:
        stopped_early = recurse()
    except _BudgetExhausted:
        budget_hit, stopped_early = True, True

    designs = [BaseCycleSet(params, trails) for trails in found]
    unique: dict[tuple, BaseCycleSet] = {}
    for design in designs:
        unique.setdefault(canonical_form(design), design)
    ordered = [
        BaseCycleSet(params, tuple(ClosedTrail(b, x) for b, x in key))
        for key in sorted(unique)
    ]
    return SearchResult(ordered, exhausted=not stopped_early, nodes=nodes, budget_hit=budget_hit)


def check_against_oracle(design: BaseCycleSet, cap: int | None = None) -> bool:
    """Pass iff the design verifies in full and the oracle finds some solution."""
    cap = oracle_cap() if cap is None else cap
    if design.params.M > cap:
        raise OracleCapExceeded(f"M={design.params.M} exceeds the oracle cap {cap}")
    if not verify_full(design).passed:
        return False
    return bool(search_base_sets(design.params, "first", cap=cap).solutions)
