"""Checks for base-cycle sets and fully expanded cycle systems.

``verify_base`` works on partial differences only.  ``verify_full`` expands
every orbit into explicit cycles and counts edges of K_{m x n} directly; it
does not reuse any difference arithmetic, so agreement between the two is a
meaningful cross-check.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

import numpy as np

from . import feasibility
from .constructor import BaseCycleSet
from .trail import (
    ClosedTrail,
    is_valid_hamiltonian_cycle,
    orbit,
    orbit_length,
    partial_differences,
)
from .zmod import Params


@dataclass
class CheckResult:
    passed: bool
    detail: str = ""
    data: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


@dataclass
class VerificationReport:
    base_criterion: CheckResult | None = None
    full_partition: CheckResult | None = None
    hamiltonicity: CheckResult | None = None
    cyclic_closure: CheckResult | None = None
    symmetry: CheckResult | None = None
    parity: CheckResult | None = None
    cycles: int | None = None
    edges: int | None = None

    CHECKS = (
        "base_criterion",
        "full_partition",
        "hamiltonicity",
        "cyclic_closure",
        "symmetry",
        "parity",
    )

    @property
    def passed(self) -> bool:
        return all(
            getattr(self, name).passed
            for name in self.CHECKS
            if getattr(self, name) is not None
        )

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"passed": self.passed}
        for name in self.CHECKS:
            check = getattr(self, name)
            out[name] = None if check is None else asdict(check)
        out["counts"] = {"cycles": self.cycles, "edges": self.edges}
        return out


def verify_base(design: BaseCycleSet) -> CheckResult:
    """Pass iff the partial differences cover Z_M - mZ_M exactly once."""
    params = design.params
    M, m = params.M, params.m
    total: Counter = Counter()
    for k, trail in enumerate(design.trails):
        check = is_valid_hamiltonian_cycle(trail, params)
        if not check:
            return CheckResult(False, f"trail {k} {trail} is invalid: {check.detail}",
                               {"invalid_trail": k})
        total += partial_differences(trail, params)
    bad = {}
    for x in range(1, M):
        want = 0 if x % m == 0 else 1
        if total[x] != want:
            bad[x] = total[x]
    if bad:
        missing = sorted(x for x, k in bad.items() if k == 0)
        extra = sorted(x for x, k in bad.items() if k > 0)
        detail = []
        if missing:
            detail.append(f"missing {_short(missing)}")
        if extra:
            detail.append(f"wrong multiplicity {_short(extra)}")
        return CheckResult(False, "; ".join(detail),
                           {"missing": missing, "wrong_multiplicity": {x: bad[x] for x in extra}})
    return CheckResult(True, f"partial differences = Z_{M} - {m}Z_{M}")


def _short(xs: Sequence[int], limit: int = 12) -> str:
    body = ",".join(map(str, xs[:limit]))
    return "{" + body + (",…" if len(xs) > limit else "") + "}"


# --- trusted slow path ----------------------------------------------------


def _expand_independently(trail: ClosedTrail, M: int) -> np.ndarray:
    base = np.array(trail.base, dtype=np.int64) % M
    stride = trail.stride % M
    shifts = [0]
    while True:
        nxt = (shifts[-1] + stride) % M
        if nxt == 0:
            break
        shifts.append(nxt)
    return ((np.array(shifts, dtype=np.int64)[:, None] + base[None, :]) % M).ravel()


def _edge_ids(cycles: np.ndarray, M: int) -> np.ndarray:
    nxt = np.roll(cycles, -1, axis=1)
    return np.minimum(cycles, nxt) * M + np.maximum(cycles, nxt)


def _cycle_key(edge_ids: np.ndarray) -> bytes:
    return np.sort(edge_ids).tobytes()


def full_system(design: BaseCycleSet) -> list[np.ndarray]:
    """The orbit of every base cycle, as vertex arrays.

    Repeats are removed only inside one orbit, so two base trails in the same
    orbit show up as duplicated edges.
    """
    M = design.params.M
    out: list[np.ndarray] = []
    for trail in design.trails:
        cyc = _expand_independently(trail, M)
        translates = (cyc[None, :] + np.arange(M, dtype=np.int64)[:, None]) % M
        seen: dict[bytes, np.ndarray] = {}
        for row, ids in zip(translates, _edge_ids(translates, M)):
            seen.setdefault(_cycle_key(ids), row)
        out.extend(seen.values())
    return out


def verify_cycles(cycles: Sequence[Sequence[int]], params: Params) -> VerificationReport:
    """Check an explicit list of cycles: hamiltonian, exact edge partition, +1 closure."""
    M, m = params.M, params.m
    report = VerificationReport()
    arrays = [np.asarray(c, dtype=np.int64) % M for c in cycles]

    bad_ham = None
    for k, cyc in enumerate(arrays):
        if len(cyc) != M or len(np.unique(cyc)) != M:
            bad_ham = (k, "does not visit every vertex exactly once")
        elif np.any((np.roll(cyc, -1) - cyc) % m == 0):
            bad_ham = (k, "has an edge inside a part")
        if bad_ham:
            break
    report.hamiltonicity = (
        CheckResult(False, f"cycle {bad_ham[0]} {bad_ham[1]}", {"cycle": bad_ham[0]})
        if bad_ham else CheckResult(True, f"{len(arrays)} hamiltonian cycles")
    )

    ids = [(_edge_ids(c[None, :], M)[0] if len(c) else np.empty(0, dtype=np.int64))
           for c in arrays]
    counts = np.bincount(np.concatenate(ids) if ids else np.empty(0, dtype=np.int64),
                         minlength=M * M)
    u, v = np.divmod(np.arange(M * M), M)
    is_edge = (u < v) & ((v - u) % m != 0)
    dup = np.flatnonzero(counts > 1)
    stray = np.flatnonzero((counts > 0) & ~is_edge)
    missing = np.flatnonzero((counts == 0) & is_edge)
    report.edges = int(counts.sum())
    report.cycles = len(arrays)
    if dup.size:
        e = int(dup[0])
        report.full_partition = CheckResult(
            False, f"edge {e // M}-{e % M} used {int(counts[e])} times",
            {"duplicated": [e // M, e % M]})
    elif stray.size:
        e = int(stray[0])
        report.full_partition = CheckResult(
            False, f"{e // M}-{e % M} is not an edge of {params}", {"stray": [e // M, e % M]})
    elif missing.size:
        e = int(missing[0])
        report.full_partition = CheckResult(
            False, f"edge {e // M}-{e % M} not covered", {"missing": [e // M, e % M]})
    else:
        report.full_partition = CheckResult(
            True, f"{report.edges} edges, each exactly once")

    keys = {_cycle_key(i) for i in ids}
    open_at = None
    for k, cyc in enumerate(arrays):
        shifted = (cyc + 1) % M
        if _cycle_key(_edge_ids(shifted[None, :], M)[0]) not in keys:
            open_at = k
            break
    report.cyclic_closure = (
        CheckResult(False, f"cycle {open_at} + 1 is not in the system", {"cycle": open_at})
        if open_at is not None else CheckResult(True, "closed under v -> v+1")
    )
    return report


def verify_full(design: BaseCycleSet) -> VerificationReport:
    return verify_cycles(full_system(design), design.params)


def verify_symmetric(design: BaseCycleSet) -> CheckResult:
    params = design.params
    for label, trail in design.labelled():
        r = orbit_length(trail, params)
        if params.m % r:
            return CheckResult(False, f"{label} {trail} has orbit length {r}, not dividing m={params.m}",
                               {"trail": label, "orbit_length": r})
    return CheckResult(True, f"every orbit length divides m={params.m}")


def verify_parity(design: BaseCycleSet) -> CheckResult:
    params = design.params
    target = feasibility.odd_orbit_parity_target(params)
    observed = sum(1 for t in design.trails if orbit_length(t, params) % 2)
    data = {"odd_orbits": observed, "observed": observed % 2, "target": target}
    if observed % 2 == target:
        return CheckResult(True, f"{observed} odd-length orbits, target parity {target}", data)
    return CheckResult(False, f"{observed} odd-length orbits, target parity {target}", data)


def cayley_edge_cover(trail: ClosedTrail, params: Params) -> CheckResult:
    """Pass iff the orbit of the trail partitions Cay[Z_M : partial differences]."""
    M = params.M
    diffs = partial_differences(trail, params)
    if any(k != 1 for k in diffs.values()):
        raise ValueError("partial differences must be distinct")
    counts: Counter = Counter()
    for cyc in orbit(trail, params):
        L = len(cyc)
        for h in range(L):
            a, b = cyc[h], cyc[(h + 1) % L]
            counts[(min(a, b), max(a, b))] += 1
    expected = {(u, v) for u in range(M) for v in range(u + 1, M) if (v - u) % M in diffs}
    if set(counts) != expected:
        return CheckResult(False, "orbit edges differ from the Cayley graph edges")
    if any(k != 1 for k in counts.values()):
        return CheckResult(False, "an edge of the Cayley graph is covered twice")
    return CheckResult(True, f"orbit partitions Cay[Z_{M} : ±{diffs.representatives(M)}]")
