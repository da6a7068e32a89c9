"""Explicit base-cycle sets for cyclic, phi_n-symmetric HCS of K_{m x n}, m even.

Three direct constructions are provided:

* ``construct_bipartite``  -- m = 2, any even n;
* ``construct_n_div4``     -- m >= 4 even, n = 4t (a power-of-two branch and a
  mixed branch for m = 2^a * mbar with mbar > 1 odd);
* ``construct_2mod4``      -- m = 2*mbar > 2 and n = 4t + 2 > 2, which needs an
  element nu = s + 2m*kappa coprime to n/2.

``construct`` dispatches on (m, n).  The case n = 2, m > 2 (cocktail party
graphs) is reported as delegated rather than constructed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import feasibility
from .trail import ClosedTrail
from .zmod import Params, two_adic_valuation


@dataclass(frozen=True)
class ConstructionPlan:
    branch: str
    a: int | None = None
    mbar: int | None = None
    t: int | None = None
    s: int | None = None
    d: int | None = None
    w: int | None = None
    nu: int | None = None
    kappa: int | None = None
    u: int | None = None

    def describe(self) -> str:
        fields = [f"branch={self.branch}"]
        for name in ("a", "mbar", "t", "s", "d", "w", "nu", "kappa", "u"):
            value = getattr(self, name)
            if value is not None:
                fields.append(f"{name}={value}")
        return " ".join(fields)


@dataclass(frozen=True)
class BaseCycleSet:
    params: Params
    trails: tuple[ClosedTrail, ...]
    labels: tuple[str, ...] | None = None
    plan: ConstructionPlan | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "trails", tuple(self.trails))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.trails):
                raise ValueError("one label per trail")

    def __len__(self) -> int:
        return len(self.trails)

    def labelled(self) -> list[tuple[str, ClosedTrail]]:
        labels = self.labels or tuple(f"T_{k}" for k in range(len(self.trails)))
        return list(zip(labels, self.trails))

    def difference_count(self) -> int:
        return sum(2 * t.r for t in self.trails)


@dataclass(frozen=True)
class Outcome:
    """Result of ``construct``: exactly one of the four statuses."""

    status: str  # constructed | delegated_n2 | nonexistent | unsupported
    design: BaseCycleSet | None = None
    reason: str = ""
    jm: bool | None = field(default=None)

    def __bool__(self) -> bool:
        return self.status == "constructed"


# --- number theory for the nu selection ---------------------------------


def s_set(s: int, d: int, w: int) -> list[int]:
    if w < 3 or w % 2 == 0:
        raise ValueError(f"w must be odd and >= 3, got {w}")
    return [s + k * d for k in range((w - 1) // 2)]


def phi_count(s: int, d: int, w: int) -> int:
    return sum(1 for x in s_set(s, d, w) if gcd(x, w) == 1)


def _two_mod4_seed(mbar: int, m: int) -> tuple[int, int]:
    """(s, u) for m = 2*mbar: the progression seed and the skipped index."""
    if m % 8 == 2:
        return 3 * mbar + 2, (3 * mbar + 1) // 4
    return 3 * mbar - 2, (3 * mbar - 1) // 4


def find_nu(params: Params, kappa_override: int | None = None) -> tuple[int, int]:
    """Pick nu = s + 2m*kappa coprime to n/2; smallest kappa unless overridden."""
    m, n = params.m, params.n
    if m % 4 != 2 or m <= 2 or n % 4 != 2 or n <= 2:
        raise ValueError(f"need m, n ≡ 2 (mod 4) with m, n > 2; got m={m}, n={n}")
    s, _ = _two_mod4_seed(m // 2, m)
    w = n // 2
    candidates = s_set(s, 2 * m, w)
    if kappa_override is not None:
        if not 0 <= kappa_override < len(candidates):
            raise ValueError(
                f"kappa must lie in 0..{len(candidates) - 1}, got {kappa_override}"
            )
        nu = candidates[kappa_override]
        if gcd(nu, w) != 1:
            raise ValueError(f"kappa={kappa_override} gives nu={nu}, not coprime to {w}")
        kappa = kappa_override
    else:
        kappa = next((k for k, x in enumerate(candidates) if gcd(x, w) == 1), None)
        if kappa is None:
            raise AssertionError(f"no nu in S({s},{2 * m},{w}) coprime to {w}")
        nu = candidates[kappa]
    assert gcd(nu, params.M) == 1, (nu, params.M)
    return nu, kappa


# --- path builders ------------------------------------------------------


def _interleave(evens: list[int], odds: list[int]) -> list[int]:
    out = []
    for e, o in zip(evens, odds, strict=True):
        out += [e, o]
    return out


def _zigzag(offset: int, top: int, count: int) -> list[int]:
    """[0, offset+top, 1, offset+top-1, ..., count-1, offset+top-count+1]."""
    return _interleave(list(range(count)), [offset + top - k for k in range(count)])


def path_p_pow2(i: int, b: int, m: int) -> list[int]:
    return _zigzag(2 * m * i, 2 ** (b + 1) - 1, 2 ** (b - 1))


def path_p(offset: int, j: int, mbar: int) -> list[int]:
    """Two-vertex path [0, offset + 4j -+ 1]; the sign flips past (mbar-1)/2."""
    if j <= (mbar - 1) // 2:
        return [0, offset + 4 * j - 1]
    return [0, offset + 4 * j + 1]


def path_q1(offset: int, mbar: int) -> list[int]:
    evens = [0] + list(range(1, mbar - 1, 2)) + list(range(mbar + 1, 2 * mbar - 1, 2))
    odds = list(range(4 * mbar - 1, 3 * mbar - 1, -2)) + list(
        range(3 * mbar - 1, 2 * mbar + 1, -2)
    )
    return _interleave(evens, [offset + o for o in odds])


def path_q(i: int, b: int, m: int, mbar: int) -> list[int]:
    return _zigzag(2 * m * i, 2 ** (b + 1) * mbar - 1, 2 ** (b - 1) * mbar)


def path_s_tilde(kappa: int, m: int, mbar: int) -> list[int]:
    return _zigzag((2 * kappa + 1) * m, 4 * mbar - 1, mbar)


# --- constructions ------------------------------------------------------


def construct_bipartite(n: int) -> BaseCycleSet:
    if n < 2 or n % 2:
        raise ValueError(f"bipartite construction needs n even, got {n}")
    ell = n // 2
    trails = [ClosedTrail((0, 4 * i + 3), 2) for i in range(ell // 2)]
    labels = [f"C_{i}" for i in range(ell // 2)]
    if ell % 2:
        trails.append(ClosedTrail((0,), 2 * ell - 1))
        labels.append("C'")
    return BaseCycleSet(Params(2, n), trails, labels, ConstructionPlan("bipartite", t=ell))


def construct_n_div4(m: int, n: int) -> BaseCycleSet:
    if m < 4 or m % 2:
        raise ValueError(f"need m even and >= 4 (m = 2 is bipartite), got {m}")
    if n % 4:
        raise ValueError(f"need n ≡ 0 (mod 4), got {n}")
    a = two_adic_valuation(m)
    mbar = m >> a
    t = n // 4
    trails, labels = [], []
    if mbar == 1:
        for i in range(t):
            for b in range(1, a + 1):
                trails.append(ClosedTrail(path_p_pow2(i, b, m), 2**b))
                labels.append(f"A_{{{i},{b}}}")
        plan = ConstructionPlan("pow2", a=a, mbar=1, t=t)
    else:
        for i in range(t):
            for j in range(1, mbar):
                trails.append(ClosedTrail(path_p(2 * m * i, j, mbar), 2))
                labels.append(f"A_{{{i},{j}}}")
            trails.append(ClosedTrail(path_q1(2 * m * i, mbar), 2 * mbar))
            labels.append(f"B_{{{i},1}}")
            for b in range(2, a + 1):
                trails.append(ClosedTrail(path_q(i, b, m, mbar), 2**b * mbar))
                labels.append(f"B_{{{i},{b}}}")
        plan = ConstructionPlan("mixed", a=a, mbar=mbar, t=t)
    return BaseCycleSet(Params(m, n), trails, labels, plan)


def construct_2mod4(m: int, n: int, kappa_override: int | None = None) -> BaseCycleSet:
    params = Params(m, n)
    nu, kappa = find_nu(params, kappa_override)
    mbar = m // 2
    t = (n - 2) // 4
    s, u = _two_mod4_seed(mbar, m)
    trails, labels = [], []

    def add(label: str, path: list[int], stride: int) -> None:
        trails.append(ClosedTrail(path, stride))
        labels.append(label)

    for i in range(kappa):
        for j in range(1, mbar):
            add(f"A_{{{i},{j}}}", path_p(2 * m * i, j, mbar), 2)
    for i in range(kappa + 1):
        add(f"B_{i}", path_q1(2 * m * i, mbar), m)
    for i in range(kappa + 1, t):
        for j in range(1, mbar):
            add(f"C_{{{i},{j}}}", path_p((2 * i + 1) * m, j, mbar), 2)
    for i in range(kappa + 1, t):
        add(f"D_{i}", path_q1((2 * i + 1) * m, mbar), m)
    for j in range(1, mbar):
        if j != u:
            add(f"E_{j}", path_p(2 * m * kappa, j, mbar), 2)
    add("F", path_s_tilde(kappa, m, mbar), m)
    add("G", [0], nu)
    plan = ConstructionPlan(
        "two_mod4", a=1, mbar=mbar, t=t, s=s, d=2 * m, w=n // 2, nu=nu, kappa=kappa, u=u
    )
    return BaseCycleSet(params, trails, labels, plan)


def construct(params: Params, kappa: int | None = None) -> Outcome:
    m, n = params.m, params.n
    if m % 2:
        return Outcome("unsupported", reason="m odd")
    verdict = feasibility.exists_cyclic_symmetric_even_m(params)
    if not verdict:
        return Outcome("nonexistent", reason=verdict.reason)
    if kappa is not None and not (m % 4 == 2 and m > 2 and n % 4 == 2 and n > 2):
        raise ValueError("kappa only applies when m, n ≡ 2 (mod 4) and m, n > 2")
    if m == 2:
        return Outcome("constructed", construct_bipartite(n))
    if n == 2:
        return Outcome(
            "delegated_n2",
            reason="closed-form construction for K_{2m} - I is out of scope",
            jm=feasibility.jm_condition(2 * m),
        )
    if n % 4 == 0:
        return Outcome("constructed", construct_n_div4(m, n))
    return Outcome("constructed", construct_2mod4(m, n, kappa))
