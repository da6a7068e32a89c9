"""End-to-end walkthroughs of the worked examples."""

from __future__ import annotations

import re
from collections import Counter

from .constructor import BaseCycleSet, construct
from .trail import DifferenceMultiset, orbit_length, partial_differences
from .verifier import verify_base, verify_full, verify_parity, verify_symmetric
from .zmod import Params

# name -> (m, n, kappa)
DEMOS: dict[str, tuple[int, int, int | None]] = {
    "k10x6": (10, 6, None),
    "k2x14": (2, 14, None),
    "k18x4": (18, 4, None),
    "k72x8": (72, 8, None),
    "k6x14": (6, 14, None),
    "k10x10": (10, 10, 1),
}


def demo_design(name: str) -> BaseCycleSet:
    m, n, kappa = DEMOS[name]
    return construct(Params(m, n), kappa).design


def group_of(label: str) -> str:
    """'A_{0,3}' -> 'A_{0,*}', 'E_2' -> 'E', 'F' -> 'F'."""
    two = re.fullmatch(r"(\w+)_\{(\d+),\d+\}", label)
    if two:
        return f"{two.group(1)}_{{{two.group(2)},*}}"
    one = re.fullmatch(r"(\w+)_\d+", label)
    return one.group(1) if one else label


def grouped_differences(design: BaseCycleSet) -> list[tuple[str, DifferenceMultiset]]:
    groups: dict[str, DifferenceMultiset] = {}
    for label, trail in design.labelled():
        key = group_of(label)
        groups.setdefault(key, DifferenceMultiset())
        groups[key].update(partial_differences(trail, design.params))
    return list(groups.items())


def format_pm(reps: list[int]) -> str:
    """'±{1,3,…,15,19,…,33}': runs of four or more equal steps are elided.

    Elided runs come first; a run repeating the previous step drops its second
    term.  Values outside any run are listed at the end.
    """
    runs: list[list[int]] = []
    loose: list[int] = []
    k = 0
    while k < len(reps):
        j = k
        if k + 1 < len(reps):
            step = reps[k + 1] - reps[k]
            j = k + 1
            while j + 1 < len(reps) and reps[j + 1] - reps[j] == step:
                j += 1
        if j - k + 1 >= 4:
            runs.append(reps[k:j + 1])
            k = j + 1
        else:
            loose.append(reps[k])
            k += 1
    parts: list[str] = []
    prev_step = None
    for run in runs:
        step = run[1] - run[0]
        head = [run[0]] if step == prev_step else run[:2]
        parts += [*map(str, head), "…", str(run[-1])]
        prev_step = step
    parts += map(str, loose)
    return "±{" + ",".join(parts) + "}"


def render_demo(name: str) -> str:
    design = demo_design(name)
    p = design.params
    out = [f"{p}  M={p.M}  {design.plan.describe()}", ""]
    for label, trail in design.labelled():
        out.append(f"{label} = {trail}")
    out.append("")
    for key, diffs in grouped_differences(design):
        out.append(f"∂ {key} = {format_pm(diffs.representatives(p.M))}")
    out.append("")
    lengths = Counter(orbit_length(t, p) for t in design.trails)
    out.append("orbit lengths: " + ", ".join(f"{r} x{k}" for r, k in sorted(lengths.items())))
    base = verify_base(design)
    full = verify_full(design)
    sym = verify_symmetric(design)
    par = verify_parity(design)
    out.append(f"base criterion: {'pass' if base else 'FAIL'} ({base.detail})")
    out.append(f"full system: {'pass' if full.passed else 'FAIL'} "
               f"({full.cycles} cycles, {full.edges} edges)")
    out.append(f"phi_{p.n}-symmetric: {'pass' if sym else 'FAIL'}")
    out.append(f"parity: {'pass' if par else 'FAIL'} "
               f"(observed {par.data['observed']}, target {par.data['target']})")
    return "\n".join(out) + "\n"
