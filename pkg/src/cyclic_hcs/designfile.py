"""Line-oriented design file format.

    hcs 1
    m <int>
    n <int>
    trail <stride> <c0> <c1> ... <c_{r-1}>
    ...

Single spaces, decimal, residues reduced mod M = m*n, a trailing newline, and
optional comment lines beginning with '#'.  Nothing else is accepted.
"""

from __future__ import annotations

import re
from pathlib import Path

from .constructor import BaseCycleSet
from .trail import ClosedTrail
from .zmod import Params

MAGIC = "hcs 1"
_INT = re.compile(r"0|[1-9][0-9]*")


class DesignParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def dumps(design: BaseCycleSet, comments: list[str] | None = None) -> str:
    p = design.params
    lines = [MAGIC, f"m {p.m}", f"n {p.n}"]
    if design.plan is not None:
        lines.append(f"# plan {design.plan.describe()}")
    for c in comments or []:
        lines.append(f"# {c}" if c else "#")
    for trail in design.trails:
        t = trail.reduced(p.M)
        lines.append(" ".join(["trail", str(t.stride), *map(str, t.base)]))
    return "\n".join(lines) + "\n"


def _int(token: str, lineno: int, what: str) -> int:
    if not _INT.fullmatch(token):
        raise DesignParseError(lineno, f"malformed {what} {token!r}")
    return int(token)


def loads(text: str) -> BaseCycleSet:
    if not text:
        raise DesignParseError(1, "empty file")
    if not text.endswith("\n"):
        raise DesignParseError(text.count("\n") + 1, "missing trailing newline")
    raw = text[:-1].split("\n")
    lines = [(k, line) for k, line in enumerate(raw, start=1) if not line.startswith("#")]
    for k, line in lines:
        if "" in line.split(" ") or any(ch.isspace() and ch != " " for ch in line):
            raise DesignParseError(k, "unexpected whitespace")
    if len(lines) < 3:
        raise DesignParseError(len(raw), "truncated header")
    (k0, magic), (k1, mline), (k2, nline) = lines[:3]
    if magic != MAGIC:
        raise DesignParseError(k0, f"expected {MAGIC!r}")
    mt = mline.split(" ")
    if len(mt) != 2 or mt[0] != "m":
        raise DesignParseError(k1, "expected 'm <int>'")
    nt = nline.split(" ")
    if len(nt) != 2 or nt[0] != "n":
        raise DesignParseError(k2, "expected 'n <int>'")
    m, n = _int(mt[1], k1, "m"), _int(nt[1], k2, "n")
    try:
        params = Params(m, n)
    except ValueError as exc:
        raise DesignParseError(k2, str(exc)) from None
    trails = []
    for k, line in lines[3:]:
        tokens = line.split(" ")
        if tokens[0] != "trail":
            raise DesignParseError(k, f"unknown record {tokens[0]!r}")
        if len(tokens) < 3:
            raise DesignParseError(k, "a trail needs a stride and at least one vertex")
        stride = _int(tokens[1], k, "stride")
        base = [_int(tok, k, "vertex") for tok in tokens[2:]]
        for v in [stride, *base]:
            if v >= params.M:
                raise DesignParseError(k, f"{v} is not reduced mod {params.M}")
        trails.append(ClosedTrail(tuple(base), stride))
    return BaseCycleSet(params, trails)


def read(path: str | Path) -> BaseCycleSet:
    with open(path, newline="") as fh:
        return loads(fh.read())


def write(design: BaseCycleSet, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(dumps(design))
