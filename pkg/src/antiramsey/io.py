"""Reading and writing colorings in the ``arc v1`` text format.

    arc v1
    n=<int> s=<int> c=<int>
    <v1> <v2> ... <vs> : <color>      one line per edge, colex order
"""
from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .core import Coloring, HostGraph, host_index
from .errors import InvalidInput

HEADER = "arc v1"
_PARAMS = re.compile(r"^n=(\d+)\s+s=(\d+)\s+c=(\d+)$")


def format_coloring(coloring: Coloring) -> str:
    host = coloring.host
    lines = [HEADER, f"n={host.n} s={host.s} c={coloring.num_colors}"]
    for e, c in zip(host_index(host).edges, coloring.colors.tolist()):
        lines.append(" ".join(map(str, e)) + f" : {c}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    lines = text.splitlines()
    # trailing blank lines are tolerated, blank lines elsewhere are not
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or lines[0].strip() != HEADER:
        raise InvalidInput(f"expected header {HEADER!r}", line=1)
    if len(lines) < 2:
        raise InvalidInput("missing parameter line", line=2)
    m = _PARAMS.match(lines[1].strip())
    if not m:
        raise InvalidInput("expected 'n=<int> s=<int> c=<int>'", line=2)
    n, s, c = (int(x) for x in m.groups())
    try:
        host = HostGraph(n, s)
    except InvalidInput as exc:
        raise InvalidInput(str(exc), line=2) from None
    idx = host_index(host)
    colors = np.full(idx.m, -1, dtype=np.int64)
    for lineno, raw in enumerate(lines[2:], start=3):
        left, sep, right = raw.partition(":")
        if not sep:
            raise InvalidInput("expected '<vertices> : <color>'", line=lineno)
        try:
            vs = tuple(int(v) for v in left.split())
            color = int(right.strip())
        except ValueError:
            raise InvalidInput("non-integer token", line=lineno) from None
        if len(vs) != s or list(vs) != sorted(set(vs)) or vs[0] < 0 or vs[-1] >= n:
            raise InvalidInput(f"{vs} is not an ascending {s}-subset of 0..{n - 1}", line=lineno)
        if not 0 <= color < c:
            raise InvalidInput(f"color {color} outside 0..{c - 1}", line=lineno)
        r = idx.rank(vs)
        if colors[r] >= 0:
            raise InvalidInput(f"edge {vs} listed twice", line=lineno)
        colors[r] = color
    missing = np.flatnonzero(colors < 0)
    if missing.size:
        raise InvalidInput(f"{missing.size} edges missing, first {idx.edges[missing[0]]}",
                           line=len(lines) + 1)
    unused = sorted(set(range(c)) - set(np.unique(colors).tolist()))
    if unused:
        raise InvalidInput(f"colors not dense: {unused[:5]} never used", line=2)
    return Coloring(host, colors)


def write_coloring(coloring: Coloring, path) -> None:
    Path(path).write_text(format_coloring(coloring))


def read_coloring(path) -> Coloring:
    return parse_coloring(Path(path).read_text())
