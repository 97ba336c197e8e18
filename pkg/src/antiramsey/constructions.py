"""Extremal families, lower-bound colorings and path-assembly gadgets.

All anchor sets sit on the lowest vertex indices: the star centre is
S = {0..t-1}, the fixed pair is {t, t+1}, the extra s-set is {t..t+s-1} and
blocks are consecutive index ranges.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import Coloring, HostGraph, edge_mask, host_index
from .errors import InvalidInput, NotFound
from .motif import MotifKind, MotifSpec, Witness, verify_witness


class FamilyKind(enum.Enum):
    Star = "star"
    StarPlusEdge = "star-plus-edge"
    StarPlusBook = "star-plus-book"
    StarPlusMatching = "star-plus-matching"
    PairBook = "pair-book"
    DisjointCliques = "disjoint-cliques"

    @classmethod
    def parse(cls, name) -> "FamilyKind":
        if isinstance(name, cls):
            return name
        for kind in cls:
            if name in (kind.value, kind.name):
                return kind
        raise InvalidInput(f"unknown family {name!r}")


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    t: int = 0
    count: int = 0
    block_size: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", FamilyKind.parse(self.kind))

    @classmethod
    def star(cls, t):
        return cls(FamilyKind.Star, t=t)

    @classmethod
    def star_plus_edge(cls, t):
        return cls(FamilyKind.StarPlusEdge, t=t)

    @classmethod
    def star_plus_book(cls, t):
        return cls(FamilyKind.StarPlusBook, t=t)

    @classmethod
    def star_plus_matching(cls, t, count):
        return cls(FamilyKind.StarPlusMatching, t=t, count=count)

    @classmethod
    def pair_book(cls):
        return cls(FamilyKind.PairBook)

    @classmethod
    def disjoint_cliques(cls, block_size):
        return cls(FamilyKind.DisjointCliques, block_size=block_size)


def _validate(host: HostGraph, spec: FamilySpec) -> None:
    n, s, t = host.n, host.s, spec.t
    kind = spec.kind
    if kind in (FamilyKind.Star, FamilyKind.StarPlusEdge, FamilyKind.StarPlusMatching):
        if t < 1 or t > n:
            raise InvalidInput(f"star centre size t={t} outside [1, {n}]")
    if kind is FamilyKind.StarPlusEdge and t > n - s:
        raise InvalidInput(f"t={t} leaves no s-set outside the centre (need t <= n - s)")
    if kind is FamilyKind.StarPlusBook and (t < 0 or t + s > n):
        raise InvalidInput(f"t={t} leaves no book outside the centre (need t + s <= n)")
    if kind is FamilyKind.StarPlusMatching:
        if spec.count < 0 or spec.count > (n - t) // s:
            raise InvalidInput(f"cannot fit {spec.count} disjoint edges outside a {t}-set")
    if kind is FamilyKind.PairBook and n < s:
        raise InvalidInput("host too small for a pair book")
    if kind is FamilyKind.DisjointCliques and not s <= spec.block_size <= n:
        raise InvalidInput(f"block size {spec.block_size} must lie in [{s}, {n}]")


def family_size(host: HostGraph, spec: FamilySpec) -> int:
    """Closed-form cardinality of the named family."""
    _validate(host, spec)
    n, s, t = host.n, host.s, spec.t
    star = comb(n, s) - comb(n - t, s)
    kind = spec.kind
    if kind is FamilyKind.Star:
        return star
    if kind is FamilyKind.StarPlusEdge:
        return star + 1
    if kind is FamilyKind.StarPlusBook:
        return star + comb(n - t - 2, s - 2)
    if kind is FamilyKind.StarPlusMatching:
        return star + spec.count
    if kind is FamilyKind.PairBook:
        return comb(n - 2, s - 2)
    return (n // spec.block_size) * comb(spec.block_size, s)


def build_family(host: HostGraph, spec: FamilySpec) -> list:
    """Edges of the named family in colex order."""
    _validate(host, spec)
    idx = host_index(host)
    n, s, t = host.n, host.s, spec.t
    kind = spec.kind
    smask = (1 << t) - 1
    extra = 0
    extra_edges = set()
    if kind is FamilyKind.StarPlusEdge:
        extra_edges.add(tuple(range(t, t + s)))
    elif kind is FamilyKind.StarPlusMatching:
        for i in range(spec.count):
            extra_edges.add(tuple(range(t + i * s, t + (i + 1) * s)))
    elif kind in (FamilyKind.StarPlusBook, FamilyKind.PairBook):
        pair = 0 if kind is FamilyKind.PairBook else t
        extra = (1 << pair) | (1 << (pair + 1))
    if kind is FamilyKind.DisjointCliques:
        b = spec.block_size
        blocks = n // b
        return [e for e in idx.edges if e[-1] < blocks * b and e[0] // b == e[-1] // b]
    out = []
    for e, m in zip(idx.edges, idx.masks):
        if kind is not FamilyKind.PairBook and m & smask:
            out.append(e)
        elif extra and m & extra == extra:
            out.append(e)
        elif e in extra_edges:
            out.append(e)
    return out


def rainbow_plus_one(host: HostGraph, base: Iterable) -> Coloring:
    """Distinct colors on ``base`` (in rank order), one extra color on everything else."""
    idx = host_index(host)
    ranks = sorted({idx.rank(tuple(sorted(e))) for e in base})
    if not ranks:
        raise InvalidInput("base family is empty: no rainbow part")
    if len(ranks) == idx.m:
        raise InvalidInput("base family is the whole host: no remaining class")
    colors = np.full(idx.m, len(ranks), dtype=np.int64)
    colors[ranks] = np.arange(len(ranks))
    return Coloring(host, colors)


def linear_path_lower_coloring(host: HostGraph, k: int) -> Coloring:
    """Rainbow-plus-one coloring that blocks rainbow linear paths/cycles of length k.

    Even k = 2t colors the star of a (t-1)-set; odd k = 2t+1 colors the
    extremal family for linear paths of length 2t.  k = 3 gives the pair book.
    """
    if k < 3:
        raise InvalidInput("need k >= 3")
    if k % 2 == 0:
        return rainbow_plus_one(host, build_family(host, FamilySpec.star(k // 2 - 1)))
    t = (k - 1) // 2
    return rainbow_plus_one(host, build_family(host, FamilySpec.star_plus_book(t - 1)))


def berge_block_coloring(host: HostGraph, k: int, branch: Optional[str] = None) -> Coloring:
    """Block coloring with no rainbow Berge path of length k.

    ``branch="cliques"``: consecutive blocks of size floor(k/2), every edge
    inside a block gets its own color.  ``branch="sparse"``: blocks of size
    s+1 with their floor(k/2)-1 colex-least edges rainbow.  By default the
    cliques branch is used when k > 2s + 1.  Leftover vertices and all
    other edges share one extra color.
    """
    n, s = host.n, host.s
    if k < 3:
        raise InvalidInput("need k >= 3")
    if branch is None:
        branch = "cliques" if k > 2 * s + 1 else "sparse"
    idx = host_index(host)
    base = []
    if branch == "cliques":
        b = k // 2
        if b < s:
            raise InvalidInput(f"block size floor(k/2) = {b} is below s = {s}")
        for i in range(n // b):
            block = range(i * b, (i + 1) * b)
            base.extend(combinations(block, s))
    elif branch == "sparse":
        b, q = s + 1, k // 2 - 1
        if q > comb(b, s):
            raise InvalidInput(f"a block of size {b} has only {b} edges, need {q}")
        for i in range(n // b):
            block_edges = sorted(combinations(range(i * b, (i + 1) * b), s), key=lambda e: e[::-1])
            base.extend(block_edges[:q])
    else:
        raise InvalidInput(f"unknown branch {branch!r}")
    if not base:
        return Coloring.monochromatic(host)
    if len(base) == idx.m:
        raise InvalidInput("blocks cover every edge: no remaining class")
    return rainbow_plus_one(host, base)


def berge_block_color_count(n: int, s: int, k: int, branch: Optional[str] = None) -> int:
    if branch is None:
        branch = "cliques" if k > 2 * s + 1 else "sparse"
    if branch == "cliques":
        return (n // (k // 2)) * comb(k // 2, s) + 1
    return (n // (s + 1)) * (k // 2 - 1) + 1


# ---------------------------------------------------------------------------
# path assembly from (s-1)-sets and link vertices


@dataclass
class GadgetPath:
    segments: list
    realized: Witness


def assemble_linear_path(host: HostGraph, segments: Sequence) -> GadgetPath:
    """Expand a chain like a0, v1, a1, b1, v2, a2 into a linear path.

    Integers are link vertices; (s-1)-sets are joined with their single
    adjacent link vertex; s-sets are used as edges unchanged.  Two adjacent
    (s-1)-sets form a cherry and must share exactly one vertex.
    """
    s = host.s
    if not segments:
        raise InvalidInput("empty segment list")
    items = []
    for it in segments:
        if isinstance(it, (int, np.integer)):
            v = int(it)
            if not 0 <= v < host.n:
                raise InvalidInput(f"link vertex {v} outside the host")
            items.append(v)
        else:
            x = tuple(sorted(int(v) for v in it))
            if len(x) not in (s - 1, s) or len(set(x)) != len(x):
                raise InvalidInput(f"segment {x} must be an (s-1)-set or an s-set")
            if x[0] < 0 or x[-1] >= host.n:
                raise InvalidInput(f"segment {x} has a vertex outside the host")
            items.append(x)

    def is_link(i):
        return 0 <= i < len(items) and isinstance(items[i], int)

    def is_short(i):
        return 0 <= i < len(items) and isinstance(items[i], tuple) and len(items[i]) == s - 1

    edges = []
    for i, it in enumerate(items):
        if isinstance(it, int):
            if is_link(i + 1):
                raise InvalidInput(f"adjacent link vertices at positions {i} and {i + 1}")
            if not (is_short(i - 1) and is_short(i + 1)):
                raise InvalidInput(f"link vertex at position {i} needs (s-1)-sets on both sides")
            continue
        if len(it) == s:
            edges.append(it)
            continue
        if is_short(i + 1) and len(set(it) & set(items[i + 1])) != 1:
            raise InvalidInput(f"cherry at positions {i},{i + 1} does not share exactly one vertex")
        links = [items[j] for j in (i - 1, i + 1) if is_link(j)]
        if len(links) != 1:
            raise InvalidInput(f"(s-1)-set at position {i} has {len(links)} adjacent link vertices")
        if links[0] in it:
            raise InvalidInput(f"link vertex {links[0]} already lies in {it}")
        edges.append(tuple(sorted(it + (links[0],))))

    for i, j in combinations(range(len(edges)), 2):
        meet = len(set(edges[i]) & set(edges[j]))
        if (j == i + 1 and meet != 1) or (j > i + 1 and meet):
            raise InvalidInput(f"edges {i} {edges[i]} and {j} {edges[j]} meet in {meet} vertices")
    w = Witness(MotifKind.LinearPath, len(edges), edges)
    if not verify_witness(w, MotifSpec(MotifKind.LinearPath, len(edges)), host=host):
        raise InvalidInput("assembled edges do not form a linear path")
    return GadgetPath(list(segments), w)


def find_cherry_pairs(gstar: Iterable, W: Iterable[int], t: int) -> list:
    """Greedy first-fit in colex order for max(t-1, 1) cherry pairs of G*.

    Each pair (a, b) shares exactly one vertex, the unions of different pairs
    are disjoint, and nothing touches ``W``.  Raises ``NotFound`` (carrying the
    pairs found so far) when the scan runs out first.
    """
    if t < 1:
        raise InvalidInput("t must be >= 1")
    edges = sorted({tuple(sorted(int(v) for v in e)) for e in gstar}, key=lambda e: e[::-1])
    if len({len(e) for e in edges}) > 1:
        raise InvalidInput("G* must be uniform")
    quota = max(t - 1, 1)
    used = edge_mask(W)
    masks = [edge_mask(e) for e in edges]
    pairs = []
    for i, a in enumerate(edges):
        if len(pairs) == quota:
            break
        if masks[i] & used:
            continue
        for j in range(i + 1, len(edges)):
            if masks[j] & used:
                continue
            if (masks[i] & masks[j]).bit_count() == 1:
                pairs.append((a, edges[j]))
                used |= masks[i] | masks[j]
                break
    if len(pairs) < quota:
        raise NotFound(f"found {len(pairs)} of {quota} cherry pairs", partial=pairs)
    return pairs
