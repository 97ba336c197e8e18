"""Vertex/edge model for the complete s-uniform hypergraph K_n^(s).

Edges are sorted tuples of 0-based vertex indices and are addressed by their
colexicographic rank.  Every binomial is an exact Python integer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InvalidInput

Edge = tuple  # strictly increasing tuple of s vertex indices

WORD_BITS = 64


@dataclass(frozen=True)
class HostGraph:
    """The complete s-uniform hypergraph on vertices 0..n-1."""

    n: int
    s: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.s, int)):
            raise InvalidInput("n and s must be integers")
        if self.s < 2 or self.s > self.n:
            raise InvalidInput(f"need 2 <= s <= n, got n={self.n}, s={self.s}")

    @property
    def edge_count(self) -> int:
        return comb(self.n, self.s)

    @property
    def word_sized(self) -> bool:
        return self.n <= WORD_BITS


def make_edge(host: HostGraph, vertices: Iterable[int]) -> Edge:
    """Validate and canonicalise an edge of ``host``."""
    vs = tuple(sorted(int(v) for v in vertices))
    if len(vs) != host.s:
        raise InvalidInput(f"edge {vs} has {len(vs)} vertices, expected {host.s}")
    if len(set(vs)) != len(vs):
        raise InvalidInput(f"edge {vs} repeats a vertex")
    if vs[0] < 0 or vs[-1] >= host.n:
        raise InvalidInput(f"edge {vs} has a vertex outside [0, {host.n})")
    return vs


def edge_mask(e: Iterable[int]) -> int:
    m = 0
    for v in e:
        m |= 1 << v
    return m


def mask_vertices(m: int) -> tuple:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return tuple(out)


def _check_edge_shape(host: HostGraph, e: Sequence[int]) -> None:
    if len(e) != host.s:
        raise InvalidInput(f"edge {tuple(e)} has {len(e)} vertices, expected {host.s}")
    prev = -1
    for v in e:
        if v <= prev:
            raise InvalidInput(f"edge {tuple(e)} is not strictly increasing")
        prev = v
    if prev >= host.n:
        raise InvalidInput(f"edge {tuple(e)} has a vertex outside [0, {host.n})")


def edge_rank(host: HostGraph, e: Sequence[int]) -> int:
    """Colex rank: sum of C(v_i, i+1) over the sorted vertices."""
    _check_edge_shape(host, e)
    return sum(comb(v, i + 1) for i, v in enumerate(e))


def edge_unrank(host: HostGraph, r: int) -> Edge:
    if not 0 <= r < host.edge_count:
        raise InvalidInput(f"rank {r} outside [0, {host.edge_count})")
    out = [0] * host.s
    v = host.n - 1
    for i in range(host.s, 0, -1):
        while comb(v, i) > r:
            v -= 1
        out[i - 1] = v
        r -= comb(v, i)
        v -= 1
    return tuple(out)


def all_edges(host: HostGraph) -> list:
    """All edges in colex order (index == rank)."""
    return list(host_index(host).edges)


def make_vertex_set(host: HostGraph, members: Iterable[int]) -> tuple:
    vs = tuple(sorted(set(int(v) for v in members)))
    if vs and (vs[0] < 0 or vs[-1] >= host.n):
        raise InvalidInput(f"vertex set {vs} not within [0, {host.n})")
    return vs


def edges_meeting(host: HostGraph, S: Iterable[int]) -> Iterator[Edge]:
    """Yield, in colex order, the edges that meet ``S``."""
    S = make_vertex_set(host, S)
    if not S:
        return
    idx = host_index(host)
    if host.word_sized:
        smask = edge_mask(S)
        for e, m in zip(idx.edges, idx.masks):
            if m & smask:
                yield e
    else:
        members = set(S)
        for e in idx.edges:
            if any(v in members for v in e):
                yield e


def intersection_size(e: Sequence[int], f: Sequence[int]) -> int:
    if e and f and max(e[-1], f[-1]) < WORD_BITS:
        return (edge_mask(e) & edge_mask(f)).bit_count()
    return len(set(e) & set(f))


class HostIndex:
    """Precomputed per-host lookup tables.

    Edge sets are Python ints used as bitsets over edge ranks; vertex sets are
    bitsets over vertex indices.  Neighbourhood tables are filled lazily.
    """

    def __init__(self, host: HostGraph):
        self.host = host
        self.m = host.edge_count
        edges = sorted(combinations(range(host.n), host.s), key=lambda e: e[::-1])
        self.edges = tuple(edges)
        self.masks = tuple(edge_mask(e) for e in edges)
        self.full = (1 << self.m) - 1
        inc = [0] * host.n
        for r, e in enumerate(edges):
            bit = 1 << r
            for v in e:
                inc[v] |= bit
        self.inc = tuple(inc)
        self._touch = {}
        self._meet1 = {}

    def rank(self, e: Sequence[int]) -> int:
        return sum(comb(v, i + 1) for i, v in enumerate(e))

    def touch(self, r: int) -> int:
        """Edges sharing at least one vertex with edge ``r`` (including itself)."""
        t = self._touch.get(r)
        if t is None:
            t = 0
            for v in self.edges[r]:
                t |= self.inc[v]
            self._touch[r] = t
        return t

    def meet1(self, r: int) -> int:
        """Edges meeting edge ``r`` in exactly one vertex."""
        t = self._meet1.get(r)
        if t is None:
            e = self.edges[r]
            t = 0
            for v in e:
                others = 0
                for u in e:
                    if u != v:
                        others |= self.inc[u]
                t |= self.inc[v] & ~others
            self._meet1[r] = t
        return t

    def avoid(self, vmask: int) -> int:
        """Edges disjoint from the vertex bitset ``vmask``."""
        hit = 0
        for v in mask_vertices(vmask):
            hit |= self.inc[v]
        return self.full & ~hit


@lru_cache(maxsize=64)
def host_index(host: HostGraph) -> HostIndex:
    return HostIndex(host)


@dataclass(frozen=True, eq=False)
class Coloring:
    """A surjective map from edge ranks onto colors 0..num_colors-1."""

    host: HostGraph
    colors: np.ndarray
    num_colors: int = field(default=-1)

    def __post_init__(self):
        arr = np.asarray(self.colors, dtype=np.int64).copy()
        if arr.ndim != 1 or arr.shape[0] != self.host.edge_count:
            raise InvalidInput(
                f"coloring has {arr.size} entries, expected C({self.host.n},{self.host.s})"
                f" = {self.host.edge_count}")
        c = int(arr.max()) + 1 if arr.size else 0
        if self.num_colors not in (-1, c):
            raise InvalidInput(f"declared {self.num_colors} colors but palette spans {c}")
        if arr.size and int(arr.min()) < 0:
            raise InvalidInput("negative color id")
        used = np.unique(arr)
        if used.size != c:
            missing = sorted(set(range(c)) - set(used.tolist()))
            raise InvalidInput(f"colors not surjective: {missing[:5]} unused")
        arr.setflags(write=False)
        object.__setattr__(self, "colors", arr)
        object.__setattr__(self, "num_colors", c)

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.host == other.host and np.array_equal(self.colors, other.colors)

    def color_of(self, e: Sequence[int]) -> int:
        return int(self.colors[edge_rank(self.host, e)])

    def classes(self) -> list:
        """Edge ranks of each color class, in rank order."""
        out = [[] for _ in range(self.num_colors)]
        for r, c in enumerate(self.colors.tolist()):
            out[c].append(r)
        return out

    @classmethod
    def monochromatic(cls, host: HostGraph) -> "Coloring":
        return cls(host, np.zeros(host.edge_count, dtype=np.int64))

    @classmethod
    def all_distinct(cls, host: HostGraph) -> "Coloring":
        return cls(host, np.arange(host.edge_count, dtype=np.int64))

    @classmethod
    def from_labels(cls, host: HostGraph, labels: Sequence) -> "Coloring":
        """Relabel arbitrary hashable labels densely by first appearance."""
        seen = {}
        out = np.empty(len(labels), dtype=np.int64)
        for i, lab in enumerate(labels):
            out[i] = seen.setdefault(lab, len(seen))
        return cls(host, out)
