"""Detection of (rainbow) paths, cycles and matchings in K_n^(s).

Motif length ``k`` always counts edges.  For s = 2 a linear path of length k
is the graph path on k + 1 vertices.

Three-edge linear and loose cycles must not have a vertex common to all
three edges; otherwise every star would contain one.
"""
from __future__ import annotations

import enum
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Iterable, Optional, Sequence

from .core import Coloring, HostGraph, edge_mask, host_index, make_edge, mask_vertices
from .errors import InvalidInput, ResourceLimit


class MotifKind(enum.Enum):
    LinearPath = "linear-path"
    LoosePath = "loose-path"
    BergePath = "berge-path"
    LinearCycle = "linear-cycle"
    LooseCycle = "loose-cycle"
    BergeCycle = "berge-cycle"
    Matching = "matching"

    @property
    def is_cycle(self) -> bool:
        return self in (MotifKind.LinearCycle, MotifKind.LooseCycle, MotifKind.BergeCycle)

    @property
    def is_berge(self) -> bool:
        return self in (MotifKind.BergePath, MotifKind.BergeCycle)

    @property
    def is_linear(self) -> bool:
        return self in (MotifKind.LinearPath, MotifKind.LinearCycle)

    @classmethod
    def parse(cls, name) -> "MotifKind":
        if isinstance(name, cls):
            return name
        for kind in cls:
            if name in (kind.value, kind.name):
                return kind
        raise InvalidInput(f"unknown motif kind {name!r}")


@dataclass(frozen=True)
class MotifSpec:
    kind: MotifKind
    k: int

    def __post_init__(self):
        object.__setattr__(self, "kind", MotifKind.parse(self.kind))
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidInput(f"motif length must be a positive integer, got {self.k!r}")
        if self.kind.is_cycle and self.k < 3:
            raise InvalidInput(f"{self.kind.value} needs k >= 3, got {self.k}")

    def check_host(self, host: HostGraph) -> None:
        if self.kind is MotifKind.BergePath and self.k + 1 > host.n:
            raise InvalidInput(f"berge path of length {self.k} needs {self.k + 1} vertices")
        if self.kind is MotifKind.BergeCycle and self.k > host.n:
            raise InvalidInput(f"berge cycle of length {self.k} needs {self.k} vertices")

    def label(self) -> str:
        return f"{self.kind.value}[{self.k}]"


@dataclass
class Witness:
    kind: MotifKind
    k: int
    edges: list
    defining_vertices: list = field(default_factory=list)
    colors: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "k": self.k,
            "edges": [list(e) for e in self.edges],
            "defining_vertices": list(self.defining_vertices),
            "colors": list(self.colors),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Witness":
        try:
            return cls(
                kind=MotifKind.parse(d["kind"]),
                k=int(d["k"]),
                edges=[tuple(sorted(int(v) for v in e)) for e in d["edges"]],
                defining_vertices=[int(v) for v in d.get("defining_vertices", [])],
                colors=[int(c) for c in d.get("colors", [])],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed witness: {exc}") from exc

    @property
    def spec(self) -> MotifSpec:
        return MotifSpec(self.kind, self.k)


# ---------------------------------------------------------------------------
# verification


def _structure_ok(kind: MotifKind, edges: list, dv: Sequence[int]) -> bool:
    k = len(edges)
    sets = [set(e) for e in edges]
    if len({frozenset(e) for e in sets}) != k:
        return False
    if kind is MotifKind.Matching:
        return all(not (a & b) for a, b in combinations(sets, 2))
    if kind.is_berge:
        need = k + 1 if kind is MotifKind.BergePath else k
        if len(dv) != need or len(set(dv)) != need:
            return False
        for i, e in enumerate(sets):
            nxt = dv[(i + 1) % need] if kind is MotifKind.BergeCycle else dv[i + 1]
            if dv[i] not in e or nxt not in e:
                return False
        return True
    if dv:
        return False
    cyclic = kind.is_cycle
    for i, j in combinations(range(k), 2):
        consecutive = j == i + 1 or (cyclic and i == 0 and j == k - 1)
        meet = len(sets[i] & sets[j])
        if consecutive:
            if kind.is_linear and meet != 1:
                return False
            if not kind.is_linear and meet < 1:
                return False
        elif meet:
            return False
    if cyclic and k == 3 and sets[0] & sets[1] & sets[2]:
        return False
    return True


def verify_witness(w: Witness, m: MotifSpec, coloring: Optional[Coloring] = None,
                   host: Optional[HostGraph] = None) -> bool:
    """Check every structural clause of ``m`` and, given a coloring, rainbowness."""
    if w.kind is not m.kind or len(w.edges) != m.k or w.k != m.k:
        raise InvalidInput(f"witness is {w.kind.value}[{len(w.edges)}], expected {m.label()}")
    host = coloring.host if coloring is not None else host
    edges = []
    for e in w.edges:
        if host is not None:
            try:
                e = make_edge(host, e)
            except InvalidInput:
                return False
        edges.append(tuple(e))
    if not _structure_ok(m.kind, edges, list(w.defining_vertices)):
        return False
    if coloring is not None:
        cols = [coloring.color_of(e) for e in edges]
        if len(set(cols)) != len(cols):
            return False
        if w.colors and list(w.colors) != cols:
            return False
    return True


def classify_vertices(w: Witness) -> dict:
    """Map each vertex of the witness to 'cross' (>= 2 edges) or 'free' (exactly 1)."""
    count = {}
    for e in w.edges:
        for v in e:
            count[v] = count.get(v, 0) + 1
    return {v: ("cross" if c >= 2 else "free") for v, c in sorted(count.items())}


def linear_to_berge(w: Witness) -> Witness:
    """Re-read a linear path as a Berge path: shared vertices plus a free end vertex at each end."""
    if w.kind is not MotifKind.LinearPath:
        raise InvalidInput("only linear paths convert to Berge paths")
    edges = [tuple(e) for e in w.edges]
    inner = [(set(a) & set(b)).pop() for a, b in zip(edges, edges[1:])]
    used = set(inner)
    first = min(v for v in edges[0] if v not in used)
    used.add(first)
    last = min(v for v in edges[-1] if v not in used)
    return Witness(MotifKind.BergePath, w.k, edges, [first, *inner, last], list(w.colors))


# ---------------------------------------------------------------------------
# search engine


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class _Search:
    """Exhaustive backtracking for one (available edge set, coloring, motif).

    Colors are per-edge labels; the uncolored search gives every edge its own
    color so "rainbow" reduces to "distinct edges".
    """

    def __init__(self, host: HostGraph, spec: MotifSpec, color_of: Optional[Sequence[int]],
                 available: Optional[int] = None):
        self.host = host
        self.spec = spec
        self.kind = spec.kind
        self.k = spec.k
        self.idx = idx = host_index(host)
        self.avail = idx.full if available is None else available & idx.full
        self.colored = color_of is not None
        if color_of is None:
            self.color_of = range(idx.m)
            self.class_mask = None
        else:
            self.color_of = color_of
            cm = {}
            for r in _bits(self.avail):
                c = color_of[r]
                cm[c] = cm.get(c, 0) | (1 << r)
            self.class_mask = cm
        self.nodes = 0
        self._setup_pins()

    def cmask(self, r: int) -> int:
        if self.class_mask is None:
            return 1 << r
        return self.class_mask[self.color_of[r]]

    # -- pinned-class bound ------------------------------------------------
    # A color class whose edges share a vertex p can enter a path/cycle at
    # most twice (matching: once) because p lies in at most two of its edges.

    def _setup_pins(self):
        self.use_pins = False
        if self.kind.is_berge or self.class_mask is None:
            return
        idx = self.idx
        cap = 1 if self.kind is MotifKind.Matching else 2
        pin_of, pin_mask, pin_count = {}, {}, {}
        unpinned = 0
        for c, emask in self.class_mask.items():
            core = -1
            for r in _bits(emask):
                core &= idx.masks[r]
                if not core:
                    break
            if core:
                p = (core & -core).bit_length() - 1
                pin_of[c] = p
                pin_mask[p] = pin_mask.get(p, 0) | emask
                pin_count[p] = pin_count.get(p, 0) + 1
            else:
                unpinned += 1
        self.cap = cap
        self.pin_of, self.pin_mask, self.pin_count = pin_of, pin_mask, pin_count
        self.unpinned = unpinned
        self.root_bound = unpinned + sum(min(cap, n) for n in pin_count.values())
        self.use_pins = self.root_bound < 2 * self.k

    def _pin_bound(self, used_colors, allowed: int, usedc: int, last_mask: int,
                   first_mask: int, dead_mask: int) -> int:
        bound = self.unpinned - sum(1 for c in used_colors if c not in self.pin_of)
        per_pin = {}
        for c in used_colors:
            p = self.pin_of.get(c)
            if p is not None:
                per_pin[p] = per_pin.get(p, 0) + 1
        for p, pm in self.pin_mask.items():
            bit = 1 << p
            if dead_mask & bit:
                continue
            if self.kind is MotifKind.Matching:
                cap = 1
            elif (last_mask | first_mask) & bit:
                cap = 1
            else:
                cap = 2
            if pm & allowed & ~usedc:
                bound += min(cap, self.pin_count[p] - per_pin.get(p, 0))
        return bound

    # -- driver -------------------------------------------------------------

    def starts(self) -> list:
        if self.kind.is_berge:
            return list(range(self.host.n))
        return list(_bits(self.avail))

    def feasible_at_root(self) -> bool:
        k, s, n = self.k, self.host.s, self.host.n
        if not self.avail:
            return False
        ncolors = len(self.class_mask) if self.class_mask is not None else self.avail.bit_count()
        if ncolors < k:
            return False
        if self.use_pins and self.root_bound < k:
            return False
        kind = self.kind
        if kind is MotifKind.LinearPath and k * (s - 1) + 1 > n:
            return False
        if kind is MotifKind.LinearCycle and k * (s - 1) > n:
            return False
        if kind is MotifKind.Matching and k * s > n:
            return False
        return True

    def search(self, starts: Iterable[int]):
        if self.k == 1:
            if not self.avail:
                return None
            r = (self.avail & -self.avail).bit_length() - 1
            dv = list(self.idx.edges[r][:2]) if self.kind is MotifKind.BergePath else []
            return self._witness([r], dv)
        if self.kind.is_berge:
            fn = self._berge_start
        elif self.kind is MotifKind.Matching:
            fn = self._matching_start
        elif self.kind.is_cycle:
            fn = self._cycle_start
        else:
            fn = self._path_start
        for st in starts:
            found = fn(st)
            if found is not None:
                return found
        return None

    def _witness(self, ranks, dv):
        edges = [self.idx.edges[r] for r in ranks]
        colors = [int(self.color_of[r]) for r in ranks] if self.colored else []
        return Witness(self.kind, self.k, edges, list(dv), colors)

    def _nbr(self, r: int) -> int:
        if self.kind.is_linear:
            return self.idx.meet1(r)
        return self.idx.touch(r) & ~(1 << r)

    def _vertices_ok(self, remaining: int, vused: int) -> bool:
        free = self.host.n - vused.bit_count()
        s = self.host.s
        kind = self.kind
        if kind is MotifKind.LinearPath:
            return remaining * (s - 1) <= free
        if kind is MotifKind.LinearCycle:
            return remaining * (s - 1) - 1 <= free
        if kind is MotifKind.LoosePath:
            return remaining <= free
        if kind is MotifKind.LooseCycle:
            return remaining - 1 <= free
        return remaining * s <= free

    # -- linear / loose paths -------------------------------------------------

    def _path_start(self, e1: int):
        idx = self.idx
        return self._path_ext([e1], 0, self.cmask(e1), idx.masks[e1], [self.color_of[e1]])

    def _path_ext(self, path, forbid, usedc, vused, used_colors):
        self.nodes += 1
        j = len(path)
        if j == self.k:
            return self._witness(path, [])
        last = path[-1]
        remaining = self.k - j
        if not self._vertices_ok(remaining, vused):
            return None
        idx = self.idx
        if self.use_pins:
            allowed = self.avail & ~forbid
            dead = 0
            for r in path[:-1]:
                dead |= idx.masks[r]
            if self._pin_bound(used_colors, allowed, usedc, idx.masks[last], 0, dead) < remaining:
                return None
        cands = self._nbr(last) & self.avail & ~forbid & ~usedc
        nforbid = forbid | idx.touch(last)
        for r in _bits(cands):
            used_colors.append(self.color_of[r])
            path.append(r)
            found = self._path_ext(path, nforbid, usedc | self.cmask(r), vused | idx.masks[r],
                                   used_colors)
            path.pop()
            used_colors.pop()
            if found is not None:
                return found
        return None

    # -- linear / loose cycles (first edge has least rank) ---------------------

    def _cycle_start(self, e1: int):
        idx = self.idx
        higher = self.avail & ~((1 << (e1 + 1)) - 1)
        return self._cycle_ext([e1], 0, self.cmask(e1), idx.masks[e1], [self.color_of[e1]], higher)

    def _cycle_ext(self, path, forbid_mid, usedc, vused, used_colors, higher):
        self.nodes += 1
        j = len(path)
        if j == self.k:
            return self._witness(path, [])
        idx = self.idx
        e1, last = path[0], path[-1]
        remaining = self.k - j
        if not self._vertices_ok(remaining, vused):
            return None
        t1 = idx.touch(e1)
        if self.use_pins:
            allowed = higher & ~forbid_mid
            dead = 0
            for r in path[1:-1]:
                dead |= idx.masks[r]
            bound = self._pin_bound(used_colors, allowed, usedc, idx.masks[last],
                                    idx.masks[e1], dead)
            if bound < remaining:
                return None
        base = self._nbr(last) & higher & ~usedc
        if j + 1 == self.k:
            cands = base & self._nbr(e1) & ~forbid_mid
            if self.k == 3:
                common = idx.masks[e1] & idx.masks[last]
                for v in mask_vertices(common):
                    cands &= ~idx.inc[v]
        elif j == 1:
            cands = base
        else:
            cands = base & ~forbid_mid & ~t1
        nforbid = forbid_mid | (idx.touch(last) if j >= 2 else 0)
        for r in _bits(cands):
            used_colors.append(self.color_of[r])
            path.append(r)
            found = self._cycle_ext(path, nforbid, usedc | self.cmask(r), vused | idx.masks[r],
                                    used_colors, higher)
            path.pop()
            used_colors.pop()
            if found is not None:
                return found
        return None

    # -- matchings (edges in increasing rank) ------------------------------------

    def _matching_start(self, e1: int):
        idx = self.idx
        return self._matching_ext([e1], idx.touch(e1), self.cmask(e1), idx.masks[e1],
                                  [self.color_of[e1]])

    def _matching_ext(self, chosen, forbid, usedc, vused, used_colors):
        self.nodes += 1
        j = len(chosen)
        if j == self.k:
            return self._witness(chosen, [])
        remaining = self.k - j
        if not self._vertices_ok(remaining, vused):
            return None
        higher = self.avail & ~((1 << (chosen[-1] + 1)) - 1)
        allowed = higher & ~forbid
        if self.use_pins and self._pin_bound(used_colors, allowed, usedc, 0, 0, vused) < remaining:
            return None
        cands = allowed & ~usedc
        if cands.bit_count() < remaining:
            return None
        idx = self.idx
        for r in _bits(cands):
            used_colors.append(self.color_of[r])
            chosen.append(r)
            found = self._matching_ext(chosen, forbid | idx.touch(r), usedc | self.cmask(r),
                                       vused | idx.masks[r], used_colors)
            chosen.pop()
            used_colors.pop()
            if found is not None:
                return found
        return None

    # -- Berge paths and cycles: alternating v1, e1, v2, e2, ... --------------

    def _berge_start(self, v1: int):
        return self._berge_ext([v1], [], 1 << v1, 0)

    def _berge_ext(self, verts, path, vused, usedc):
        self.nodes += 1
        j = len(path)
        if j == self.k:
            return self._witness(path, verts)
        idx = self.idx
        cyclic = self.kind is MotifKind.BergeCycle
        remaining = self.k - j
        free = self.host.n - vused.bit_count()
        if free < (remaining - 1 if cyclic else remaining):
            return None
        v, v1 = verts[-1], verts[0]
        cands = idx.inc[v] & self.avail & ~usedc
        if cyclic and j == self.k - 1:
            cands &= idx.inc[v1]
            for r in _bits(cands):
                path.append(r)
                w = self._witness(path, verts)
                path.pop()
                if w is not None:
                    return w
            return None
        low_ok = ~((1 << (v1 + 1)) - 1) if cyclic else -1
        seen = set()
        for r in _bits(cands):
            c = self.color_of[r]
            for u in mask_vertices(idx.masks[r] & ~vused & low_ok):
                if (c, u) in seen:
                    continue
                seen.add((c, u))
                verts.append(u)
                path.append(r)
                found = self._berge_ext(verts, path, vused | (1 << u), usedc | self.cmask(r))
                path.pop()
                verts.pop()
                if found is not None:
                    return found
        return None


def _run(search: _Search, threads: int):
    if not search.feasible_at_root():
        return None
    starts = search.starts()
    if threads <= 1 or len(starts) <= 1:
        return search.search(starts)
    nchunks = min(len(starts), threads * 4)
    size = -(-len(starts) // nchunks)
    chunks = [starts[i:i + size] for i in range(0, len(starts), size)]

    def work(chunk):
        sub = _Search(search.host, search.spec, search.color_of if search.colored else None,
                      search.avail)
        return sub.search(chunk)

    with ThreadPoolExecutor(max_workers=threads) as ex:
        results = list(ex.map(work, chunks))
    for res in results:
        if res is not None:
            return res
    return None


def _edge_set_mask(host: HostGraph, available_edges) -> int:
    if isinstance(available_edges, int):
        return available_edges
    idx = host_index(host)
    m = 0
    for e in available_edges:
        if isinstance(e, int):
            m |= 1 << e
        else:
            m |= 1 << idx.rank(make_edge(host, e))
    return m


def find_copy(host: HostGraph, available_edges, m: MotifSpec, threads: int = 1) -> Optional[Witness]:
    """Find an uncolored copy of ``m`` using only ``available_edges``.

    ``available_edges`` is an iterable of edges or edge ranks, or a rank
    bitset.  The returned witness is the least one in the search order
    (edge-rank sequence; alternating vertex/edge sequence for Berge kinds),
    independent of ``threads``.
    """
    m.check_host(host)
    search = _Search(host, m, None, _edge_set_mask(host, available_edges))
    return _run(search, threads)


def find_rainbow(coloring: Coloring, m: MotifSpec, threads: int = 1,
                 available_edges=None) -> Optional[Witness]:
    """Exhaustive search for a rainbow copy; ``None`` certifies rainbow-freeness."""
    host = coloring.host
    m.check_host(host)
    avail = None if available_edges is None else _edge_set_mask(host, available_edges)
    search = _Search(host, m, coloring.colors.tolist(), avail)
    return _run(search, threads)


def rainbow_search_nodes(coloring: Coloring, m: MotifSpec) -> tuple:
    """Run the serial rainbow search and also report the number of nodes visited."""
    search = _Search(coloring.host, m, coloring.colors.tolist())
    found = search.search(search.starts()) if search.feasible_at_root() else None
    return found, search.nodes


# ---------------------------------------------------------------------------
# naive oracle

DEFAULT_NAIVE_BUDGET = 10 ** 8


def _naive_orderings(kind: MotifKind, edges):
    if kind is MotifKind.Matching:
        yield list(edges), []
        return
    for perm in permutations(edges):
        perm = list(perm)
        if not kind.is_berge:
            yield perm, []
            continue
        k = len(perm)
        sets = [set(e) for e in perm]
        if kind is MotifKind.BergePath:
            choices = [sorted(sets[0])]
            choices += [sorted(sets[i - 1] & sets[i]) for i in range(1, k)]
            choices.append(sorted(sets[-1]))
        else:
            choices = [sorted(sets[i - 1] & sets[i]) for i in range(k)]
        for dv in product(*choices):
            yield perm, list(dv)


def _union_size_range(kind: MotifKind, k: int, s: int) -> tuple:
    """Vertex count of any copy; a necessary condition checked before ordering."""
    if kind is MotifKind.Matching:
        return k * s, k * s
    if kind is MotifKind.LinearPath:
        return k * (s - 1) + 1, k * (s - 1) + 1
    if kind is MotifKind.LinearCycle:
        return k * (s - 1), k * (s - 1)
    if kind is MotifKind.LoosePath:
        return s, k * (s - 1) + 1
    if kind is MotifKind.LooseCycle:
        return s, k * (s - 1)
    return 0, k * s


def find_rainbow_naive(coloring: Coloring, m: MotifSpec,
                       budget: int = DEFAULT_NAIVE_BUDGET) -> Optional[Witness]:
    """Reference oracle: try every k-set of differently colored edges in every order."""
    host = coloring.host
    m.check_host(host)
    total = host.edge_count
    if comb(total, m.k) * factorial(m.k) > budget:
        raise ResourceLimit(f"naive search over C({total},{m.k})*{m.k}! tuples exceeds {budget}")
    idx = host_index(host)
    classes = coloring.classes()
    lo, hi = _union_size_range(m.kind, m.k, host.s)
    for palette in combinations(range(coloring.num_colors), m.k):
        for ranks in product(*(classes[c] for c in palette)):
            union = 0
            for r in ranks:
                union |= idx.masks[r]
            if not lo <= union.bit_count() <= hi:
                continue
            edges = [idx.edges[r] for r in ranks]
            for order, dv in _naive_orderings(m.kind, edges):
                w = Witness(m.kind, m.k, order, dv, [coloring.color_of(e) for e in order])
                if _structure_ok(m.kind, order, dv):
                    return w
    return None
