"""Exact Turán and anti-Ramsey numbers on tiny hosts, plus Monte-Carlo estimates.

Both exact searches split into a fixed list of top-level subtrees.  Each
subtree is solved independently from the same deterministic starting
incumbent, so results and node counts do not depend on the thread count.
"""
from __future__ import annotations

import enum
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import Coloring, HostGraph, host_index
from .errors import CertificateRefuted, InvalidInput, NotCovered, ResourceLimit
from .formulas import ar_value, ex_value
from .io import format_coloring
from .motif import MotifSpec, _bits, _Search, find_copy, find_rainbow

TURAN_EDGE_CAP = 120
AR_EDGE_CAP = 16
OUTSIDE_REGIME = "outside paper regime"


class SolveStatus(enum.Enum):
    Proven = "Proven"
    BudgetExceeded = "BudgetExceeded"
    Unattainable = "Unattainable"


@dataclass(frozen=True)
class Budget:
    """Node limit (applied to each top-level subtree) and wall-clock limit in seconds."""

    node_limit: int = 5_000_000
    time_limit: float = 3600.0

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise InvalidInput("budget limits must be positive")

    def to_dict(self) -> dict:
        return {"node_limit": self.node_limit, "time_limit": self.time_limit}


@dataclass
class SolveResult:
    problem: str  # "ex" or "ar"
    motif: MotifSpec
    host: HostGraph
    value: Optional[int]
    witness: object  # list of edges (ex), Coloring (ar) or None
    nodes_explored: int
    status: SolveStatus
    regime: str
    budget: Budget = field(default_factory=Budget)

    @property
    def proven(self) -> bool:
        return self.status is SolveStatus.Proven

    def to_dict(self) -> dict:
        if isinstance(self.witness, Coloring):
            wit = format_coloring(self.witness)
        elif self.witness is None:
            wit = None
        else:
            wit = [list(e) for e in self.witness]
        return {
            "problem": self.problem,
            "motif": {"kind": self.motif.kind.value, "k": self.motif.k},
            "n": self.host.n,
            "s": self.host.s,
            "status": self.status.value,
            "value": self.value,
            "nodes_explored": self.nodes_explored,
            "regime": self.regime,
            "budget": self.budget.to_dict(),
            "witness": wit,
        }


class _OutOfBudget(Exception):
    pass


# ---------------------------------------------------------------------------
# copy enumeration


class _Collector(_Search):
    """Runs the uncolored search to exhaustion, recording each copy's edge set."""

    def __init__(self, host, spec):
        super().__init__(host, spec, None)
        self.found = set()

    def _witness(self, ranks, dv):
        mask = 0
        for r in ranks:
            mask |= 1 << r
        self.found.add(mask)
        return None


def all_copies(host: HostGraph, m: MotifSpec) -> list:
    """Edge-rank bitsets of every copy of ``m`` in ``host``, sorted."""
    m.check_host(host)
    if m.k == 1:
        return [1 << r for r in range(host.edge_count)]
    col = _Collector(host, m)
    if col.feasible_at_root():
        col.search(col.starts())
    return sorted(col.found)


def _regime(fn, m, host):
    try:
        return fn(m, host.n, host.s).regime
    except NotCovered:
        return OUTSIDE_REGIME


def _check_cap(host, cap, what):
    if host.edge_count > cap:
        raise ResourceLimit(f"{what} needs C({host.n},{host.s}) = {host.edge_count} edges "
                            f"<= cap {cap}")


def _run_subtrees(tasks, threads):
    if threads <= 1 or len(tasks) <= 1:
        return [t() for t in tasks]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(lambda t: t(), tasks))


class _Counter:
    def __init__(self, budget: Budget, deadline: float):
        self.nodes = 0
        self.limit = budget.node_limit
        self.deadline = deadline

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit or (self.nodes & 1023 == 0 and time.monotonic() > self.deadline):
            raise _OutOfBudget


# ---------------------------------------------------------------------------
# Turán: maximum copy-free edge set


class _TuranSearch:
    def __init__(self, m_edges, copies_with, adj, counter):
        self.copies_with = copies_with
        self.adj = adj  # pairwise conflict bitsets when k == 2, else None
        self.counter = counter

    def add(self, chosen, cand, c):
        """Candidates left after adding edge ``c`` to ``chosen``."""
        cand &= ~(1 << c)
        if self.adj is not None:
            return cand & ~self.adj[c]
        for rest in self.copies_with[c]:
            out = rest & ~chosen
            if out & (out - 1) == 0:
                cand &= ~out
        return cand

    def bound(self, cand):
        if self.adj is None:
            return cand.bit_count()
        # greedy clique cover of the conflict graph on cand
        count, rest, adj = 0, cand, self.adj
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= ~(1 << v)
            p = rest & adj[v]
            while p:
                u = (p & -p).bit_length() - 1
                rest &= ~(1 << u)
                p &= adj[u] & ~(1 << u)
            count += 1
        return count

    def greedy(self, chosen, cand):
        while cand:
            c = (cand & -cand).bit_length() - 1
            cand = self.add(chosen, cand, c)
            chosen |= 1 << c
        return chosen

    def solve(self, chosen, cand, best):
        self.best, self.best_mask = best, None
        try:
            self._dfs(chosen, chosen.bit_count(), cand)
            exceeded = False
        except _OutOfBudget:
            exceeded = True
        return self.best, self.best_mask, exceeded

    def _dfs(self, chosen, size, cand):
        self.counter.tick()
        if size > self.best:
            self.best, self.best_mask = size, chosen
        while cand:
            if size + self.bound(cand) <= self.best:
                return
            c = (cand & -cand).bit_length() - 1
            cand &= ~(1 << c)
            self._dfs(chosen | (1 << c), size + 1, self.add(chosen, cand, c))


def turan_exact(host: HostGraph, m: MotifSpec, budget: Optional[Budget] = None,
                threads: int = 1, edge_cap: int = TURAN_EDGE_CAP) -> SolveResult:
    """ex(n, s, m) by branch-and-bound over edges in colex order.

    The extremal set may be assumed to contain edge {0..s-1} by vertex
    transitivity.  Top-level subtrees fix the second edge.
    """
    budget = budget or Budget()
    m.check_host(host)
    _check_cap(host, edge_cap, "turan_exact")
    regime = _regime(ex_value, m, host)
    idx = host_index(host)
    if m.k == 1:
        return SolveResult("ex", m, host, 0, [], 0, SolveStatus.Proven, regime, budget)
    copies = all_copies(host, m)
    copies_with = [[] for _ in range(idx.m)]
    adj = None
    if m.k == 2:
        adj = [0] * idx.m
        for q in copies:
            a, b = _bits(q)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    else:
        for q in copies:
            for r in _bits(q):
                copies_with[r].append(q & ~(1 << r))
    deadline = time.monotonic() + budget.time_limit
    probe = _TuranSearch(idx.m, copies_with, adj, _Counter(budget, deadline))
    root_cand = probe.add(0, idx.full, 0)
    incumbent = probe.greedy(1, root_cand)
    start = incumbent.bit_count()

    tasks = []
    for c in _bits(root_cand):
        later = root_cand & ~((1 << (c + 1)) - 1)

        def task(c=c, later=later):
            srch = _TuranSearch(idx.m, copies_with, adj, _Counter(budget, deadline))
            chosen = 1 | (1 << c)
            res = srch.solve(chosen, srch.add(1, later, c), start)
            return res + (srch.counter.nodes,)
        tasks.append(task)
    results = _run_subtrees(tasks, threads)

    best, best_mask, exceeded, nodes = start, incumbent, False, 1
    for val, mask, ex, cnt in results:
        nodes += cnt
        exceeded |= ex
        if mask is not None and val > best:
            best, best_mask = val, mask
    witness = [idx.edges[r] for r in _bits(best_mask)]
    if find_copy(host, best_mask, m) is not None:
        raise AssertionError("Turán witness contains a copy")
    status = SolveStatus.BudgetExceeded if exceeded else SolveStatus.Proven
    return SolveResult("ex", m, host, best, witness, nodes, status, regime, budget)


# ---------------------------------------------------------------------------
# anti-Ramsey: maximum number of colors in a rainbow-free surjective coloring


class _ArSearch:
    def __init__(self, m_edges, k, by_last, adj, counter):
        self.m = m_edges
        self.k = k
        self.by_last = by_last
        self.adj = adj
        self.counter = counter
        self.colors = [-1] * m_edges

    def rainbow_through(self, r) -> bool:
        colors, k = self.colors, self.k
        for others in self.by_last[r]:
            if len({colors[x] for x in others} | {colors[r]}) == k:
                return True
        return False

    def bound(self, r, ncolors):
        if self.adj is None:
            return ncolors + self.m - r
        # each conflict component of the uncolored edges adds at most one
        # color, none if it is tied to an already colored edge
        colored = (1 << r) - 1
        rest = ((1 << self.m) - 1) & ~colored
        extra = 0
        adj = self.adj
        while rest:
            v = (rest & -rest).bit_length() - 1
            comp, frontier, touched = 1 << v, 1 << v, 0
            while frontier:
                nb = 0
                for u in _bits(frontier):
                    nb |= adj[u]
                touched |= nb
                frontier = nb & rest & ~comp
                comp |= frontier
            rest &= ~comp
            if not touched & colored:
                extra += 1
        return ncolors + extra

    def solve(self, prefix, best):
        for r, c in enumerate(prefix):
            self.colors[r] = c
        self.best, self.best_colors = best, None
        try:
            self._dfs(len(prefix), max(prefix) + 1)
            exceeded = False
        except _OutOfBudget:
            exceeded = True
        return self.best, self.best_colors, exceeded

    def _dfs(self, r, ncolors):
        self.counter.tick()
        if r == self.m:
            if ncolors > self.best:
                self.best, self.best_colors = ncolors, list(self.colors)
            return
        if self.bound(r, ncolors) <= self.best:
            return
        for col in [ncolors] + list(range(ncolors)):
            self.colors[r] = col
            if not self.rainbow_through(r):
                self._dfs(r + 1, ncolors + (col == ncolors))
        self.colors[r] = -1


def _rgs_prefixes(search: _ArSearch, length: int) -> list:
    """Rainbow-free restricted-growth prefixes in search order."""
    out = []

    def rec(r, ncolors):
        if r == length:
            out.append(list(search.colors[:length]))
            return
        for col in [ncolors] + list(range(ncolors)):
            search.colors[r] = col
            if not search.rainbow_through(r):
                rec(r + 1, ncolors + (col == ncolors))
        search.colors[r] = -1

    search.colors[0] = 0
    if not search.rainbow_through(0):
        rec(1, 1)
    search.colors[0] = -1
    return out


def ar_exact(host: HostGraph, m: MotifSpec, budget: Optional[Budget] = None,
             threads: int = 1, edge_cap: int = AR_EDGE_CAP) -> SolveResult:
    """ar(n, s, m) by exhaustive search over set partitions of the edges.

    Colors are assigned edge by edge in rank order in restricted-growth form;
    a partial coloring is dropped once a rainbow copy appears.  Returns status
    Unattainable (value None) when the host has no copy of the motif.
    """
    budget = budget or Budget()
    m.check_host(host)
    _check_cap(host, edge_cap, "ar_exact")
    regime = _regime(ar_value, m, host)
    idx = host_index(host)
    copies = all_copies(host, m)
    if not copies:
        return SolveResult("ar", m, host, None, None, 0, SolveStatus.Unattainable, regime, budget)
    if m.k == 1:
        # every colored edge is a rainbow copy: no rainbow-free coloring exists
        return SolveResult("ar", m, host, 1, None, 0, SolveStatus.Proven, regime, budget)
    by_last = [[] for _ in range(idx.m)]
    for q in copies:
        top = q.bit_length() - 1
        by_last[top].append(tuple(_bits(q & ~(1 << top))))
    adj = None
    if m.k == 2:
        adj = [0] * idx.m
        for q in copies:
            a, b = _bits(q)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    deadline = time.monotonic() + budget.time_limit

    def new_search():
        return _ArSearch(idx.m, m.k, by_last, adj, _Counter(budget, deadline))

    prefixes = _rgs_prefixes(new_search(), min(3, idx.m))

    def make_task(prefix):
        def task():
            srch = new_search()
            return srch.solve(prefix, 1) + (srch.counter.nodes,)
        return task

    results = _run_subtrees([make_task(p) for p in prefixes], threads)
    best, best_colors, exceeded, nodes = 1, [0] * idx.m, False, 0
    for val, cols, ex, cnt in results:
        nodes += cnt
        exceeded |= ex
        if cols is not None and val > best:
            best, best_colors = val, cols
    witness = Coloring(host, np.array(best_colors, dtype=np.int64))
    if find_rainbow(witness, m) is not None:
        raise AssertionError("anti-Ramsey witness contains a rainbow copy")
    status = SolveStatus.BudgetExceeded if exceeded else SolveStatus.Proven
    return SolveResult("ar", m, host, best + 1, witness, nodes, status, regime, budget)


def ar_lower_certificate(coloring: Coloring, m: MotifSpec, threads: int = 1) -> int:
    """Color count c of a rainbow-free coloring, certifying ar >= c + 1."""
    w = find_rainbow(coloring, m, threads=threads)
    if w is not None:
        raise CertificateRefuted(f"coloring contains a rainbow {m.label()}", witness=w)
    return coloring.num_colors


# ---------------------------------------------------------------------------
# Monte-Carlo


@dataclass(frozen=True)
class RainbowEstimate:
    probability: float
    hits: int
    trials: int
    c: int
    seed: int

    def to_dict(self) -> dict:
        return {"c": self.c, "trials": self.trials, "hits": self.hits,
                "probability": self.probability, "seed": self.seed}


def _surjection_counts(m_edges: int, c: int) -> list:
    """table[j][u]: maps of j further edges into c colors covering the c-u unused ones."""
    table = [[0] * (c + 1) for _ in range(m_edges + 1)]
    table[0][c] = 1
    for j in range(1, m_edges + 1):
        prev, row = table[j - 1], table[j]
        for u in range(c + 1):
            row[u] = u * prev[u] + ((c - u) * prev[u + 1] if u < c else 0)
    return table


def random_surjective_coloring(host: HostGraph, c: int, rng: random.Random,
                               table: Optional[list] = None) -> Coloring:
    """Uniform random surjective c-coloring, up to renaming colors.

    Edges are colored in rank order; the chance of opening a new color is the
    exact share of completions that do so, so no sample is ever rejected.
    """
    mtot = host.edge_count
    if not 1 <= c <= mtot:
        raise InvalidInput(f"need 1 <= c <= C(n,s) = {mtot}, got {c}")
    table = table or _surjection_counts(mtot, c)
    out = np.empty(mtot, dtype=np.int64)
    u = 0
    for r in range(mtot):
        left = mtot - r
        old = u * table[left - 1][u]
        if rng.randrange(table[left][u]) < old:
            out[r] = rng.randrange(u)
        else:
            out[r] = u
            u += 1
    return Coloring(host, out)


def rainbow_probability(host: HostGraph, m: MotifSpec, c: int, trials: int, seed: int,
                        threads: int = 1) -> RainbowEstimate:
    """Fraction of random surjective c-colorings that contain a rainbow copy."""
    m.check_host(host)
    if trials < 1:
        raise InvalidInput("trials must be >= 1")
    if not 1 <= c <= host.edge_count:
        raise InvalidInput(f"need 1 <= c <= C(n,s) = {host.edge_count}, got {c}")
    rng = random.Random(seed)
    table = _surjection_counts(host.edge_count, c)
    hits = 0
    for _ in range(trials):
        col = random_surjective_coloring(host, c, rng, table)
        if find_rainbow(col, m, threads=threads) is not None:
            hits += 1
    return RainbowEstimate(hits / trials, hits, trials, c, seed)
