"""Acceptance criteria, one test each.  Run with ``-s`` to see the summary lines."""
import json
import random
import time
from fractions import Fraction
from itertools import combinations
from math import comb, floor

import pytest

from antiramsey.constructions import (FamilySpec, berge_block_coloring, build_family,
                                      find_cherry_pairs, linear_path_lower_coloring,
                                      rainbow_plus_one)
from antiramsey.core import Coloring, HostGraph
from antiramsey.errors import InvalidInput, NotCovered, NotFound
from antiramsey.formulas import ar_value, berge_ar_bounds, erdos_matching_value, sandwich_check
from antiramsey.motif import MotifKind, MotifSpec, find_rainbow, find_rainbow_naive
from antiramsey.solver import SolveStatus, ar_exact, turan_exact

K = MotifKind


def report(num, ok, detail):
    print(f"\ncriterion {num:2d}: {'PASS' if ok else 'FAIL'} | {detail}")


def test_criterion_01_short_path_anti_ramsey():
    rows, ok = [], True
    for kind in (K.LinearPath, K.LoosePath):
        t0 = time.perf_counter()
        res = ar_exact(HostGraph(5, 3), MotifSpec(kind, 2))
        dt = time.perf_counter() - t0
        ok &= res.status is SolveStatus.Proven and res.value == 2 and dt < 10
        rows.append(f"{kind.value}={res.value} ({dt:.2f}s)")
    report(1, ok, "ar(5,3,k=2): " + ", ".join(rows) + "; expected 2 each, < 10 s")
    assert ok


def test_criterion_02_even_construction_grid():
    t0 = time.perf_counter()
    bad = []
    cases = 0
    for n in (8, 10, 12):
        for s in (3, 4):
            for k in (4, 6):
                t = k // 2
                col = linear_path_lower_coloring(HostGraph(n, s), k)
                if col.num_colors != comb(n, s) - comb(n - t + 1, s) + 1:
                    bad.append((n, s, k, "colors", col.num_colors))
                for kind in (K.LinearPath, K.LoosePath, K.LinearCycle, K.LooseCycle):
                    cases += 1
                    if find_rainbow(col, MotifSpec(kind, k)) is not None:
                        bad.append((n, s, k, kind.value))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 300
    report(2, ok, f"{cases} detector runs, {len(bad)} violations, {dt:.1f}s (< 300 s)")
    assert ok, bad


def test_criterion_03_odd_constructions():
    h = HostGraph(12, 4)
    col_b = linear_path_lower_coloring(h, 5)
    want_b = comb(12, 4) - comb(11, 4) + comb(9, 2) + 1
    ok_b = col_b.num_colors == want_b and find_rainbow(col_b, MotifSpec(K.LinearPath, 5)) is None
    col_p = rainbow_plus_one(h, build_family(h, FamilySpec.pair_book()))
    ok_p = col_p.num_colors == comb(10, 2) + 1 == 46 and \
        find_rainbow(col_p, MotifSpec(K.LinearPath, 3)) is None
    report(3, ok_b and ok_p,
           f"odd k=5 coloring {col_b.num_colors} colors (want {want_b}), rainbow-free={ok_b}; "
           f"pair book {col_p.num_colors} colors (want 46), rainbow-free={ok_p}")
    assert ok_b and ok_p


def test_criterion_04_berge_block_colorings():
    t0 = time.perf_counter()
    rows, ok = [], True
    for n, s, k in ((21, 3, 7), (12, 3, 4), (16, 3, 9)):
        col = berge_block_coloring(HostGraph(n, s), k)
        free = find_rainbow(col, MotifSpec(K.BergePath, k)) is None
        lower = floor(berge_ar_bounds(K.BergePath, n, s, k)[0].value)
        ok &= free and col.num_colors >= lower
        rows.append(f"({n},{s},{k}) colors={col.num_colors} >= {lower} free={free}")
    dt = time.perf_counter() - t0
    ok &= dt < 120
    report(4, ok, "; ".join(rows) + f"; {dt:.1f}s (< 120 s)")
    assert ok


def test_criterion_05_turan_desk_scale():
    t0 = time.perf_counter()
    a = turan_exact(HostGraph(8, 3), MotifSpec(K.LinearPath, 2))
    b = turan_exact(HostGraph(6, 3), MotifSpec(K.Matching, 2))
    ok = a.proven and a.value == 8 and b.proven and b.value == 10 == \
        erdos_matching_value(6, 3, 2).value
    graph_bad = []
    for n in range(2, 9):
        for k in range(1, 5):
            r = turan_exact(HostGraph(n, 2), MotifSpec(K.LinearPath, k))
            if not r.proven or Fraction(r.value) > Fraction((k - 1) * n, 2):
                graph_bad.append((n, k, r.value))
    dt = time.perf_counter() - t0
    ok &= not graph_bad and dt < 600
    report(5, ok, f"ex(8,3,P2)={a.value}, ex(6,3,M2)={b.value}, graph grid violations="
                  f"{len(graph_bad)}, {dt:.1f}s (< 600 s)")
    assert ok, graph_bad


def _random_instance(rng, kind):
    n = rng.choice([5, 6, 7, 8])
    k = rng.randint(3 if kind.is_cycle else 1, 4)
    if kind is K.BergePath:
        k = min(k, n - 1)
    h = HostGraph(n, 3)
    c = rng.randint(1, 8)
    return Coloring.from_labels(h, [rng.randrange(c) for _ in range(h.edge_count)]), \
        MotifSpec(kind, k)


def test_criterion_06_oracle_equivalence():
    disagreements, present, total = 0, 0, 0
    for kind in MotifKind:
        rng = random.Random(f"acceptance-oracle-{kind.value}")
        for _ in range(200):
            col, m = _random_instance(rng, kind)
            fast, slow = find_rainbow(col, m), find_rainbow_naive(col, m)
            disagreements += (fast is None) != (slow is None)
            present += fast is not None
            total += 1
    ok = disagreements == 0
    report(6, ok, f"{total} colorings ({present} with a rainbow copy), "
                  f"{disagreements} disagreements")
    assert ok


def test_criterion_07_sandwich():
    pairs, violations = 0, []
    for s in (2, 3):
        for n in range(s + 1, 7):
            h = HostGraph(n, s)
            for kind in (K.LinearPath, K.LoosePath, K.BergePath, K.Matching):
                m = MotifSpec(kind, 2)
                try:
                    m.check_host(h)
                except InvalidInput:
                    continue
                ar = ar_exact(h, m, edge_cap=20)
                ex = turan_exact(h, m)
                if ar.proven and ex.proven:
                    pairs += 1
                    if not sandwich_check(ar.value, ex.value):
                        violations.append((n, s, kind.value, ar.value, ex.value))
    ok = pairs > 0 and not violations
    report(7, ok, f"{pairs} proven (ar, ex) pairs, {len(violations)} violations")
    assert ok, violations


def test_criterion_08_cherry_pairs():
    gstar = list(combinations(range(12), 2))
    runs, violations, short = 0, 0, []
    for size in range(5):
        for W in combinations(range(12), size):
            for t in range(1, 5):
                runs += 1
                quota = max(t - 1, 1)
                try:
                    pairs = find_cherry_pairs(gstar, W, t)
                except NotFound as exc:
                    violations += 1
                    short.append((size, t, len(exc.partial)))
                    continue
                used = set()
                for a, b in pairs:
                    union = set(a) | set(b)
                    bad = len(set(a) & set(b)) != 1 or union & used or union & set(W)
                    violations += bool(bad)
                    used |= union
                violations += len(pairs) != quota
    kinds = sorted({(sz, t) for sz, t, _ in short})
    ok = violations == 0
    report(8, ok, f"{runs} runs, {violations} violations; quota missed for (|W|, t) in {kinds} "
                  f"(3 disjoint cherries need 9 vertices, only 12 - |W| = 8 remain)")
    assert ok


def test_criterion_09_formula_consistency():
    rng = random.Random("acceptance-formulas")
    checks, violations = 0, 0
    for _ in range(100):
        s = rng.randint(4, 30)
        t = rng.randint(4, 12)
        n = rng.randint(s + 2 * t + 2, 10 ** 6)
        even_lin = ar_value(MotifSpec(K.LinearPath, 2 * t), n, s).value
        even_loose = ar_value(MotifSpec(K.LoosePath, 2 * t), n, s).value
        checks += 1
        violations += even_lin != even_loose
        for cyc, path in ((K.LinearCycle, K.LinearPath), (K.LooseCycle, K.LoosePath)):
            for k in (2 * t, 2 * t + 1):
                try:
                    c = ar_value(MotifSpec(cyc, k), n, s).value
                except NotCovered:
                    continue
                checks += 1
                violations += c != ar_value(MotifSpec(path, k), n, s).value
    ok = violations == 0
    report(9, ok, f"{checks} identities on 100 random (n, s, t), n <= 10^6, "
                  f"{violations} violations")
    assert ok


def _detector_outputs(threads):
    out = []
    for n in (8, 10, 12):
        for s in (3, 4):
            for k in (4, 6):
                col = linear_path_lower_coloring(HostGraph(n, s), k)
                for kind in (K.LinearPath, K.LoosePath, K.LinearCycle, K.LooseCycle):
                    w = find_rainbow(col, MotifSpec(kind, k), threads=threads)
                    out.append(w.to_json() if w else "null")
    h = HostGraph(12, 4)
    for col, m in ((linear_path_lower_coloring(h, 5), MotifSpec(K.LinearPath, 5)),
                   (linear_path_lower_coloring(h, 3), MotifSpec(K.LinearPath, 3)),
                   (Coloring.all_distinct(HostGraph(8, 3)), MotifSpec(K.LinearPath, 2))):
        w = find_rainbow(col, m, threads=threads)
        out.append(w.to_json() if w else "null")
    for n, s, k in ((21, 3, 7), (12, 3, 4), (16, 3, 9)):
        w = find_rainbow(berge_block_coloring(HostGraph(n, s), k), MotifSpec(K.BergePath, k),
                         threads=threads)
        out.append(w.to_json() if w else "null")
    for kind in MotifKind:
        rng = random.Random(f"acceptance-oracle-{kind.value}")
        for _ in range(50):
            col, m = _random_instance(rng, kind)
            w = find_rainbow(col, m, threads=threads)
            out.append(w.to_json() if w else "null")
    return out


def _solver_outputs(threads):
    out = []
    jobs = [(ar_exact, 5, 3, K.LinearPath, 2), (ar_exact, 5, 3, K.LoosePath, 2),
            (turan_exact, 8, 3, K.LinearPath, 2), (turan_exact, 6, 3, K.Matching, 2)]
    jobs += [(turan_exact, n, 2, K.LinearPath, k) for n in range(2, 9) for k in range(1, 5)]
    for s in (2, 3):
        for n in range(s + 1, 7):
            for kind in (K.LinearPath, K.LoosePath, K.Matching):
                jobs.append((turan_exact, n, s, kind, 2))
                jobs.append((ar_exact, n, s, kind, 2))
    for fn, n, s, kind, k in jobs:
        kw = {"edge_cap": 20} if fn is ar_exact else {}
        out.append(json.dumps(fn(HostGraph(n, s), MotifSpec(kind, k), threads=threads,
                                 **kw).to_dict()))
    return out


def test_criterion_10_determinism():
    det = {t: _detector_outputs(t) for t in (1, 2, 8)}
    sol = {t: _solver_outputs(t) for t in (1, 2, 8)}
    ok = det[1] == det[2] == det[8] and sol[1] == sol[2] == sol[8]
    report(10, ok, f"{len(det[1])} detector and {len(sol[1])} solver outputs byte-identical "
                   f"across 1/2/8 threads: {ok}")
    assert ok
