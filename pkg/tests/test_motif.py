import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from antiramsey.constructions import FamilySpec, build_family, rainbow_plus_one
from antiramsey.core import Coloring, HostGraph, host_index
from antiramsey.errors import InvalidInput, ResourceLimit
from antiramsey.motif import (MotifKind, MotifSpec, Witness, classify_vertices, find_copy,
                              find_rainbow, find_rainbow_naive, linear_to_berge, verify_witness)

K = MotifKind


def random_coloring(rng, n, s, max_colors=8):
    h = HostGraph(n, s)
    c = rng.randint(1, max_colors)
    return Coloring.from_labels(h, [rng.randrange(c) for _ in range(h.edge_count)])


def motif_strategy():
    def build(kind):
        lo = 3 if kind.is_cycle else 1
        return st.integers(lo, 4).map(lambda k: MotifSpec(kind, k))
    return st.sampled_from(list(MotifKind)).flatmap(build)


# --- witness checks ---------------------------------------------------------

def test_linear_path_structure():
    m = MotifSpec(K.LinearPath, 3)
    good = Witness(K.LinearPath, 3, [(0, 1, 2), (2, 3, 4), (4, 5, 6)])
    assert verify_witness(good, m)
    touching = Witness(K.LinearPath, 3, [(0, 1, 2), (2, 3, 4), (0, 5, 6)])
    assert not verify_witness(touching, m)
    double = Witness(K.LinearPath, 3, [(0, 1, 2), (1, 2, 3), (3, 5, 6)])
    assert not verify_witness(double, m)
    assert verify_witness(Witness(K.LoosePath, 3, double.edges), MotifSpec(K.LoosePath, 3))


def test_cycle_and_matching_structure():
    c = Witness(K.LinearCycle, 3, [(0, 1, 2), (2, 3, 4), (4, 5, 0)])
    assert verify_witness(c, MotifSpec(K.LinearCycle, 3))
    # three edges through one vertex are not a 3-cycle
    star = Witness(K.LooseCycle, 3, [(0, 1, 2), (0, 2, 3), (0, 3, 1)])
    assert not verify_witness(star, MotifSpec(K.LooseCycle, 3))
    m = Witness(K.Matching, 2, [(0, 1, 2), (3, 4, 5)])
    assert verify_witness(m, MotifSpec(K.Matching, 2))
    assert not verify_witness(Witness(K.Matching, 2, [(0, 1, 2), (2, 4, 5)]),
                              MotifSpec(K.Matching, 2))


def test_berge_structure():
    w = Witness(K.BergePath, 2, [(0, 1, 2), (0, 1, 3)], [2, 1, 0])
    assert verify_witness(w, MotifSpec(K.BergePath, 2))
    assert not verify_witness(Witness(K.BergePath, 2, w.edges, [2, 1, 2]),
                              MotifSpec(K.BergePath, 2))
    cyc = Witness(K.BergeCycle, 3, [(0, 1, 5), (1, 2, 5), (2, 0, 5)], [0, 1, 2])
    assert verify_witness(cyc, MotifSpec(K.BergeCycle, 3))


def test_rainbow_check_and_mismatch():
    h = HostGraph(5, 3)
    w = Witness(K.LinearPath, 2, [(0, 1, 2), (2, 3, 4)])
    assert not verify_witness(w, MotifSpec(K.LinearPath, 2), Coloring.monochromatic(h))
    assert verify_witness(w, MotifSpec(K.LinearPath, 2), Coloring.all_distinct(h))
    with pytest.raises(InvalidInput):
        verify_witness(w, MotifSpec(K.LoosePath, 2))
    assert not verify_witness(Witness(K.LinearPath, 2, [(0, 1, 2), (2, 3, 9)]),
                              MotifSpec(K.LinearPath, 2), host=h)


def test_spec_validation():
    with pytest.raises(InvalidInput):
        MotifSpec(K.LinearCycle, 2)
    with pytest.raises(InvalidInput):
        MotifSpec(K.Matching, 0)
    with pytest.raises(InvalidInput):
        MotifSpec(K.BergePath, 5).check_host(HostGraph(5, 3))
    MotifSpec(K.BergeCycle, 5).check_host(HostGraph(5, 3))


def test_witness_json_roundtrip():
    w = Witness(K.BergePath, 2, [(0, 1, 2), (0, 1, 3)], [2, 1, 0], [4, 7])
    assert Witness.from_dict(w.to_dict()) == w
    with pytest.raises(InvalidInput):
        Witness.from_dict({"kind": "linear-path"})


def test_classify_and_convert():
    w = Witness(K.LinearPath, 3, [(0, 1, 2), (2, 3, 4), (4, 5, 6)], colors=[0, 1, 2])
    cls = classify_vertices(w)
    assert [v for v, c in cls.items() if c == "cross"] == [2, 4]
    assert len([v for v, c in cls.items() if c == "free"]) == 5
    b = linear_to_berge(w)
    assert b.defining_vertices == [0, 2, 4, 5]
    assert verify_witness(b, MotifSpec(K.BergePath, 3))


# --- detectors --------------------------------------------------------------

def test_find_copy_input_forms():
    h = HostGraph(7, 3)
    idx = host_index(h)
    edges = [(0, 1, 2), (2, 3, 4), (4, 5, 6)]
    ranks = [idx.rank(e) for e in edges]
    mask = sum(1 << r for r in ranks)
    m = MotifSpec(K.LinearPath, 3)
    assert find_copy(h, edges, m) == find_copy(h, ranks, m) == find_copy(h, mask, m)
    assert find_copy(h, edges[:2], m) is None


def test_star_has_no_rainbow_linear_path_of_length_4():
    h = HostGraph(10, 3)
    col = rainbow_plus_one(h, build_family(h, FamilySpec.star(1)))
    assert find_rainbow(col, MotifSpec(K.LinearPath, 4)) is None
    w = find_rainbow(col, MotifSpec(K.LinearPath, 3))
    assert w is not None and verify_witness(w, MotifSpec(K.LinearPath, 3), col)


def test_k3_cycle_needs_room():
    h = HostGraph(5, 3)
    assert find_copy(h, range(10), MotifSpec(K.LinearCycle, 3)) is None  # needs 6 vertices
    assert find_copy(HostGraph(6, 3), range(20), MotifSpec(K.LinearCycle, 3)) is not None


def test_naive_budget_guard():
    col = Coloring.all_distinct(HostGraph(8, 3))
    with pytest.raises(ResourceLimit):
        find_rainbow_naive(col, MotifSpec(K.LinearPath, 4), budget=1000)


@pytest.mark.parametrize("kind", list(MotifKind))
def test_agrees_with_naive_oracle(kind):
    rng = random.Random(f"motif-{kind.value}")
    for _ in range(25):
        n = rng.choice([5, 6, 7])
        k = rng.randint(3 if kind.is_cycle else 1, 4)
        if kind is K.BergePath:
            k = min(k, n - 1)
        col = random_coloring(rng, n, 3)
        m = MotifSpec(kind, k)
        fast, slow = find_rainbow(col, m), find_rainbow_naive(col, m)
        assert (fast is None) == (slow is None)
        for w in (fast, slow):
            if w is not None:
                assert verify_witness(w, m, col)


@settings(max_examples=60, deadline=None)
@given(motif_strategy(), st.integers(5, 7), st.randoms(use_true_random=False))
def test_found_witnesses_always_verify(m, n, rnd):
    col = random_coloring(rnd, n, 3, max_colors=12)
    w = find_rainbow(col, m)
    if w is not None:
        assert verify_witness(w, m, col)
        assert len(set(w.colors)) == m.k


@settings(max_examples=40, deadline=None)
@given(motif_strategy(), st.integers(5, 7), st.randoms(use_true_random=False))
def test_color_renaming_does_not_change_presence(m, n, rnd):
    col = random_coloring(rnd, n, 3)
    perm = list(range(col.num_colors))
    rnd.shuffle(perm)
    renamed = Coloring(col.host, np.array(perm)[col.colors])
    assert (find_rainbow(col, m) is None) == (find_rainbow(renamed, m) is None)


@settings(max_examples=40, deadline=None)
@given(motif_strategy(), st.integers(5, 7), st.randoms(use_true_random=False))
def test_merging_colors_never_creates_rainbow(m, n, rnd):
    col = random_coloring(rnd, n, 3, max_colors=10)
    if col.num_colors < 2:
        return
    merged = Coloring.from_labels(col.host, np.minimum(col.colors, col.num_colors - 2).tolist())
    if find_rainbow(col, m) is None:
        assert find_rainbow(merged, m) is None


@pytest.mark.parametrize("threads", [2, 3, 8])
def test_thread_count_does_not_change_witness(threads):
    rng = random.Random(11)
    for kind in MotifKind:
        col = random_coloring(rng, 7, 3, max_colors=20)
        m = MotifSpec(kind, 3)
        a, b = find_rainbow(col, m), find_rainbow(col, m, threads=threads)
        assert (a.to_json() if a else None) == (b.to_json() if b else None)
