from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from antiramsey.errors import InvalidInput, NotCovered
from antiramsey.formulas import (BoundType, ar_value, berge_ar_bounds, cherry_density_check,
                                 erdos_matching_value, ex_value, sandwich_check)
from antiramsey.motif import MotifKind, MotifSpec

K = MotifKind


def binom(a, b):
    # independent of the library's helper
    if b < 0 or a < 0 or b > a:
        return 0
    num = den = 1
    for i in range(b):
        num *= a - i
        den *= i + 1
    return num // den


def M(kind, k):
    return MotifSpec(kind, k)


# --- worked values ------------------------------------------------------------

@pytest.mark.parametrize("kind,k,n,s,value,bt", [
    (K.LoosePath, 5, 10, 3, 64, BoundType.AsymptoticExact),
    (K.LinearPath, 4, 10, 3, 43, BoundType.AsymptoticExact),
    (K.LooseCycle, 4, 10, 3, 39, BoundType.AsymptoticExact),
    (K.LinearPath, 2, 8, 3, 8, BoundType.UpperBound),
    (K.LinearPath, 2, 10, 5, 56, BoundType.AsymptoticExact),
    (K.LoosePath, 2, 10, 3, 3, BoundType.Exact),
    (K.LooseCycle, 3, 7, 3, 15, BoundType.Exact),
    (K.LinearCycle, 4, 9, 3, 28 + 8, BoundType.AsymptoticExact),
    (K.Matching, 2, 6, 3, 10, BoundType.AsymptoticExact),
    (K.Matching, 3, 5, 3, 10, BoundType.Exact),
    (K.LinearPath, 4, 8, 2, 12, BoundType.UpperBound),
    (K.BergePath, 4, 12, 3, 12, BoundType.UpperBound),
])
def test_ex_values(kind, k, n, s, value, bt):
    rep = ex_value(M(kind, k), n, s)
    assert rep.value == value and rep.bound_type is bt


@pytest.mark.parametrize("kind,k,n,s,value,bt", [
    (K.LinearPath, 2, 5, 3, 2, BoundType.Exact),
    (K.LinearPath, 4, 10, 3, 38, BoundType.AsymptoticExact),
    (K.LoosePath, 5, 10, 3, 39, BoundType.AsymptoticExact),
    (K.LoosePath, 3, 9, 3, 3, BoundType.Exact),
    (K.LinearPath, 3, 12, 4, 47, BoundType.AsymptoticExact),
    (K.LinearPath, 7, 20, 4, binom(20, 4) - binom(18, 4) + binom(16, 2) + 2,
     BoundType.AsymptoticExact),
    (K.LinearCycle, 8, 30, 4, binom(30, 4) - binom(27, 4) + 2, BoundType.AsymptoticExact),
])
def test_ar_values(kind, k, n, s, value, bt):
    rep = ar_value(M(kind, k), n, s)
    assert rep.value == value and rep.bound_type is bt


def test_graph_path_ar_encoding():
    # t n - C(t-1, 2) + 1 + eps with k edges = 2t + 2 + eps
    assert ar_value(M(K.LinearPath, 4), 10, 2).value == 10 + 1
    assert ar_value(M(K.LinearPath, 5), 10, 2).value == 10 + 2
    assert ar_value(M(K.LinearPath, 6), 10, 2).value == 20 + 1


@pytest.mark.parametrize("kind,k,n,s", [
    (K.LinearPath, 5, 30, 4),
    (K.LinearPath, 7, 30, 3),
    (K.LinearPath, 2, 4, 3),
    (K.LoosePath, 3, 8, 3),
    (K.LinearCycle, 6, 30, 4),
    (K.LinearCycle, 9, 30, 12),
    (K.BergeCycle, 5, 30, 4),
    (K.Matching, 3, 10, 3),
])
def test_ar_not_covered(kind, k, n, s):
    with pytest.raises(NotCovered):
        ar_value(M(kind, k), n, s)


def test_ex_not_covered_and_exact_only():
    with pytest.raises(NotCovered):
        ex_value(M(K.LinearCycle, 4), 8, 2)
    with pytest.raises(NotCovered):
        ex_value(M(K.LinearPath, 2), 9, 3, exact_only=True)
    with pytest.raises(NotCovered):
        ex_value(M(K.LooseCycle, 3), 5, 4)
    with pytest.raises(InvalidInput):
        ex_value(M(K.LinearPath, 2), 2, 3)


def test_erdos_matching():
    assert erdos_matching_value(10, 3, 2).value == 36
    assert erdos_matching_value(6, 3, 2).value == 10
    assert erdos_matching_value(6, 2, 3).value == max(binom(5, 2), 15 - binom(4, 2))
    with pytest.raises(InvalidInput):
        erdos_matching_value(5, 3, 2)


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_erdos_star_dominates_for_two_edges(s):
    for n in range(3 * s, 3 * s + 15):
        assert erdos_matching_value(n, s, 2).value == binom(n, s) - binom(n - 1, s)


def test_berge_bounds_examples():
    lo, hi = berge_ar_bounds(K.BergePath, 30, 3, 4)
    assert (lo.value, hi.value) == (Fraction(15, 2), 16)
    # k = 7 = 2s + 1 sits in the middle regime
    lo, hi = berge_ar_bounds(K.BergePath, 70, 3, 7)
    assert (lo.value, hi.value) == (35, Fraction(703, 3))
    lo, hi = berge_ar_bounds(K.BergePath, 70, 3, 8)
    assert lo.value == Fraction(2 * 70 * binom(4, 3), 8)
    lo, hi = berge_ar_bounds(K.BergeCycle, 40, 4, 6, ex_berge=50)
    assert (lo.value, hi.value) == (52, 57)
    with pytest.raises(InvalidInput):
        berge_ar_bounds(K.BergePath, 30, 3, 1)
    with pytest.raises(InvalidInput):
        berge_ar_bounds(K.LinearPath, 30, 3, 4)


@settings(max_examples=200)
@given(st.integers(2, 8), st.integers(2, 30), st.integers(0, 400))
def test_berge_lower_not_above_upper(s, k, extra):
    n = max(s, k + 1) + extra
    lo, hi = berge_ar_bounds(K.BergePath, n, s, k)
    assert lo.value <= hi.value
    assert lo.bound_type is BoundType.LowerBound and hi.bound_type is BoundType.UpperBound


def test_sandwich():
    assert sandwich_check(2, 4)
    assert not sandwich_check(6, 4)
    assert not sandwich_check(1, 4)


def test_cherry_density():
    lhs, rhs, ok = cherry_density_check(12, 3, 66, 0, 1)
    assert (lhs, rhs, ok) == (66, 6, True)
    with pytest.raises(InvalidInput):
        cherry_density_check(12, 2, 10, 0, 1)


def test_report_json_shape():
    d = berge_ar_bounds(K.BergePath, 30, 3, 4)[0].to_dict()
    assert d["value"] == "15/2" and d["motif"] == {"kind": "berge-path", "k": 4}
    assert set(d) == {"motif", "n", "s", "value", "bound_type", "regime"}


# --- structural identities ---------------------------------------------------

big = st.integers(3, 12).flatmap(
    lambda s: st.tuples(st.just(s), st.integers(2, 40)).flatmap(
        lambda st_: st.tuples(st.just(st_[0]), st.just(st_[1]),
                              st.integers(st_[0] * 4 * st_[1], 10 ** 6))))


@settings(max_examples=100)
@given(big)
def test_even_linear_equals_even_loose(sts):
    s, t, n = sts
    a = ar_value(M(K.LinearPath, 2 * t), n, s).value
    b = ar_value(M(K.LoosePath, 2 * t), n, s).value
    assert a == b == binom(n, s) - binom(n - t + 1, s) + 2


@settings(max_examples=100)
@given(big)
def test_cycles_equal_paths_where_covered(sts):
    s, t, n = sts
    for kind, path in ((K.LinearCycle, K.LinearPath), (K.LooseCycle, K.LoosePath)):
        for k in (2 * t, 2 * t + 1):
            try:
                c = ar_value(M(kind, k), n, s)
            except NotCovered:
                continue
            assert c.value == ar_value(M(path, k), n, s).value


@pytest.mark.parametrize("s", [3, 4, 5])
def test_ar_is_shorter_ex_plus_two(s):
    for n in range(3 * s, 21):
        for k in range(4, 10):
            for kind in (K.LinearPath, K.LoosePath):
                try:
                    ar = ar_value(M(kind, k), n, s).value
                except NotCovered:
                    continue
                ex = ex_value(M(kind, k - 1), n, s).value
                assert ar == ex + 2


@pytest.mark.parametrize("s", [3, 4])
def test_ex_against_hand_binomials(s):
    for n in range(2 * s, 21):
        for t in range(1, 4):
            assert ex_value(M(K.LoosePath, 2 * t + 1), n, s).value == \
                binom(n, s) - binom(n - t, s)
            assert ex_value(M(K.LoosePath, 2 * t + 2), n, s).value == \
                binom(n, s) - binom(n - t, s) + 1
            assert ex_value(M(K.LinearPath, 2 * t + 2), n, s).value == \
                binom(n, s) - binom(n - t, s) + binom(n - t - 2, s - 2)


def test_binomial_formulas_are_integers():
    for kind in (K.LinearPath, K.LoosePath, K.LinearCycle, K.LooseCycle):
        for k in range(3, 12):
            rep = ex_value(M(kind, k), 50, 4)
            assert rep.is_integer
