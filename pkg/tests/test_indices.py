from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from harary.enumeration import free_trees
from harary.errors import OutOfRange
from harary.families import broom, path, spur, star
from harary.indices import (
    FormulaId,
    approx,
    closed_form,
    harary_fast,
    harary_index,
    harmonic,
    perfect_matching_bound_as_printed,
    rational_str,
    scaled_harary,
    distance_lcm,
    wiener_index,
)
from harary.trees import distance_histogram

from oracles import brute_harary, brute_wiener


def F(name, n, **kw):
    return closed_form(FormulaId(name, n, **kw))


@pytest.mark.parametrize("tree, expected", [
    (path(3), Fraction(5, 2)),
    (star(4), Fraction(9, 2)),
    (spur(7, 4), Fraction(49, 4)),
])
def test_harary_examples(tree, expected):
    assert harary_index(tree) == expected
    assert brute_harary(tree) == expected


@pytest.mark.parametrize("tree, expected", [(path(4), 10), (star(4), 9), (path(2), 1)])
def test_wiener_examples(tree, expected):
    assert wiener_index(tree) == expected


def test_single_vertex_indices():
    assert harary_index(path(1)) == 0 and wiener_index(path(1)) == 0


@pytest.mark.parametrize("k, expected", [(0, 0), (1, 1), (3, Fraction(11, 6)), (4, Fraction(25, 12))])
def test_harmonic(k, expected):
    assert harmonic(k) == expected


def test_harmonic_negative():
    with pytest.raises(OutOfRange):
        harmonic(-1)


@pytest.mark.parametrize("fid, expected", [
    (FormulaId("StarMax", 4), Fraction(9, 2)),
    (FormulaId("PathMin", 5), Fraction(77, 12)),
    (FormulaId("Spur", 7, m=4), Fraction(49, 4)),
    (FormulaId("Broom", 5, delta=3), Fraction(20, 3)),
    (FormulaId("MatchingBound", 6, beta=3), Fraction(109, 12)),
    (FormulaId("PerfectMatchingBound", 6), Fraction(109, 12)),
])
def test_closed_form_examples(fid, expected):
    assert closed_form(fid) == expected


def test_perfect_matching_printed_denominator_is_wrong():
    assert brute_harary(spur(6, 3)) == Fraction(109, 12)
    assert perfect_matching_bound_as_printed(6) == 218


@pytest.mark.parametrize("fid", [
    FormulaId("StarMax", 0),
    FormulaId("Spur", 7, m=2),
    FormulaId("Spur", 7, m=7),
    FormulaId("Broom", 5, delta=1),
    FormulaId("Broom", 5, delta=5),
    FormulaId("MatchingBound", 6, beta=4),
    FormulaId("IndependenceBound", 6, alpha=2),
    FormulaId("PerfectMatchingBound", 7),
    FormulaId("Spur", 7),
    FormulaId("Nope", 3),
])
def test_closed_form_out_of_range(fid):
    with pytest.raises(OutOfRange):
        closed_form(fid)


def test_closed_forms_match_brute_force_small():
    for n in range(1, 21):
        assert F("StarMax", n) == brute_harary(star(n))
        assert F("PathMin", n) == brute_harary(path(n))
        for m in range((n) // 2, n):
            if 2 * m >= n - 1:
                assert F("Spur", n, m=m) == brute_harary(spur(n, m))
        for d in range(2, n):
            assert F("Broom", n, delta=d) == brute_harary(broom(n, d))


def test_collapses_and_substitutions():
    for n in range(3, 51):
        assert F("Spur", n, m=n - 1) == F("StarMax", n)
        assert F("Broom", n, delta=n - 1) == F("StarMax", n)
        assert F("Broom", n, delta=2) == F("PathMin", n)
        for b in range(1, n // 2 + 1):
            assert F("MatchingBound", n, beta=b) == F("Spur", n, m=n - b)
        for a in range((n + 1) // 2, n):
            assert F("IndependenceBound", n, alpha=a) == F("Spur", n, m=a)
        if n % 2 == 0:
            assert F("PerfectMatchingBound", n) == F("MatchingBound", n, beta=n // 2)


def test_fast_paths_agree_with_brute_force():
    for n in range(1, 11):
        scale = distance_lcm(n)
        for t in free_trees(n):
            h = brute_harary(t)
            assert harary_fast(t) == h
            assert Fraction(scaled_harary(distance_histogram(t), n), scale) == h
            assert wiener_index(t) == brute_wiener(t)


def test_pair_bounds():
    for n in range(1, 11):
        for t in free_trees(n):
            h, w = harary_index(t), wiener_index(t)
            assert w >= n - 1
            assert h <= comb(n, 2)
            assert (h == comb(n, 2)) == (n <= 2)


def test_lcm_exceeds_64_bits_near_44():
    assert distance_lcm(44) < 2**64 < distance_lcm(48)


@given(st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6))
def test_rational_str_round_trip(x):
    assert Fraction(rational_str(x)) == x


@pytest.mark.parametrize("x, s", [(Fraction(5, 2), "2.5"), (Fraction(1, 3), "0.333333333333333"),
                                  (Fraction(10), "10"), (Fraction(689, 60), "11.4833333333333")])
def test_approx(x, s):
    assert approx(x) == s
