from collections import Counter
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, strategies as st

from parkstat.words import (Stat, act, adjacent_pattern, as_word, compositions, content, enumerate_cayley,
                            graphical_inversions, inverse, is_cayley, is_permutation, multinomial, orbit,
                            pattern, pattern_count, permutations_of, sign, statistic, swap, weak_compositions)

words = st.lists(st.integers(1, 5), min_size=0, max_size=7).map(tuple)


def brute_inv(w):
    return sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])


@pytest.mark.parametrize("w, expected", [
    ((1, 1, 2, 2, 2, 6, 7, 7), (2, 3, 0, 0, 0, 1, 2)),
    ((1, 1, 1), (3,)),
    ((2, 2, 4), (0, 2, 0, 1)),
])
def test_content(w, expected):
    assert content(w) == expected


@pytest.mark.parametrize("w, s, expected", [
    ((3, 2, 1), "inv", 3),
    ((2, 3, 6, 8, 4, 1, 7, 5, 9), "asc", 5),
    ((1, 3, 2), "pk", 1),
    ((3, 2, 1), "pk", 0),
    ((3, 2, 1), "dtop", 5),
    ((3, 2, 1), "des", 2),
    ((1, 1, 2), "tie", 1),
    ((3, 1, 2), "sdes", 0),
    ((3, 1, 2), "sinv", 1),
    ((3, 1, 2), "bdes", 1),
    ((2, 1, 3), "maj", 1),
])
def test_statistic_examples(w, s, expected):
    assert statistic(w, s) == expected


def test_unknown_statistic():
    with pytest.raises(ValueError):
        statistic((1, 2), "nope")


def test_dtop_total_over_s3():
    assert sum(statistic(w, "dtop") for w in permutations_of(3)) == 16


@given(words)
def test_inv_matches_brute_force(w):
    assert statistic(w, "inv") == brute_inv(w)


@given(words)
def test_inv_and_des_splits(w):
    assert statistic(w, "inv") == statistic(w, "sinv") + statistic(w, "binv")
    assert statistic(w, "des") == statistic(w, "sdes") + statistic(w, "bdes")


@given(st.lists(st.integers(1, 5), min_size=2, max_size=7).map(tuple))
def test_pattern_21_is_inv_and_des(w):
    assert pattern_count(w, (2, 1)) == statistic(w, "inv")
    assert pattern_count(w, (2, 1), adjacent=True) == statistic(w, "des")
    assert statistic(w, pattern((2, 1))) == statistic(w, "inv")
    assert statistic(w, adjacent_pattern((2, 1))) == statistic(w, "des")


def test_pattern_examples():
    assert pattern_count((1, 3, 2), (1, 3, 2)) == 1
    assert pattern_count((2, 1, 4, 3), (2, 1), True) == 2
    total = sum(pattern_count(w, (1, 3, 2)) + pattern_count(w, (2, 3, 1)) for w in permutations_of(3))
    assert total == 2


def test_pattern_longer_than_word():
    with pytest.raises(ValueError):
        pattern_count((1,), (2, 1))


def test_graphical_statistic():
    edges = [(2, 1)]
    assert statistic((2, 3, 1), graphical_inversions(edges)) == 1
    assert isinstance(graphical_inversions(edges), Stat)


def test_orbit():
    assert orbit((1, 1, 2)) == {(1, 1, 2), (1, 2, 1), (2, 1, 1)}
    assert len(orbit((1, 2, 3))) == 6


@given(st.lists(st.integers(1, 3), min_size=1, max_size=6).map(tuple))
def test_orbit_size_is_multinomial(w):
    assert len(orbit(w)) == multinomial(len(w), Counter(w).values())


def test_compositions():
    assert set(compositions(3)) == {(3,), (2, 1), (1, 2), (1, 1, 1)}
    assert len(weak_compositions(2, 2)) == 3
    assert len(compositions(5)) == 16
    assert all(sum(c) == 5 and len(c) == 2 for c in compositions(5, 2))


@pytest.mark.parametrize("w, expected", [
    ((2, 2, 4, 5, 2, 1, 4, 3, 5), True),
    ((1, 3), False),
    ((), True),
])
def test_is_cayley(w, expected):
    assert is_cayley(w) == expected


@pytest.mark.parametrize("n", range(5))
def test_enumerate_cayley_matches_filter(n):
    brute = sorted(w for w in product(range(1, n + 1), repeat=n) if set(w) == set(range(1, max(w, default=0) + 1)))
    assert sorted(enumerate_cayley(n)) == brute
    assert len(brute) == [1, 1, 3, 13, 75][n]


def test_permutation_helpers():
    assert is_permutation((2, 3, 1)) and not is_permutation((1, 1))
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert sign((2, 1, 3)) == -1 and sign((2, 3, 1)) == 1
    assert swap((1, 2, 3), 1) == (2, 1, 3)
    assert as_word([1, 2]) == (1, 2)


@given(st.permutations(range(1, 5)), st.lists(st.integers(1, 4), min_size=4, max_size=4))
def test_act_is_a_group_action(sigma, w):
    tau = (2, 1, 4, 3)
    sigma = tuple(sigma)
    composed = tuple(sigma[t - 1] for t in tau)  # sigma after tau
    assert act(sigma, act(tau, tuple(w))) == act(composed, tuple(w))


def test_swap_is_involution():
    for w in product(range(1, 4), repeat=3):
        assert swap(swap(w, 1), 1) == w


def test_permutations_of_is_lexicographic():
    assert list(permutations_of(3)) == list(permutations((1, 2, 3)))
