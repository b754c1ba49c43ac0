from collections import Counter
from itertools import combinations, permutations, product
from math import comb

import pytest
from hypothesis import given, strategies as st

from parkstat.parking import (area, block_structure, enumerate_pf, enumerate_upf, eta, eta_inverse,
                              hess_sequences, is_hess, is_parking_function, is_upf, park, pollak_reduce,
                              psi, psi_inverse, upf_act, upf_content)
from parkstat.words import ascent_set, content, enumerate_cayley, inverse, inversion_set, multinomial


def brute_is_pf(alpha):
    # independent oracle: some permutation of the word is bounded by the identity
    return all(b <= i for i, b in enumerate(sorted(alpha), 1))


def brute_is_upf(alpha):
    n = len(alpha)
    spots = [None] * (n + 2)
    for car, a in enumerate(alpha):
        if a > n:
            return False
        s = a
        while s <= n and spots[s] is not None:
            s += 1
        if s > n or s - a > 1:
            return False
        spots[s] = car
    return True


def test_park_examples():
    assert park((1, 1, 2, 2, 2, 6, 7, 7)).car_to_spot == tuple(range(1, 9))
    assert park((1, 1, 1)).car_to_spot == (1, 2, 3)
    assert park((2, 2)) is None


@pytest.mark.parametrize("alpha, expected", [
    ((3, 1, 2), True), ((3, 3, 1), False), ((), True), ((1, 1), True), ((2, 2), False),
])
def test_is_parking_function(alpha, expected):
    assert is_parking_function(alpha) == expected


def test_pf_counts():
    assert sum(1 for w in product(range(1, 4), repeat=3) if is_parking_function(w)) == 16
    assert list(enumerate_pf(2)) == [(1, 1), (1, 2), (2, 1)]
    assert len(list(enumerate_pf(4))) == 125
    assert list(enumerate_pf(0)) == [()]


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_pf_matches_oracle(n):
    assert list(enumerate_pf(n)) == [w for w in product(range(1, n + 1), repeat=n) if brute_is_pf(w)]


@given(st.lists(st.integers(1, 7), min_size=0, max_size=7))
def test_is_pf_matches_sorted_oracle(w):
    assert is_parking_function(w) == brute_is_pf(w)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=6))
def test_is_upf_matches_oracle(w):
    assert is_upf(w) == brute_is_upf(w)
    if is_upf(w):
        assert is_parking_function(w)


def test_upf_examples():
    assert is_upf((1, 1, 2))
    assert len(list(enumerate_upf(3))) == 13
    assert not is_upf((2, 2))


def test_block_structure():
    assert block_structure((1, 1, 2)).sizes == (3,)
    assert block_structure((1, 2, 3)).sizes == (1, 1, 1)
    with pytest.raises(ValueError):
        block_structure((1, 1, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_upfs_per_block_sizes_are_multinomial(n):
    counts = Counter(upf_content(a) for a in enumerate_upf(n))
    assert all(counts[c] == multinomial(n, c) for c in counts)


def test_psi_examples():
    assert psi((1, 1, 2)) == (1, 1, 1)
    assert psi((1, 2, 3)) == (1, 2, 3)
    w = (2, 2, 4, 5, 2, 1, 4, 3, 5)
    alpha = psi_inverse(w)
    # block filling by hand: block 2 gets 2,2,3; block 3 gets 5; block 4 gets 6,6; block 5 gets 8,8
    assert alpha == (2, 2, 6, 8, 3, 1, 6, 5, 8)
    assert is_upf(alpha) and psi(alpha) == w


@pytest.mark.parametrize("n", range(0, 6))
def test_psi_is_a_bijection(n):
    upfs = list(enumerate_upf(n))
    assert sorted(psi(a) for a in upfs) == sorted(enumerate_cayley(n))
    assert all(psi_inverse(psi(a)) == a for a in upfs)
    assert all(inversion_set(psi(a)) == inversion_set(a) for a in upfs)


def test_eta_examples():
    assert eta((2, 3, 6, 8, 4, 1, 7, 5, 9), {2, 3, 6, 8}) == (2, 2, 4, 5, 2, 1, 4, 3, 5)
    assert eta((1, 2, 3, 4), set()) == (1, 2, 3, 4)
    with pytest.raises(ValueError):
        eta((2, 1), {1})


def test_eta_pairs_count_fubini():
    pairs = [(s, S) for s in permutations((1, 2, 3))
             for r in range(3) for S in combinations(sorted(ascent_set(inverse(s))), r)]
    assert len(pairs) == 13
    assert sorted(eta(s, S) for s, S in pairs) == sorted(enumerate_cayley(3))


@given(st.sampled_from(sorted(enumerate_cayley(5))))
def test_eta_roundtrip(w):
    sigma, S = eta_inverse(w)
    assert eta(sigma, S) == w


def test_pollak():
    assert pollak_reduce((3, 3)) == (1, 1)
    for a in enumerate_pf(4):
        assert pollak_reduce(a) == a


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.integers(1, n + 1), min_size=n, max_size=n)))
def test_pollak_lands_in_pf(w):
    assert is_parking_function(pollak_reduce(w))


def test_hess():
    assert list(hess_sequences(3)) == [(1, 1, 1), (1, 2, 0), (2, 0, 1), (2, 1, 0), (3, 0, 0)]
    assert not is_hess((0, 3, 0))
    for n in range(6):
        contents = sorted({content(a) + (0,) * (n - len(content(a))) for a in enumerate_pf(n)})
        assert list(hess_sequences(n)) == contents
        assert len(contents) == comb(2 * n, n) // (n + 1)


def test_area():
    assert area((1, 1, 2, 2, 2, 6, 7, 7)) == 8
    assert area((1, 2, 3, 4)) == 0
    assert area((1, 1, 1, 1)) == comb(4, 2)
    with pytest.raises(ValueError):
        area((2, 2))


def test_upf_act_is_an_involution_on_upf():
    for a in enumerate_upf(4):
        for i in range(1, 4):
            b = upf_act(a, i)
            assert is_upf(b) and upf_act(b, i) == a
