"""Words, compositions and per-word statistics.

Words are plain tuples of positive integers.  Positions are 0-indexed in
code; everything reported to the user (descent sets, major index, block
positions) is 1-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator, Sequence

Word = tuple


def as_word(w: Iterable[int]) -> Word:
    w = tuple(w)
    for x in w:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"word entries must be positive integers, got {x!r}")
    return w


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def inverse(sigma: Sequence[int]) -> Word:
    if not is_permutation(sigma):
        raise ValueError(f"{tuple(sigma)} is not a permutation")
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, 1):
        inv[s - 1] = i
    return tuple(inv)


def act(sigma: Sequence[int], w: Sequence[int]) -> Word:
    """Position action: ``(sigma . w)_i = w_{sigma^{-1}(i)}``."""
    if len(sigma) != len(w):
        raise ValueError("permutation and word lengths differ")
    out = [0] * len(w)
    for i, s in enumerate(sigma):
        out[s - 1] = w[i]
    return tuple(out)


def swap(w: Sequence[int], i: int) -> Word:
    """Apply the adjacent transposition (i, i+1) to positions (1-indexed i)."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def content(w: Sequence[int]) -> Word:
    """Multiplicities of 1, 2, ..., max(w)."""
    if not w:
        return ()
    c = [0] * max(w)
    for x in w:
        c[x - 1] += 1
    return tuple(c)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if sum(parts) != n or any(p < 0 for p in parts):
        return 0
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


# -- compositions ---------------------------------------------------------

def weak_compositions(n: int, k: int) -> list[Word]:
    """All weak compositions of n into k parts, lexicographic."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k == 0:
        return [()] if n == 0 else []
    if k == 1:
        return [(n,)]
    return [(first,) + rest
            for first in range(n + 1)
            for rest in weak_compositions(n - first, k - 1)]


def compositions(n: int, k: int | None = None) -> list[Word]:
    """Compositions of n (with exactly k parts when k is given), lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k is not None:
        if k < 0:
            raise ValueError("k must be nonnegative")
        if k == 0:
            return [()] if n == 0 else []
        return [tuple(x + 1 for x in c) for c in weak_compositions(n - k, k)] if n >= k else []
    if n == 0:
        return [()]
    return [(first,) + rest
            for first in range(1, n + 1)
            for rest in compositions(n - first)]


# -- orbits ---------------------------------------------------------------

def _next_perm(a: list) -> bool:
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def rearrangements(w: Sequence[int]) -> Iterator[Word]:
    """Distinct rearrangements of w in lexicographic order."""
    a = sorted(w)
    yield tuple(a)
    while _next_perm(a):
        yield tuple(a)


def orbit(w: Sequence[int]) -> set[Word]:
    return set(rearrangements(w))


def permutations_of(n: int) -> Iterator[Word]:
    return rearrangements(range(1, n + 1))


def sign(sigma: Sequence[int]) -> int:
    return -1 if inv(sigma) % 2 else 1


# -- Cayley permutations --------------------------------------------------

def is_cayley(w: Sequence[int]) -> bool:
    return not w or set(w) == set(range(1, max(w) + 1))


def enumerate_cayley(n: int) -> Iterator[Word]:
    """Cayley permutations of length n in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prefix: list[int] = []
    used = [0] * (n + 2)

    def rec(m: int, distinct: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        remaining = n - len(prefix) - 1
        for v in range(1, n + 1):
            m2 = max(m, v)
            d2 = distinct + (used[v] == 0)
            # values 1..m2 not yet used must fit in the remaining slots
            if m2 - d2 > remaining:
                continue
            prefix.append(v)
            used[v] += 1
            yield from rec(m2, d2)
            used[v] -= 1
            prefix.pop()

    yield from rec(0, 0)


# -- statistics -----------------------------------------------------------

def inv(w: Sequence[int]) -> int:
    return sum(1 for a, b in combinations(w, 2) if a > b)


def inversion_set(w: Sequence[int]) -> frozenset:
    n = len(w)
    return frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descent_set(w: Sequence[int]) -> frozenset:
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def ascent_set(w: Sequence[int]) -> frozenset:
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] < w[i + 1])


def des(w):
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


def asc(w):
    return sum(1 for a, b in zip(w, w[1:]) if a < b)


def tie(w):
    return sum(1 for a, b in zip(w, w[1:]) if a == b)


def maj(w):
    return sum(descent_set(w))


def sdes(w):
    return sum(1 for a, b in zip(w, w[1:]) if a == b + 1)


def sinv(w):
    return sum(1 for a, b in combinations(w, 2) if a == b + 1)


def bdes(w):
    return sum(1 for a, b in zip(w, w[1:]) if a > b + 1)


def binv(w):
    return sum(1 for a, b in combinations(w, 2) if a > b + 1)


def dtop(w):
    return sum(a for a, b in zip(w, w[1:]) if a > b)


def itop(w):
    return sum(a for a, b in combinations(w, 2) if a > b)


def pk(w):
    return sum(1 for a, b, c in zip(w, w[1:], w[2:]) if a < b > c)


def hz(w):
    return sum(1 for a, b, c in combinations(w, 3) if a < b > c)


def _matches(values: Sequence[int], rho: Sequence[int]) -> bool:
    # values at positions rho^{-1}(1), ..., rho^{-1}(k) strictly increase
    ordered = [v for _, v in sorted(zip(rho, values))]
    return all(x < y for x, y in zip(ordered, ordered[1:]))


def pattern_count(w: Sequence[int], rho: Sequence[int], adjacent: bool = False) -> int:
    k, n = len(rho), len(w)
    if not is_permutation(rho):
        raise ValueError(f"pattern {tuple(rho)} is not a permutation")
    if k > n:
        raise ValueError(f"pattern length {k} exceeds word length {n}")
    if adjacent:
        return sum(_matches(w[i:i + k], rho) for i in range(n - k + 1))
    return sum(_matches(vals, rho) for vals in combinations(w, k))


def graphical_inv(w: Sequence[int], edges) -> int:
    edges = set(edges)
    return sum(1 for a, b in combinations(w, 2) if (a, b) in edges)


def graphical_des(w: Sequence[int], edges) -> int:
    edges = set(edges)
    return sum(1 for a, b in zip(w, w[1:]) if (a, b) in edges)


_SIMPLE = {
    "inv": inv, "des": des, "asc": asc, "tie": tie, "maj": maj,
    "sdes": sdes, "sinv": sinv, "bdes": bdes, "binv": binv,
    "dtop": dtop, "itop": itop, "pk": pk, "hz": hz,
}

STATISTICS = tuple(_SIMPLE)


@dataclass(frozen=True)
class Stat:
    """A parametrized statistic id: pattern, adjacent pattern or graphical."""
    kind: str
    param: tuple

    def __call__(self, w):
        return statistic(w, self)


def pattern(rho) -> Stat:
    return Stat("pattern", tuple(rho))


def adjacent_pattern(rho) -> Stat:
    return Stat("adjacent_pattern", tuple(rho))


def graphical_inversions(edges) -> Stat:
    return Stat("graphical_inv", tuple(sorted(set(map(tuple, edges)))))


def graphical_descents(edges) -> Stat:
    return Stat("graphical_des", tuple(sorted(set(map(tuple, edges)))))


def statistic(w: Sequence[int], s) -> int:
    """Evaluate a statistic by name (``"inv"``, ``"des"``, ...) or :class:`Stat`."""
    if isinstance(s, str):
        try:
            return _SIMPLE[s](w)
        except KeyError:
            raise ValueError(f"unknown statistic {s!r}") from None
    if isinstance(s, Stat):
        if s.kind == "pattern":
            return pattern_count(w, s.param, adjacent=False)
        if s.kind == "adjacent_pattern":
            return pattern_count(w, s.param, adjacent=True)
        if s.kind == "graphical_inv":
            return graphical_inv(w, s.param)
        if s.kind == "graphical_des":
            return graphical_des(w, s.param)
    raise ValueError(f"unknown statistic {s!r}")
