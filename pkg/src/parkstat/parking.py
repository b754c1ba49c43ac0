"""The parking process, parking functions and unit interval parking functions.

Includes the block structure of a unit interval parking function, the
bijections ``psi`` (UPF -> Cayley) and ``eta`` (pairs (sigma, S) -> Cayley),
and Pollak's circular reduction ``[n+1]^n -> PF_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .words import Word, ascent_set, content, inverse, is_cayley, is_permutation


@dataclass(frozen=True)
class ParkingOutcome:
    """``spot_to_car[i-1] == j`` iff car j parks in spot i."""
    spot_to_car: Word
    car_to_spot: Word


def park(alpha: Sequence[int]) -> ParkingOutcome | None:
    """Park cars on a one-way street; None if some car drives off the end."""
    n = len(alpha)
    for a in alpha:
        if not 1 <= a <= n:
            raise ValueError(f"preference {a} outside [1, {n}]")
    occupied = [0] * (n + 2)
    car_to_spot = []
    for car, pref in enumerate(alpha, 1):
        spot = pref
        while spot <= n and occupied[spot]:
            spot += 1
        if spot > n:
            return None
        occupied[spot] = car
        car_to_spot.append(spot)
    return ParkingOutcome(tuple(occupied[1:n + 1]), tuple(car_to_spot))


def _sorted_criterion(alpha: Sequence[int]) -> bool:
    return all(b <= i for i, b in enumerate(sorted(alpha), 1))


def is_parking_function(alpha: Sequence[int]) -> bool:
    n = len(alpha)
    if any(a < 1 for a in alpha):
        raise ValueError("preferences must be positive")
    if any(a > n for a in alpha):
        return False
    parks = park(alpha) is not None
    if __debug__:
        assert parks == _sorted_criterion(alpha), alpha
    return parks


def enumerate_pf(n: int) -> Iterator[Word]:
    """Parking functions of length n, lexicographic.

    Depth-first over [n]^n; a prefix is kept only while it can still be
    completed (``#{entries <= j} + remaining >= j`` for every j), so no
    branch dead-ends.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    prefix: list[int] = []
    at_most = [0] * (n + 1)  # at_most[j] = #{prefix entries <= j}

    def rec():
        remaining = n - len(prefix)
        if remaining == 0:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            for j in range(v, n + 1):
                at_most[j] += 1
            if all(at_most[j] + remaining - 1 >= j for j in range(1, n + 1)):
                prefix.append(v)
                yield from rec()
                prefix.pop()
            for j in range(v, n + 1):
                at_most[j] -= 1

    yield from rec()


def is_upf(alpha: Sequence[int]) -> bool:
    n = len(alpha)
    if any(not 1 <= a <= n for a in alpha):
        return False
    out = park(alpha)
    return out is not None and all(s - a <= 1 for s, a in zip(out.car_to_spot, alpha))


def enumerate_upf(n: int) -> Iterator[Word]:
    return (a for a in enumerate_pf(n) if is_upf(a))


@dataclass(frozen=True)
class BlockStructure:
    """Blocks of a unit interval parking function.

    ``positions[j]`` lists the 1-indexed positions of alpha holding the
    entries of block j (in increasing position order), ``values[j]`` the
    corresponding entries, and ``sizes`` the block sizes (the UPF content).
    """
    positions: tuple
    values: tuple
    sizes: Word

    @property
    def blocks(self):
        return self.values


def block_structure(alpha: Sequence[int]) -> BlockStructure:
    if not is_upf(alpha):
        raise ValueError(f"{tuple(alpha)} is not a unit interval parking function")
    beta = sorted(alpha)
    starts = [i for i, b in enumerate(beta, 1) if b == i]
    bounds = starts + [len(beta) + 1]
    positions, values = [], []
    for lo, hi in zip(bounds, bounds[1:]):
        # block values are lo, lo, lo+1, ..., hi-2 (value range [lo, hi-1))
        pos = tuple(i for i, a in enumerate(alpha, 1) if lo <= a < hi)
        positions.append(pos)
        values.append(tuple(alpha[i - 1] for i in pos))
    return BlockStructure(tuple(positions), tuple(values), tuple(len(p) for p in positions))


def upf_content(alpha: Sequence[int]) -> Word:
    return block_structure(alpha).sizes


def psi(alpha: Sequence[int]) -> Word:
    """UPF -> Cayley permutation: replace each entry by the index of its block."""
    bs = block_structure(alpha)
    out = [0] * len(alpha)
    for j, pos in enumerate(bs.positions, 1):
        for i in pos:
            out[i - 1] = j
    return tuple(out)


def psi_inverse(w: Sequence[int]) -> Word:
    if not is_cayley(w):
        raise ValueError(f"{tuple(w)} is not a Cayley permutation")
    c = content(w)
    alpha = [0] * len(w)
    start = 1
    for j, cj in enumerate(c, 1):
        fill = [start] + [start + t for t in range(cj - 1)]
        for val, i in zip(fill, (i for i, x in enumerate(w) if x == j)):
            alpha[i] = val
        start += cj
    return tuple(alpha)


def eta(sigma: Sequence[int], S) -> Word:
    """Map a permutation and a subset S of Asc(sigma^{-1}) to a Cayley permutation."""
    n = len(sigma)
    if not is_permutation(sigma):
        raise ValueError(f"{tuple(sigma)} is not a permutation")
    S = set(S)
    allowed = ascent_set(inverse(sigma)) if n else frozenset()
    if not S <= allowed:
        raise ValueError(f"S={sorted(S)} is not contained in Asc(sigma^-1)={sorted(allowed)}")
    cuts = [s for s in range(1, n + 1) if s not in S]
    block_of = [0] * (n + 1)
    lo = 1
    for k, s in enumerate(cuts, 1):
        for v in range(lo, s + 1):
            block_of[v] = k
        lo = s + 1
    return tuple(block_of[s] for s in sigma)


def eta_inverse(w: Sequence[int]) -> tuple[Word, frozenset]:
    if not is_cayley(w):
        raise ValueError(f"{tuple(w)} is not a Cayley permutation")
    c = content(w)
    offsets = [0]
    for ck in c:
        offsets.append(offsets[-1] + ck)
    seen = [0] * (len(c) + 1)
    sigma = []
    for k in w:
        seen[k] += 1
        sigma.append(offsets[k - 1] + seen[k])
    S = frozenset(m for k in range(len(c)) for m in range(offsets[k] + 1, offsets[k + 1]))
    return tuple(sigma), S


def pollak_reduce(w: Sequence[int]) -> Word:
    """Park on a circle with n+1 spots and rotate so the empty spot is n+1."""
    n = len(w)
    m = n + 1
    if any(not 1 <= x <= m for x in w):
        raise ValueError(f"entries must lie in [1, {m}]")
    taken = [False] * (m + 1)
    for pref in w:
        spot = pref
        while taken[spot]:
            spot = spot % m + 1
        taken[spot] = True
    empty = next(s for s in range(1, m + 1) if not taken[s])
    return tuple((x - empty) % m for x in w)


def is_hess(c: Sequence[int]) -> bool:
    n = len(c)
    total = 0
    for i, ci in enumerate(c, 1):
        if ci < 0:
            return False
        total += ci
        if not i <= total <= n:
            return False
    return True


def hess_sequences(n: int) -> Iterator[Word]:
    """Weak compositions (c_1..c_n) with i <= c_1+...+c_i <= n, lexicographic."""
    def rec(prefix, total):
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        for ci in range(0, n - total + 1):
            if total + ci >= i + 1:
                yield from rec(prefix + [ci], total + ci)

    if n < 0:
        raise ValueError("n must be nonnegative")
    yield from rec([], 0)


def area(alpha: Sequence[int]) -> int:
    if not is_parking_function(alpha):
        raise ValueError(f"{tuple(alpha)} is not a parking function")
    n = len(alpha)
    return comb(n + 1, 2) - sum(alpha)


def upf_act(alpha: Sequence[int], i: int) -> Word:
    """Adjacent transposition (i, i+1) acting on a UPF: swap unless same block."""
    bs = block_structure(alpha)
    block = {}
    for j, pos in enumerate(bs.positions):
        for p in pos:
            block[p] = j
    if block[i] == block[i + 1]:
        return tuple(alpha)
    a = list(alpha)
    a[i - 1], a[i] = a[i], a[i - 1]
    return tuple(a)
