"""Labeled rooted forests on [n].

A forest is stored as its parent map; roots have parent 0, the virtual
vertex that is prepended when traversing.  Children are always visited in
increasing label order, which fixes the plane structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .parking import enumerate_pf, is_parking_function
from .words import Word, is_permutation


@dataclass(frozen=True)
class Forest:
    parent: Word  # parent[v-1] = p(v), 0 for roots

    def __post_init__(self):
        parent = tuple(self.parent)
        object.__setattr__(self, "parent", parent)
        n = len(parent)
        for v, p in enumerate(parent, 1):
            if not 0 <= p <= n or p == v:
                raise ValueError(f"invalid parent {p} for vertex {v}")
        for v in range(1, n + 1):
            seen = set()
            u = v
            while u:
                if u in seen:
                    raise ValueError(f"cycle through vertex {v}")
                seen.add(u)
                u = parent[u - 1]

    @property
    def n(self) -> int:
        return len(self.parent)

    def p(self, v: int) -> int:
        return self.parent[v - 1]

    def children(self, v: int) -> list[int]:
        return [u for u, p in enumerate(self.parent, 1) if p == v]

    @classmethod
    def isolated(cls, n: int) -> "Forest":
        return cls((0,) * n)

    @classmethod
    def parse(cls, line: str) -> "Forest":
        """Parse ``"3; 1:0 2:1 3:1"``."""
        head, _, body = line.partition(";")
        n = int(head)
        parent = [None] * n
        for item in body.split():
            v, p = item.split(":")
            parent[int(v) - 1] = int(p)
        if None in parent:
            raise ValueError(f"missing parent in {line!r}")
        return cls(tuple(parent))

    def format(self) -> str:
        pairs = " ".join(f"{v}:{p}" for v, p in enumerate(self.parent, 1))
        return f"{self.n}; {pairs}" if pairs else f"{self.n};"

    __str__ = format


def preorder_word(F: Forest) -> Word:
    kids = [[] for _ in range(F.n + 1)]
    for v, p in enumerate(F.parent, 1):
        kids[p].append(v)
    out = []
    stack = [0]
    while stack:
        v = stack.pop()
        out.append(v)
        stack.extend(reversed(kids[v]))
    return tuple(out)


def _positions(F: Forest) -> list[int]:
    pos = [0] * (F.n + 1)
    for i, v in enumerate(preorder_word(F), 1):
        pos[v] = i
    return pos


def rho(F: Forest) -> Word:
    pos = _positions(F)
    return tuple(pos[p] for p in F.parent)


def rho_inverse(alpha: Sequence[int]) -> Forest:
    n = len(alpha)
    if not is_parking_function(alpha):
        raise ValueError(f"{tuple(alpha)} is not a parking function")
    by_position = [[] for _ in range(n + 2)]
    for v, a in enumerate(alpha, 1):
        by_position[a].append(v)
    parent = [0] * (n + 1)
    # the vertex visited at preorder position t has children by_position[t]
    stack = [0]
    t = 0
    while stack:
        v = stack.pop()
        t += 1
        for c in by_position[t]:
            parent[c] = v
        stack.extend(reversed(by_position[t]))
    if t != n + 1:
        raise ValueError(f"{tuple(alpha)} does not encode a forest")
    return Forest(tuple(parent[1:]))


def pinv(F: Forest) -> int:
    pos = _positions(F)
    pp = [pos[p] for p in F.parent]
    return sum(1 for i in range(F.n) for j in range(i + 1, F.n) if pp[i] > pp[j])


def area_forest(F: Forest) -> int:
    pos = _positions(F)
    return comb(F.n + 1, 2) - sum(pos[p] for p in F.parent)


def ancestors(F: Forest, v: int) -> list[int]:
    out = []
    u = F.p(v)
    while u:
        out.append(u)
        u = F.p(u)
    return out


def ancestor_inv(F: Forest) -> int:
    """Pairs i < j with j an ancestor of i."""
    return sum(1 for i in range(1, F.n + 1) for j in ancestors(F, i) if j > i)


def parental_content(F: Forest) -> Word:
    w = preorder_word(F)
    counts = [0] * (F.n + 1)
    for p in F.parent:
        counts[p] += 1
    return tuple(counts[w[i]] for i in range(F.n))


def sn_act(F: Forest, i: int) -> Forest:
    """Adjacent transposition (i, i+1) acting on F.

    Fixes F when i and i+1 have the same parent (two roots share the
    virtual parent 0); otherwise swaps the labels i and i+1.
    """
    n = F.n
    if not 1 <= i < n:
        raise ValueError(f"transposition index {i} outside [1, {n - 1}]")
    if F.p(i) == F.p(i + 1):
        return F

    def tau(v):
        return i + 1 if v == i else i if v == i + 1 else v

    parent = [0] * n
    for v, p in enumerate(F.parent, 1):
        parent[tau(v) - 1] = tau(p)
    return Forest(tuple(parent))


def reduced_word(sigma: Sequence[int], from_right: bool = False) -> list[int]:
    """A reduced word i_1..i_l with sigma = s_{i_1} ... s_{i_l}.

    Bubble-sorts sigma to the identity; ``from_right`` scans for descents
    right-to-left, which generally yields a different reduced word.
    """
    if not is_permutation(sigma):
        raise ValueError(f"{tuple(sigma)} is not a permutation")
    a = list(sigma)
    n = len(a)
    swaps = []
    scan = range(n - 2, -1, -1) if from_right else range(n - 1)
    changed = True
    while changed:
        changed = False
        for j in scan:
            if a[j] > a[j + 1]:
                a[j], a[j + 1] = a[j + 1], a[j]
                swaps.append(j + 1)
                changed = True
    # sigma * s_{j1} * ... * s_{jl} = id  =>  sigma = s_{jl} ... s_{j1}
    return swaps[::-1]


def act_word(F: Forest, word: Sequence[int]) -> Forest:
    """(s_{i_1} ... s_{i_l}) . F, applying the rightmost generator first."""
    for i in reversed(word):
        F = sn_act(F, i)
    return F


def act(F: Forest, sigma: Sequence[int]) -> Forest:
    return act_word(F, reduced_word(sigma))


def enumerate_forests(n: int) -> Iterator[Forest]:
    return (rho_inverse(a) for a in enumerate_pf(n))


def enumerate_increasing_forests(n: int) -> Iterator[Forest]:
    return (F for F in enumerate_forests(n) if pinv(F) == 0)
