"""q-integers, q-factorials, q-binomials and the inversion polynomials of
parking functions and unit interval parking functions."""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Sequence

from ..parking import enumerate_pf, enumerate_upf
from ..words import ascent_set, compositions, inv, permutations_of, weak_compositions
from .poly import _SUPERSCRIPT, Poly
from .qrat import QRat
from .series import TruncSeries

# brute-force cross-checks run up to this n; above it only the formula is used
BRUTE_CAP = 6


def q_int(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Poly([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = Poly([1])
    for k in range(2, n + 1):
        out = out * q_int(k)
    return out


@lru_cache(maxsize=None)
def q_pochhammer(n: int) -> Poly:
    """(q;q)_n = (1-q)(1-q^2)...(1-q^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = Poly([1])
    for k in range(1, n + 1):
        out = out * (Poly([1]) - Poly.monomial(k))
    if __debug__:
        assert out == Poly([1, -1]) ** n * q_factorial(n)
    return out


def q_multinomial(n: int, c: Sequence[int]) -> Poly:
    if any(x < 0 for x in c) or sum(c) != n:
        raise ValueError(f"parts {tuple(c)} do not form a weak composition of {n}")
    out = q_factorial(n)
    for x in c:
        out = out.exact_div(q_factorial(x))
    return out


def q_binom(n: int, k: int) -> Poly:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return q_multinomial(n, (k, n - k))


def inversion_polynomial(words) -> Poly:
    """Sum of q^inv(w) over a collection of words."""
    counts: dict[int, int] = {}
    for w in words:
        d = inv(w)
        counts[d] = counts.get(d, 0) + 1
    if not counts:
        return Poly()
    return Poly([counts.get(d, 0) for d in range(max(counts) + 1)])


def exp_q_series(N: int) -> TruncSeries:
    """exp_q(z) = sum z^n / [n]_q!."""
    return TruncSeries([QRat(1, q_factorial(n)) for n in range(N + 1)], N)


def Exp_q_series(N: int, sign: int = 1) -> TruncSeries:
    """Exp_q(sign*z) = sum q^C(n,2) (sign*z)^n / [n]_q!."""
    return TruncSeries([QRat(Poly.monomial(comb(n, 2), sign ** n), q_factorial(n))
                        for n in range(N + 1)], N)


def pf_q_brute(n: int) -> Poly:
    return inversion_polynomial(enumerate_pf(n))


@lru_cache(maxsize=None)
def pf_q_recursive(n: int) -> Poly:
    """Decompose by the k children of the virtual root and their subtree sizes."""
    if n == 0:
        return Poly([1])
    total = Poly()
    for k in range(1, n + 1):
        inner = Poly()
        for c in weak_compositions(n - k, k):
            term = q_multinomial(n - k, c)
            for ci in c:
                term = term * pf_q_recursive(ci)
            inner = inner + term
        total = total + q_binom(n, k) * inner
    return total


def pf_q(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = pf_q_recursive(n)
    if n <= BRUTE_CAP:
        brute = pf_q_brute(n)
        if brute != out:
            raise AssertionError(f"PF_{n}(q): recursion {out} != enumeration {brute}")
    return out


def upf_q_brute(n: int) -> Poly:
    return inversion_polynomial(enumerate_upf(n))


@lru_cache(maxsize=None)
def upf_q_formula(n: int) -> Poly:
    if n == 0:
        return Poly([1])
    total = Poly()
    for c in compositions(n):
        total = total + q_multinomial(n, c)
    return total


def upf_q(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = upf_q_formula(n)
    if n <= BRUTE_CAP:
        brute = upf_q_brute(n)
        if brute != out:
            raise AssertionError(f"UPF_{n}(q): formula {out} != enumeration {brute}")
    return out


class BiPoly:
    """Sparse polynomial in q and t with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict = {}
        for (a, b), x in self.terms.items():
            for (c, d), y in other.terms.items():
                out[a + c, b + d] = out.get((a + c, b + d), 0) + x * y
        return BiPoly(out)

    def t_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coeff_t(self, j: int) -> Poly:
        """Coefficient of t^j as a polynomial in q."""
        deg = max((i for i, jj in self.terms if jj == j), default=-1)
        return Poly([self.terms.get((i, j), 0) for i in range(deg + 1)])

    def at_t(self, t) -> Poly:
        out = Poly()
        for j in range(self.t_degree() + 1):
            out = out + self.coeff_t(j) * (t ** j)
        return out

    def as_poly_in_t(self) -> Poly:
        """Polynomial in t whose coefficients are QRat in q."""
        return Poly([QRat(self.coeff_t(j)) for j in range(self.t_degree() + 1)])

    def format(self, unicode: bool = False) -> str:
        if not self.terms:
            return "0"
        times = "" if unicode else "*"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (k[1], k[0])):
            c = self.terms[i, j]
            mono = times.join(m for m in (_pow("q", i, unicode), _pow("t", j, unicode)) if m)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{times}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append(f"-{body}" if not parts and c < 0 else body if not parts else f"{sign} {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BiPoly({self.terms!r})"


def _pow(var: str, k: int, unicode: bool = False) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}{str(k).translate(_SUPERSCRIPT)}" if unicode else f"{var}^{k}"


def a_inv_asc(n: int) -> BiPoly:
    """Sum over S_n of q^inv t^asc."""
    terms: dict = {}
    for s in permutations_of(n):
        key = (inv(s), len(ascent_set(s)))
        terms[key] = terms.get(key, 0) + 1
    return BiPoly(terms)
