"""Symmetric functions in the complete homogeneous basis.

A :class:`SymF` is a homogeneous element of degree n stored as a map from
partitions of n to coefficients.  Coefficients are ints, Fractions, or
polynomials in t (``Poly`` over Fractions) for the graded versions.
"""

from __future__ import annotations

import json
from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Sequence

from .forests import area_forest, enumerate_increasing_forests, parental_content, sn_act
from .parking import area, block_structure, enumerate_pf, enumerate_upf, upf_act
from .qalgebra.poly import Poly
from .qalgebra.qnumbers import inversion_polynomial, q_pochhammer
from .qalgebra.qrat import QRat
from .qalgebra.series import TruncSeries, compose
from .report import Report
from .words import Word, compositions, content, swap, weak_compositions

Partition = tuple


def partitions(n: int, largest: int | None = None) -> list[Partition]:
    """Partitions of n in decreasing lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return out


def _t_degree(c) -> int:
    return c.degree if isinstance(c, Poly) else 0


class SymF:
    __slots__ = ("n", "terms")

    def __init__(self, n: int | None, terms: dict | None = None):
        clean = {}
        for lam, c in (terms or {}).items():
            lam = tuple(lam)
            if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(p < 1 for p in lam):
                raise ValueError(f"{lam} is not a partition")
            if n is not None and sum(lam) != n:
                raise ValueError(f"partition {lam} does not have size {n}")
            if c:
                clean[lam] = c
        if clean and n is None:
            n = sum(next(iter(clean)))
        self.n = n
        self.terms = clean

    @classmethod
    def unit(cls, c=1) -> "SymF":
        return cls(0, {(): c})

    @classmethod
    def zero(cls, n: int | None = None) -> "SymF":
        return cls(n)

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, lam):
        return self.terms.get(tuple(lam), 0)

    def _coerce(self, other) -> "SymF":
        if isinstance(other, SymF):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return SymF.unit(other) if other else SymF(None)
        raise TypeError(f"cannot combine SymF with {type(other).__name__}")

    def _check_degree(self, other: "SymF"):
        if self.terms and other.terms and self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        self._check_degree(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        n = self.n if self.terms else other.n
        return SymF(n, out)

    __radd__ = __add__

    def __neg__(self):
        return SymF(self.n, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymF):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, Poly)):
            return SymF(self.n, {lam: c * other for lam, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return SymF(self.n, {lam: other * c for lam, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = self._coerce(other)
        if not isinstance(other, SymF):
            return NotImplemented
        return self.terms == other.terms and (not self.terms or self.n == other.n)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def at_t(self, t) -> "SymF":
        """Substitute a value for t in every coefficient."""
        return SymF(self.n, {lam: (c(t) if isinstance(c, Poly) else c) for lam, c in self.terms.items()})

    def sorted_terms(self):
        # lowest power of t first, then partitions in decreasing order
        return sorted(self.terms.items(), key=lambda kv: (_t_degree(kv[1]), [-p for p in kv[0]]))

    def format(self, unicode: bool = False) -> str:
        if not self.terms:
            return "0"
        times = "·" if unicode else "*"
        parts = []
        for lam, c in self.sorted_terms():
            basis = "h[" + ",".join(map(str, lam)) + "]"
            neg = not isinstance(c, Poly) and c < 0
            mag = -c if neg else c
            if mag == 1:
                body = basis
            elif isinstance(mag, Poly) and sum(1 for x in mag if x) > 1:
                body = f"({mag.format('t', unicode)}){times}{basis}"
            elif isinstance(mag, Poly):
                body = f"{mag.format('t', unicode)}{times}{basis}"
            else:
                body = f"{mag}{times}{basis}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"SymF({self.n}, {self.terms!r})"

    def to_dict(self) -> dict:
        rows = []
        for lam, c in self.sorted_terms():
            coeff = c.format("t") if isinstance(c, Poly) else str(c)
            rows.append({"partition": list(lam), "coeff": coeff})
        return {"n": self.n if self.n is not None else 0, "terms": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def h_of(c: Sequence[int]) -> SymF:
    lam = tuple(sorted((p for p in c if p), reverse=True))
    return SymF(sum(lam), {lam: 1})


def multiply(f: SymF, g: SymF) -> SymF:
    out: dict = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            key = tuple(sorted(lam + mu, reverse=True))
            out[key] = out[key] + a * b if key in out else a * b
    n = (f.n or 0) + (g.n or 0)
    return SymF(n, out)


@lru_cache(maxsize=None)
def e_in_h(n: int) -> SymF:
    """e_n from sum_{i=0}^{n} (-1)^i e_i h_{n-i} = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return SymF.unit()
    acc = SymF(n)
    for i in range(n):
        acc = acc + (-1) ** i * multiply(e_in_h(i), h_of((n - i,)))
    return (-1) ** (n + 1) * acc


def h_series(N: int, scale: Callable[[int], object] | None = None) -> TruncSeries:
    """H(z) = sum h_n z^n, optionally with slot n multiplied by scale(n)."""
    return TruncSeries([h_of((n,)) * (scale(n) if scale else 1) for n in range(N + 1)], N)


def e_series(N: int, sign: int = 1) -> TruncSeries:
    """E(sign*z) = sum e_n (sign*z)^n."""
    return TruncSeries([e_in_h(n) * sign ** n for n in range(N + 1)], N)


# -- Frobenius images ------------------------------------------------------

def _orbits(W: set, n: int, act) -> list[list[Word]]:
    seen, out = set(), []
    for w in sorted(W):
        if w in seen:
            continue
        seen.add(w)
        orbit, todo = [w], deque([w])
        while todo:
            u = todo.popleft()
            for i in range(1, n):
                v = act(u, i)
                if v not in seen:
                    seen.add(v)
                    orbit.append(v)
                    todo.append(v)
        out.append(orbit)
    return out


class NotInvariantError(ValueError):
    pass


def frobenius_of_word_set(W: Iterable[Word], n: int, act=None, content_fn=None) -> SymF:
    """Sum of h_{content} over the orbits of W.

    By default the adjacent transpositions permute positions and the content
    is the multiset of values; a different action (the block action on unit
    interval parking functions) can be supplied with its content function.
    """
    act = act or swap
    content_fn = content_fn or content
    W = set(map(tuple, W))
    for w in W:
        if len(w) != n:
            raise ValueError(f"{w} does not have length {n}")
        for i in range(1, n):
            if act(w, i) not in W:
                raise NotInvariantError(f"word set not closed: s_{i} moves {w} outside")
    total = SymF(n)
    for orbit in _orbits(W, n, act):
        c = content_fn(orbit[0])
        assert all(content_fn(u) == c for u in orbit[1:]), "content not constant on an orbit"
        total = total + h_of(c)
    return total


def pf_frobenius(n: int) -> SymF:
    return frobenius_of_word_set(enumerate_pf(n), n)


def pf_sym_forests(n: int) -> SymF:
    total = SymF(n)
    for F in enumerate_increasing_forests(n):
        total = total + h_of(parental_content(F))
    return total


@lru_cache(maxsize=None)
def pf_sym_recursive(n: int) -> SymF:
    if n == 0:
        return SymF.unit()
    total = SymF(n)
    for k in range(1, n + 1):
        inner = SymF(n - k)
        for c in weak_compositions(n - k, k):
            term = SymF.unit()
            for ci in c:
                term = multiply(term, pf_sym_recursive(ci))
            inner = inner + term
        total = total + multiply(h_of((k,)), inner)
    return total


def pf_symfunc(n: int, brute_cap: int = 6) -> SymF:
    """PF_n(x); cross-checked against the orbit and forest constructions."""
    out = pf_sym_recursive(n)
    if n <= brute_cap:
        for name, other in (("frobenius", pf_frobenius(n)), ("forests", pf_sym_forests(n))):
            if other != out:
                raise AssertionError(f"PF_{n}(x): recursion {out} != {name} {other}")
    return out


def _increasing(w) -> bool:
    return all(a <= b for a, b in zip(w, w[1:]))


def pf_symfunc_graded(n: int) -> SymF:
    """Sum over weakly increasing PFs of t^area h_content."""
    for F in enumerate_increasing_forests(n):
        a = area_forest(F)
        for i in range(1, n):
            assert area_forest(sn_act(F, i)) == a, "area not constant on a forest orbit"
    total = SymF(n)
    for alpha in enumerate_pf(n):
        if _increasing(alpha):
            total = total + Poly.monomial(area(alpha), Fraction(1)) * h_of(content(alpha))
    return total


def upf_symfunc(n: int) -> SymF:
    total = SymF(n)
    for c in compositions(n):
        total = total + h_of(c)
    return total


def upf_frobenius(n: int) -> SymF:
    return frobenius_of_word_set(enumerate_upf(n), n, act=upf_act,
                                 content_fn=lambda a: block_structure(a).sizes)


def upf_sym_graded_formula(n: int) -> SymF:
    total = SymF(n)
    for c in compositions(n):
        total = total + Poly.monomial(n - len(c), Fraction(1)) * h_of(c)
    return total


def upf_sym_graded_area(n: int) -> SymF:
    total = SymF(n)
    for alpha in enumerate_upf(n):
        if _increasing(alpha):
            total = total + Poly.monomial(area(alpha), Fraction(1)) * h_of(block_structure(alpha).sizes)
    return total


def upf_symfunc_graded(n: int, brute_cap: int = 7) -> SymF:
    out = upf_sym_graded_formula(n)
    if n <= brute_cap:
        other = upf_sym_graded_area(n)
        if other != out:
            raise AssertionError(f"UPF_{n}(x,t): formula {out} != area sum {other}")
    return out


# -- generating function checks -------------------------------------------

def _series_report(identity: str, N: int, lhs: TruncSeries, rhs: TruncSeries) -> Report:
    bad = lhs.first_mismatch(rhs)
    if bad is None:
        return Report(identity, N, "pass", [str(c) for c in lhs], [str(c) for c in rhs])
    diff = lhs[bad] - rhs[bad]
    lam = min(diff.terms, key=lambda l: [-p for p in l]) if isinstance(diff, SymF) and diff.terms else None
    return Report(identity, N, "fail", str(lhs[bad]), str(rhs[bad]),
                  {"z_exponent": bad, "n": bad - 1 if identity.startswith("pf") else bad,
                   "partition": list(lam) if lam is not None else None})


def verify_h_e(N: int) -> Report:
    """H(z) E(-z) = 1."""
    return _series_report("h-e", N, h_series(N) * e_series(N, -1), TruncSeries.constant(SymF.unit(), N))


def verify_pf_sym_gf(N: int, overrides: dict | None = None) -> Report:
    """B(A(z)) = z for A = sum_{n<N} PF_n(x) z^(n+1) and B = z E(-z)."""
    if N < 1:
        raise ValueError("N must be at least 1")
    overrides = overrides or {}
    A = TruncSeries([SymF(None)] + [overrides.get(n, pf_sym_recursive(n)) for n in range(N)], N)
    B = e_series(N, -1).shift(1)
    lhs = compose(B, A)
    rhs = TruncSeries([SymF(None), SymF.unit()], N)
    return _series_report("pf-sym-gf", N, lhs, rhs)


def verify_pf_sym_recursion(n: int) -> Report:
    rec = pf_sym_recursive(n)
    checks = {"frobenius": pf_frobenius(n), "forests": pf_sym_forests(n)}
    for name, other in checks.items():
        if other != rec:
            diff = rec - other
            lam = sorted(diff.terms)[0]
            return Report("pf-sym-recursion", n, "fail", str(rec), str(other),
                          {"construction": name, "n": n, "partition": list(lam)})
    return Report("pf-sym-recursion", n, "pass", str(rec), str(rec))


def verify_upf_sym_gf(N: int, overrides: dict | None = None) -> Report:
    """(2 - H(z)) sum UPF_n(x) z^n = 1."""
    overrides = overrides or {}
    U = TruncSeries([overrides.get(n, upf_symfunc(n)) for n in range(N + 1)], N)
    lhs = (2 - h_series(N)) * U
    return _series_report("upf-sym-gf", N, lhs, TruncSeries.constant(SymF.unit(), N))


def verify_upf_graded_gf(N: int, overrides: dict | None = None) -> Report:
    """([2]_t - H(tz)) sum UPF_n(x,t) z^n = t."""
    overrides = overrides or {}
    t = Poly([Fraction(0), Fraction(1)])
    two_t = Poly([Fraction(1), Fraction(1)])
    U = TruncSeries([overrides.get(n, upf_symfunc_graded(n)) for n in range(N + 1)], N)
    D = TruncSeries.constant(SymF.unit(two_t), N) - h_series(N, lambda n: t ** n)
    return _series_report("upf-graded-gf", N, D * U, TruncSeries.constant(SymF.unit(t), N))


# -- principal specialization ----------------------------------------------

def ps(f: SymF) -> QRat:
    """Stable principal specialization, with ps(h_k) = 1/(q;q)_k."""
    total = QRat(0)
    for lam, c in f.terms.items():
        if isinstance(c, Poly):
            raise TypeError("ps needs scalar coefficients; specialize t first")
        den = Poly([1])
        for p in lam:
            den = den * q_pochhammer(p)
        total = total + QRat(c) / QRat(den)
    return total


def verify_ps_inversion(W: Iterable[Word], n: int, act=None, content_fn=None,
                        name: str = "words") -> Report:
    """(q;q)_n ps(Frobenius image of W) = sum_{w in W} q^inv(w)."""
    W = [tuple(w) for w in W]
    lhs = ps(frobenius_of_word_set(W, n, act, content_fn)) * q_pochhammer(n)
    rhs = inversion_polynomial(W)
    ok = lhs == rhs
    return Report(f"ps-inversion[{name}]", n, "pass" if ok else "fail", str(lhs), str(rhs),
                  None if ok else {"n": n})


def verify_specialization(N: int) -> Report:
    """ps of the symmetric identity with z -> z(1-q) matches the q-identity.

    Checks slot by slot: ps(e_n) (1-q)^n = q^C(n,2)/[n]_q! and
    ps(PF_n(x)) (1-q)^n = PF_n(q)/[n]_q!.
    """
    from .qalgebra.qnumbers import pf_q, q_factorial

    one_minus_q = Poly([1, -1])
    reports = []
    for n in range(N + 1):
        lhs = ps(e_in_h(n)) * one_minus_q ** n
        rhs = QRat(Poly.monomial(comb(n, 2)), q_factorial(n))
        if lhs != rhs:
            return Report("specialization", N, "fail", str(lhs), str(rhs), {"series": "E", "n": n})
        lhs = ps(pf_sym_recursive(n)) * one_minus_q ** n
        rhs = QRat(pf_q(n), q_factorial(n))
        if lhs != rhs:
            return Report("specialization", N, "fail", str(lhs), str(rhs), {"series": "PF", "n": n})
        reports.append(n)
    return Report("specialization", N, "pass", reports, reports)
