"""k-transitive statistics on S_n-invariant word families.

A k-transitive function chi is given by theta, a function of k values:
chi(w, (i_1..i_k)) = theta(w_{i_1}, ..., w_{i_k}).  From it we build

* f_chi(w): the sum over all increasing position tuples,
* g_chi(w): the sum over windows of k adjacent positions,
* chi_1(w): the value on the first window (1, ..., k).

On an S_n-invariant family the expectations of the three are tied together
by binomial factors; this module enumerates families and checks those
relations, the closed-form totals built from them, and the exponential
generating function relations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial
from typing import Callable, Iterable, Iterator, Sequence

from .parking import enumerate_pf, enumerate_upf, hess_sequences, psi
from .qalgebra.series import TruncSeries, exp_series
from .report import Report, check, combine
from .words import (Word, compositions, enumerate_cayley, multinomial, orbit, permutations_of,
                    sign, statistic, swap)


@dataclass(frozen=True)
class KTransitiveFn:
    k: int
    theta: Callable[..., object] = field(compare=False)
    name: str = "chi"

    def __call__(self, values: Sequence[int]):
        return self.theta(*values)

    def __add__(self, other: "KTransitiveFn") -> "KTransitiveFn":
        if self.k != other.k:
            raise ValueError("cannot add functions of different arity")
        a, b = self.theta, other.theta
        return KTransitiveFn(self.k, lambda *v: a(*v) + b(*v), f"{self.name}+{other.name}")


def _check_arity(w, chi):
    if chi.k > len(w):
        raise ValueError(f"{chi.name} has arity {chi.k} > word length {len(w)}")


def f_chi(w: Sequence[int], chi: KTransitiveFn):
    _check_arity(w, chi)
    return sum((chi(v) for v in combinations(w, chi.k)), 0)


def g_chi(w: Sequence[int], chi: KTransitiveFn):
    _check_arity(w, chi)
    k = chi.k
    return sum((chi(w[i:i + k]) for i in range(len(w) - k + 1)), 0)


def chi_1(w: Sequence[int], chi: KTransitiveFn):
    _check_arity(w, chi)
    return chi(w[:chi.k])


def _pattern_theta(rho):
    # values at positions rho^{-1}(1), ..., rho^{-1}(k) strictly increase
    order = sorted(range(len(rho)), key=lambda i: rho[i])

    def theta(*v):
        return int(all(v[order[j]] < v[order[j + 1]] for j in range(len(order) - 1)))
    return theta


def chi_pattern(rho: Sequence[int]) -> KTransitiveFn:
    return KTransitiveFn(len(rho), _pattern_theta(tuple(rho)), "p" + "".join(map(str, rho)))


def chi_pattern_set(R: Iterable[Sequence[int]], name: str | None = None) -> KTransitiveFn:
    R = [tuple(r) for r in R]
    thetas = [_pattern_theta(r) for r in R]
    k = len(R[0])
    return KTransitiveFn(k, lambda *v: sum(t(*v) for t in thetas),
                         name or "{" + ",".join("".join(map(str, r)) for r in R) + "}")


def chi_graphical(edges: Iterable[tuple]) -> KTransitiveFn:
    E = frozenset(map(tuple, edges))
    if any(a == b for a, b in E):
        raise ValueError("loops i->i are not allowed")
    return KTransitiveFn(2, lambda a, b: int((a, b) in E), f"graph{sorted(E)}")


CHI_INV = KTransitiveFn(2, lambda a, b: int(a > b), "inv")
CHI_TIE = KTransitiveFn(2, lambda a, b: int(a == b), "tie")
CHI_SDES = KTransitiveFn(2, lambda a, b: int(a == b + 1), "sdes")
CHI_BDES = KTransitiveFn(2, lambda a, b: int(a > b + 1), "bdes")
CHI_DTOP = KTransitiveFn(2, lambda a, b: a if a > b else 0, "dtop")
CHI_PEAK = chi_pattern_set([(1, 3, 2), (2, 3, 1)], "peak")

BUILTIN_CHI = {c.name: c for c in (CHI_INV, CHI_TIE, CHI_SDES, CHI_BDES, CHI_DTOP)}
BUILTIN_CHI.update({c.name: c for c in map(chi_pattern, permutations_of(3))})
BUILTIN_CHI["peak"] = CHI_PEAK


# -- word families ---------------------------------------------------------

class PreconditionError(Exception):
    """The family does not satisfy the hypotheses of the theorem being checked."""


@dataclass(frozen=True)
class WordFamily:
    """A family of words W_n.

    ``group`` names the group acting on positions: "sn" for the full
    symmetric group, "an" for the alternating group.  ``transport`` maps a
    member to the word on which statistics are evaluated (unit interval
    parking functions are studied through their Cayley permutations).
    """
    name: str
    generate: Callable[[int], Iterable[Word]] = field(compare=False)
    group: str = "sn"
    transport: Callable[[Word], Word] | None = field(default=None, compare=False)

    def raw(self, n: int) -> list[Word]:
        return [tuple(w) for w in self.generate(n)]

    def words(self, n: int) -> list[Word]:
        ws = self.raw(n)
        return [self.transport(w) for w in ws] if self.transport else ws


def _alternating(n: int) -> Iterator[Word]:
    return (s for s in permutations_of(n) if sign(s) == 1)


def _all_words(n: int) -> Iterator[Word]:
    return product(range(1, n + 2), repeat=n)


SN = WordFamily("sn", permutations_of)
SN_PLUS = WordFamily("sn_plus", _alternating, group="an")
PF = WordFamily("pf", enumerate_pf)
UPF = WordFamily("upf", enumerate_upf, transport=psi)
CAYLEY = WordFamily("cayley", enumerate_cayley)
WORDS = WordFamily("words", _all_words)

FAMILIES = {f.name: f for f in (SN, SN_PLUS, PF, UPF, CAYLEY, WORDS)}


def orbit_family(w: Sequence[int]) -> WordFamily:
    w = tuple(w)
    n = len(w)

    def gen(m):
        if m != n:
            raise ValueError(f"orbit of {w} only has length {n}")
        return sorted(orbit(w))
    return WordFamily(f"orbit{w}", gen)


def random_orbits(count: int, n: int, seed: int = 0) -> list[WordFamily]:
    """Orbits of random words of length n with letters in [1, n]."""
    rng = random.Random(seed)
    return [orbit_family(tuple(rng.randint(1, n) for _ in range(n))) for _ in range(count)]


def _as_fn(stat) -> Callable[[Word], object]:
    if isinstance(stat, KTransitiveFn):
        return lambda w: f_chi(w, stat)
    if callable(stat):
        return stat
    return lambda w: statistic(w, stat)


def total(family: WordFamily, n: int, stat) -> Fraction:
    fn = _as_fn(stat)
    words = family.words(n)
    if not words:
        raise ValueError(f"family {family.name} is empty at n={n}")
    return Fraction(sum(fn(w) for w in words))


def expectation(family: WordFamily, n: int, stat) -> Fraction:
    words = family.words(n)
    if not words:
        raise ValueError(f"family {family.name} is empty at n={n}")
    fn = _as_fn(stat)
    return Fraction(sum(fn(w) for w in words), len(words))


def _three_cycle(w: Word, i: int) -> Word:
    # positions (i, i+1, i+2) -> (i+1, i+2, i)
    w = list(w)
    w[i - 1], w[i], w[i + 1] = w[i + 1], w[i - 1], w[i]
    return tuple(w)


def check_invariance(words: Iterable[Word], n: int, group: str = "sn", k: int | None = None):
    """Raise PreconditionError unless the set is closed under the group.

    For the alternating group the action on k-subsets of positions is
    transitive only when n >= k + 2, which is also required.
    """
    W = set(words)
    if group == "sn":
        gens = [(lambda w, i=i: swap(w, i)) for i in range(1, n)]
    elif group == "an":
        if k is not None and n > k and n < k + 2:
            raise PreconditionError(f"A_{n} is not {k}-transitive on positions")
        gens = [(lambda w, i=i: _three_cycle(w, i)) for i in range(1, n - 1)]
    else:
        raise ValueError(f"unknown group {group!r}")
    for w in W:
        for g in gens:
            if g(w) not in W:
                raise PreconditionError(f"not invariant: {w} is mapped to {g(w)}")


def verify_k_transitive_theorem(family: WordFamily, n: int, chi: KTransitiveFn) -> Report:
    """E[f] = C(n,k) E[chi_1], E[g] = (n-k+1) E[chi_1], E[f] = C(n,k-1) E[g] / k."""
    k = chi.k
    if k > n:
        raise ValueError(f"arity {k} exceeds n={n}")
    words = family.words(n)
    check_invariance(words, n, family.group, k)
    m = len(words)
    Ef = Fraction(sum(f_chi(w, chi) for w in words), m)
    Eg = Fraction(sum(g_chi(w, chi) for w in words), m)
    E1 = Fraction(sum(chi_1(w, chi) for w in words), m)
    name = f"k-transitive[{family.name},{chi.name}]"
    parts = [
        check(f"{name}(a)", n, Ef, comb(n, k) * E1),
        check(f"{name}(b)", n, Eg, (n - k + 1) * E1),
        check(f"{name}(c)", n, Ef, Fraction(comb(n, k - 1), k) * Eg),
    ]
    rep = combine(name, n, parts)
    rep.lhs, rep.rhs = {"E[f]": Ef, "E[g]": Eg, "E[chi_1]": E1}, None
    return rep


# -- closed-form totals ----------------------------------------------------

def fubini(n: int) -> int:
    """Ordered set partitions of [n]: Fub_n = sum_k C(n,k) Fub_{n-k}."""
    f = [1]
    for m in range(1, n + 1):
        f.append(sum(comb(m, k) * f[m - k] for k in range(1, m + 1)))
    return f[n]


def _pf_power(n: int) -> Fraction:
    return Fraction(n + 1) ** (n - 2)


def table1_closed_forms(n: int) -> dict:
    """Row -> (total over S_n, total over PF_n)."""
    fn, p = factorial(n), _pf_power(n)
    return {
        "inv": (Fraction(fn * n * (n - 1), 4), Fraction(n, 2) * p * comb(n, 2)),
        "des": (Fraction(fn * (n - 1), 2), comb(n, 2) * p),
        "des1": (Fraction(fn, 2), Fraction(n, 2) * p),
        "tie": (Fraction(0), (n - 1) * p),
        "tie1": (Fraction(0), p),
        "sdes": (Fraction((n - 1) * factorial(n - 1)), (n - 1) * p),
        "sdes1": (Fraction(factorial(n - 1)), p),
        "sinv": (Fraction(fn * (n - 1), 2), comb(n, 2) * p),
        "bdes": (Fraction(comb(n - 1, 2) * factorial(n - 1)), comb(n - 1, 2) * p),
        "bdes1": (Fraction(n - 2, 2) * factorial(n - 1), Fraction(n - 2, 2) * p),
        "binv": (comb(n - 1, 2) * Fraction(fn, 2), Fraction(n * (n - 1) * (n - 2), 4) * p),
    }


# each row is a k-transitive function with one of the three sums
TABLE1_ROWS = {
    "inv": (CHI_INV, f_chi), "des": (CHI_INV, g_chi), "des1": (CHI_INV, chi_1),
    "tie": (CHI_TIE, g_chi), "tie1": (CHI_TIE, chi_1),
    "sdes": (CHI_SDES, g_chi), "sdes1": (CHI_SDES, chi_1), "sinv": (CHI_SDES, f_chi),
    "bdes": (CHI_BDES, g_chi), "bdes1": (CHI_BDES, chi_1), "binv": (CHI_BDES, f_chi),
}


def table1_totals(family: WordFamily, n: int) -> dict:
    words = family.words(n)
    return {row: Fraction(sum(how(w, chi) for w in words)) for row, (chi, how) in TABLE1_ROWS.items()}


def table1(n: int) -> Report:
    if n < 2:
        raise ValueError("Table 1 rows need n >= 2")
    closed = table1_closed_forms(n)
    sn, pf = table1_totals(SN, n), table1_totals(PF, n)
    parts = []
    for row, (c_sn, c_pf) in closed.items():
        parts.append(check(f"table1[{row},sn]", n, sn[row], c_sn))
        parts.append(check(f"table1[{row},pf]", n, pf[row], c_pf))
    rep = combine("table1", n, parts)
    rep.lhs = {"sn": sn, "pf": pf}
    rep.rhs = {row: list(v) for row, v in closed.items()}
    return rep


def upf_totals(n: int) -> Report:
    if n < 2:
        raise ValueError("need n >= 2")
    fub, fub1 = fubini(n), fubini(n - 1)
    words = UPF.words(n)
    des_t = sum(g_chi(w, CHI_INV) for w in words)
    inv_t = sum(f_chi(w, CHI_INV) for w in words)
    tie_t = sum(g_chi(w, CHI_TIE) for w in words)
    raw_inv = sum(f_chi(w, CHI_INV) for w in UPF.raw(n))
    return combine("upf-totals", n, [
        check("upf-des", n, Fraction(des_t), Fraction(n - 1, 2) * (fub - fub1)),
        check("upf-inv", n, Fraction(inv_t), Fraction(n * (n - 1), 4) * (fub - fub1)),
        check("upf-tie", n, Fraction(tie_t), Fraction((n - 1) * fub1)),
        check("upf-inv-untransported", n, raw_inv, inv_t),
        check("upf-count", n, len(words), fub),
    ])


def dtop_itop_peak_totals(n: int) -> Report:
    if n < 2:
        raise ValueError("need n >= 2")
    words = SN.words(n)
    fn = factorial(n)
    parts = [
        check("dtop", n, sum(statistic(w, "dtop") for w in words), Fraction(factorial(n + 1) * (n - 1), 3)),
        check("itop", n, sum(statistic(w, "itop") for w in words), comb(n + 1, 3) * fn),
        check("pk", n, sum(statistic(w, "pk") for w in words), Fraction((n - 2) * fn, 3)),
        check("hz", n, sum(statistic(w, "hz") for w in words), Fraction(comb(n, 3) * fn, 3)),
        check("dtop=g", n, sum(g_chi(w, CHI_DTOP) for w in words), sum(statistic(w, "dtop") for w in words)),
        check("itop=f", n, sum(f_chi(w, CHI_DTOP) for w in words), sum(statistic(w, "itop") for w in words)),
    ]
    if n >= 3:
        parts += [
            check("pk=g", n, sum(g_chi(w, CHI_PEAK) for w in words), sum(statistic(w, "pk") for w in words)),
            check("hz=f", n, sum(f_chi(w, CHI_PEAK) for w in words), sum(statistic(w, "hz") for w in words)),
        ]
    return combine("dtop-itop-peak", n, parts)


def graphical_totals(edges: Iterable[tuple], n: int) -> Report:
    E = sorted(set(map(tuple, edges)))
    if any(not (1 <= a <= n and 1 <= b <= n) for a, b in E):
        raise ValueError(f"edges must join vertices of [1, {n}]")
    chi = chi_graphical(E)
    words = SN.words(n)
    parts = [
        check("graphical-inv", n, sum(f_chi(w, chi) for w in words), Fraction(factorial(n) * len(E), 2)),
        check("graphical-des", n, sum(g_chi(w, chi) for w in words), factorial(n - 1) * len(E)),
    ]
    return combine(f"graphical{E}", n, parts)


def _tie_multinomials(n: int, c: Sequence[int]) -> int:
    return sum(multinomial(n, tuple(c[:i]) + (c[i] - 2, 2) + tuple(c[i + 1:])) for i in range(len(c)))


def identity_checks(n: int) -> Report:
    if n < 2:
        raise ValueError("need n >= 2")
    pf = PF.words(n)
    cayley_lhs = Fraction(2, n) * sum(_tie_multinomials(n, c) for c in compositions(n))
    hess_lhs = sum(_tie_multinomials(n, c) for c in hess_sequences(n))
    return combine("open-identities", n, [
        check("dtop-vs-peaks", n, sum(statistic(w, "dtop") for w in SN.words(n)),
              sum(statistic(w, "pk") for w in SN.words(n + 1))),
        check("pf-des-vs-tie-pairs", n, sum(g_chi(w, CHI_INV) for w in pf),
              sum(f_chi(w, CHI_TIE) for w in pf)),
        check("cayley-ties", n, cayley_lhs, Fraction((n - 1) * fubini(n - 1))),
        check("hess-ties", n, Fraction(hess_lhs), comb(n, 2) * _pf_power(n)),
    ])


# -- exponential generating functions -------------------------------------

@dataclass
class EgfTriple:
    """EGFs of the totals of f_chi, g_chi and chi_1 (slot n holds total/n!)."""
    H: TruncSeries
    G: TruncSeries
    F: TruncSeries
    k: int

    @classmethod
    def from_family(cls, family: WordFamily, chi: KTransitiveFn, N: int) -> "EgfTriple":
        H, G, F = [Fraction(0)], [Fraction(0)], [Fraction(0)]
        for n in range(1, N + 1):
            if n < chi.k:
                H.append(Fraction(0)), G.append(Fraction(0)), F.append(Fraction(0))
                continue
            words = family.words(n)
            d = factorial(n)
            H.append(Fraction(sum(chi_1(w, chi) for w in words), d))
            G.append(Fraction(sum(g_chi(w, chi) for w in words), d))
            F.append(Fraction(sum(f_chi(w, chi) for w in words), d))
        return cls(TruncSeries(H, N), TruncSeries(G, N), TruncSeries(F, N), chi.k)

    def relations(self) -> dict:
        """name -> (lhs, rhs) for the four differential relations."""
        k, H, G, F = self.k, self.H, self.G, self.F
        ck = Fraction(1, factorial(k))
        return {
            "F-to-G": (F, G.derive(k - 1).shift(k - 1) * ck),
            "G-to-H": (G, H.derivative().shift(1) - H * (k - 1)),
            "Gdiff-to-Hdiff": (G.derive(k - 1), H.derive(k).shift(1)),
            "F-to-H": (F, H.derive(k).shift(k) * ck),
        }


def upf_inv_closed_form(N: int) -> TruncSeries:
    """z^2 e^(2z) / (2 (2 - e^z)^3)."""
    e = exp_series(N)
    d = (2 - e).reciprocal()
    return (exp_series(N, 2) * d * d * d).shift(2) * Fraction(1, 2)


def cayley_tie_closed_form(N: int) -> TruncSeries:
    """z e^z / (2 - e^z)^2, the derivative of the Cayley tie EGF."""
    e = exp_series(N)
    d = (2 - e).reciprocal()
    return (e * d * d).shift(1)


def _series_check(name: str, N: int, lhs: TruncSeries, rhs: TruncSeries) -> Report:
    bad = lhs.first_mismatch(rhs)
    if bad is None:
        return Report(name, N, "pass", [str(c) for c in lhs], [str(c) for c in rhs])
    return Report(name, N, "fail", str(lhs[bad]), str(rhs[bad]), {"coefficient": bad})


def egf_verify(family: WordFamily, chi: KTransitiveFn, N: int, triple: EgfTriple | None = None) -> Report:
    triple = triple or EgfTriple.from_family(family, chi, N)
    parts = [_series_check(name, N, a, b) for name, (a, b) in triple.relations().items()]
    if family.name == "upf" and chi.name == "inv":
        parts.append(_series_check("upf-inv-closed-form", N, triple.F, upf_inv_closed_form(N)))
    if family.name == "cayley" and chi.name == "tie":
        parts.append(_series_check("cayley-tie-closed-form", N - 1, triple.G.derivative(),
                                   cayley_tie_closed_form(N - 1)))
    return combine(f"egf[{family.name},{chi.name}]", N, parts)
