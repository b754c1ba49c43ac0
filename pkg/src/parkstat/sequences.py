"""Integer sequences computed by enumeration, for OEIS-style b-files."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from .expectations import CHI_BDES, CHI_INV, CHI_SDES, CHI_TIE, PF, SN, UPF, chi_1, f_chi, g_chi
from .forests import enumerate_increasing_forests
from .parking import enumerate_pf, enumerate_upf
from .words import enumerate_cayley


@dataclass(frozen=True)
class Sequence:
    name: str
    offset: int
    compute: Callable[[int], int]
    closed: Callable[[int], Fraction] | None = None
    oeis: str = ""
    description: str = ""
    pf_sized: bool = True  # enumerates PF_n or a family of similar size


def _sum(family, how, chi):
    # no position tuples at all below the arity
    return lambda n: sum(how(w, chi) for w in family.words(n)) if n >= chi.k else 0


def _pf_pow(n):
    return Fraction(n + 1) ** (n - 2)


def _count(gen):
    return lambda n: sum(1 for _ in gen(n))


SEQUENCES = {s.name: s for s in [
    Sequence("pf-count", 0, _count(enumerate_pf), lambda n: Fraction(n + 1) ** (n - 1), "A000272",
             "parking functions of length n"),
    Sequence("upf-count", 0, _count(enumerate_upf), None, "A000670",
             "unit interval parking functions of length n"),
    Sequence("fubini", 0, _count(enumerate_cayley), None, "A000670", "Cayley permutations of length n"),
    Sequence("catalan", 0, _count(enumerate_increasing_forests),
             lambda n: Fraction(comb(2 * n, n), n + 1), "A000108",
             "forests with no parental preorder inversions"),
    Sequence("pf-inv-total", 1, _sum(PF, f_chi, CHI_INV),
             lambda n: Fraction(n, 2) * _pf_pow(n) * comb(n, 2), "A386011", "total inversions over PF_n"),
    Sequence("pf-des-total", 1, _sum(PF, g_chi, CHI_INV),
             lambda n: comb(n, 2) * _pf_pow(n), "A053507", "total descents over PF_n"),
    Sequence("pf-des1", 2, _sum(PF, chi_1, CHI_INV),
             lambda n: Fraction(n, 2) * _pf_pow(n), "A386015", "parking functions with a descent at 1"),
    Sequence("pf-tie-total", 1, _sum(PF, g_chi, CHI_TIE),
             lambda n: (n - 1) * _pf_pow(n), "A071720", "total ties over PF_n"),
    Sequence("pf-tie1", 2, _sum(PF, chi_1, CHI_TIE), _pf_pow, "A007830",
             "parking functions with a tie at 1"),
    Sequence("pf-sinv-total", 1, _sum(PF, f_chi, CHI_SDES),
             lambda n: comb(n, 2) * _pf_pow(n), "A053507", "total small inversions over PF_n"),
    Sequence("pf-bdes-total", 1, _sum(PF, g_chi, CHI_BDES),
             lambda n: comb(n - 1, 2) * _pf_pow(n), "A386860", "total big descents over PF_n"),
    Sequence("pf-bdes1", 2, _sum(PF, chi_1, CHI_BDES),
             lambda n: Fraction(n - 2, 2) * _pf_pow(n), "A387047",
             "parking functions with a big descent at 1"),
    Sequence("pf-binv-total", 1, _sum(PF, f_chi, CHI_BDES),
             lambda n: Fraction(n * (n - 1) * (n - 2), 4) * _pf_pow(n), "A386861",
             "total big inversions over PF_n"),
    Sequence("upf-inv-total", 1, _sum(UPF, f_chi, CHI_INV), None, "", "total inversions over UPF_n"),
    Sequence("sdes-sn", 1, _sum(SN, g_chi, CHI_SDES),
             lambda n: Fraction((n - 1) * factorial(n - 1)), "A001563", "total small descents over S_n",
             False),
    Sequence("bdes-sn", 1, _sum(SN, g_chi, CHI_BDES),
             lambda n: Fraction(comb(n - 1, 2) * factorial(n - 1)), "A001804",
             "total big descents over S_n", False),
]}


def terms(name: str, lo: int, hi: int) -> list[tuple[int, int]]:
    """(n, a(n)) for lo <= n <= hi, cross-checked against any closed form."""
    seq = SEQUENCES[name]
    out = []
    for n in range(max(lo, seq.offset), hi + 1):
        value = seq.compute(n)
        if seq.closed is not None and Fraction(value) != seq.closed(n):
            raise AssertionError(f"{name}: a({n}) = {value} disagrees with closed form {seq.closed(n)}")
        out.append((n, int(value)))
    return out


def format_bfile(rows: list[tuple[int, int]]) -> str:
    return "".join(f"{n} {a}\n" for n, a in rows)


def parse_bfile(text: str) -> list[tuple[int, int]]:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, a = line.split()[:2]
        rows.append((int(n), int(a)))
    return rows


def first_divergence(ours: list[tuple[int, int]], theirs: list[tuple[int, int]]) -> dict | None:
    """First index where two b-files disagree, comparing only shared n."""
    other = dict(theirs)
    for n, a in ours:
        if n in other and other[n] != a:
            return {"n": n, "ours": a, "fixture": other[n]}
    return None
