"""Acceptance criteria, one test each, with the stated wall-clock budgets.

Every criterion prints a single PASS/FAIL line in the terminal summary (see
conftest.py); running this file directly prints the same lines.
"""

import io
import json
import time
from fractions import Fraction
from math import factorial

import pytest

from parkstat.cli import main
from parkstat.expectations import (BUILTIN_CHI, CAYLEY, FAMILIES, PF, SN, SN_PLUS, UPF, WORDS, CHI_INV,
                                   dtop_itop_peak_totals, egf_verify, f_chi, fubini, identity_checks,
                                   random_orbits, table1, table1_closed_forms, table1_totals,
                                   verify_k_transitive_theorem)
from parkstat.forests import enumerate_forests
from parkstat.parking import block_structure, enumerate_pf, enumerate_upf, upf_act
from parkstat.qalgebra import (verify_a_at_2, verify_pf_gf, verify_pf_gf_q1, verify_stanley_gf,
                               verify_upf_gf, verify_upf_gf_q1)
from parkstat.qalgebra.identities import at_q1, pf_series
from parkstat.suites import bijections, forest_action, properties, worked_example
from parkstat.symfunc import (pf_frobenius, pf_sym_forests, pf_sym_recursive, verify_pf_sym_gf,
                              verify_ps_inversion, verify_upf_graded_gf, verify_upf_sym_gf)
from parkstat.words import enumerate_cayley, statistic

RESULTS = {}


def _criterion(number, title, budget):
    def deco(fn):
        def test():
            start = time.perf_counter()
            failures = [name for name, ok in fn() if not ok]
            elapsed = time.perf_counter() - start
            if elapsed > budget:
                failures.append(f"took {elapsed:.1f}s > {budget}s")
            RESULTS[number] = (title, not failures, elapsed, failures)
            assert not failures, failures
        test.__name__ = fn.__name__
        return test
    return deco


@_criterion(1, "counts of PF, forests, UPF and Cayley permutations", 60)
def test_criterion_1_counts():
    fub = [len(list(enumerate_cayley(n))) for n in range(7)]
    yield "fubini-by-enumeration", fub == [1, 1, 3, 13, 75, 541, 4683] == [fubini(n) for n in range(7)]
    for n in range(7):
        cayley_count = Fraction(n + 1) ** (n - 1)
        yield f"pf[{n}]", sum(1 for _ in enumerate_pf(n)) == cayley_count
        yield f"forests[{n}]", len(set(enumerate_forests(n))) == cayley_count
        yield f"upf[{n}]", sum(1 for _ in enumerate_upf(n)) == fub[n]


@_criterion(2, "bijections and the worked example", 30)
def test_criterion_2_bijections():
    yield "worked-example", worked_example().ok
    for n in range(6):
        yield f"bijections[{n}]", bijections(n).ok


@_criterion(3, "q-identities", 60)
def test_criterion_3_q_identities():
    yield "pf-gf(6)", verify_pf_gf(6).ok
    yield "upf-gf(6)", verify_upf_gf(6).ok
    yield "stanley-gf(4)", verify_stanley_gf(4).ok
    for n in range(1, 7):
        yield f"a-at-2[{n}]", verify_a_at_2(n).ok
    N = 8
    yield "pf-q1", verify_pf_gf_q1(N).ok
    yield "upf-q1", verify_upf_gf_q1(N).ok
    shadow = at_q1(pf_series(N))
    yield "pf-q1-coefficients", all(shadow[n + 1] == Fraction(n + 1) ** (n - 1) / factorial(n) for n in range(N))


@_criterion(4, "symmetric functions", 60)
def test_criterion_4_symmetric_functions():
    for n in range(6):
        yield f"three-constructions[{n}]", pf_frobenius(n) == pf_sym_forests(n) == pf_sym_recursive(n)
    yield "pf-sym-gf(5)", verify_pf_sym_gf(5).ok
    yield "upf-sym-gf(6)", verify_upf_sym_gf(6).ok
    yield "upf-graded-gf(5)", verify_upf_graded_gf(5).ok
    for n in range(1, 6):
        yield f"ps[pf,{n}]", verify_ps_inversion(enumerate_pf(n), n).ok
        yield f"ps[cayley,{n}]", verify_ps_inversion(enumerate_cayley(n), n).ok
        yield f"ps[upf,{n}]", verify_ps_inversion(enumerate_upf(n), n, upf_act,
                                                  lambda a: block_structure(a).sizes).ok


@_criterion(5, "k-transitive expectation theorem", 60)
def test_criterion_5_theorem():
    for fam in (SN, SN_PLUS, PF, UPF, CAYLEY, WORDS):
        for n in range(1, 6):
            for name, chi in BUILTIN_CHI.items():
                if chi.k > n or (fam.group == "an" and n < chi.k + 2):
                    continue
                yield f"{fam.name}[{n},{name}]", verify_k_transitive_theorem(fam, n, chi).ok
    for orbit in random_orbits(20, 5):
        for name, chi in BUILTIN_CHI.items():
            yield f"{orbit.name}[{name}]", verify_k_transitive_theorem(orbit, 5, chi).ok


@_criterion(6, "Table 1 totals", 120)
def test_criterion_6_table1():
    for n in range(2, 6):
        yield f"table1[{n}]", table1(n).ok
    yield "pf-inv-3", table1_totals(PF, 3)["inv"] == 18
    yield "pf-tie1-3", table1_totals(PF, 3)["tie1"] == 4 == table1_closed_forms(3)["tie1"][1]
    yield "sn-sdes-3", table1_totals(SN, 3)["sdes"] == 4
    yield "upf-inv-3", sum(f_chi(w, CHI_INV) for w in UPF.words(3)) == 15


@_criterion(7, "numerical identities", 30)
def test_criterion_7_identities():
    for n in range(2, 6):
        yield f"identities[{n}]", identity_checks(n).ok
        yield f"dtop-peak[{n}]", dtop_itop_peak_totals(n).ok
    hess = next(d for d in identity_checks(3).details if d["identity"] == "hess-ties")
    yield "hess-12", hess["lhs"] == hess["rhs"] == "12"
    dtop3 = sum(statistic(w, "dtop") for w in SN.words(3))
    pk4 = sum(statistic(w, "pk") for w in SN.words(4))
    yield "dtop-pk-16", dtop3 == pk4 == 16


@_criterion(8, "EGF relations", 30)
def test_criterion_8_egf():
    for fam, chi in [(SN, "inv"), (UPF, "inv"), (CAYLEY, "tie"), (SN, "p132")]:
        rep = egf_verify(fam, BUILTIN_CHI[chi], 6)
        yield f"egf[{fam.name},{chi}]", rep.ok
        if fam is UPF:
            yield "upf-inv-closed-form", any(d["identity"] == "upf-inv-closed-form" and d["status"] == "pass"
                                             for d in rep.details)


NEGATIVE = [
    ("pf-gf", "2=2+2q", {"z_exponent": 3}),
    ("upf-gf", "3=4+4q+4q²", {"z_exponent": 3}),
    ("a-at-2", "3=4+4q+4q²+2q³", {"q_exponent": 3}),
    ("stanley-gf", "2=1+2t", {"z_exponent": 2}),
    ("pf-sym-gf", "2=h[2]", {"z_exponent": 3, "n": 2, "partition": [1, 1]}),
    ("upf-sym-gf", "3=h[3]+h[2,1]+h[1,1,1]", {"z_exponent": 3, "n": 3, "partition": [2, 1]}),
    ("upf-graded-gf", "2=h[1,1]+2t·h[2]", {"z_exponent": 2, "n": 2, "partition": [2]}),
]


@_criterion(9, "negative controls", 5)
def test_criterion_9_negative_controls():
    for suite, corrupt, coordinate in NEGATIVE:
        out = io.StringIO()
        code = main(["verify", "--suite", suite, "--N", "4", "--max-n", "3", "--corrupt", corrupt], out=out)
        got = json.loads(out.getvalue())["first_mismatch"]["first_mismatch"]
        yield f"{suite}", code == 1 and got == coordinate


@_criterion(10, "property suites", 60)
def test_criterion_10_properties():
    for n in range(1, 6):
        yield f"forest-action[{n}]", forest_action(n).ok
        yield f"properties[{n}]", properties(n).ok


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    for number in sorted(RESULTS):
        title, ok, elapsed, failures = RESULTS[number]
        print(f"criterion {number:2d} {'PASS' if ok else 'FAIL'} {elapsed:6.2f}s  {title}"
              + (f"  {failures}" if failures else ""))
    raise SystemExit(0 if all(ok for _, ok, _, _ in RESULTS.values()) else 1)
