"""Exhaustive bijection and property checks at small n.

Each function returns a :class:`Report` so the CLI can run and merge them
the same way as the algebraic verifiers.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .expectations import (CHI_BDES, CHI_INV, CHI_PEAK, CHI_SDES, PF, SN, chi_pattern, expectation, f_chi,
                           g_chi, total)
from .forests import (Forest, act, act_word, ancestor_inv, area_forest, enumerate_forests,
                      enumerate_increasing_forests, parental_content, pinv, preorder_word, reduced_word,
                      rho, rho_inverse, sn_act)
from .parking import (_sorted_criterion, area, block_structure, enumerate_pf, enumerate_upf, eta,
                      eta_inverse, hess_sequences, is_hess, is_parking_function, is_upf, park,
                      pollak_reduce, psi, psi_inverse, upf_content)
from .qalgebra.poly import Poly
from .qalgebra.qnumbers import inversion_polynomial, pf_q, q_binom, q_multinomial, q_pochhammer
from .qalgebra.series import exp_series
from .report import Report, check, combine
from .symfunc import pf_symfunc, pf_symfunc_graded, upf_symfunc, upf_symfunc_graded
from .words import act as word_act
from .words import (ascent_set, bdes, binv, compositions, content, des, enumerate_cayley, inv, inverse,
                    inversion_set, orbit, pattern, pattern_count, permutations_of, sdes, sinv, statistic,
                    swap, weak_compositions)

# the worked example: parents of vertices 1..14, roots 5, 7, 8
FIG1_PARENTS = (13, 3, 5, 14, 0, 14, 0, 0, 3, 5, 7, 8, 8, 5)
FIG1_PREORDER = (0, 5, 3, 2, 9, 10, 14, 4, 6, 7, 11, 8, 12, 13, 1)
FIG1_RHO = (14, 3, 2, 7, 1, 7, 1, 1, 3, 2, 10, 12, 12, 2)


def _first(items, pred):
    return next((x for x in items if not pred(x)), None)


def worked_example() -> Report:
    F = Forest(FIG1_PARENTS)
    return combine("worked-example", 14, [
        check("preorder", 14, preorder_word(F), FIG1_PREORDER),
        check("rho", 14, rho(F), FIG1_RHO),
        check("rho-inverse", 14, rho_inverse(FIG1_RHO), F),
        check("eta", 9, eta((2, 3, 6, 8, 4, 1, 7, 5, 9), {2, 3, 6, 8}), (2, 2, 4, 5, 2, 1, 4, 3, 5)),
    ])


def rho_suite(n: int) -> Report:
    pfs = list(enumerate_pf(n))
    forests = [rho_inverse(a) for a in pfs]
    bad_round = _first(pfs, lambda a: rho(rho_inverse(a)) == a)
    bad_back = _first(forests, lambda F: rho_inverse(rho(F)) == F)
    bad_pinv = _first(forests, lambda F: pinv(F) == inv(rho(F)))
    bad_area = _first(forests, lambda F: area_forest(F) == area(rho(F)))
    bad_con = _first(forests, lambda F: _pad(parental_content(F), n) == _pad(content(rho(F)), n))
    return combine("rho", n, [
        check("rho-count", n, len(set(forests)), (n + 1) ** (n - 1)),
        check("rho-roundtrip", n, bad_round, None),
        check("rho-inverse-roundtrip", n, str(bad_back) if bad_back else None, None),
        check("pinv=inv", n, str(bad_pinv) if bad_pinv else None, None),
        check("area", n, str(bad_area) if bad_area else None, None),
        check("content", n, str(bad_con) if bad_con else None, None),
        check("pinv-gf", n, inversion_polynomial(rho(F) for F in forests), pf_q(n)),
    ])


def _pad(c, n):
    return tuple(c) + (0,) * (n - len(c))


def psi_suite(n: int) -> Report:
    upfs = list(enumerate_upf(n))
    cayley = set(enumerate_cayley(n))
    images = [psi(a) for a in upfs]
    return combine("psi", n, [
        check("psi-image", n, sorted(images), sorted(cayley)),
        check("psi-roundtrip", n, _first(upfs, lambda a: psi_inverse(psi(a)) == a), None),
        check("psi-inverse-roundtrip", n, _first(sorted(cayley), lambda w: psi(psi_inverse(w)) == w), None),
        check("psi-inv-set", n, _first(upfs, lambda a: inversion_set(psi(a)) == inversion_set(a)), None),
    ])


def _subsets(s):
    s = sorted(s)
    for r in range(len(s) + 1):
        yield from combinations(s, r)


def eta_suite(n: int) -> Report:
    pairs = [(s, frozenset(S)) for s in permutations_of(n) for S in _subsets(ascent_set(inverse(s)))]
    images = [eta(s, S) for s, S in pairs]
    cayley = sorted(enumerate_cayley(n))
    return combine("eta", n, [
        check("eta-bijective", n, sorted(images), cayley),
        check("eta-roundtrip", n, _first(pairs, lambda p: eta_inverse(eta(*p)) == p), None),
        check("eta-inv", n, _first(pairs, lambda p: inv(eta(*p)) == inv(p[0])), None),
        check("eta-inv-subset", n, _first(pairs, lambda p: inversion_set(p[0]) <= inversion_set(eta(*p))), None),
    ])


def pollak_suite(n: int) -> Report:
    fibers = Counter(pollak_reduce(w) for w in product(range(1, n + 2), repeat=n))
    pfs = set(enumerate_pf(n))
    return combine("pollak", n, [
        check("pollak-onto", n, set(fibers) == pfs, True),
        check("pollak-fibers", n, set(fibers.values()), {n + 1}),
        check("pollak-fixes-pf", n, _first(sorted(pfs), lambda a: pollak_reduce(a) == a), None),
    ])


def membership_suite(n: int) -> Report:
    words = list(product(range(1, n + 1), repeat=n))
    pfs = list(enumerate_pf(n))
    upfs = list(enumerate_upf(n))
    return combine("membership", n, [
        check("simulation=sorted", n,
              _first(words, lambda w: (park(w) is not None) == _sorted_criterion(w)), None),
        check("enumeration=filter", n, pfs, [w for w in words if is_parking_function(w)]),
        check("upf=filter", n, upfs, [w for w in words if is_upf(w)]),
        check("upf-subset-pf", n, all(is_parking_function(a) for a in upfs), True),
        check("tie-in-position-1", n, Fraction(sum(1 for a in pfs if n >= 2 and a[0] == a[1])),
              Fraction(n + 1) ** (n - 2) if n >= 2 else Fraction(0)),
    ])


def bijections(n: int) -> Report:
    return combine("bijections", n, [rho_suite(n), psi_suite(n), eta_suite(n), pollak_suite(n),
                                     membership_suite(n)])


def forest_action(n: int, full_group: bool | None = None) -> Report:
    """Relations of the adjacent generators, rho-equivariance, orbit invariants.

    The Coxeter relations already make the action well defined, so the sweep
    over every group element (``full_group``) is a redundant cross-check and
    is skipped above n = 4 unless requested.
    """
    if full_group is None:
        full_group = n <= 4
    forests = list(enumerate_forests(n))
    pairs = [(F, p) for F in forests for p in permutations_of(n)] if full_group else []
    s = sn_act
    parts = [
        check("involution", n, _first(forests, lambda F: all(s(s(F, i), i) == F for i in range(1, n))), None),
        check("braid", n, _first(forests, lambda F: all(
            s(s(s(F, i), i + 1), i) == s(s(s(F, i + 1), i), i + 1) for i in range(1, n - 1))), None),
        check("commute", n, _first(forests, lambda F: all(
            s(s(F, i), j) == s(s(F, j), i) for i in range(1, n) for j in range(i + 2, n))), None),
        check("rho-equivariant", n, _first(forests, lambda F: all(
            rho(s(F, i)) == swap(rho(F), i) for i in range(1, n))), None),
        check("area-orbit-constant", n, _first(forests, lambda F: all(
            area_forest(s(F, i)) == area_forest(F) for i in range(1, n))), None),
        check("reduced-words-agree", n, _first(
            pairs,
            lambda fp: act_word(fp[0], reduced_word(fp[1])) == act_word(fp[0], reduced_word(fp[1], True))),
            None),
        check("act-equivariant", n, _first(
            pairs,
            lambda fp: rho(act(fp[0], fp[1])) == word_act(fp[1], rho(fp[0]))), None),
    ]
    return combine("forest-action", n, parts)


def properties(n: int) -> Report:
    forests = list(enumerate_forests(n))
    area_poly = Counter(area_forest(F) for F in forests)
    anc_poly = Counter(ancestor_inv(F) for F in forests)
    words = list(product(range(1, n + 1), repeat=n))
    perms = list(permutations_of(n))
    parts = [
        check("kreweras", n, dict(sorted(area_poly.items())), dict(sorted(anc_poly.items()))),
        check("inv=sinv+binv", n, _first(words, lambda w: inv(w) == sinv(w) + binv(w)), None),
        check("des=sdes+bdes", n, _first(words, lambda w: des(w) == sdes(w) + bdes(w)), None),
        check("chi-inv-split", n, _first(words, lambda w: n < 2 or f_chi(w, CHI_INV) == f_chi(w, CHI_SDES + CHI_BDES)), None),
        check("inv-of-inverse", n, _first(perms, lambda s: inv(s) == inv(inverse(s))), None),
        check("sinv=ides", n, _first(perms, lambda s: sinv(s) == des(inverse(s))), None),
        check("pattern-21", n, _first(words, lambda w: n < 2 or (
            pattern_count(w, (2, 1)) == inv(w) and pattern_count(w, (2, 1), True) == des(w))), None),
        check("macmahon", n, _first(sorted({tuple(sorted(w)) for w in words}), lambda w: (
            inversion_polynomial(orbit(w)) == q_multinomial(n, _pad(content(w), n)))), None),
    ]
    if n >= 3:
        id_total = sum(f_chi(w, chi_pattern((1, 2, 3))) for w in perms)
        parts.append(check("pattern-set", n, sum(f_chi(w, CHI_PEAK) for w in perms), 2 * id_total))
        parts.append(check("pattern-id-total", n, id_total, Fraction(len(perms) * comb(n, 3), 6)))
        parts.append(check("pattern-adjacent-total", n, sum(g_chi(w, chi_pattern((1, 3, 2))) for w in perms),
                           Fraction((n - 2) * len(perms), 6)))
    return combine("properties", n, parts)


def structures(n: int) -> Report:
    """Censuses tying the auxiliary constructions to the main families."""
    catalan = comb(2 * n, n) // (n + 1)
    pf_contents = sorted({_pad(content(a), n) for a in enumerate_pf(n)})
    hess = list(hess_sequences(n))
    upfs = list(enumerate_upf(n))
    perms = list(permutations_of(n))
    pochhammer = Poly([1])
    for i in range(1, n + 1):
        pochhammer = pochhammer * (Poly([1]) - Poly.monomial(i))
    parts = [
        check("hess=pf-contents", n, hess, pf_contents),
        check("hess-count", n, len(hess), catalan),
        check("is-hess", n, all(is_hess(c) for c in hess), True),
        check("increasing-forests", n, sum(1 for _ in enumerate_increasing_forests(n)), catalan),
        check("weak-compositions", n, [len(weak_compositions(n, k)) for k in range(1, 4)],
              [comb(n + k - 1, k - 1) for k in range(1, 4)]),
        check("compositions", n, [len(compositions(n, k)) for k in range(1, n + 1)],
              [comb(n - 1, k - 1) for k in range(1, n + 1)]),
        check("block-sizes", n, _first(upfs, lambda a: (
            sum(block_structure(a).sizes) == n and upf_content(a) == content(psi(a)))), None),
        check("maj~inv", n, sorted(statistic(s, "maj") for s in perms), sorted(statistic(s, "inv") for s in perms)),
        check("pattern-21=inv", n, _first(perms, lambda s: n < 2 or statistic(s, pattern((2, 1))) == inv(s)), None),
        check("q-binom", n, [q_binom(n, k) for k in range(n + 1)],
              [q_multinomial(n, (k, n - k)) for k in range(n + 1)]),
        check("q-pochhammer", n, q_pochhammer(n), pochhammer),
        check("derive-exp", n, exp_series(n + 1).derive(1), exp_series(n)),
    ]
    if n >= 2:
        parts += [
            check("expectation-des", n, expectation(PF, n, "des") * (n + 1) ** (n - 1), total(PF, n, "des")),
            check("total-inv-sn", n, total(SN, n, CHI_INV), Fraction(len(perms) * comb(n, 2), 2)),
        ]
    if n >= 1:
        parts += [
            check("pf-graded-at-1", n, pf_symfunc_graded(n).at_t(1), pf_symfunc(n)),
            check("upf-graded-at-1", n, upf_symfunc_graded(n).at_t(1), upf_symfunc(n)),
        ]
    return combine("structures", n, parts)
