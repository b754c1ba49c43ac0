"""Exact checks of the q-exponential generating function identities."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable

from ..report import Report
from .poly import Poly
from .qnumbers import Exp_q_series, a_inv_asc, exp_q_series, pf_q, q_factorial, upf_q
from .qrat import QRat
from .series import TruncSeries, compose, exp_series, invert_composition


def _series_report(identity: str, N: int, lhs: TruncSeries, rhs: TruncSeries, fmt=str) -> Report:
    bad = lhs.first_mismatch(rhs)
    if bad is None:
        return Report(identity, N, "pass", lhs=[fmt(c) for c in lhs], rhs=[fmt(c) for c in rhs])
    return Report(identity, N, "fail", lhs=fmt(lhs[bad]), rhs=fmt(rhs[bad]),
                  first_mismatch={"z_exponent": bad})


def _lookup(default: Callable[[int], Poly], overrides: dict | None) -> Callable[[int], Poly]:
    overrides = overrides or {}
    return lambda n: overrides[n] if n in overrides else default(n)


def pf_series(N: int, overrides: dict | None = None) -> TruncSeries:
    """A(z) = sum_{n<N} PF_n(q) z^(n+1) / [n]_q!."""
    pf = _lookup(pf_q, overrides)
    return TruncSeries([0] + [QRat(pf(n), q_factorial(n)) for n in range(N)], N)


def verify_pf_gf(N: int, overrides: dict | None = None) -> Report:
    """B(A(z)) = z with B(z) = z Exp_q(-z); ``overrides`` replaces PF_n(q)."""
    if N < 1:
        raise ValueError("N must be at least 1")
    A = pf_series(N, overrides)
    B = Exp_q_series(N, sign=-1).shift(1)
    return _series_report("pf-gf", N, compose(B, A), TruncSeries.z(N))


def upf_series(N: int, overrides: dict | None = None) -> TruncSeries:
    upf = _lookup(upf_q, overrides)
    return TruncSeries([QRat(upf(n), q_factorial(n)) for n in range(N + 1)], N)


def verify_upf_gf(N: int, overrides: dict | None = None) -> Report:
    """(2 - exp_q(z)) * sum UPF_n(q) z^n/[n]_q! = 1."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    lhs = (2 - exp_q_series(N)) * upf_series(N, overrides)
    return _series_report("upf-gf", N, lhs, TruncSeries.constant(1, N))


def verify_a_at_2(n: int, override: Poly | None = None) -> Report:
    """A_n^{inv,asc}(q, 2) = UPF_n(q)."""
    lhs = a_inv_asc(n).at_t(2) if override is None else override
    rhs = upf_q(n)
    ok = lhs == rhs
    return Report("a-at-2", n, "pass" if ok else "fail", str(lhs), str(rhs),
                  None if ok else _first_coeff_diff(lhs, rhs))


def _first_coeff_diff(a: Poly, b: Poly) -> dict:
    k = next(k for k in range(max(len(a), len(b))) if a[k] != b[k])
    return {"q_exponent": k}


def verify_stanley_gf(N: int, overrides: dict | None = None) -> Report:
    """(1 - t Exp_q(z(1-t))) L = 1 - t with L = 1 + sum t A_n(q,t) z^n/[n]_q!.

    Coefficients live in polynomials in t over rational functions in q.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    overrides = overrides or {}
    t = Poly([QRat(0), QRat(1)])
    one_minus_t = Poly([QRat(1), QRat(-1)])
    E = Exp_q_series(N)
    exp_part = TruncSeries([one_minus_t ** n * E[n] for n in range(N + 1)], N)
    L = [Poly([QRat(1)])]
    for n in range(1, N + 1):
        a = overrides.get(n, a_inv_asc(n))
        L.append(t * a.as_poly_in_t() * QRat(1, q_factorial(n)))
    lhs = (TruncSeries.constant(Poly([QRat(1)]), N) - exp_part * t) * TruncSeries(L, N)
    rhs = TruncSeries.constant(one_minus_t, N)
    return _series_report("stanley-gf", N, lhs, rhs, lambda c: Poly.coerce(c).format("t"))


# -- the q = 1 shadows -----------------------------------------------------

def at_q1(s: TruncSeries) -> TruncSeries:
    return s.map(lambda c: c(1) if callable(c) else Fraction(c))


def verify_pf_gf_q1(N: int) -> Report:
    """At q=1 the PF series is the compositional inverse of z e^(-z)."""
    lhs = at_q1(pf_series(N))
    rhs = invert_composition(exp_series(N, -1).shift(1))
    return _series_report("pf-gf-q1", N, lhs, rhs)


def verify_upf_gf_q1(N: int) -> Report:
    """At q=1 the UPF series is 1/(2 - e^z)."""
    lhs = at_q1(upf_series(N))
    rhs = (2 - exp_series(N)).reciprocal()
    return _series_report("upf-gf-q1", N, lhs, rhs)


def tree_function_coefficients(N: int) -> list:
    """n^(n-1)/n!, the coefficients of the inverse of z e^(-z)."""
    return [Fraction(0)] + [Fraction(n ** (n - 1), factorial(n)) for n in range(1, N + 1)]
