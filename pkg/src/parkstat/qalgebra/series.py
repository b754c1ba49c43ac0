"""Truncated formal power series in z over an exact coefficient ring.

Coefficients may be ints, Fractions, QRat, Poly or SymF: anything closed
under ``+``, ``-``, ``*`` that mixes with the integer 0.  A series of order N
knows its coefficients of z^0..z^N; binary operations truncate to the
smaller order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence


class TruncSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        c = list(coeffs)
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        c = c[:order + 1] + [0] * (order + 1 - len(c))
        self.coeffs = tuple(c)
        self.order = order

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int) -> "TruncSeries":
        return cls([f(n) for n in range(order + 1)], order)

    @classmethod
    def z(cls, order: int) -> "TruncSeries":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        return cls([c], order)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, min(order, self.order))

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.first_mismatch(other) is None and self.order == other.order

    def first_mismatch(self, other: "TruncSeries") -> int | None:
        """Lowest index (up to the common order) where coefficients differ."""
        for n in range(min(self.order, other.order) + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return self + TruncSeries.constant(other, self.order)
        order = min(self.order, other.order)
        return TruncSeries([self.coeffs[n] + other.coeffs[n] for n in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(order + 1):
            acc = 0
            for i in range(n + 1):
                x, y = a[i], b[n - i]
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return TruncSeries(out, order)

    def __rmul__(self, other):
        return TruncSeries([other * c for c in self.coeffs], self.order)

    def __pow__(self, k: int):
        out = TruncSeries.constant(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by z^k, keeping the order."""
        return TruncSeries([0] * k + list(self.coeffs), self.order)

    def derivative(self) -> "TruncSeries":
        if self.order == 0:
            raise ValueError("cannot differentiate a series of order 0")
        return TruncSeries([n * self.coeffs[n] for n in range(1, self.order + 1)], self.order - 1)

    def derive(self, k: int = 1) -> "TruncSeries":
        out = self
        for _ in range(k):
            out = out.derivative()
        return out

    def reciprocal(self) -> "TruncSeries":
        a0 = self.coeffs[0]
        if not a0:
            raise ZeroDivisionError("series has zero constant term")
        inv0 = 1 if a0 == 1 else 1 / a0
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc + self.coeffs[k] * out[n - k]
            out.append(-(acc * inv0) if inv0 != 1 else -acc)
        return TruncSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.reciprocal()
        return TruncSeries([c / other for c in self.coeffs], self.order)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def map(self, f) -> "TruncSeries":
        return TruncSeries([f(c) for c in self.coeffs], self.order)

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r}, order={self.order})"

    def to_json(self) -> str:
        """Coefficient table: rows of (n, numerator, denominator)."""
        rows = []
        for n, c in enumerate(self.coeffs):
            num, den = _num_den(c)
            rows.append({"n": n, "numerator": num, "denominator": den})
        return json.dumps({"order": self.order, "coefficients": rows})


def _num_den(c):
    if isinstance(c, int):
        return str(c), "1"
    if isinstance(c, Fraction):
        return str(c.numerator), str(c.denominator)
    if hasattr(c, "num") and hasattr(c, "den"):
        return c.num.format(), c.den.format()
    return str(c), "1"


def compose(A: TruncSeries, B: TruncSeries) -> TruncSeries:
    """A(B(z)) by Horner's rule; B must have zero constant term."""
    if B.coeffs[0]:
        raise ValueError("inner series must have zero constant term")
    order = min(A.order, B.order)
    B = B.truncate(order)
    out = TruncSeries.constant(A.coeffs[order], order)
    for k in range(order - 1, -1, -1):
        out = out * B + A.coeffs[k]
    return out


def invert_composition(B: TruncSeries) -> TruncSeries:
    """The series Q with B(Q(z)) = z mod z^(N+1).

    Solves for one coefficient at a time: [z^n] B(Q) = b_1 q_n + (terms in
    q_1..q_{n-1}).
    """
    if B.coeffs[0]:
        raise ValueError("series must have zero constant term")
    if B.order < 1 or not B.coeffs[1]:
        raise ZeroDivisionError("linear coefficient is not invertible")
    b1 = B.coeffs[1]
    inv1 = 1 if b1 == 1 else 1 / b1
    N = B.order
    Qc = [0] * (N + 1)
    for n in range(1, N + 1):
        target = 1 if n == 1 else 0
        rest = compose(B, TruncSeries(Qc, N)).coeffs[n]
        Qc[n] = (target - rest) * inv1
    return TruncSeries(Qc, N)


def exp_series(order: int, scale=1) -> TruncSeries:
    """e^(scale*z) over the rationals."""
    return TruncSeries([Fraction(scale) ** n / factorial(n) for n in range(order + 1)], order)


def egf(values: Sequence, order: int | None = None) -> TruncSeries:
    """Exponential generating function: slot n holds values[n]/n!."""
    if order is None:
        order = len(values) - 1
    return TruncSeries([Fraction(values[n]) / factorial(n) for n in range(order + 1)], order)
