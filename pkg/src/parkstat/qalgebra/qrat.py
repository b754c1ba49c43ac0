"""Exact rational functions in q, kept in lowest terms."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .poly import Poly, content, poly_gcd


class QRat:
    """``num / den`` with num, den in Z[q].

    Canonical form: gcd(num, den) = 1 in Q[q], the integer contents of num
    and den are coprime, and den has a positive leading coefficient.  Two
    equal rational functions therefore have identical representations.
    """

    __slots__ = ("num", "den")
    is_field_element = True

    def __init__(self, num=0, den=1):
        n_num, n_den = _as_int_poly(num)
        d_num, d_den = _as_int_poly(den)
        num, den = n_num * d_den, n_den * d_num
        if not den:
            raise ZeroDivisionError("QRat with zero denominator")
        if not num:
            self.num, self.den = Poly(), Poly([1])
            return
        if den.degree > 0 and num.degree >= 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        c = gcd(content(num), content(den))
        if den.lead < 0:
            c = -c
        if c != 1:
            num = Poly([x // c for x in num.coeffs])
            den = Poly([x // c for x in den.coeffs])
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "QRat":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def coerce(cls, x) -> "QRat":
        return x if isinstance(x, QRat) else cls(x)

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0 and self.den.lead == 1

    def __eq__(self, other):
        if isinstance(other, QRat):
            return self.num == other.num and self.den == other.den
        try:
            other = QRat(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if not isinstance(other, QRat):
            if not _coercible(other):
                return NotImplemented
            other = QRat(other)
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, QRat) and not _coercible(other):
            return NotImplemented
        return self + (-QRat.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QRat):
            if not _coercible(other):
                return NotImplemented
            other = QRat(other)
        if not self.num or not other.num:
            return QRat()
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, QRat):
            if not _coercible(other):
                return NotImplemented
            other = QRat(other)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QRat.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return QRat(1) / (self ** -k)
        return QRat(self.num ** k, self.den ** k)

    def __call__(self, x):
        """Evaluate at a number (returned as a Fraction when exact)."""
        d = self.den(Fraction(x) if isinstance(x, int) else x)
        if not d:
            raise ZeroDivisionError(f"denominator vanishes at q={x}")
        return self.num(Fraction(x) if isinstance(x, int) else x) / d

    def __repr__(self):
        return f"QRat({self.num.coeffs}, {self.den.coeffs})"

    def format(self, var: str = "q") -> str:
        if self.den == 1:
            return self.num.format(var)
        num = self.num.format(var)
        den = self.den.format(var)
        if sum(1 for c in self.num if c) > 1:
            num = f"({num})"
        if sum(1 for c in self.den if c) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    __str__ = format


def _coercible(x) -> bool:
    return isinstance(x, (int, Fraction)) or (isinstance(x, Poly) and all(isinstance(c, int) for c in x))


def _as_int_poly(x):
    if isinstance(x, QRat):
        raise TypeError("nested QRat")
    if isinstance(x, bool):
        raise TypeError("bool is not a polynomial")
    if isinstance(x, int):
        return Poly([x]), _ONE
    if isinstance(x, Fraction):
        return Poly([x.numerator]), Poly([x.denominator])
    if isinstance(x, Poly):
        if not all(isinstance(c, int) for c in x.coeffs):
            raise TypeError("QRat requires integer-coefficient polynomials")
        return x, _ONE
    raise TypeError(f"cannot build a rational function from {type(x).__name__}")


_ONE = Poly([1])
