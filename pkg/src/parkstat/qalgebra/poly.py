"""Dense univariate polynomials over an exact coefficient ring.

With ``int`` coefficients this is the IntPoly of the q-layer; the same class
carries polynomials in t over Fractions or over rational functions in q.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def coerce(cls, x) -> "Poly":
        return x if isinstance(x, Poly) else cls([x])

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly([other]).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs) if len(self.coeffs) > 1 else hash(self[0])

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)) or _is_scalar(other):
                other = Poly([other])
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)) or _is_scalar(other):
                return Poly([x * other for x in self.coeffs])
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) or _is_scalar(other):
            return Poly([other * x for x in self.coeffs])
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_field(self, d: "Poly"):
        """Long division assuming the leading coefficient of d is invertible."""
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        qd = [0] * max(len(r) - len(d.coeffs) + 1, 0)
        lead = d.lead
        for k in range(len(qd) - 1, -1, -1):
            c = r[k + len(d.coeffs) - 1]
            if c:
                if isinstance(c, int) and isinstance(lead, int):
                    if c % lead:
                        raise ArithmeticError("inexact integer division")
                    f = c // lead
                else:
                    f = c / lead
                qd[k] = f
                for i, x in enumerate(d.coeffs):
                    r[k + i] = r[k + i] - f * x
        return Poly(qd), Poly(r)

    def exact_div(self, d: "Poly") -> "Poly":
        quo, rem = self.divmod_field(d)
        if rem:
            raise ArithmeticError(f"{self} is not divisible by {d}")
        return quo

    def __floordiv__(self, d):
        return self.exact_div(Poly.coerce(d))

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def map(self, f) -> "Poly":
        return Poly([f(c) for c in self.coeffs])

    def format(self, var: str = "q", unicode: bool = False) -> str:
        """``2 + q``, ``4 + 4*q + 4*q^2 + q^3`` (or ``4 + 4q + 4q² + q³``)."""
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}{str(k).translate(_SUPERSCRIPT)}" if unicode else f"{var}^{k}"
            neg = _is_negative(c)
            mag = -c if neg else c
            if not mono:
                body = _fmt_coeff(mag)
            elif mag == 1:
                body = mono
            else:
                text = _fmt_coeff(mag)
                body = f"{text}{mono}" if unicode else f"{text}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()


def _is_scalar(x) -> bool:
    # rational functions and other exact field elements used as coefficients
    return hasattr(x, "is_field_element")


def _is_negative(c) -> bool:
    try:
        return c < 0
    except TypeError:
        return False


def _fmt_coeff(c) -> str:
    s = str(c)
    if isinstance(c, (int, Fraction)) and "/" not in s:
        return s
    return s if isinstance(c, Fraction) else f"({s})"


# -- integer polynomial gcd ------------------------------------------------

def content(p: Poly) -> int:
    g = 0
    for c in p.coeffs:
        g = gcd(g, c)
    return g


def primitive_part(p: Poly) -> Poly:
    if not p:
        return p
    c = content(p)
    if p.lead < 0:
        c = -c
    return Poly([x // c for x in p.coeffs])


def pseudo_remainder(a: Poly, b: Poly) -> Poly:
    r = list(a.coeffs)
    db = b.degree
    lb = b.lead
    while len(r) - 1 >= db and any(r):
        k = len(r) - 1 - db
        lr = r[-1]
        r = [x * lb for x in r]
        for i, y in enumerate(b.coeffs):
            r[k + i] -= lr * y
        while r and not r[-1]:
            r.pop()
    return Poly(r)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd over Z[q], normalized to a positive leading coefficient."""
    if not a:
        return primitive_part(b) if b else Poly([1])
    if not b:
        return primitive_part(a)
    a, b = primitive_part(a), primitive_part(b)
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = pseudo_remainder(a, b)
        a, b = b, primitive_part(r) if r else r
    return primitive_part(a)


q = Poly([0, 1])
ONE = Poly([1])
