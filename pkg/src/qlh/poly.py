"""Dense univariate polynomials over the rationals and the q-operators on them."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DivisionByZeroPoly, ZeroDilation
from .scalar import qbracket, to_scalar

#: degree of the zero polynomial
NEG_INF = -math.inf


class Poly:
    """Immutable polynomial with ascending Fraction coefficients.

    ``coeffs[i]`` multiplies ``x**i``.  Trailing zeros are stripped, so the
    zero polynomial has an empty coefficient tuple and degree ``-inf``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_scalar(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Poly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-to_scalar(r), 1])
        return p

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def lead(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return self._c[i]
        return Fraction(0)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"Poly([{', '.join(repr(str(c)) for c in self._c)}])"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                body = mono
            elif mono and c == -1:
                body = "-" + mono
            else:
                cs = str(c)
                if "/" in cs and mono:
                    cs = f"({cs})"
                body = cs + ("*" + mono if mono else "")
            terms.append(body)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly([other])

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self._c), len(o._c))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self._c)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self._c or not o._c:
            return Poly()
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(o._c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = to_scalar(scalar)
        return Poly(c / s for c in self._c)

    def __pow__(self, n: int):
        out = Poly([1])
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def monic(self) -> "Poly":
        if not self._c:
            raise DivisionByZeroPoly()
        return self / self.lead

    def is_even(self) -> bool:
        return all(c == 0 for c in self._c[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self._c[0::2])

    def to_strings(self) -> list:
        return [str(c) for c in self._c]


X = Poly([0, 1])


def as_poly(f) -> Poly:
    return f if isinstance(f, Poly) else Poly(f)


def hq_poly(f: Poly, q) -> Poly:
    """q-derivative (f(qx) - f(x)) / ((q - 1) x)."""
    q = Fraction(q)
    return Poly(qbracket(i + 1, q) * f[i + 1] for i in range(len(f) - 1))


def ha_poly(f: Poly, a) -> Poly:
    """Dilation x -> a x."""
    a = to_scalar(a)
    if a == 0:
        raise ZeroDilation()
    return Poly(a**i * c for i, c in enumerate(f.coeffs))


def theta_c(f: Poly, c) -> Poly:
    """Divided difference (f(x) - f(c)) / (x - c), by synthetic division."""
    c = to_scalar(c)
    n = len(f)
    if n <= 1:
        return Poly()
    out = [Fraction(0)] * (n - 1)
    acc = Fraction(0)
    for i in range(n - 1, 0, -1):
        acc = acc * c + f[i]
        out[i - 1] = acc
    return Poly(out)


def poly_divrem(f: Poly, g: Poly) -> tuple:
    if not g:
        raise DivisionByZeroPoly()
    rem = list(f.coeffs)
    dg = len(g) - 1
    if len(rem) - 1 < dg:
        return Poly(), f
    quo = [Fraction(0)] * (len(rem) - dg)
    lead = g.lead
    for k in range(len(rem) - 1 - dg, -1, -1):
        coef = rem[k + dg] / lead
        quo[k] = coef
        if coef:
            for j in range(dg + 1):
                rem[k + j] -= coef * g[j]
    return Poly(quo), Poly(rem[:dg])


def _divisors(n: int) -> list:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _integer_form(f: Poly) -> list:
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints]


def rational_roots(f: Poly) -> list:
    """All rational roots of ``f`` with multiplicities, ascending.

    Clears denominators, peels off the root 0, then tests every p/r with
    p | a_0 and r | a_n, deflating each hit until it stops dividing.
    """
    if not f:
        raise DivisionByZeroPoly()
    found = {}
    g = f
    zeros = 0
    while g[0] == 0 and g.degree > 0:
        g = Poly(g.coeffs[1:])
        zeros += 1
    if zeros:
        found[Fraction(0)] = zeros
    if g.degree >= 1:
        ints = _integer_form(g)
        candidates = set()
        for p in _divisors(ints[0]):
            for r in _divisors(ints[-1]):
                candidates.add(Fraction(p, r))
                candidates.add(Fraction(-p, r))
        for c in sorted(candidates):
            if g.degree < 1:
                break
            mult = 0
            while g.degree >= 1 and g(c) == 0:
                g, _ = poly_divrem(g, Poly([-c, 1]))
                mult += 1
            if mult:
                found[c] = mult
    return sorted(found.items())


def deflate_rational(f: Poly) -> Poly:
    """Cofactor of ``f`` after removing every rational linear factor (made monic)."""
    g = f.monic()
    for c, m in rational_roots(f):
        for _ in range(m):
            g, _ = poly_divrem(g, Poly([-c, 1]))
    return g


def poly_sum(polys: Sequence[Poly]) -> Poly:
    out = Poly()
    for p in polys:
        out = out + p
    return out
