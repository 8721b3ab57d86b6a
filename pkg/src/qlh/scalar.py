"""Exact rational scalars and q-combinatorics.

Scalars are plain :class:`fractions.Fraction` values; they are always reduced
with a positive denominator.  :class:`QParam` is a Fraction that is known to
avoid 0, 1 and -1, the only rational roots of unity.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import ParseError, RootOfUnity

Scalar = Fraction


def to_scalar(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would silently bring rounding into an exact
    computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def parse_scalar(text: str) -> Fraction:
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"not a rational number: {text!r}") from None
    if d == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_scalar(x: Fraction) -> str:
    return str(x)


class QParam(Fraction):
    """A rational q with q^n != 1 for every n >= 1, and q != 0."""

    def __new__(cls, value):
        v = to_scalar(value)
        if v in (0, 1, -1):
            raise RootOfUnity(v)
        return super().__new__(cls, v.numerator, v.denominator)

    def __repr__(self):
        return f"QParam({self})"

    @property
    def value(self) -> Fraction:
        return Fraction(self)

    @property
    def inverse(self) -> "QParam":
        return QParam(1 / Fraction(self))


def validate_q(candidate) -> QParam:
    """Return ``candidate`` as a :class:`QParam`; raise RootOfUnity for 0, 1, -1."""
    if isinstance(candidate, QParam):
        return candidate
    return QParam(candidate)


def qbracket(n: int, q) -> Fraction:
    """[n]_q = (q^n - 1)/(q - 1), also for negative n."""
    q = Fraction(q)
    return (q**n - 1) / (q - 1)


def qpochhammer(a, q, n: int) -> Fraction:
    """(a; q)_n = prod_{k=1}^{n} (1 - a q^{k-1})."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = to_scalar(a)
    q = Fraction(q)
    out = Fraction(1)
    qk = Fraction(1)
    for _ in range(n):
        out *= 1 - a * qk
        qk *= q
    return out
