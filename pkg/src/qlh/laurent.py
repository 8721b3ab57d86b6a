"""Truncated formal Laurent series in descending powers of z.

A series knows its coefficients exactly for every power >= ``floor``; below
the floor nothing is known.  ``floor=None`` marks an exact finite series
(a polynomial).  Arithmetic keeps the tightest floor that is provably
correct, so a residual is only ever compared with zero where it is known.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional

from .errors import EmptyOverlap, InsufficientOrder
from .forms import MomentForm
from .poly import Poly
from .scalar import qbracket, to_scalar


def _max_floor(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


class LaurentSeries:
    __slots__ = ("_t", "floor")

    def __init__(self, terms: Mapping[int, object], floor: Optional[int]):
        self.floor = floor
        self._t = {
            int(p): to_scalar(c)
            for p, c in terms.items()
            if to_scalar(c) != 0 and (floor is None or p >= floor)
        }

    @classmethod
    def from_poly(cls, f: Poly) -> "LaurentSeries":
        return cls(dict(enumerate(f.coeffs)), None)

    @property
    def exact(self) -> bool:
        return self.floor is None

    @property
    def top_power(self) -> int:
        """Highest power with a nonzero coefficient (floor - 1 for a known-zero series)."""
        if self._t:
            return max(self._t)
        return (self.floor - 1) if self.floor is not None else -(10**9)

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def __getitem__(self, p: int) -> Fraction:
        if self.floor is not None and p < self.floor:
            raise InsufficientOrder(p, self.floor, what="power")
        return self._t.get(p, Fraction(0))

    def __repr__(self):
        body = " + ".join(f"({c})z^{p}" for p, c in sorted(self._t.items(), reverse=True)[:6])
        return f"LaurentSeries({body or '0'} ; floor={self.floor})"

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.floor == other.floor and self._t == other._t

    def truncate(self, floor: int) -> "LaurentSeries":
        if self.floor is not None and floor < self.floor:
            raise InsufficientOrder(floor, self.floor, what="power")
        return LaurentSeries(self._t, floor)

    def __add__(self, other):
        if isinstance(other, Poly):
            other = LaurentSeries.from_poly(other)
        fl = _max_floor(self.floor, other.floor)
        keys = set(self._t) | set(other._t)
        return LaurentSeries({p: self._t.get(p, 0) + other._t.get(p, 0) for p in keys}, fl)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries({p: -c for p, c in self._t.items()}, self.floor)

    def __sub__(self, other):
        if isinstance(other, Poly):
            other = LaurentSeries.from_poly(other)
        return self + (-other)

    def scale(self, c) -> "LaurentSeries":
        c = to_scalar(c)
        return LaurentSeries({p: c * v for p, v in self._t.items()}, self.floor)

    def __mul__(self, other):
        if isinstance(other, Poly):
            other = LaurentSeries.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self, other
        if a.exact and not a._t or b.exact and not b._t:
            return LaurentSeries({}, None)
        if a.exact and b.exact:
            fl = None
        else:
            cands = []
            if a.floor is not None:
                cands.append(a.floor + b.top_power)
            if b.floor is not None:
                cands.append(b.floor + a.top_power)
            fl = max(cands)
        out = {}
        for i, x in a._t.items():
            for j, y in b._t.items():
                p = i + j
                if fl is None or p >= fl:
                    out[p] = out.get(p, 0) + x * y
        return LaurentSeries(out, fl)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by z^k."""
        return LaurentSeries({p + k: c for p, c in self._t.items()}, None if self.floor is None else self.floor + k)

    def is_zero(self) -> bool:
        return not self._t

    def reciprocal(self) -> "LaurentSeries":
        """1/s for a series with a known leading term; precision is preserved."""
        if not self._t:
            raise ZeroDivisionError("reciprocal of a zero series")
        top = self.top_power
        lead = self._t[top]
        if self.floor is None:
            raise ValueError("reciprocal of an exact series is not a finite series in general")
        depth = top - self.floor
        # s = lead z^top (1 + e(w)), w = 1/z; invert 1 + e by the usual recursion
        e = [self._t.get(top - k, Fraction(0)) / lead for k in range(depth + 1)]
        inv = [Fraction(1)]
        for k in range(1, depth + 1):
            inv.append(-sum((e[j] * inv[k - j] for j in range(1, k + 1)), Fraction(0)))
        return LaurentSeries({-top - k: inv[k] / lead for k in range(depth + 1)}, -top - depth)


def laurent_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a + b


def laurent_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    out = a * b
    if out.floor is not None and out.floor > a.top_power + b.top_power:
        raise EmptyOverlap()
    return out


def laurent_mul_poly(f: Poly, s: LaurentSeries) -> LaurentSeries:
    return LaurentSeries.from_poly(f) * s


def laurent_ha(s: LaurentSeries, a) -> LaurentSeries:
    """(h_a s)(z) = s(a z): the coefficient of z^k is scaled by a^k."""
    a = to_scalar(a)
    return LaurentSeries({p: c * a**p for p, c in s.terms.items()}, s.floor)


def laurent_hq(s: LaurentSeries, q) -> LaurentSeries:
    """(H_q s)(z) = (s(qz) - s(z)) / ((q - 1) z): z^k -> [k]_q z^(k-1)."""
    q = Fraction(q)
    return LaurentSeries(
        {p - 1: c * qbracket(p, q) for p, c in s.terms.items()},
        None if s.floor is None else s.floor - 1,
    )


def stieltjes(u: MomentForm) -> LaurentSeries:
    """S(u)(z) = -sum_n (u)_n z^{-n-1}."""
    return LaurentSeries({-n - 1: -v for n, v in enumerate(u.moments)}, -u.order - 1)
