"""Monic orthogonal sequences, first-kind associated polynomials and the
finite-band structure relation of a q-Laguerre-Hahn form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .equation import Triplet
from .errors import InsufficientOrder, NonInvertible
from .forms import MomentForm, RecurrencePair, recurrence_from_moments, u_theta0_f
from .poly import Poly, X, ha_poly, hq_poly


@dataclass(frozen=True)
class MOPS:
    """P_0 .. P_m, each monic of exact degree n."""

    polys: tuple
    source: Optional[RecurrencePair] = None

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    @property
    def top(self) -> int:
        return len(self.polys) - 1


def mops_from_recurrence(r: RecurrencePair, m: int) -> MOPS:
    """P_0 = 1, P_1 = x - beta_0, P_{n+2} = (x - beta_{n+1}) P_{n+1} - gamma_{n+1} P_n."""
    polys = [Poly([1])]
    if m >= 1:
        polys.append(X - r.beta(0))
    for n in range(m - 1):
        polys.append((X - r.beta(n + 1)) * polys[n + 1] - polys[n] * r.gamma(n + 1))
    return MOPS(tuple(polys), r)


def associated_polys(m: MOPS, u: MomentForm) -> MOPS:
    """P^(1)_n = (u theta_0 P_{n+1}) / u_0 for n = 0 .. m.top - 1."""
    u0 = u[0]
    if u0 == 0:
        raise NonInvertible()
    if m.top - 1 > u.order:
        raise InsufficientOrder(m.top - 1, u.order, "moments for the associated sequence")
    polys = tuple(u_theta0_f(u, p) / u0 for p in m.polys[1:])
    src = m.source.shifted(1) if m.source is not None else None
    return MOPS(polys, src)


def expand_in_basis(f: Poly, m: MOPS) -> list:
    """Coefficients c_v with f = sum c_v P_v, peeling leading terms from the top."""
    d = f.degree
    if d < 0:
        return []
    if d > m.top:
        raise InsufficientOrder(int(d), m.top, "basis polynomials")
    rest = f
    out = [Fraction(0)] * (int(d) + 1)
    for v in range(int(d), -1, -1):
        c = rest[v]
        if c:
            out[v] = c
            rest = rest - m[v] * c
    return out


def structure_poly(t: Triplet, p_next: Poly, p1: Poly) -> Poly:
    """phi H_q P_{n+1} - h_q(B P^(1)_n)."""
    return t.phi * hq_poly(p_next, t.q) - ha_poly(t.b * p1, t.q)


def structure_coeffs(u: MomentForm, t: Triplet, n: int, mops: Optional[MOPS] = None) -> dict:
    """lambda_{n,v} for v = 0 .. n + d, d = max(deg phi, deg B).

    The MOPS is recovered from the moments unless supplied.
    """
    d = max(t.phi.degree, t.b.degree, 0)
    need = n + int(d) + 1
    if mops is None or mops.top < need:
        r = recurrence_from_moments(u)
        mops = mops_from_recurrence(r, min(need, len(r.gammas)))
        if mops.top < need:
            raise InsufficientOrder(2 * need, u.order, "moments for the orthogonal sequence")
    u0 = u[0]
    p1 = u_theta0_f(u, mops[n + 1]) / u0
    coeffs = expand_in_basis(structure_poly(t, mops[n + 1], p1), mops)
    return {v: c for v, c in enumerate(coeffs)}


def band_holds(coeffs: dict, n: int, s: int) -> bool:
    """lambda_{n,v} = 0 for v < n - s and lambda_{n,n-s} != 0."""
    if any(coeffs.get(v, 0) != 0 for v in range(n - s)):
        return False
    return coeffs.get(n - s, 0) != 0


def band_violations(u: MomentForm, t: Triplet, s: int, ns: Iterable[int], mops: Optional[MOPS] = None) -> list:
    """The n in ns at which the banded pattern fails."""
    return [n for n in ns if not band_holds(structure_coeffs(u, t, n, mops), n, s)]
