"""q-Riccati form of the equation on the Stieltjes series S(u).

(h_{1/q} phi) H_{1/q} S = B S (h_{1/q} S) + C S + D, with
C = -H_{1/q} phi - q psi and
D = -(H_{1/q}(u theta_0 phi) + q u theta_0 psi + q (u h_q u) theta_0^2 B).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .equation import Triplet, reduce_once, verified_regular_range
from .errors import InsufficientOrder
from .forms import MomentForm, cauchy_product, ha_form, u_theta0_f
from .laurent import LaurentSeries, laurent_ha, laurent_hq, stieltjes
from .poly import Poly, ha_poly, hq_poly, rational_roots, theta_c
from .scalar import QParam


@dataclass(frozen=True)
class RiccatiData:
    phi: Poly
    b: Poly
    c: Poly
    d: Poly
    q: QParam

    @property
    def psi(self) -> Poly:
        """psi = -(C + H_{1/q} phi) / q."""
        return -(self.c + hq_poly(self.phi, 1 / Fraction(self.q))) / self.q

    def triplet(self) -> Triplet:
        return Triplet(self.phi, self.psi, self.b, self.q)

    @property
    def s(self):
        return max(self.b.degree - 2, self.c.degree - 1, self.d.degree)

    def scaled(self, k) -> "RiccatiData":
        """All four polynomials divided by k."""
        return RiccatiData(self.phi / k, self.b / k, self.c / k, self.d / k, self.q)


def cd_from_triplet(t: Triplet, u: MomentForm) -> RiccatiData:
    q = t.q
    qi = 1 / Fraction(q)
    c = -hq_poly(t.phi, qi) - t.psi * q
    d = hq_poly(u_theta0_f(u, t.phi), qi) + u_theta0_f(u, t.psi) * q
    tb = theta_c(t.b, 0)
    if tb:
        uhu = cauchy_product(u, ha_form(u, q))
        d = d + u_theta0_f(uhu, tb) * q
    return RiccatiData(t.phi, t.b, c, -d, q)


def riccati_sides(u: MomentForm, r: RiccatiData) -> tuple:
    """Left and right members of the Riccati equation as truncated series."""
    qi = 1 / Fraction(r.q)
    s = stieltjes(u)
    left = LaurentSeries.from_poly(ha_poly(r.phi, qi)) * laurent_hq(s, qi)
    right = LaurentSeries.from_poly(r.b) * (s * laurent_ha(s, qi))
    right = right + LaurentSeries.from_poly(r.c) * s + LaurentSeries.from_poly(r.d)
    return left, right


def riccati_residual(u: MomentForm, r: RiccatiData, upto_low_power: int) -> LaurentSeries:
    """Left minus right, restricted to powers >= ``upto_low_power``."""
    left, right = riccati_sides(u, r)
    res = left - right
    if res.floor is not None and res.floor > upto_low_power:
        raise InsufficientOrder(upto_low_power, res.floor, what="power")
    return res.truncate(upto_low_power)


def riccati_floor(u: MomentForm, r: RiccatiData):
    """Lowest power at which the residual is known for this truncation."""
    left, right = riccati_sides(u, r)
    return (left - right).floor


def riccati_class(r: RiccatiData, u: MomentForm) -> int:
    """Class via max(deg B - 2, deg C - 1, deg D), simplifying at roots c of phi
    where B, C and D all vanish at cq."""
    verified_regular_range(u)
    cur = r
    while True:
        q = cur.q
        hit = None
        for c, _ in rational_roots(cur.phi):
            cq = c * q
            if cur.b(cq) == 0 and cur.c(cq) == 0 and cur.d(cq) == 0:
                hit = c
                break
        if hit is None:
            return cur.s
        red = reduce_once(u, cur.triplet(), hit)
        if not red.succeeded:
            raise AssertionError(f"Riccati criterion and moment criterion disagree at c = {hit}")
        cur = cd_from_triplet(red.triplet, u)
