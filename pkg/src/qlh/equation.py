"""The q-Laguerre-Hahn equation H_q(phi u) + psi u + B (x^{-1} u h_q u) = 0.

Residuals on truncated moment sequences, inflation by a polynomial factor,
root-by-root reduction to the minimal equation (the class), parity of
symmetric solutions, moment solving and dilation covariance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import (
    InconsistentSeeds,
    InsufficientOrder,
    MissingSeed,
    NonAdmissible,
    NotARoot,
    ZeroDilation,
)
from .forms import (
    MomentForm,
    cauchy_product,
    div_x,
    ha_form,
    hq_form,
    mul_poly_form,
    recurrence_from_moments,
)
from .poly import NEG_INF, Poly, as_poly, deflate_rational, ha_poly, hq_poly, poly_divrem, rational_roots, theta_c
from .scalar import QParam, qbracket, to_scalar, validate_q


def class_bound(phi: Poly, psi: Poly, b: Poly):
    """s = max(deg psi - 1, max(deg phi, deg B) - 2)."""
    return max(psi.degree - 1, max(phi.degree, b.degree) - 2)


@dataclass(frozen=True)
class Triplet:
    """Coefficients (phi, psi, B) of the equation together with q; phi is monic."""

    phi: Poly
    psi: Poly
    b: Poly
    q: QParam

    def __post_init__(self):
        object.__setattr__(self, "phi", as_poly(self.phi))
        object.__setattr__(self, "psi", as_poly(self.psi))
        object.__setattr__(self, "b", as_poly(self.b))
        object.__setattr__(self, "q", validate_q(self.q))
        if not self.phi:
            raise ValueError("phi must be nonzero")
        if self.phi.lead != 1:
            raise ValueError(f"phi must be monic, leading coefficient is {self.phi.lead}")

    @classmethod
    def normalized(cls, phi, psi, b, q) -> "Triplet":
        """Divide all three polynomials by the leading coefficient of phi."""
        phi, psi, b = as_poly(phi), as_poly(psi), as_poly(b)
        k = phi.lead
        if k == 0:
            raise ValueError("phi must be nonzero")
        return cls(phi / k, psi / k, b / k, q)

    @property
    def s(self):
        return class_bound(self.phi, self.psi, self.b)

    @property
    def degrees(self) -> tuple:
        return self.phi.degree, self.psi.degree, self.b.degree

    def residual_reach(self) -> int:
        """Offset k with entry n of the residual reading moments up to n + k."""
        t, p, r = self.degrees
        return max(t - 1, p, r - 1)


def quadratic_part(u: MomentForm, q) -> MomentForm:
    """w = x^{-1}(u h_q u), exact through order N + 1."""
    return div_x(cauchy_product(u, ha_form(u, q)))


def residual(u: MomentForm, t: Triplet, upto: int) -> list:
    """Moments 0..upto of H_q(phi u) + psi u + B x^{-1}(u h_q u)."""
    need = upto + t.residual_reach()
    if need > u.order:
        raise InsufficientOrder(need, u.order)
    lin = hq_form(mul_poly_form(t.phi, u), t.q)
    psiu = mul_poly_form(t.psi, u)
    out = [lin[n] + psiu[n] for n in range(upto + 1)]
    if t.b:
        bw = mul_poly_form(t.b, quadratic_part(u, t.q))
        out = [out[n] + bw[n] for n in range(upto + 1)]
    return out


def max_residual_order(u: MomentForm, t: Triplet) -> int:
    return u.order - t.residual_reach()


def satisfies(u: MomentForm, t: Triplet, upto: Optional[int] = None) -> bool:
    if upto is None:
        upto = max_residual_order(u, t)
    return all(v == 0 for v in residual(u, t, upto))


def first_nonzero(values: Sequence) -> Optional[tuple]:
    for i, v in enumerate(values):
        if v != 0:
            return i, v
    return None


def multiply_chi(t: Triplet, chi: Poly) -> Triplet:
    """The inflated equation obtained by multiplying through by chi."""
    chi = as_poly(chi)
    if not chi:
        raise ValueError("chi must be nonzero")
    q = t.q
    phi = ha_poly(chi, q) * t.phi
    psi = chi * t.psi - t.phi * hq_poly(chi, q)
    return Triplet.normalized(phi, psi, chi * t.b, q)


@dataclass(frozen=True)
class Reduction:
    """Outcome of trying to cancel the factor (x - c) from phi."""

    c: Fraction
    r_cq: Fraction
    b_cq: Fraction
    bracket: Fraction
    triplet: Optional[Triplet]

    @property
    def succeeded(self) -> bool:
        return self.triplet is not None


def reduce_once(u: MomentForm, t: Triplet, c) -> Reduction:
    """Try to simplify the equation by the root c of phi.

    With phi = (x - c) phi_c, q psi + phi_c = (x - cq) psi_cq + r_cq and
    q B = (x - cq) B_cq + b_cq, the triple (phi_c, psi_cq, B_cq) is again an
    equation for u exactly when r_cq, b_cq and the moment bracket
    <u, q theta_cq psi + theta_cq theta_c phi> + q <u h_q u, theta_0 theta_cq B>
    all vanish.
    """
    c = to_scalar(c)
    q = t.q
    cq = c * q
    phi_c, rem = poly_divrem(t.phi, Poly([-c, 1]))
    if rem:
        raise NotARoot(c, t.phi(c))
    psi_cq, r = poly_divrem(t.psi * q + phi_c, Poly([-cq, 1]))
    b_cq_poly, bb = poly_divrem(t.b * q, Poly([-cq, 1]))
    r_cq = r[0]
    b_cq = bb[0]
    lin = theta_c(t.psi, cq) * q + theta_c(theta_c(t.phi, c), cq)
    bracket = u.pair(lin)
    tb = theta_c(theta_c(t.b, cq), 0)
    if tb:
        v = cauchy_product(u, ha_form(u, q))
        bracket += q * v.pair(tb)
    ok = r_cq == 0 and b_cq == 0 and bracket == 0
    reduced = Triplet(phi_c, psi_cq, b_cq_poly, q) if ok else None
    return Reduction(c, r_cq, b_cq, bracket, reduced)


@dataclass
class ClassReport:
    class_value: int
    minimal_triplet: Triplet
    initial_triplet: Triplet
    reductions: list = field(default_factory=list)
    attempts: list = field(default_factory=list)
    unreduced_nonrational_factors: list = field(default_factory=list)
    hankel_range: int = 0

    @property
    def label(self) -> str:
        if self.minimal_triplet.b:
            return "strict q-Laguerre-Hahn"
        if self.class_value == 0:
            return "q-classical"
        return "q-semiclassical"

    @property
    def is_upper_bound(self) -> bool:
        """True when phi keeps irrational roots that were not tested."""
        return bool(self.unreduced_nonrational_factors)


def verified_regular_range(u: MomentForm) -> int:
    """Largest n with Delta_0..Delta_n checked nonzero; raises NotRegular otherwise."""
    recurrence_from_moments(u)
    return u.order // 2


def compute_class(u: MomentForm, t: Triplet) -> ClassReport:
    """Reduce ``t`` over the rational roots of phi until no root simplifies.

    Roots are tried in ascending order.  Irrational roots cannot be tested
    inside rational arithmetic; the leftover factor of phi is reported so a
    caller can tell when the class is only an upper bound.
    """
    hr = verified_regular_range(u)
    report = ClassReport(class_value=0, minimal_triplet=t, initial_triplet=t, hankel_range=hr)
    cur = t
    progress = True
    while progress:
        progress = False
        for c, _mult in rational_roots(cur.phi):
            red = reduce_once(u, cur, c)
            report.attempts.append(red)
            if red.succeeded:
                report.reductions.append(red)
                cur = red.triplet
                progress = True
                break
    report.minimal_triplet = cur
    report.class_value = cur.s
    rest = deflate_rational(cur.phi)
    if rest.degree >= 1:
        report.unreduced_nonrational_factors.append(rest)
    return report


def parity_check(t: Triplet, class_value: int) -> bool:
    """Odd class: phi, B odd and psi even.  Even class: phi, B even and psi odd."""
    if class_value % 2:
        return t.phi.is_odd() and t.b.is_odd() and t.psi.is_even()
    return t.phi.is_even() and t.b.is_even() and t.psi.is_odd()


def _entry(n: int, m: list, t: Triplet, qpow: list) -> Fraction:
    """Residual moment n read directly off a partial moment list."""
    q = t.q
    acc = Fraction(0)
    if n >= 1:
        acc -= qbracket(n, q) * sum((c * m[n - 1 + j] for j, c in enumerate(t.phi.coeffs) if c), Fraction(0))
    acc += sum((c * m[n + j] for j, c in enumerate(t.psi.coeffs) if c), Fraction(0))
    for j, c in enumerate(t.b.coeffs):
        if not c:
            continue
        k = n + j
        if k == 0:
            continue
        acc += c * sum((qpow[i] * m[i] * m[k - 1 - i] for i in range(k)), Fraction(0))
    return acc


def pearson_solve(t: Triplet, seeds: Optional[Mapping[int, object]] = None, order: int = 20) -> MomentForm:
    """Normalized moments solving the equation, step by step in n.

    Step n of the residual determines the moment of index n + k (k the reach
    of the triplet); it enters linearly because (u)_0 = 1 multiplies the top
    index of the quadratic term.  Indices no step determines must be seeded.
    """
    seeds = {int(k): to_scalar(v) for k, v in (seeds or {}).items()}
    if 0 in seeds and seeds[0] != 1:
        raise ValueError("(u)_0 is fixed to 1")
    k = t.residual_reach()
    qpow = [Fraction(t.q) ** i for i in range(order + 2)]
    m = [Fraction(1)]

    def take_seeds_until(idx):
        while len(m) < idx:
            j = len(m)
            if j not in seeds:
                raise MissingSeed(j)
            m.append(seeds[j])

    n = 0
    while k != NEG_INF and n + k <= order:
        top = n + k
        if top < len(m):
            val = _entry(n, m, t, qpow)
            if val != 0:
                raise InconsistentSeeds(n, val)
        else:
            take_seeds_until(top)
            r0 = _entry(n, m + [Fraction(0)], t, qpow)
            lead = _entry(n, m + [Fraction(1)], t, qpow) - r0
            if lead == 0:
                if top not in seeds:
                    raise NonAdmissible(n)
                m.append(seeds[top])
                val = _entry(n, m, t, qpow)
                if val != 0:
                    raise InconsistentSeeds(n, val)
            else:
                value = -r0 / lead
                if top in seeds and seeds[top] != value:
                    raise InconsistentSeeds(n, seeds[top] - value)
                m.append(value)
        n += 1
    take_seeds_until(order + 1)
    return MomentForm(m[: order + 1], normalized=True)


def shift_triplet(t: Triplet, a) -> Triplet:
    """Equation satisfied by h_{1/a} u when u satisfies ``t``."""
    a = to_scalar(a)
    if a == 0:
        raise ZeroDilation()
    d = t.phi.degree
    return Triplet(
        ha_poly(t.phi, a) / a**d,
        ha_poly(t.psi, a) * a ** (1 - d),
        ha_poly(t.b, a) / a**d,
        t.q,
    )
