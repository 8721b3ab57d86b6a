"""Co-recursive, associated and inverse forms, moment side and equation side,
plus the named fixtures used throughout the test-suite and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .equation import Triplet, pearson_solve
from .errors import DegenerateLeading, InsufficientOrder, InvalidParameter, NotRegular
from .forms import (
    MomentForm,
    RecurrencePair,
    cauchy_product,
    dirac,
    div_x,
    inverse_form,
    moments_from_recurrence,
    recurrence_from_moments,
)
from .poly import X, Poly, as_poly, ha_poly
from .riccati import RiccatiData
from .scalar import qpochhammer, to_scalar, validate_q

# ---------------------------------------------------------------- co-recursive


def corecursive_moments(u: MomentForm, mu) -> MomentForm:
    """u^[mu] = u (delta - mu x^{-1} u)^{-1}; beta_0 moves to beta_0 + mu."""
    mu = to_scalar(mu)
    xu = div_x(u).truncate(u.order)
    v = dirac(0, u.order) - xu.scale(mu)
    return cauchy_product(u, inverse_form(v))


def _monic_constant(phi: Poly) -> Fraction:
    if not phi:
        raise DegenerateLeading()
    return phi.lead


def corecursive_triplet(t: Triplet, r: RiccatiData, mu) -> tuple:
    """Equation and Riccati data of u^[mu] from those of u.

    K phi' = phi + mu (1 - q) x h_q D, K B' = B - mu C + mu^2 D,
    K C' = C - 2 mu D, K D' = D and K psi' = psi + mu (D/q + h_q D).
    """
    mu = to_scalar(mu)
    q = t.q
    hd = ha_poly(r.d, q)
    phi = r.phi + X * hd * (mu * (1 - q))
    k = _monic_constant(phi)
    b = r.b - r.c * mu + r.d * mu**2
    c = r.c - r.d * (2 * mu)
    psi = t.psi + (r.d / q + hd) * mu
    data = RiccatiData(phi, b, c, r.d, q).scaled(k)
    return Triplet(phi / k, psi / k, b / k, q), data


# ---------------------------------------------------------------- associated


def associated_moments(r: RecurrencePair, order: int) -> MomentForm:
    """Moments of u^(1), orthogonalizing the shifted recurrence."""
    return moments_from_recurrence(r.shifted(1), order)


def associated_triplet(t: Triplet, r: RiccatiData, beta0, gamma1) -> tuple:
    """Equation and Riccati data of u^(1).

    K phi1 = phi + (q - 1) x ((q x - beta0) h_q D - h_q C)
    K B1 = gamma1 D
    K C1 = ((1/q + 1) x - 2 beta0) D - C
    K D1 = (B + (x/q - beta0)(x - beta0) D - (x/q - beta0) C - h_{1/q} phi) / gamma1
    and psi1 = -(C1 + H_{1/q} phi1) / q.

    Obtained by substituting S(u) = -1/(gamma1 S(u^(1)) + z - beta0) into the
    Riccati equation of u and dividing through by gamma1.
    """
    beta0 = to_scalar(beta0)
    gamma1 = to_scalar(gamma1)
    q = t.q
    qi = 1 / Fraction(q)
    lin = Poly([-beta0, 1])
    lin_q = Poly([-beta0, q])
    lin_qi = Poly([-beta0, qi])
    phi = r.phi + X * (lin_q * ha_poly(r.d, q) - ha_poly(r.c, q)) * (q - 1)
    k = _monic_constant(phi)
    b = r.d * gamma1
    c = Poly([-2 * beta0, qi + 1]) * r.d - r.c
    d = (r.b + lin_qi * lin * r.d - lin_qi * r.c - ha_poly(r.phi, qi)) / gamma1
    data = RiccatiData(phi, b, c, d, q).scaled(k)
    return data.triplet(), data


# ---------------------------------------------------------------- inverse


def inverse_moments(u: MomentForm) -> MomentForm:
    return inverse_form(u)


@dataclass(frozen=True)
class InverseData:
    """Values at 0 of the first and second associated sequences and the
    quantities Delta_n that decide regularity of u^{-1}."""

    v1: Fraction
    gamma1: Fraction
    p1_at0: tuple  # P^(1)_n(0), n = 0..m
    p2_at0: tuple  # P^(2)_{n-1}(0), n = 0..m (first entry is P^(2)_{-1} = 0)
    norms1: tuple  # <u^(1), (P^(1)_n)^2>
    deltas: tuple


def _inverse_data(u: MomentForm, r: RecurrencePair, upto: int) -> InverseData:
    g1 = r.gamma(1)
    v1 = -u[1]
    p1 = [Fraction(1), -r.beta(1)]
    for n in range(upto - 1):
        p1.append(-r.beta(n + 2) * p1[n + 1] - r.gamma(n + 2) * p1[n])
    p2 = [Fraction(0), Fraction(1)]  # P^(2)_{-1}(0), P^(2)_0(0)
    if upto >= 2:
        p2.append(-r.beta(2))
    for n in range(upto - 2):
        p2.append(-r.beta(n + 3) * p2[n + 2] - r.gamma(n + 3) * p2[n + 1])
    norms = [Fraction(1)]
    for n in range(1, upto + 1):
        norms.append(norms[-1] * r.gamma(n + 1))
    deltas = []
    acc = g1
    for n in range(upto + 1):
        acc += (g1 * p2[n] - v1 * p1[n]) ** 2 / norms[n]
        deltas.append(norms[n] * acc)
    return InverseData(v1, g1, tuple(p1[: upto + 1]), tuple(p2[: upto + 1]), tuple(norms), tuple(deltas))


def _recurrence_reach(r: RecurrencePair) -> int:
    return min(len(r.betas) - 1, len(r.gammas))


def inverse_regularity(u: MomentForm, upto: int) -> list:
    """Delta_0..Delta_upto; u^{-1} is regular iff none of them vanishes."""
    r = recurrence_from_moments(u)
    if upto + 1 > _recurrence_reach(r):
        raise InsufficientOrder(2 * upto + 3, u.order)
    return list(_inverse_data(u, r, upto).deltas)


def inverse_recurrence(u: MomentForm, symmetric: bool = False, upto: Optional[int] = None) -> RecurrencePair:
    """Recurrence of u^{-1} from that of u.

    General mode: b_0 = beta_1 - v1, a_n = Delta_{n+1}/Delta_n, and
    beta^(-)_{n+1} = beta_{n+2} + b_n - b_{n+1},
    gamma^(-)_1 = -Delta_0, gamma^(-)_2 = gamma_1 Delta_1 / Delta_0^2,
    gamma^(-)_{n+3} = gamma_{n+2} Delta_{n+2} Delta_n / Delta_{n+1}^2.
    Symmetric mode (u symmetric): a_{2n} = gamma_{2n+2} (L_n + 1)/(L_{n-1} + 1)
    with L_n = sum_{v<=n} prod_{k<=v} gamma_{2k+1}/gamma_{2k+2}, and
    gamma^(-)_{2n+2} = a_{2n}, gamma^(-)_{2n+3} = gamma_{2n+2} gamma_{2n+3} / a_{2n}.
    """
    r = recurrence_from_moments(u)
    reach = _recurrence_reach(r)
    if symmetric:
        if not u.is_symmetric():
            raise ValueError("symmetric mode needs a symmetric form")
        m = len(r.gammas) - 1 if upto is None else upto
        g = [Fraction(0)] + list(r.gammas)
        g1 = g[1]
        lam = [Fraction(0)]  # lam[n+1] = Lambda_n, lam[0] = Lambda_{-1}
        prod = Fraction(1)
        gm = [-g1]
        n = 0
        while 2 * n + 3 <= m:
            prod *= g[2 * n + 1] / g[2 * n + 2]
            lam.append(lam[-1] + prod)
            a2n = (lam[n + 1] + 1) / (lam[n] + 1) * g[2 * n + 2]
            if a2n == 0:
                raise NotRegular(2 * n + 2)
            gm.append(a2n)
            gm.append(g[2 * n + 2] * g[2 * n + 3] / a2n)
            n += 1
        return RecurrencePair([Fraction(0)] * len(gm), gm)
    m = reach - 2 if upto is None else upto
    if m + 2 > reach:
        raise InsufficientOrder(2 * m + 5, u.order)
    data = _inverse_data(u, r, m + 1)
    dl = data.deltas
    for n, v in enumerate(dl):
        if v == 0:
            raise NotRegular(n + 1)
    v1, g1 = data.v1, data.gamma1
    p1, p2 = data.p1_at0, data.p2_at0
    bs = [r.beta(1) - v1]
    for n in range(m):
        bs.append(r.beta(n + 2) - (v1 * p1[n] - g1 * p2[n]) * (v1 * p1[n + 1] - g1 * p2[n + 1]) / dl[n])
    betas = [v1] + [r.beta(n + 2) + bs[n] - bs[n + 1] for n in range(m)]
    gammas = [-dl[0], g1 * dl[1] / dl[0] ** 2]
    for n in range(m - 1):
        gammas.append(dl[n + 2] * dl[n] / dl[n + 1] ** 2 * r.gamma(n + 2))
    gammas = gammas[: len(betas)]
    return RecurrencePair(betas, gammas)


def inverse_triplet(t1: Triplet, r1: RiccatiData, gamma1, beta0) -> tuple:
    """Equation and Riccati data of u^{-1} from those of u^(1).

    With S(u^{-1}) = -z^{-2} (gamma1 S(u^(1)) + z - beta0) and A = h_{1/q} phi1,
    G = B1 / gamma1, L = z - beta0, M = z/q - beta0:
    K phi = -x^2 (phi1 + (1 - q) x (q x - beta0) h_q G)
    K B = x^4 G / q^2
    K C = G x^2 (M + L / q^2) - x^2 C1 + (1 + 1/q) x A
    K D = G L M - L C1 + gamma1 D1 + A
    psi follows from C and phi.
    """
    g = to_scalar(gamma1)
    beta0 = to_scalar(beta0)
    q = Fraction(t1.q)
    qi = 1 / q
    lin = Poly([-beta0, 1])
    lin_qi = Poly([-beta0, qi])
    a = ha_poly(r1.phi, qi)
    bg = r1.b / g
    x2 = X * X
    phi = -x2 * (r1.phi + X * Poly([-beta0, q]) * ha_poly(bg, q) * (1 - q))
    k = _monic_constant(phi)
    b = x2 * x2 * bg * qi**2
    c = bg * x2 * (lin_qi + lin * qi**2) - x2 * r1.c + X * a * (1 + qi)
    d = bg * lin * lin_qi - lin * r1.c + r1.d * g + a
    data = RiccatiData(phi, b, c, d, t1.q).scaled(k)
    return data.triplet(), data


def inverse_triplet_from(t: Triplet, r: RiccatiData, beta0, gamma1) -> tuple:
    """Equation of u^{-1} straight from the equation of u, through u^(1)."""
    t1, r1 = associated_triplet(t, r, beta0, gamma1)
    return inverse_triplet(t1, r1, gamma1, beta0)


# ---------------------------------------------------------------- closed forms
#
# Closed-form instances of the transformed equations for the q-classical
# Pearson case (phi of degree <= 2, psi of degree 1) and for the Brenke form.
# They are reproduced verbatim so that they can be compared with the general
# constructions above; each returns the unnormalized (K-scaled) polynomials.


def _pearson_coeffs(phi: Poly, psi: Poly):
    return phi[2], phi[1], phi[0], psi[1], psi[0]


def pearson_corecursive_closed(phi, psi, q, mu) -> dict:
    """K phi, K psi, K B, K C, K D of u^[mu] for a q-classical u."""
    p2, p1, p0, s1, s0 = _pearson_coeffs(as_poly(phi), as_poly(psi))
    q = Fraction(q)
    mu = to_scalar(mu)
    e = p2 + q * s1
    return {
        "phi": Poly([p0, p1 + mu * (q - 1) * e, p2]),
        "psi": Poly([s0 - mu * (1 / q + 1) * e, s1]),
        "b": Poly([p1 + q * s0 - e * mu, (1 / q + 1) * p2 + q * s1]) * mu,
        "c": Poly([-p1 - q * s0 + 2 * mu * e, -(q * s1 + (1 / q + 1) * p2)]),
        "d": Poly([-e]),
    }


def pearson_associated_closed(phi, psi, q, beta0, gamma1) -> dict:
    """K phi, K psi, K B, K C, K D of u^(1) for a q-classical u."""
    phi, psi = as_poly(phi), as_poly(psi)
    p2, p1, p0, s1, s0 = _pearson_coeffs(phi, psi)
    q = Fraction(q)
    beta0, gamma1 = to_scalar(beta0), to_scalar(gamma1)
    e = p2 + q * s1
    return {
        "phi": Poly([p0, q * p1 + (q - 1) * (q * s0 + beta0 * e), q * p2]),
        "psi": Poly([(q + 1) * p1 + q**2 * s0 + (q**2 - q + 2) * e * beta0, (q + 1) * p2 - s1]) * (-1 / q),
        "b": Poly([-gamma1 * e]),
        "c": Poly([beta0 * (2 * p2 + 2 * q * s1) + q * s0 + p1, -s1]) * gamma1,
        "d": Poly([-phi(beta0) - q * beta0 * psi(beta0), psi(beta0)]),
    }


def brenke_associated_closed(b, q) -> dict:
    """K phi, K psi, K B, K C, K D of the associated Brenke form."""
    b = to_scalar(b)
    q = Fraction(q)
    k = 1 / (b * (q - 1))
    return {
        "phi": Poly([0, 1 / b]),
        "psi": Poly([q / (q - 1) * (1 - 1 / b) - 1 / (q * b) - 1, 0, -k / q**2]),
        "b": Poly([0, (1 / b - 1) * q / (q - 1)]),
        "c": Poly([1 - q / (q - 1) * (1 - 1 / b), 0, k / q**2]),
        "d": Poly([0, k / q**2]),
    }


def _brenke_inverse_coeffs(q: Fraction):
    return -(q - 1) / q**3, -2 / q**4 + 2 / q**3 + 1 / q**2 - 1 / q + q


def brenke_inverse_closed(b, q) -> dict:
    """K phi, K psi, K B of the degree-five equation of the inverse Brenke form."""
    b = to_scalar(b)
    q = Fraction(q)
    c0, c2 = _brenke_inverse_coeffs(q)
    return {
        "phi": Poly([0, 0, 0, 1 / b, 0, -q / b]),
        "psi": Poly([0, 0, (b - q + c0) / (b * (q - 1)), 0, c2 / (b * (q - 1))]),
        "b": Poly([0, 0, 0, 0, 0, -1 / (b * q**3 * (q - 1))]),
    }


def brenke_inverse_minimal_closed(b, q) -> Triplet:
    """The reduced class-two equation of the inverse Brenke form."""
    b = to_scalar(b)
    q = validate_q(q)
    c0, c2 = _brenke_inverse_coeffs(Fraction(q))
    r = q / (q - 1)
    phi = Poly([0, 0, -1 / q, 0, 1])
    psi = Poly([0, 1 + r * (b - q + c0), 0, r * c2 - q]) * (-1 / q)
    return Triplet(phi, psi, Poly([0, 0, 0, 0, 1 / (q**3 * (q - 1))]), q)


# ---------------------------------------------------------------- fixtures


@dataclass(frozen=True)
class Fixture:
    name: str
    params: Mapping[str, Fraction]
    form: MomentForm
    triplet: Triplet
    recurrence: RecurrencePair


def brenke_recurrence(b, q, count: int) -> RecurrencePair:
    """beta_n = 0, gamma_{2n+1} = q^{2n+2}(1 - b q^{2n}), gamma_{2n+2} = b q^{2n+2}(1 - q^{2n+2})."""
    b = to_scalar(b)
    q = Fraction(q)
    gammas = []
    for i in range(count):
        n = i // 2
        if i % 2 == 0:
            gammas.append(q ** (2 * n + 2) * (1 - b * q ** (2 * n)))
        else:
            gammas.append(b * q ** (2 * n + 2) * (1 - q ** (2 * n + 2)))
    return RecurrencePair([0] * count, gammas)


def brenke_triplet(b, q) -> Triplet:
    """phi = x, psi = -(q^{-2} x^2 + b - 1) / (b (q - 1)), B = 0."""
    b = to_scalar(b)
    q = validate_q(q)
    k = -1 / (b * (q - 1))
    return Triplet(X, Poly([k * (b - 1), 0, k / q**2]), Poly(), q)


def check_brenke_params(b, q, order: int) -> None:
    b = to_scalar(b)
    q = validate_q(q)
    if b == 0:
        raise InvalidParameter("Brenke parameter b must be nonzero")
    if b == q:
        raise InvalidParameter("Brenke parameter b must differ from q")
    for n in range(order + 2):
        if b == q ** (-2 * n):
            raise InvalidParameter(f"Brenke parameter b = q^(-2n) with n = {n} makes the form singular")


def brenke_fixture(b, q, order: int) -> Fixture:
    """Brenke-type symmetric form; moments computed from the recurrence and
    checked against the moment recursion of its equation."""
    b = to_scalar(b)
    q = validate_q(q)
    check_brenke_params(b, q, order)
    rec = brenke_recurrence(b, q, order + 4)
    t = brenke_triplet(b, q)
    u = moments_from_recurrence(rec, order)
    solved = pearson_solve(t, {1: 0}, order)
    if solved != u:
        raise AssertionError("Brenke moments disagree between recurrence and equation")
    return Fixture("brenke", {"b": b, "q": Fraction(q)}, u, t, rec)


def pearson_fixture(phi, psi, q, seeds: Optional[Mapping[int, object]] = None, order: int = 40, b=None) -> Fixture:
    t = Triplet(as_poly(phi), as_poly(psi), as_poly(b) if b is not None else Poly(), validate_q(q))
    u = pearson_solve(t, seeds or {}, order)
    rec = recurrence_from_moments(u)
    return Fixture("pearson", {"q": Fraction(t.q)}, u, t, rec)


def qclassical_fixture(q=2, order: int = 40) -> Fixture:
    """phi = x, psi = (x - 1)/(q - 1): moments q^{n(n-1)/2}."""
    q = validate_q(q)
    fx = pearson_fixture(X, Poly([-1, 1]) / (q - 1), q, {}, order)
    return Fixture("qclassical", {"q": Fraction(q)}, fx.form, fx.triplet, fx.recurrence)


def brenke_lambda_closed(b, q, n: int) -> Fraction:
    """Lambda_n = sum_{v=1}^{n+1} b^{-v} (b; q^2)_v / (q^2; q^2)_v."""
    b = to_scalar(b)
    q2 = Fraction(q) ** 2
    if n < 0:
        return Fraction(0)
    return sum((qpochhammer(b, q2, v) / qpochhammer(q2, q2, v) / b**v for v in range(1, n + 2)), Fraction(0))


def brenke_inverse_gammas_closed(b, q, count: int, weight=None) -> list:
    """gamma^(-)_1 .. gamma^(-)_count of the inverse Brenke form in closed form,

    gamma^(-)_{2n+2} = b q^{2n+2} (1 - q^{2n+2}) (1 + w Lambda_n) / (1 + w Lambda_{n-1})
    and gamma^(-)_{2n+3} = q^{2n+4} (1 - b q^{2n+2}) (1 + w Lambda_{n-1}) / (1 + w Lambda_n).
    The default weight w = q^2 (1 - b) = gamma_1 is the form in circulation;
    the coefficients recovered from the moments need w = 1.
    """
    b = to_scalar(b)
    q = Fraction(q)
    out = [q**2 * (b - 1)]
    n = 0
    g1 = q**2 * (1 - b) if weight is None else to_scalar(weight)
    while len(out) < count:
        ln, lm = brenke_lambda_closed(b, q, n), brenke_lambda_closed(b, q, n - 1)
        out.append(b * q ** (2 * n + 2) * (1 - q ** (2 * n + 2)) * (1 + g1 * ln) / (1 + g1 * lm))
        if len(out) < count:
            out.append(q ** (2 * n + 4) * (1 - b * q ** (2 * n + 2)) * (1 + g1 * lm) / (1 + g1 * ln))
        n += 1
    return out
