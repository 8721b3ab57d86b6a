"""Truncated moment functionals and the transposed operator algebra on them.

A form is known through its moments ``(u)_0 .. (u)_N``.  Each operation
records the exact order of its output; reading a moment beyond the order is
an error rather than an implicit zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    InsufficientCoefficients,
    InsufficientOrder,
    NonInvertible,
    NotRegular,
    OrderMismatch,
    ZeroDilation,
)
from .poly import Poly
from .scalar import qbracket, to_scalar


class MomentForm:
    """Moments ``(u)_0 .. (u)_N`` of a linear functional on polynomials."""

    __slots__ = ("_m",)

    def __init__(self, moments: Iterable, normalized: bool = False):
        m = tuple(to_scalar(v) for v in moments)
        if not m:
            raise ValueError("a form needs at least one moment")
        if normalized and m[0] != 1:
            raise ValueError(f"normalized form must have (u)_0 = 1, got {m[0]}")
        self._m = m

    @property
    def moments(self) -> tuple:
        return self._m

    @property
    def order(self) -> int:
        return len(self._m) - 1

    def __len__(self):
        return len(self._m)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self._m[n]
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise InsufficientOrder(n, self.order)
        return self._m[n]

    def __eq__(self, other):
        if isinstance(other, MomentForm):
            return self._m == other._m
        return NotImplemented

    def __hash__(self):
        return hash(self._m)

    def __repr__(self):
        head = ", ".join(str(v) for v in self._m[:8])
        tail = ", ..." if len(self._m) > 8 else ""
        return f"MomentForm(order={self.order}: {head}{tail})"

    def truncate(self, order: int) -> "MomentForm":
        if order > self.order:
            raise InsufficientOrder(order, self.order)
        return MomentForm(self._m[: order + 1])

    def is_symmetric(self) -> bool:
        return all(v == 0 for v in self._m[1::2])

    # linear structure; the result lives on the common range
    def __add__(self, other: "MomentForm") -> "MomentForm":
        n = min(self.order, other.order)
        return MomentForm(self._m[i] + other._m[i] for i in range(n + 1))

    def __sub__(self, other: "MomentForm") -> "MomentForm":
        n = min(self.order, other.order)
        return MomentForm(self._m[i] - other._m[i] for i in range(n + 1))

    def __neg__(self):
        return MomentForm(-v for v in self._m)

    def scale(self, c) -> "MomentForm":
        c = to_scalar(c)
        return MomentForm(c * v for v in self._m)

    def pair(self, f: Poly) -> Fraction:
        """<u, f>."""
        if f.degree > self.order:
            raise InsufficientOrder(int(f.degree), self.order)
        return sum((c * self._m[i] for i, c in enumerate(f.coeffs)), Fraction(0))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self._m)


@dataclass(frozen=True)
class RecurrencePair:
    """Three-term recurrence coefficients: ``betas[n]`` is beta_n, ``gammas[n-1]`` is gamma_n."""

    betas: tuple
    gammas: tuple

    def __init__(self, betas: Sequence, gammas: Sequence):
        b = tuple(to_scalar(v) for v in betas)
        g = tuple(to_scalar(v) for v in gammas)
        for i, v in enumerate(g):
            if v == 0:
                raise ValueError(f"gamma_{i + 1} must be nonzero")
        if not (len(b) - 1 <= len(g) <= len(b)):
            raise ValueError(
                f"need len(gammas) in {{len(betas)-1, len(betas)}}, got {len(g)} and {len(b)}"
            )
        object.__setattr__(self, "betas", b)
        object.__setattr__(self, "gammas", g)

    def beta(self, n: int) -> Fraction:
        if not 0 <= n < len(self.betas):
            raise InsufficientCoefficients("beta", n)
        return self.betas[n]

    def gamma(self, n: int) -> Fraction:
        """gamma_n for n >= 1."""
        if not 1 <= n <= len(self.gammas):
            raise InsufficientCoefficients("gamma", n)
        return self.gammas[n - 1]

    def shifted(self, k: int = 1) -> "RecurrencePair":
        """Coefficients (beta_{n+k}), (gamma_{n+k+1}) of the k-th associated sequence."""
        b = self.betas[k:]
        g = self.gammas[k:]
        if len(g) > len(b):
            g = g[: len(b)]
        if len(g) < len(b) - 1:
            b = b[: len(g) + 1]
        return RecurrencePair(b, g)

    def rescaled(self, a) -> "RecurrencePair":
        a = to_scalar(a)
        return RecurrencePair([v / a for v in self.betas], [v / a**2 for v in self.gammas])

    def norms(self) -> list:
        """r_n = gamma_1 ... gamma_n for n = 0..len(gammas) (with r_0 = 1)."""
        out = [Fraction(1)]
        for g in self.gammas:
            out.append(out[-1] * g)
        return out


def dirac(c, order: int) -> MomentForm:
    c = to_scalar(c)
    return MomentForm((c**n for n in range(order + 1)), normalized=True)


def dirac_prime(order: int) -> MomentForm:
    """delta' at the origin: <delta', x^n> = -n 0^(n-1)."""
    return MomentForm([0, -1] + [0] * (order - 1) if order >= 1 else [0])


def hq_form(u: MomentForm, q) -> MomentForm:
    """(H_q u)_n = -[n]_q (u)_{n-1}; exact through order N + 1."""
    q = Fraction(q)
    return MomentForm([Fraction(0)] + [-qbracket(n, q) * u[n - 1] for n in range(1, u.order + 2)])


def ha_form(u: MomentForm, a) -> MomentForm:
    a = to_scalar(a)
    if a == 0:
        raise ZeroDilation()
    return MomentForm(a**n * v for n, v in enumerate(u.moments))


def mul_poly_form(f: Poly, u: MomentForm) -> MomentForm:
    """(f u)_n = sum_j f_j (u)_{n+j}; order drops by deg f."""
    if not f:
        return MomentForm([0] * (u.order + 1))
    d = f.degree
    if d > u.order:
        raise InsufficientOrder(int(d), u.order)
    m = u.moments
    fc = f.coeffs
    return MomentForm(
        sum((fc[j] * m[n + j] for j in range(d + 1) if fc[j]), Fraction(0))
        for n in range(u.order - d + 1)
    )


def div_xc(u: MomentForm, c) -> MomentForm:
    """(x - c)^{-1} u: moment n is sum_{k<n} c^{n-1-k} (u)_k; exact through order N + 1."""
    c = to_scalar(c)
    out = [Fraction(0)]
    acc = Fraction(0)
    for k in range(u.order + 1):
        acc = acc * c + u[k]
        out.append(acc)
    return MomentForm(out)


def div_x(u: MomentForm) -> MomentForm:
    return div_xc(u, 0)


def cauchy_product(u: MomentForm, v: MomentForm, strict: bool = True) -> MomentForm:
    """(u v)_n = sum_k (u)_k (v)_{n-k}.

    With ``strict`` the orders must agree; otherwise the shorter one wins.
    """
    if strict and u.order != v.order:
        raise OrderMismatch(u.order, v.order)
    n = min(u.order, v.order)
    a, b = u.moments, v.moments
    return MomentForm(sum((a[k] * b[m - k] for k in range(m + 1)), Fraction(0)) for m in range(n + 1))


def inverse_form(u: MomentForm) -> MomentForm:
    """Convolution inverse: the form w with u w = delta_0 through order N."""
    u0 = u[0]
    if u0 == 0:
        raise NonInvertible()
    a = u.moments
    w = [1 / u0]
    for n in range(1, u.order + 1):
        s = sum((a[k] * w[n - k] for k in range(1, n + 1)), Fraction(0))
        w.append(-s / u0)
    return MomentForm(w)


def form_poly_product(u: MomentForm, f: Poly) -> Poly:
    """The polynomial u f, coefficient i = sum_{j >= i} (u)_{j-i} f_j."""
    d = f.degree
    if d > u.order:
        raise InsufficientOrder(int(d), u.order)
    fc = f.coeffs
    return Poly(sum((u[j - i] * fc[j] for j in range(i, len(fc))), Fraction(0)) for i in range(len(fc)))


def u_theta0_f(u: MomentForm, f: Poly) -> Poly:
    """The polynomial (u theta_0 f)(x) = <u_t, (f(x) - f(t)) / (x - t)>."""
    fc = f.coeffs
    if len(fc) - 2 > u.order:
        raise InsufficientOrder(len(fc) - 2, u.order)
    return Poly(
        sum((u[j - 1 - i] * fc[j] for j in range(i + 1, len(fc))), Fraction(0))
        for i in range(len(fc) - 1)
    )


def hankel(u: MomentForm, n: int) -> Fraction:
    """det((u)_{i+j})_{i,j=0..n} by fraction-free (Bareiss) elimination."""
    if 2 * n > u.order:
        raise InsufficientOrder(2 * n, u.order)
    size = n + 1
    # integer matrix first, so Bareiss divisions stay exact in Z
    den = 1
    for v in u.moments[: 2 * n + 1]:
        den = den * v.denominator // _gcd(den, v.denominator)
    a = [[int(u[i + j] * den) for j in range(size)] for i in range(size)]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return Fraction(sign * a[size - 1][size - 1], den**size)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def moments_from_recurrence(r: RecurrencePair, order: int) -> MomentForm:
    """Normalized moments of the form whose MOPS has recurrence ``r``.

    Expands x^n in the orthogonal basis, c_{n+1,k} = c_{n,k-1} + beta_k c_{n,k}
    + gamma_{k+1} c_{n,k+1}; the moment is c_{n,0}.  Heights that cannot
    return to 0 within ``order`` steps are dropped, so only beta_k for
    k <= (N-1)//2 and gamma_k for k <= N//2 are consulted.
    """
    c = [Fraction(1)]
    out = [Fraction(1)]
    for n in range(order):
        top = min(n + 1, order - n - 1)
        nxt = []
        for k in range(top + 1):
            v = c[k - 1] if 0 < k <= len(c) else Fraction(0)
            if k < len(c):
                v += r.beta(k) * c[k]
            if k + 1 < len(c):
                v += r.gamma(k + 1) * c[k + 1]
            nxt.append(v)
        c = nxt
        out.append(c[0])
    return MomentForm(out, normalized=True)


def recurrence_from_moments(u: MomentForm) -> RecurrencePair:
    """Recurrence coefficients by the Chebyshev algorithm (ordinary moments).

    sigma_{k,l} = <u, P_k x^l>; sigma_{k,k} = r_k is the squared norm, which
    vanishes exactly when the Hankel determinant Delta_k does.
    """
    N = u.order
    if u[0] == 0:
        raise NotRegular(0)
    prev = [Fraction(0)] * (N + 1)
    cur = list(u.moments)
    betas = [cur[1] / cur[0]] if N >= 1 else []
    gammas = []
    k = 0
    while True:
        k += 1
        if 2 * k > N:
            break
        beta_prev = betas[k - 1]
        gamma_prev = gammas[k - 2] if k >= 2 else Fraction(0)
        nxt = [None] * (N + 1)
        for j in range(k, N - k + 1):
            nxt[j] = cur[j + 1] - beta_prev * cur[j] - gamma_prev * (prev[j] if prev[j] is not None else 0)
        if nxt[k] == 0:
            raise NotRegular(k)
        gammas.append(nxt[k] / cur[k - 1])
        if 2 * k + 1 <= N:
            betas.append(nxt[k + 1] / nxt[k] - cur[k] / cur[k - 1])
        prev, cur = cur, nxt
    return RecurrencePair(betas, gammas)
