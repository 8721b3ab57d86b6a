from fractions import Fraction as F

import pytest
from hypothesis import given

from identities import recurrence, rngs
from qlh.equation import Triplet
from qlh.errors import InsufficientOrder, NonInvertible
from qlh.forms import MomentForm, RecurrencePair, moments_from_recurrence
from qlh.poly import Poly, X, ha_poly
from qlh.structure import (
    associated_polys,
    band_holds,
    band_violations,
    expand_in_basis,
    mops_from_recurrence,
    structure_coeffs,
    structure_poly,
)
from qlh.transforms import brenke_fixture, brenke_recurrence, qclassical_fixture

CHEB = RecurrencePair([0] * 6, [1] * 6)


def test_mops_examples():
    m = mops_from_recurrence(CHEB, 3)
    assert m[2] == X**2 - 1
    assert m[3] == X**3 - 2 * X
    r = RecurrencePair([F(5, 2), 1], [3])
    assert mops_from_recurrence(r, 1)[1] == X - F(5, 2)


@given(rngs)
def test_mops_orthogonal(rng):
    r = recurrence(rng, 8)
    u = moments_from_recurrence(r, 16)
    m = mops_from_recurrence(r, 7)
    norms = r.norms()
    for i in range(8):
        for j in range(i + 1):
            val = u.pair(m[i] * m[j])
            assert val == (norms[i] if i == j else 0)


def test_associated_polys_examples():
    fx = brenke_fixture(3, 2, 40)
    m = mops_from_recurrence(fx.recurrence, 12)
    p1 = associated_polys(m, fx.form)
    assert p1[0] == Poly([1])
    assert p1[1] == X - fx.recurrence.beta(1)
    assert p1.polys == mops_from_recurrence(fx.recurrence.shifted(1), 11).polys


@given(rngs)
def test_associated_polys_match_shifted_recurrence(rng):
    r = recurrence(rng, 10)
    u = moments_from_recurrence(r, 20)
    m = mops_from_recurrence(r, 9)
    assert associated_polys(m, u).polys == mops_from_recurrence(r.shifted(1), 8).polys


def test_associated_polys_errors():
    m = mops_from_recurrence(CHEB, 4)
    with pytest.raises(NonInvertible):
        associated_polys(m, MomentForm([0, 1, 0, 1, 0]))
    with pytest.raises(InsufficientOrder):
        associated_polys(m, MomentForm([1, 0]))


@given(rngs)
def test_expand_round_trip(rng):
    r = recurrence(rng, 8)
    m = mops_from_recurrence(r, 7)
    f = Poly([F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rng.randint(1, 8))])
    coeffs = expand_in_basis(f, m)
    back = Poly()
    for v, c in enumerate(coeffs):
        back = back + m[v] * c
    assert back == f


def test_inner_product_oracle_for_coefficients():
    """lambda_{n,v} = <u, S P_v> / <u, P_v^2> independently of the expansion."""
    fx = brenke_fixture(3, 2, 60)
    u, t, r = fx.form, fx.triplet, fx.recurrence
    m = mops_from_recurrence(r, 14)
    p1 = associated_polys(m, u)
    norms = r.norms()
    for n in range(2, 10):
        s = structure_poly(t, m[n + 1], p1[n])
        coeffs = structure_coeffs(u, t, n, m)
        for v in range(int(s.degree) + 1):
            assert coeffs.get(v, 0) == u.pair(s * m[v]) / norms[v]


def test_structure_degree_bound():
    fx = brenke_fixture(3, 2, 60)
    d = max(fx.triplet.phi.degree, fx.triplet.b.degree)
    for n in range(2, 12):
        coeffs = structure_coeffs(fx.form, fx.triplet, n)
        assert max(coeffs) <= n + d


def test_brenke_band():
    fx = brenke_fixture(3, 2, 60)
    assert band_violations(fx.form, fx.triplet, 1, range(2, 21)) == []


def test_qclassical_band():
    fx = qclassical_fixture(2, 60)
    for n in range(1, 21):
        assert band_holds(structure_coeffs(fx.form, fx.triplet, n), n, 0)


def test_perturbed_gamma_breaks_band():
    fx = brenke_fixture(3, 2, 60)
    rec = brenke_recurrence(3, 2, 64)
    gammas = list(rec.gammas)
    gammas[2] += 1
    u = moments_from_recurrence(RecurrencePair(rec.betas, gammas), 60)
    assert band_violations(u, fx.triplet, 1, range(2, 21)) == list(range(3, 21))


def test_dilated_b_factor():
    """h_q(B P) is the product of the dilations; with B = 1 it is h_q P."""
    p = Poly([1, -2, 3])
    t = Triplet(X, Poly([0, 1]), Poly([1]), F(2))
    assert structure_poly(t, Poly([1]), p) == -ha_poly(p, 2)
