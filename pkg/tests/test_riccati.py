from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from identities import rngs
from qlh.equation import Triplet, compute_class, residual
from qlh.forms import MomentForm
from qlh.poly import Poly, X
from qlh.riccati import RiccatiData, cd_from_triplet, riccati_class, riccati_residual
from qlh.transforms import brenke_fixture, qclassical_fixture


@pytest.mark.parametrize("q,b", [(F(2), F(3)), (F(1, 3), F(5))])
def test_brenke_c_d(q, b):
    fx = brenke_fixture(b, q, 40)
    r = cd_from_triplet(fx.triplet, fx.form)
    k = 1 / (b * (q - 1))
    assert r.phi == X
    assert r.b == Poly()
    assert r.c == Poly([k * (b - 1) * q - 1, 0, k / q])
    assert r.d == X * (k / q)


def test_brenke_c_d_at_default_parameters():
    fx = brenke_fixture(3, 2, 40)
    r = cd_from_triplet(fx.triplet, fx.form)
    assert r.c == Poly([F(1, 3), 0, F(1, 6)])
    assert r.d == Poly([0, F(1, 6)])


@pytest.mark.parametrize("q", [F(2), F(1, 3)])
def test_riccati_residual_zero_on_fixtures(q):
    for fx in (brenke_fixture(3, q, 50), qclassical_fixture(q, 50)):
        r = cd_from_triplet(fx.triplet, fx.form)
        assert riccati_residual(fx.form, r, -30).is_zero()
        assert riccati_class(r, fx.form) == compute_class(fx.form, fx.triplet).class_value


def test_perturbed_moment_is_detected():
    fx = brenke_fixture(3, 2, 50)
    r = cd_from_triplet(fx.triplet, fx.form)
    m = list(fx.form.moments)
    m[6] += 1
    assert not riccati_residual(MomentForm(m), r, -30).is_zero()


def test_psi_round_trip_examples():
    fx = brenke_fixture(3, 2, 40)
    r = cd_from_triplet(fx.triplet, fx.form)
    assert r.psi == fx.triplet.psi
    assert r.triplet() == fx.triplet
    assert r.s == 1


@settings(max_examples=100)
@given(rngs)
def test_psi_round_trip_random(rng):
    q = rng.choice([F(2), F(3), F(-2), F(1, 3), F(-5, 2)])
    phi = Poly([F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(0, 3))] + [1])
    psi = Poly([F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(1, 4))])
    t = Triplet(phi, psi, Poly([F(rng.randint(-3, 3))]), q)
    u = MomentForm([1] + [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(10)])
    assert cd_from_triplet(t, u).psi == psi


def test_b_zero_means_no_quadratic_term():
    fx = qclassical_fixture(2, 30)
    t = fx.triplet
    r = cd_from_triplet(t, fx.form)
    r2 = cd_from_triplet(Triplet(t.phi, t.psi, Poly([0]), t.q), fx.form)
    assert r == r2


def test_riccati_class_of_strict_laguerre_hahn():
    from qlh.equation import pearson_solve

    t = Triplet(X**2, Poly([1, 2]), Poly([F(1, 2)]), F(2))
    u = pearson_solve(t, {}, 40)
    assert all(v == 0 for v in residual(u, t, 38))
    r = cd_from_triplet(t, u)
    assert riccati_residual(u, r, -25).is_zero()
    assert riccati_class(r, u) == compute_class(u, t).class_value


def test_riccati_data_scaled_divides():
    r = RiccatiData(X * 2, Poly([2]), Poly([4]), Poly([6]), F(2))
    s = r.scaled(2)
    assert (s.phi, s.b, s.c, s.d) == (X, Poly([1]), Poly([2]), Poly([3]))
