from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from identities import rngs
from qlh.equation import (
    Triplet,
    compute_class,
    first_nonzero,
    multiply_chi,
    parity_check,
    pearson_solve,
    reduce_once,
    residual,
    satisfies,
    shift_triplet,
)
from qlh.errors import InconsistentSeeds, InsufficientOrder, MissingSeed, NotARoot, ZeroDilation
from qlh.forms import MomentForm, dirac, ha_form, recurrence_from_moments
from qlh.poly import Poly, X
from qlh.transforms import brenke_fixture, qclassical_fixture

Q, B = F(2), F(3)
BRENKE = brenke_fixture(B, Q, 60)
QCL = qclassical_fixture(Q, 40)


def test_triplet_must_be_monic():
    with pytest.raises(ValueError):
        Triplet(2 * X, Poly(), Poly(), Q)
    t = Triplet.normalized(2 * X, Poly([4]), Poly([2]), Q)
    assert (t.phi, t.psi, t.b) == (X, Poly([2]), Poly([1]))


def test_class_bound():
    assert BRENKE.triplet.s == 1
    assert QCL.triplet.s == 0
    assert Triplet(X**4, Poly([0, 1]), X**5, Q).s == 3


def test_brenke_residual_vanishes():
    assert satisfies(BRENKE.form, BRENKE.triplet, 40)


def test_residual_needs_enough_moments():
    with pytest.raises(InsufficientOrder):
        residual(BRENKE.form, BRENKE.triplet, 59)


def test_dirac_zero_residual():
    t = Triplet(X, X, Poly(), Q)
    assert all(v == 0 for v in residual(dirac(0, 20), t, 18))
    c = F(-2, 7)
    t = Triplet(X - c, X - c, Poly(), Q)
    assert all(v == 0 for v in residual(dirac(c, 20), t, 18))


def test_phi_only_residual_is_not_zero():
    u = MomentForm([1, 0, 1, 0, 2, 0, 5, 0, 14])
    values = residual(u, Triplet(X, Poly(), Poly(), Q), 7)
    assert values[2] == -3
    assert all(values[n] == -F(2**n - 1) * u[n] for n in range(8))


def test_multiply_chi_examples():
    t = BRENKE.triplet
    assert multiply_chi(t, Poly([1])) == t
    p = Poly([1, 2, 3])
    t = Triplet(X, p, Poly(), Q)
    out = multiply_chi(t, X)
    assert out.phi == X**2
    assert out.psi == (X * p - X) / Q


def test_multiply_chi_keeps_residual_zero():
    t = multiply_chi(BRENKE.triplet, X + 1)
    assert satisfies(BRENKE.form, t, 40)


def test_reduce_once_requires_root():
    with pytest.raises(NotARoot):
        reduce_once(BRENKE.form, BRENKE.triplet, 1)


def test_qclassical_does_not_reduce():
    red = reduce_once(QCL.form, QCL.triplet, 0)
    assert not red.succeeded
    assert (red.r_cq, red.b_cq, red.bracket) != (0, 0, 0)


@pytest.mark.parametrize("c", [F(1), F(-1, 2), F(3)])
def test_reduce_undoes_multiply_chi(c):
    t = BRENKE.triplet
    inflated = multiply_chi(t, X - c)
    red = reduce_once(BRENKE.form, inflated, c / Q)
    assert red.succeeded
    assert red.triplet == t


def test_compute_class_examples():
    rep = compute_class(BRENKE.form, BRENKE.triplet)
    assert rep.class_value == 1
    assert rep.label == "q-semiclassical"
    assert not rep.is_upper_bound
    rep = compute_class(QCL.form, QCL.triplet)
    assert rep.class_value == 0
    assert rep.label == "q-classical"


def test_irrational_factor_gives_upper_bound():
    rep = compute_class(BRENKE.form, multiply_chi(BRENKE.triplet, X**2 - 2))
    assert rep.is_upper_bound
    assert rep.unreduced_nonrational_factors == [X**2 - F(1, 2)]
    assert rep.class_value == 3


@settings(max_examples=25)
@given(rngs)
def test_class_invariant_under_rational_chi(rng):
    roots = [F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, 2))]
    chi = Poly.from_roots(roots, lead=rng.randint(1, 4))
    for fx in (BRENKE, QCL):
        base = compute_class(fx.form, fx.triplet).class_value
        assert compute_class(fx.form, multiply_chi(fx.triplet, chi)).class_value == base


def test_parity():
    rep = compute_class(BRENKE.form, BRENKE.triplet)
    assert parity_check(rep.minimal_triplet, rep.class_value)
    assert not parity_check(Triplet(X + 1, Poly([0, 0, 1]), Poly(), Q), 1)


def test_pearson_solve_examples():
    u = pearson_solve(QCL.triplet, {}, 20)
    assert list(u.moments) == [Q ** (n * (n - 1) // 2) for n in range(21)]
    u = pearson_solve(BRENKE.triplet, {1: 0}, 20)
    assert u == BRENKE.form.truncate(20)
    poch = F(1)
    for n in range(11):
        assert u[2 * n] == Q ** (2 * n) * poch
        poch *= 1 - B * Q ** (2 * n)


def test_pearson_solve_errors():
    with pytest.raises(MissingSeed) as e:
        pearson_solve(BRENKE.triplet, {}, 10)
    assert e.value.n == 1
    with pytest.raises(InconsistentSeeds):
        pearson_solve(QCL.triplet, {2: 5}, 10)
    with pytest.raises(ValueError):
        pearson_solve(QCL.triplet, {0: 2}, 10)


def test_pearson_solve_strict_laguerre_hahn():
    """A nonzero B: the solver and the residual agree."""
    t = Triplet(X**2, Poly([1, 2]), Poly([F(1, 2)]), Q)
    u = pearson_solve(t, {}, 20)
    assert first_nonzero(residual(u, t, 18)) is None


def test_shift_covariance():
    u, t, r = BRENKE.form, BRENKE.triplet, BRENKE.recurrence
    assert shift_triplet(t, 1) == t
    a = F(2)
    ua = ha_form(u, 1 / a)
    assert satisfies(ua, shift_triplet(t, a), 40)
    ra = recurrence_from_moments(ua)
    assert ra.gamma(1) == r.gamma(1) / 4
    assert ra.gammas[:10] == r.rescaled(a).gammas[:10]
    with pytest.raises(ZeroDilation):
        shift_triplet(t, 0)
