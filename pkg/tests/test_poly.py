import random
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given

from identities import id_theta_commute, id_theta_difference, id_dilated_hahn_poly, id_hahn_dilated_poly, id_hahn_leibniz_poly, poly, rngs
from qlh.errors import DivisionByZeroPoly, ZeroDilation
from qlh.poly import Poly, X, deflate_rational, ha_poly, hq_poly, poly_divrem, rational_roots, theta_c


def test_degree_and_lead():
    assert Poly().degree == float("-inf")
    assert Poly([0, 0]) == Poly()
    assert Poly([1, 2, 3]).degree == 2
    assert Poly([1, 2, 3]).lead == 3


def test_str():
    assert str(Poly([F(1, 2), -1, 0, 1])) == "x^3 - x + 1/2"
    assert str(Poly([0, F(-1, 3)])) == "(-1/3)*x"
    assert str(Poly()) == "0"


def test_hq_poly_examples():
    assert hq_poly(Poly([5]), 2) == Poly()
    assert hq_poly(X**3, 2) == Poly([0, 0, 7])
    q = F(1, 3)
    assert hq_poly(X**2 + X, q) == Poly([1, q + 1])


def test_ha_poly_examples():
    f = Poly([1, 2, 3])
    assert ha_poly(f, 1) == f
    assert ha_poly(X**2, 3) == Poly([0, 0, 9])
    assert ha_poly(ha_poly(f, 2), F(1, 2)) == f
    with pytest.raises(ZeroDilation):
        ha_poly(f, 0)


def test_theta_examples():
    assert theta_c(Poly([4]), 3) == Poly()
    c = F(2, 5)
    assert theta_c(X**2, c) == X + c
    assert theta_c(X**3, 0) == X**2


def test_divrem_examples():
    assert poly_divrem(X**2 - 1, X - 1) == (X + 1, Poly())
    assert poly_divrem(X**2, X + 1) == (X - 1, Poly([1]))
    assert poly_divrem(Poly([5]), X) == (Poly(), Poly([5]))
    with pytest.raises(DivisionByZeroPoly):
        poly_divrem(X, Poly())


@given(rngs)
def test_divrem_round_trip(rng):
    f = poly(rng, 6)
    g = poly(rng, 3)
    if not g:
        g = X
    quo, rem = poly_divrem(f, g)
    assert quo * g + rem == f
    assert rem.degree < g.degree


def test_rational_roots_examples():
    assert rational_roots(X**2 - 1) == [(-1, 1), (1, 1)]
    assert rational_roots(X**2 + 1) == []
    assert rational_roots(X**3 * (X**2 - F(1, 4))) == [(F(-1, 2), 1), (0, 3), (F(1, 2), 1)]


def _sympy_roots(f: Poly) -> list:
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(f.coeffs))
    found = sympy.roots(sympy.Poly(expr, x), filter="Q")
    return sorted((F(int(r.p), int(r.q)), m) for r, m in found.items())


@given(rngs)
def test_rational_roots_against_sympy(rng):
    roots = [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(0, 4))]
    f = Poly.from_roots(roots, lead=F(rng.randint(1, 5), rng.randint(1, 3)))
    f = f * (X**2 + rng.randint(1, 3)) if rng.random() < 0.5 else f
    if f.degree < 1:
        f = f * (X - 1)
    assert rational_roots(f) == _sympy_roots(f)


def test_deflate_rational():
    assert deflate_rational(X * (X**2 - 2) * (X - F(1, 2))) == X**2 - 2
    assert deflate_rational(Poly([-1, 0, 1]) * 3) == Poly([1])


@given(rngs)
def test_theta_difference_and_commutation(rng):
    id_theta_difference(rng)
    id_theta_commute(rng)


@given(rngs)
def test_hahn_and_dilation_on_polys(rng):
    id_dilated_hahn_poly(rng)
    id_hahn_dilated_poly(rng)


@given(rngs)
def test_hahn_leibniz_poly(rng):
    id_hahn_leibniz_poly(rng)


def test_identity_check_catches_wrong_operator():
    """The product rule fails if the dilation is applied to the wrong factor."""
    rng = random.Random(3)
    f, g, q = poly(rng) + X**2, poly(rng) + X, F(2)
    assert hq_poly(f * g, q) != f * hq_poly(g, q) + g * hq_poly(f, q)
