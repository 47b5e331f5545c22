import math
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from rileylo.chebyshev import cheb_eval, cheb_pair, cheb_poly, pell_identity_check, poly_eval


def trig_S(j, z):
    """S_j(2cos t) = sin((j+1)t)/sin t, independent of the recurrence."""
    t = math.acos(z / 2)
    return math.sin((j + 1) * t) / math.sin(t)


def test_eval_examples():
    assert cheb_eval(1, 5) == 5
    assert cheb_eval(-1, 17) == 0
    assert cheb_eval(-1, 2.5 + 1j) == 0
    assert cheb_eval(1, 2) == 2
    assert cheb_eval(2, 2) == 3
    # z = 1 = 2cos(pi/3)
    assert round(trig_S(3, 1)) == -1
    assert cheb_eval(3, 1) == -1


@pytest.mark.parametrize("j", [0, 1, 2, 5, -1, -2, -3, -7])
def test_pair_is_consecutive(j):
    z = 1.3
    assert cheb_pair(j, z) == (cheb_eval(j, z), cheb_eval(j - 1, z))


def test_poly_examples():
    assert cheb_poly(0) == [1]
    assert cheb_poly(2) == [-1, 0, 1]
    assert cheb_poly(-2) == [-1]
    assert cheb_poly(-1) == []


@pytest.mark.parametrize("j", range(-10, 11))
def test_poly_matches_sympy_chebyshevu(j):
    # S_j(z) = U_j(z/2) for j >= 0 and S_{-j} = -S_{j-2}
    z = sympy.Symbol("z")
    if j >= 0:
        ref = sympy.chebyshevu(j, z / 2)
    elif j == -1:
        ref = sympy.Integer(0)
    else:
        ref = -sympy.chebyshevu(-j - 2, z / 2)
    coeffs = sympy.Poly(sympy.expand(ref), z).all_coeffs()[::-1] if ref != 0 else []
    assert cheb_poly(j) == [int(c) for c in coeffs]


@pytest.mark.parametrize("j", range(-12, 13))
def test_degree_and_eval_agree(j):
    p = cheb_poly(j)
    if j >= 0:
        assert len(p) - 1 == j
    for z in (-3, -1, 0, 2, 7):
        assert poly_eval(p, z) == cheb_eval(j, z)


def test_pell_examples():
    assert pell_identity_check(1)
    assert pell_identity_check(0)
    assert pell_identity_check(7)


@pytest.mark.parametrize("j", range(-12, 13))
def test_pell_identity_sympy(j):
    z = sympy.Symbol("z")
    a = sum(c * z**i for i, c in enumerate(cheb_poly(j)))
    b = sum(c * z**i for i, c in enumerate(cheb_poly(j - 1)))
    assert sympy.expand(a**2 - z * a * b + b**2) == 1
    assert pell_identity_check(j)


@pytest.mark.parametrize("j", range(-15, 16))
def test_values_at_plus_minus_two(j):
    assert cheb_eval(j - 1, 2) == j
    assert cheb_eval(j - 1, -2) == (-1) ** (j - 1) * j


def test_bound_on_interval_fixed_seed():
    rng = random.Random(1234)
    for _ in range(200):
        j = rng.randint(-12, 12)
        z = rng.uniform(-2, 2)
        assert abs(cheb_eval(j - 1, z)) <= abs(j) + 1e-12


def test_sine_bound_fixed_seed():
    rng = random.Random(99)
    for _ in range(200):
        k = rng.randint(-20, 20)
        t = rng.uniform(-20, 20)
        assert abs(math.sin(k * t)) <= abs(k * math.sin(t)) + 1e-12


@settings(max_examples=200, deadline=None)
@given(st.integers(-50, 50), st.floats(0.05, math.pi - 0.05))
def test_recurrence_matches_trig(j, theta):
    z = 2 * math.cos(theta)
    ref = math.sin((j + 1) * theta) / math.sin(theta)
    assert abs(cheb_eval(j, z) - ref) <= 1e-10 * max(1.0, abs(ref))


@settings(max_examples=100, deadline=None)
@given(st.integers(-12, 12), st.floats(-2, 2))
def test_bound_property(j, z):
    assert abs(cheb_eval(j - 1, z)) <= abs(j) + 1e-9
