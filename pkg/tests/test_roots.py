from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from rileylo.roots import bisect_refine, count_roots, isolate, sturm_chain

y = sympy.Symbol("y")


def from_roots(roots, lead=1):
    """Integer coefficients (low -> high) of lead * prod(y - r)."""
    p = sympy.Poly(lead * sympy.prod([y - r for r in roots]), y)
    return [int(c) for c in reversed(p.all_coeffs())]


def test_simple_counts():
    p = from_roots([-3, 1, 2, 5])
    chain = sturm_chain(p)
    assert count_roots(chain, -10, 10) == 4
    assert count_roots(chain, 1, 5) == 2          # (1, 5] holds 2 and 5
    assert count_roots(chain, Fraction(3, 2), 3) == 1


def test_repeated_roots_counted_once():
    p = from_roots([2, 2, 2, -1, -1, 7])
    assert count_roots(sturm_chain(p), -100, 100) == 3


def test_negative_leading_coefficient():
    p = from_roots([-2, 0, 3], lead=-5)
    assert [a < r <= b for (a, b), r in zip(isolate(p), [-2, 0, 3])] == [True] * 3


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=1, max_size=7),
       st.integers(-4, 4).filter(bool),
       st.lists(st.integers(1, 9), max_size=2))
def test_count_matches_sympy(roots, lead, complex_pairs):
    # add irreducible quadratics y^2 + c to exercise non-real roots
    expr = lead * sympy.prod([y - sympy.Rational(r, 3) for r in roots])
    for c in complex_pairs:
        expr *= y ** 2 + c
    coeffs = [Fraction(str(c)) for c in reversed(sympy.Poly(expr, y).all_coeffs())]
    expected = sorted(set(sympy.Rational(r, 3) for r in roots))
    intervals = isolate(coeffs)
    assert len(intervals) == len(expected)
    chain = sturm_chain(coeffs)
    for (a, b), r in zip(intervals, expected):
        assert a < r <= b
        a2, b2 = bisect_refine(coeffs, a, b, 1e-12, chain)
        assert a2 <= r <= b2 and b2 - a2 <= Fraction(1, 10 ** 9)


def test_bisect_tiny_width_terminates():
    p = [-2, 0, 1]          # y^2 - 2
    a, b = bisect_refine(p, Fraction(1), Fraction(2), 1e-30)
    assert a * a < 2 < b * b
    assert b - a <= Fraction(1e-30) * 2
