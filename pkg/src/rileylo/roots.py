"""Real-root isolation for phi(x, .) at a fixed x.

Counting is exact: the coefficients of phi(x, y) in y are rationals once x^2
is rational.  They are cleared to integers, and a primitive pseudo-remainder
Sturm sequence counts distinct real roots in a half-open interval (a, b].  Numerical polishing at the true
(possibly irrational) x uses mpmath.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence, Tuple

import mpmath

from .exactpoly import IntPolyXY

__all__ = [
    "to_fraction",
    "y_coeffs_exact",
    "y_coeffs_mp",
    "sturm_chain",
    "count_roots",
    "cauchy_bound",
    "isolate",
    "bisect_refine",
    "newton_polish",
]

Poly = List[Fraction]


def to_fraction(v) -> Fraction:
    """Exact rational value of an int, float, decimal string, Fraction or mpf."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, mpmath.mpf):
        man, exp = v.man_exp
        return Fraction(man) * (Fraction(2) ** exp)
    if isinstance(v, float):
        # decimal literals like 1.8 are meant as 9/5
        return Fraction(repr(v))
    return Fraction(v)


def y_coeffs_exact(phi: IntPolyXY, x2: Fraction) -> Poly:
    """Coefficients (low -> high in y) of phi at x^2 = x2.  Requires even x-degrees."""
    if not phi.x_parity_even():
        raise ValueError("phi must contain only even powers of x")
    d = max(phi.deg_y(), 0)
    out = [Fraction(0)] * (d + 1)
    powers = {}
    for (a, b), c in phi.terms.items():
        h = a // 2
        if h not in powers:
            powers[h] = x2 ** h
        out[b] += c * powers[h]
    return _trim(out)


def y_coeffs_mp(phi: IntPolyXY, x):
    """Coefficients of phi(x, y) in y as mpmath numbers at the current precision."""
    d = max(phi.deg_y(), 0)
    out = [mpmath.mpf(0)] * (d + 1)
    for (a, b), c in phi.terms.items():
        out[b] += c * x ** a
    return out


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _eval(p: Sequence, t):
    acc = 0
    for c in reversed(p):
        acc = acc * t + c
    return acc


def _quo(a: Poly, b: Poly) -> Poly:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and a:
        q = a[-1] / lb
        shift = len(a) - 1 - db
        out[shift] = q
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a = _trim(a)
    return _trim(out)


def _primitive(p) -> List[int]:
    """Positive multiple of p with coprime integer coefficients (same signs everywhere)."""
    den = 1
    for c in p:
        c = Fraction(c)
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [Fraction(c).numerator * (den // Fraction(c).denominator) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def _prem(a: List[int], b: List[int]) -> List[int]:
    # lc(b)^(deg a - deg b + 1) * a mod b, integers only
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        lead, shift = a[-1], len(a) - 1 - db
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[shift + i] -= lead * c
        a = _trim(a)
    return a


def _int_deriv(p: List[int]) -> List[int]:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _raw_chain(p: List[int]) -> List[List[int]]:
    chain = [p, _primitive(_int_deriv(p))]
    while True:
        a, b = chain[-2], chain[-1]
        r = _prem(a, b)
        if not r:
            break
        # prem = lc(b)^e * rem with e = deg a - deg b + 1; Sturm wants -rem
        e = len(a) - len(b) + 1
        flip = -1 if (b[-1] < 0 and e % 2) else 1
        chain.append([-flip * c for c in _primitive(r)])
    return chain


def sturm_chain(p) -> List[List[int]]:
    """Sturm sequence of the square-free part of p, as primitive integer polynomials."""
    p = _primitive(_trim(p))
    chain = _raw_chain(p)
    # the last member is gcd(p, p') up to a constant
    if len(chain[-1]) > 1:
        g = chain[-1]
        q = _quo([Fraction(c) for c in p], [Fraction(c) for c in g])
        chain = _raw_chain(_primitive(q))
    return chain


def _sign_at(q: List[int], t: Fraction) -> int:
    # sign of v^d q(u/v), v > 0, in integer arithmetic
    u, v = t.numerator, t.denominator
    acc, vp = 0, 1
    for c in reversed(q):
        acc = acc * u + c * vp
        vp *= v
    return (acc > 0) - (acc < 0)


def _variations(chain, t) -> int:
    t = Fraction(t)
    signs = []
    for q in chain:
        sg = _sign_at(q, t)
        if sg:
            signs.append(sg > 0)
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_roots(chain, a, b) -> int:
    """Distinct real roots of chain[0] in (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


def cauchy_bound(p: Poly) -> Fraction:
    lead = abs(Fraction(p[-1]))
    return 1 + max((abs(Fraction(c)) / lead for c in p[:-1]), default=Fraction(0))


def isolate(p: Poly, lo=None, hi=None, chain=None) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], each holding exactly one distinct real root of p.

    Defaults cover every real root.  Endpoints are rational.
    """
    p = _trim(p)
    if len(p) <= 1:
        return []
    chain = chain or sturm_chain(p)
    bound = cauchy_bound(chain[0])
    lo = -bound if lo is None else Fraction(lo)
    hi = bound if hi is None else Fraction(hi)
    out = []
    stack = [(lo, hi, count_roots(chain, lo, hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        c = (a + b) / 2
        stack.append((c, b, count_roots(chain, c, b)))
        stack.append((a, c, count_roots(chain, a, c)))
    out.sort()
    return out


def bisect_refine(p: Poly, a: Fraction, b: Fraction, rel_width: float = 1e-12, chain=None):
    """Shrink an isolating interval (a, b] of a square-free p by exact bisection."""
    p = (chain or sturm_chain(p))[0]
    a, b = Fraction(a), Fraction(b)
    fb = _sign_at(p, b)
    if fb == 0:
        return b, b
    if not rel_width > 0:
        raise ValueError("rel_width must be positive")
    tol = Fraction(rel_width)
    while b - a > tol * max(abs(a), abs(b), Fraction(1, 10 ** 6)):
        c = (a + b) / 2
        fc = _sign_at(p, c)
        if fc == 0:
            return c, c
        if fc == fb:
            b = c
        else:
            a = c
    return a, b


def newton_polish(coeffs_mp, y0, lo, hi, steps: int = 30):
    """Newton iteration on a real polynomial, kept inside [lo, hi]."""
    dcoeffs = [i * c for i, c in enumerate(coeffs_mp)][1:]
    y = mpmath.mpf(y0)
    lo, hi = mpmath.mpf(lo), mpmath.mpf(hi)
    eps = mpmath.mpf(2) ** (-mpmath.mp.prec + 4)
    for _ in range(steps):
        f = _eval(coeffs_mp, y)
        df = _eval(dcoeffs, y)
        if df == 0:
            break
        step = f / df
        y_new = y - step
        if not lo <= y_new <= hi:
            break
        y = y_new
        if abs(step) <= eps * max(abs(y), 1):
            break
    return y
