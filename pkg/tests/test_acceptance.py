"""Acceptance criteria 1-8.  Each test prints one PASS/FAIL line in the summary.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import math
import random
import time

import mpmath

from rileylo.chebyshev import cheb_eval, pell_identity_check
from rileylo.knots import DoubleTwistKnot, normalize, schubert_form
from rileylo.orderability import certify, root_location_audit, threshold
from rileylo.reps import ReprPoint, build_rep
from rileylo.riley import (abelian_slice_check, alpha_lambda_identity_check, oracle_agrees,
                           riley_poly)
from rileylo.su11 import meridian_power_check

GRID = [DoubleTwistKnot(k, n) for k in range(1, 8) for n in range(-4, 5) if n]

# residual gates
RELATION_TOL = 1e-9
SU11_TOL = 1e-8
MERIDIAN_TOL = 1e-10
THRESHOLD_TOL = 0.01


def test_criterion_1_thresholds(criterion):
    with criterion(1, "thresholds of J(4,2) and J(4,4)") as note:
        t42 = threshold(normalize(4, 2))
        t44 = threshold(normalize(4, 4))
        note(f"J(4,2) {t42.threshold:.4f} r_min {t42.r_min}; J(4,4) {t44.threshold:.4f} r_min {t44.r_min}")
        exact = math.pi / math.acos(math.sqrt(7 / 8))
        assert abs(t42.threshold - exact) < 1e-12
        assert abs(t42.threshold - 8.69) <= THRESHOLD_TOL and t42.r_min == 9
        assert abs(t44.threshold - 12.43) <= THRESHOLD_TOL and t44.r_min == 13


def test_criterion_2_oracle_equivalence(criterion):
    with criterion(2, "closed-form phi equals matrix-word expansion") as note:
        t0 = time.perf_counter()
        bad = [str(K) for K in GRID if not oracle_agrees(K)]
        note(f"{len(GRID)} knots in {time.perf_counter() - t0:.2f}s")
        assert not bad, bad
        assert time.perf_counter() - t0 < 120


def test_criterion_3_identity_suite(criterion):
    with criterion(3, "Pell, alpha-lambda factorization, abelian slice") as note:
        assert all(pell_identity_check(j) for j in range(-12, 13))
        assert all(alpha_lambda_identity_check(DoubleTwistKnot(k, 1)) for k in range(1, 10))
        odd = [DoubleTwistKnot(k, n) for k in (1, 3, 5, 7) for n in range(-4, 5) if n]
        bad = [str(K) for K in odd if not abelian_slice_check(K)]
        note(f"{len(odd)} odd-k knots")
        assert not bad, bad


def test_criterion_4_degree_law(criterion):
    with criterion(4, "deg_y(phi) = (p-1)/2") as note:
        bad = []
        for K in GRID:
            # J(1,2) is the unknot: p = 2kn - 1 = 1, phi is constant
            p = 1 if K.is_trivial else schubert_form(K).p
            if riley_poly(K).deg_y != (p - 1) // 2:
                bad.append(str(K))
        note(f"{len(GRID)} knots")
        assert not bad, bad


CERT_CASES = [(4, 2, 9), (4, 4, 13), (2, 2, 7), (3, -2, 9), (3, 4, 15), (3, 6, 21)]


def test_criterion_5_certificates(criterion):
    with criterion(5, "end-to-end SU(1,1) certificates") as note:
        t0 = time.perf_counter()
        worst = 0.0
        for k, l, r in CERT_CASES:
            K = normalize(k, l)
            assert threshold(K).r_min == r, (K, threshold(K).r_min)
            c = certify(K, r)
            assert c.verdict == "certified", (K, r, c.notes)
            assert c.y > 2
            assert c.relation_residual < RELATION_TOL
            assert c.su11_residual < SU11_TOL
            assert c.meridian_residual < MERIDIAN_TOL
            assert tuple(c.hermitian_signature) == (1, 1)
            worst = max(worst, c.max_residual)
        elapsed = time.perf_counter() - t0
        note(f"6/6 certified in {elapsed:.2f}s, worst residual {worst:.1e}")
        assert elapsed < 10


def test_criterion_6_consistency(criterion):
    with criterion(6, "J(4,2) and J(3,-2) agree") as note:
        a, b = normalize(4, 2), normalize(3, -2)
        fa, fb = schubert_form(a), schubert_form(b)
        ta, tb = threshold(a), threshold(b)
        note(f"{fa} / {fb}, r_min {ta.r_min} / {tb.r_min}")
        assert (fa.p, fa.m_schubert) == (fb.p, fb.m_schubert) == (7, 2)
        assert ta.r_min == tb.r_min


def test_criterion_7_root_audit(criterion):
    with criterion(7, "every real root of phi(x, .) exceeds 2") as note:
        cases = [(normalize(2, 2), x) for x in ("1.80", "1.90", "1.99")]
        with mpmath.workprec(128):
            cases.append((normalize(4, 2), 2 * mpmath.cos(mpmath.pi / 9)))
        mins = []
        for K, x in cases:
            rep = root_location_audit(K, x)
            assert rep.roots and rep.all_above_2 and rep.roots_at_or_below_2 == 0, (K, x)
            mins.append(min(rep.roots))
        note("smallest roots " + ", ".join(f"{v:.6f}" for v in mins))


def test_criterion_8_property_suites(criterion):
    with criterion(8, "Chebyshev and sine bounds, meridian powers") as note:
        rng = random.Random(20240601)
        cheb = sine = 0.0
        for _ in range(200):
            j, z = rng.randint(-12, 12), rng.uniform(-2, 2)
            cheb = max(cheb, abs(cheb_eval(j - 1, z)) - abs(j))
        for _ in range(200):
            k, t = rng.randint(-20, 20), rng.uniform(-10, 10)
            sine = max(sine, abs(math.sin(k * t)) - abs(k * math.sin(t)))
        worst = mpmath.mpf(0)
        with mpmath.workprec(128):
            for r in range(2, 51):
                A, _ = build_rep(ReprPoint(mpmath.expjpi(mpmath.mpf(1) / r), 3))
                worst = max(worst, meridian_power_check(A, r))
        note(f"cheb excess {cheb:.1e}, sine excess {sine:.1e}, meridian {float(worst):.1e}")
        assert cheb <= 1e-12 and sine <= 1e-12
        assert worst < MERIDIAN_TOL
