"""Identity and property checks over a parameter grid, used by ``rileylo selftest``."""

from __future__ import annotations

import math
import random

import mpmath

from .chebyshev import cheb_eval, pell_identity_check
from .knots import DoubleTwistKnot
from .orderability import root_location_audit
from .riley import (abelian_slice_check, alpha_lambda_identity_check, degree_law_holds,
                    negative_n_form_check, oracle_agrees, riley_poly, trace_agrees)
from .su11 import meridian_power_check
from .reps import ReprPoint, build_rep


def _grid(k_max, n_max):
    return [DoubleTwistKnot(k, n) for k in range(1, k_max + 1)
            for n in range(-n_max, n_max + 1) if n]


def run_checks(k_max: int = 7, n_max: int = 4, samples: int = 200, seed: int = 0):
    """Yield (name, passed, detail) for every check."""
    rng = random.Random(seed)
    grid = _grid(k_max, n_max)

    bad = [j for j in range(-12, 13) if not pell_identity_check(j)]
    yield "pell identity j in [-12,12]", not bad, f"failures {bad}"

    bad = [k for k in range(1, max(k_max, 9) + 1)
           if not alpha_lambda_identity_check(DoubleTwistKnot(k, 1))]
    yield "alpha^2 - alpha*lambda + 1 factorization", not bad, f"failures k={bad}"

    bad = [str(K) for K in grid if not oracle_agrees(K)]
    yield f"oracle equivalence ({len(grid)} knots)", not bad, f"failures {bad}"

    bad = [str(K) for K in grid if not trace_agrees(K)]
    yield "trace of W equals lambda", not bad, f"failures {bad}"

    bad = [str(K) for K in grid if not degree_law_holds(K)]
    yield "degree law deg_y(phi) = (p-1)/2", not bad, f"failures {bad}"

    bad = [str(K) for K in grid if not riley_poly(K).phi_poly.x_parity_even()]
    yield "phi even in x", not bad, f"failures {bad}"

    bad = [str(K) for K in grid if K.k % 2 and not abelian_slice_check(K)]
    yield "phi(x, x^2-2) = 1 for odd k", not bad, f"failures {bad}"

    bad = [str(K) for K in grid if K.n < 0 and not negative_n_form_check(K)]
    yield "negative-n rewrite of phi", not bad, f"failures {bad}"

    worst = 0.0
    for _ in range(samples):
        z = rng.uniform(-2, 2)
        j = rng.randint(-12, 12)
        excess = abs(cheb_eval(j - 1, z)) - abs(j)
        worst = max(worst, excess)
    yield "|S_{j-1}(z)| <= |j| on |z| <= 2", worst <= 1e-12, f"max excess {worst:.3g}"

    worst = 0.0
    for _ in range(samples):
        k = rng.randint(-20, 20)
        t = rng.uniform(-10, 10)
        worst = max(worst, abs(math.sin(k * t)) - abs(k * math.sin(t)))
    yield "|sin kt| <= |k sin t|", worst <= 1e-12, f"max excess {worst:.3g}"

    worst = 0.0
    for j in range(-50, 51):
        theta = rng.uniform(0.1, math.pi - 0.1)
        z = 2 * math.cos(theta)
        ref = math.sin((j + 1) * theta) / math.sin(theta)
        worst = max(worst, abs(cheb_eval(j, z) - ref) / max(abs(ref), 1.0))
    yield "S_j(2cos t) = sin((j+1)t)/sin t", worst < 1e-10, f"max rel err {worst:.3g}"

    worst = mpmath.mpf(0)
    for r in range(2, 51):
        with mpmath.workprec(128):
            A, _ = build_rep(ReprPoint(mpmath.expjpi(mpmath.mpf(1) / r), 3))
            worst = max(worst, meridian_power_check(A, r))
    yield "A^r = -I for s = exp(i pi/r), r in [2,50]", worst < 1e-10, f"max {float(worst):.3g}"

    audits = [(DoubleTwistKnot(2, 1), x) for x in ("1.80", "1.90", "1.99")]
    audits.append((DoubleTwistKnot(4, 1), 2 * mpmath.cos(mpmath.pi / 9)))
    bad = [f"{K}@{x}" for K, x in audits if not root_location_audit(K, x).all_above_2]
    yield "root-location audit: every real root > 2", not bad, f"failures {bad}"
