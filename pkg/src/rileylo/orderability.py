"""Covering-degree thresholds, root selection/audit and SU(1,1) certificates."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import mpmath

from .knots import CaseTag, DoubleTwistKnot, KnotClass, TrivialKnot, classify, normalize
from .reps import DEFAULT_PRECISION, ReprPoint, build_rep, relation_residual
from .riley import riley_poly
from .roots import (bisect_refine, cauchy_bound, isolate, newton_polish, sturm_chain,
                    count_roots, to_fraction, y_coeffs_exact, y_coeffs_mp)
from .su11 import (DegenerateRepresentation, InconclusiveSignature, conjugate_to_su11,
                   invariant_form, meridian_power_check, signature)

log = logging.getLogger(__name__)

__all__ = [
    "ThresholdReport",
    "Certificate",
    "AuditReport",
    "RootInconclusive",
    "TOL",
    "threshold",
    "x_bound",
    "root_select",
    "real_roots",
    "root_location_audit",
    "certify",
]

MAX_PRECISION = 1024
NON_ORDERABLE_NOTE = ("J(2m,-2n), m,n > 0: every cyclic branched cover is known to have "
                      "non-left-orderable fundamental group (Dabkowski-Przytycki-Togha); "
                      "flag taken from the literature, not computed")

# certificate gates
TOL = {
    "phi": 1e-10,
    "relation": 1e-9,
    "su11": 1e-8,
    "meridian": 1e-10,
}

CASE_LABELS = {
    CaseTag.EvenK_PosN: "even k, n > 0: r > pi/arccos(sqrt(1 - 1/(4mn)))",
    CaseTag.EvenK_NegN: "even k, n < 0: known non-left-orderable",
    CaseTag.OddK_PosN_EvenN: "odd k, n > 0 even: r > pi/arccos(sqrt(1 - 1/q))",
    CaseTag.OddK_PosN_OddN: "odd k, n > 1 odd: r > max(pi/arccos(sqrt(1 - 1/q)), 4m+2)",
    CaseTag.OddK_NegN_OddN: "odd k, n < 0 odd: r > pi/arccos(sqrt(1 - 1/q))",
    CaseTag.OddK_NegN_EvenN: "odd k, n < 0 even: r > max(pi/arccos(sqrt(1 - 1/q)), 4m+2)",
}


class RootInconclusive(ArithmeticError):
    pass


@dataclass
class ThresholdReport:
    knot: DoubleTwistKnot
    klass: KnotClass
    q_or_4mn: Optional[float]
    threshold: Optional[float]
    r_min: Optional[int]
    known_non_orderable: bool
    case_label: str = ""
    notes: List[str] = field(default_factory=list)
    threshold_mp: object = None


def _q_value(m: int, n: int):
    n = abs(n)
    return 2 * n * n + 2 * n * mpmath.sqrt(4 * m * (m + 1) + n * n)


def threshold(K: DoubleTwistKnot, precision: int = DEFAULT_PRECISION) -> ThresholdReport:
    """Smallest covering degree range guaranteed by the case formulas.

    r_min is the least integer strictly above the threshold.
    """
    if K.is_trivial:
        raise TrivialKnot(f"{K} is trivial")
    K2 = normalize(K.k, K.l)
    K = DoubleTwistKnot(K2.k, K2.n, K.mirrored or K2.mirrored)
    klass = classify(K)
    if klass.known_non_orderable:
        return ThresholdReport(K, klass, None, None, None, True,
                               CASE_LABELS[klass.tag], [NON_ORDERABLE_NOTE])
    m, n = klass.m, K.n
    notes = []
    with mpmath.workprec(precision):
        if klass.tag is CaseTag.EvenK_PosN:
            Q = mpmath.mpf(4 * m * n)
        else:
            Q = _q_value(m, n)
        t = mpmath.pi / mpmath.acos(mpmath.sqrt(1 - 1 / Q))
        if klass.tag in (CaseTag.OddK_PosN_OddN, CaseTag.OddK_NegN_EvenN):
            if 4 * m + 2 > t:
                notes.append(f"4m+2 = {4 * m + 2} dominates")
            t = max(t, mpmath.mpf(4 * m + 2))
        nearest = int(mpmath.nint(t))
        if abs(t - nearest) < mpmath.mpf("1e-9"):
            r_min = nearest + 1
            notes.append(f"threshold within 1e-9 of {nearest}; strict inequality excludes it")
        else:
            r_min = int(mpmath.floor(t)) + 1
        return ThresholdReport(K, klass, float(Q), float(t), r_min, False,
                               CASE_LABELS[klass.tag], notes, t)


def x_bound(K: DoubleTwistKnot, precision: int = DEFAULT_PRECISION):
    """|x| above this value forces every real root y of phi(x, .) above 2."""
    m, n = K.k // 2, abs(K.n)
    with mpmath.workprec(precision):
        Q = mpmath.mpf(4 * m * n) if K.k % 2 == 0 else _q_value(m, n)
        return 2 * mpmath.sqrt(1 - 1 / Q)


def real_roots(K: DoubleTwistKnot, x, lo=None, hi=None):
    """Isolating intervals for the real roots of phi(x, .), x taken as an exact rational."""
    phi = riley_poly(K).phi_poly
    coeffs = y_coeffs_exact(phi, to_fraction(x) ** 2)
    return coeffs, isolate(coeffs, lo, hi)


def root_select(K: DoubleTwistKnot, r: int, precision: int = DEFAULT_PRECISION):
    """Smallest real root y > 2 of phi(2cos(pi/r), y), or None.

    Isolation runs exactly on the rational x^2 nearest the working-precision
    value of 4cos^2(pi/r); the chosen root is then polished by Newton's method
    on the mpmath coefficients.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    phi = riley_poly(K).phi_poly
    with mpmath.workprec(precision):
        x = 2 * mpmath.cos(mpmath.pi / r)
        coeffs = y_coeffs_exact(phi, to_fraction(x) ** 2)
        if len(coeffs) <= 1:
            return None
        bound = max(cauchy_bound(coeffs), Fraction(3))
        chain = sturm_chain(coeffs)
        intervals = isolate(coeffs, Fraction(2), bound, chain)
        if not intervals:
            return None
        a, b = intervals[0]
        a, b = bisect_refine(coeffs, a, b, 1e-12, chain)
        if a == b:
            y0 = mpmath.mpf(a.numerator) / a.denominator
            return newton_polish(y_coeffs_mp(phi, x), y0, y0 - 1e-12 * abs(y0), y0 + 1e-12 * abs(y0))
        lo = mpmath.mpf(a.numerator) / a.denominator
        hi = mpmath.mpf(b.numerator) / b.denominator
        pad = (hi - lo)
        y = newton_polish(y_coeffs_mp(phi, x), (lo + hi) / 2, lo - pad, hi + pad)
        if not lo - pad <= y <= hi + pad:
            raise RootInconclusive(f"Newton left the isolating interval for {K}, r={r}")
        return y


@dataclass
class AuditReport:
    knot: DoubleTwistKnot
    x: Fraction
    bound: float
    roots: List[float]
    margins: List[float]
    roots_at_or_below_2: int
    all_above_2: bool


def root_location_audit(K: DoubleTwistKnot, x, margin: float = 1e-9) -> AuditReport:
    """Complete isolation of the real roots of phi(x, .) and a check that all exceed 2.

    ``x`` is used as an exact rational (floats by their decimal repr).
    """
    xq = to_fraction(x)
    bound = x_bound(K)
    if abs(xq) > 2:
        raise ValueError("|x| must be at most 2")
    if not abs(mpmath.mpf(xq.numerator) / xq.denominator) > bound + margin:
        raise ValueError(f"|x| = {float(xq)} is not above the bound {float(bound):.12f}")
    coeffs, intervals = real_roots(K, xq)
    chain = sturm_chain(coeffs)
    if len(coeffs) <= 1:
        below = 0
    else:
        B = cauchy_bound(chain[0])
        below = count_roots(chain, -B - 1, Fraction(2))
    roots = []
    for a, b in intervals:
        a, b = bisect_refine(coeffs, a, b, 1e-14)
        roots.append(float((a + b) / 2))
    margins = [y - 2 for y in roots]
    return AuditReport(K, xq, float(bound), roots, margins, below,
                       below == 0 and all(m_ > 0 for m_ in margins))


@dataclass
class Certificate:
    knot: DoubleTwistKnot
    r: int
    verdict: str
    x: Optional[float] = None
    y: object = None
    phi_residual: Optional[float] = None
    relation_residual: Optional[float] = None
    hermitian_signature: Optional[tuple] = None
    su11_residual: Optional[float] = None
    meridian_residual: Optional[float] = None
    precision: int = DEFAULT_PRECISION
    threshold: Optional[ThresholdReport] = None
    notes: List[str] = field(default_factory=list)

    @property
    def max_residual(self):
        vals = [v for v in (self.phi_residual, self.relation_residual,
                            self.su11_residual, self.meridian_residual) if v is not None]
        return max(vals) if vals else None


def _certify_once(K, r, precision, cert):
    phi = riley_poly(K).phi_poly
    y = root_select(K, r, precision)
    if y is None:
        cert.verdict = "no_certificate"
        cert.notes.append("phi(2cos(pi/r), y) has no real root y > 2")
        return cert
    with mpmath.workprec(precision):
        x = 2 * mpmath.cos(mpmath.pi / r)
        s = mpmath.expjpi(mpmath.mpf(1) / r)
        cert.x = float(x)
        cert.y = y
        coeffs = y_coeffs_mp(phi, x)
        val = mpmath.mpf(0)
        for c in reversed(coeffs):
            val = val * y + c
        cert.phi_residual = float(abs(val))
        pt = ReprPoint(s, y, precision)
        cert.relation_residual = float(relation_residual(K, pt))
        A, B = build_rep(pt)
        try:
            form = invariant_form(A, B, precision)
            sig = signature(form)
        except (DegenerateRepresentation, InconclusiveSignature) as exc:
            cert.verdict = "inconclusive"
            cert.notes.append(f"invariant form: {exc}")
            return cert
        cert.hermitian_signature = sig
        if sig != (1, 1):
            cert.verdict = "no_certificate"
            cert.notes.append(f"invariant form has signature {sig}; image lies in SU(2)")
            return cert
        wit = conjugate_to_su11(A, B, form)
        cert.su11_residual = float(wit.residual)
        cert.meridian_residual = float(meridian_power_check(wit.A, r))
    gates = [
        y > 2,
        cert.phi_residual < TOL["phi"],
        cert.relation_residual < TOL["relation"],
        cert.su11_residual < TOL["su11"],
        cert.meridian_residual < TOL["meridian"],
    ]
    cert.verdict = "certified" if all(gates) else "inconclusive"
    return cert


def certify(K: DoubleTwistKnot, r: int, precision: int = DEFAULT_PRECISION) -> Certificate:
    """Numerical witness for a non-abelian SU(1,1) representation with rho(a)^r = -I.

    Never asserts non-left-orderability: a missing witness only means this
    pipeline found none.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    report = threshold(K)
    K = report.knot
    cert = Certificate(K, r, "no_certificate", precision=precision, threshold=report)
    if report.known_non_orderable:
        cert.notes.append(NON_ORDERABLE_NOTE)
        return cert
    if r <= report.threshold:
        cert.notes.append(f"r = {r} is not above the threshold {report.threshold:.6f}")
    prec = precision
    while True:
        attempt = Certificate(K, r, "no_certificate", precision=prec, threshold=report,
                              notes=list(cert.notes))
        try:
            attempt = _certify_once(K, r, prec, attempt)
        except (RootInconclusive, ZeroDivisionError) as exc:
            attempt.verdict = "inconclusive"
            attempt.notes.append(str(exc))
        if attempt.verdict != "inconclusive" or prec * 2 > MAX_PRECISION:
            return attempt
        log.info("%s r=%d inconclusive at %d bits, retrying at %d", K, r, prec, prec * 2)
        prec *= 2
