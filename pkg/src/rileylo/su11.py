"""Invariant Hermitian forms and conjugation into SU(1,1).

A representation with real traces preserves a Hermitian form H, i.e.
M* H M = H for every image M.  For an irreducible representation H is unique
up to a real scalar; signature (1,1) means the image is conjugate into
SU(1,1), a definite form means SU(2).
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .mat2 import Mat2

__all__ = [
    "DegenerateRepresentation",
    "InconclusiveSignature",
    "HermitianForm",
    "SU11Witness",
    "invariant_form",
    "signature",
    "conjugate_to_su11",
    "su11_membership_residual",
    "meridian_power_check",
]

KERNEL_SMALL = mpmath.mpf("1e-10")
KERNEL_GAP = mpmath.mpf("1e-6")
EIG_TOL = mpmath.mpf("1e-10")


class DegenerateRepresentation(ArithmeticError):
    """The invariant-form kernel is not one-dimensional."""


class InconclusiveSignature(ArithmeticError):
    """An eigenvalue of H cannot be separated from zero."""


@dataclass(frozen=True)
class HermitianForm:
    H: Mat2
    precision: int
    singular_values: tuple = ()


@dataclass(frozen=True)
class SU11Witness:
    P: Mat2
    A: Mat2
    B: Mat2
    residual: object


def _conjT(M: Mat2) -> Mat2:
    c = mpmath.conj
    return Mat2(c(M.a), c(M.c), c(M.b), c(M.d))


_BASIS = (
    ((1, 0), (0, 0)),
    ((0, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((0, 1j), (-1j, 0)),
)


def _basis_mats():
    return [Mat2(*(mpmath.mpc(v) for v in (r[0][0], r[0][1], r[1][0], r[1][1]))) for r in _BASIS]


def _hermitian_coords(M: Mat2):
    return [mpmath.re(M.a), mpmath.re(M.d), mpmath.re(M.b), mpmath.im(M.b)]


def invariant_form(A: Mat2, B: Mat2, precision: int = 128) -> HermitianForm:
    """Solve M* H M = H for M in {A, B} on the four real parameters of H.

    Raises DegenerateRepresentation unless the solution space is a single
    real line (smallest singular value < 1e-10 * largest, next one > 1e-6 * largest).
    """
    with mpmath.workprec(precision):
        basis = _basis_mats()
        rows = []
        for M in (A, B):
            Ms = _conjT(M)
            cols = [_hermitian_coords(Ms @ E @ M - E) for E in basis]
            for i in range(4):
                rows.append([cols[j][i] for j in range(4)])
        L = mpmath.matrix(rows)
        _, S, V = mpmath.svd_r(L)
        sv = sorted(((S[i], i) for i in range(4)), key=lambda t: t[0])
        largest = sv[-1][0]
        if largest == 0:
            raise DegenerateRepresentation("both generators act trivially on forms")
        if not (sv[0][0] < KERNEL_SMALL * largest and sv[1][0] > KERNEL_GAP * largest):
            raise DegenerateRepresentation(
                "invariant Hermitian forms do not form a single line "
                f"(singular values {[mpmath.nstr(v, 5) for v, _ in sv]})")
        idx = sv[0][1]
        h = [V[idx, j] for j in range(4)]
        norm = mpmath.sqrt(h[0] ** 2 + h[1] ** 2 + 2 * (h[2] ** 2 + h[3] ** 2))
        # fix the real scale's sign: first nonzero diagonal entry positive
        lead = h[0] if abs(h[0]) > KERNEL_GAP * norm else h[1]
        if lead < 0:
            norm = -norm
        h = [v / norm for v in h]
        off = mpmath.mpc(h[2], h[3])
        H = Mat2(mpmath.mpc(h[0]), off, mpmath.conj(off), mpmath.mpc(h[1]))
        return HermitianForm(H, precision, tuple(v for v, _ in sv))


def _eig(form: HermitianForm):
    with mpmath.workprec(form.precision):
        H = form.H
        M = mpmath.matrix([[H.a, H.b], [H.c, H.d]])
        E, Q = mpmath.eighe(M)
        return [mpmath.re(E[0]), mpmath.re(E[1])], Q


def signature(form: HermitianForm):
    """(number of positive eigenvalues, number of negative eigenvalues)."""
    ev, _ = _eig(form)
    if any(abs(e) < EIG_TOL for e in ev):
        raise InconclusiveSignature(f"eigenvalues {[mpmath.nstr(e, 5) for e in ev]}")
    pos = sum(1 for e in ev if e > 0)
    return pos, 2 - pos


def su11_membership_residual(M: Mat2):
    """Deviation of M from the pattern [[u, v], [conj v, conj u]] with |u|^2 - |v|^2 = 1."""
    u, v = M.a, M.b
    return max(abs(M.d - mpmath.conj(u)), abs(M.c - mpmath.conj(v)),
               abs(abs(u) ** 2 - abs(v) ** 2 - 1))


def conjugate_to_su11(A: Mat2, B: Mat2, form: HermitianForm) -> SU11Witness:
    """Conjugate by P with H = P* diag(1, -1) P, so P M P^-1 lies in SU(1,1)."""
    if signature(form) != (1, 1):
        raise ValueError("form is not of signature (1,1)")
    with mpmath.workprec(form.precision):
        ev, Q = _eig(form)
        order = [0, 1] if ev[0] > 0 else [1, 0]
        # columns of Q are eigenvectors; U holds them in (positive, negative) order
        cols = []
        for j in order:
            v0, v1 = Q[0, j], Q[1, j]
            # eigenvector phase: largest component real positive
            big = v0 if abs(v0) >= abs(v1) else v1
            ph = mpmath.conj(big) / abs(big)
            cols.append((v0 * ph, v1 * ph))
        U = Mat2(cols[0][0], cols[1][0], cols[0][1], cols[1][1])
        r1 = mpmath.sqrt(abs(ev[order[0]]))
        r2 = mpmath.sqrt(abs(ev[order[1]]))
        Ustar = _conjT(U)
        P = Mat2(r1, 0, 0, r2) @ Ustar
        P_inv = U @ Mat2(1 / r1, 0, 0, 1 / r2)
        # rescale into SL(2, C); the conjugated images do not change
        c = mpmath.sqrt(P.det())
        P = Mat2(*(e / c for e in P.entries()))
        P_inv = Mat2(*(e * c for e in P_inv.entries()))
        A2 = P @ A @ P_inv
        B2 = P @ B @ P_inv
        res = max(su11_membership_residual(A2), su11_membership_residual(B2))
        return SU11Witness(P, A2, B2, res)


def meridian_power_check(A: Mat2, r: int):
    """min(max|A^r - I|, max|A^r + I|), with A^r by repeated multiplication."""
    if r < 1:
        raise ValueError("r must be positive")
    P = A
    for _ in range(r - 1):
        P = P @ A
    one, zero = mpmath.mpc(1), mpmath.mpc(0)
    I = Mat2(one, zero, zero, one)
    return min((P - I).max_abs(), (P + I).max_abs())
