"""Numerical representations a -> A, b -> B of the knot group of J(k, 2n)."""

from __future__ import annotations

import os
from dataclasses import dataclass

import mpmath

from .knots import DoubleTwistKnot, group_word
from .mat2 import Mat2, word_product

__all__ = [
    "DEFAULT_PRECISION",
    "ReprPoint",
    "build_rep",
    "eval_word",
    "relation_residual",
    "commutator_distance",
    "identity",
]

DEFAULT_PRECISION = int(os.environ.get("RILEYLO_PRECISION", "128"))


@dataclass(frozen=True)
class ReprPoint:
    s: object
    y: object
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if self.s == 0:
            raise ValueError("s must be nonzero")


def identity() -> Mat2:
    return Mat2(mpmath.mpc(1), mpmath.mpc(0), mpmath.mpc(0), mpmath.mpc(1))


def build_rep(pt: ReprPoint):
    """A = [[s, 1], [0, 1/s]], B = [[s, 0], [2 - y, 1/s]] at the current precision.

    Entries are created under ``mpmath.workprec(pt.precision)``; callers that
    want to keep working at that precision should stay inside the same block.
    """
    with mpmath.workprec(pt.precision):
        s = mpmath.mpc(pt.s)
        y = mpmath.mpc(pt.y)
        si = 1 / s
        one, zero = mpmath.mpc(1), mpmath.mpc(0)
        A = Mat2(s, one, zero, si)
        B = Mat2(s, zero, 2 - y, si)
    return A, B


def eval_word(K: DoubleTwistKnot, A: Mat2, B: Mat2) -> Mat2:
    """W = image of the relator word w; inverses are adjugates."""
    return word_product(group_word(K), A, B, mpmath.mpc(1), mpmath.mpc(0))


def relation_residual(K: DoubleTwistKnot, pt: ReprPoint):
    """max |entry| of W^n A - B W^n at the point."""
    with mpmath.workprec(pt.precision):
        A, B = build_rep(pt)
        W = eval_word(K, A, B)
        Wn = W.power(K.n, mpmath.mpc(1), mpmath.mpc(0))
        return (Wn @ A - B @ Wn).max_abs()


def commutator_distance(A: Mat2, B: Mat2):
    """max |entry| of A B A^-1 B^-1 - I."""
    C = A @ B @ A.adj() @ B.adj()
    return (C - identity()).max_abs()
