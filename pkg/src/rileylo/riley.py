"""Riley polynomial of J(k, 2n) in closed form, with a matrix-word oracle.

The closed form composes Chebyshev polynomials with the trace lambda of the
relator word and the auxiliary polynomial alpha.  The oracle multiplies the
symbolic matrices A, B out exactly over Z[s, 1/s, y] and reads the Riley
polynomial off the (1,2) entry of W^n A - B W^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chebyshev import cheb_eval, cheb_pair
from .exactpoly import IntPolyXY, LaurentBivar, compose_y, substitute_x_eq_s_plus_sinv
from .knots import DoubleTwistKnot, group_word, schubert_form
from .mat2 import Mat2, word_product

__all__ = [
    "RileyData",
    "lambda_poly",
    "alpha_poly",
    "riley_poly",
    "riley_oracle",
    "oracle_difference",
    "oracle_trace",
    "alpha_lambda_identity_check",
    "negative_n_form_check",
    "abelian_slice_check",
    "degree_law_holds",
    "oracle_agrees",
    "trace_agrees",
]

X = IntPolyXY.x()
Y = IntPolyXY.y()
ONE = IntPolyXY.const(1)


def _Sy(j):
    return ONE * cheb_eval(j, Y)


def _check(K: DoubleTwistKnot):
    if K.k <= 0 or K.n == 0:
        raise ValueError(f"J({K.k},{K.l}) needs k > 0 and n != 0")


@dataclass(frozen=True)
class RileyData:
    knot: DoubleTwistKnot
    lambda_poly: IntPolyXY
    alpha_poly: IntPolyXY
    phi_poly: IntPolyXY

    @property
    def deg_y(self) -> int:
        return self.phi_poly.deg_y()


def lambda_poly(K: DoubleTwistKnot) -> IntPolyXY:
    """Trace of W as a polynomial in x = tr A and y."""
    _check(K)
    m = K.k // 2
    t = Y + 2 - X * X
    if K.k % 2 == 0:
        s = _Sy(m - 1)
        return 2 + (Y - 2) * t * s * s
    return X * X - Y - (Y - 2) * t * _Sy(m) * _Sy(m - 1)


def alpha_poly(K: DoubleTwistKnot) -> IntPolyXY:
    _check(K)
    m = K.k // 2
    t = Y + 2 - X * X
    if K.k % 2 == 0:
        return 1 - t * _Sy(m - 1) * (_Sy(m - 1) - _Sy(m - 2))
    return 1 + t * _Sy(m - 1) * (_Sy(m) - _Sy(m - 1))


@lru_cache(maxsize=256)
def riley_poly(K: DoubleTwistKnot) -> RileyData:
    """phi = S_{n-1}(lambda) alpha - S_{n-2}(lambda), exactly.

    Negative n goes through negative-index Chebyshev polynomials.
    """
    K = DoubleTwistKnot(K.k, K.n)
    lam = lambda_poly(K)
    alpha = alpha_poly(K)
    s1, s2 = cheb_pair(K.n - 1, lam)
    phi = ONE * s1 * alpha - ONE * s2
    return RileyData(K, lam, alpha, phi)


# -- oracle ---------------------------------------------------------------------

_L1 = LaurentBivar.const(1)
_L0 = LaurentBivar()


def _symbolic_generators():
    s, si, y = LaurentBivar.s(), LaurentBivar.s_inv(), LaurentBivar.y()
    A = Mat2(s, _L1, _L0, si)
    B = Mat2(s, _L0, 2 - y, si)
    return A, B


@lru_cache(maxsize=128)
def _oracle_W(k: int):
    A, B = _symbolic_generators()
    W = word_product(group_word(DoubleTwistKnot(k, 1)), A, B, _L1, _L0)
    return A, B, W


def oracle_difference(K: DoubleTwistKnot) -> Mat2:
    """W^n A - B W^n over Z[s, 1/s, y], computed by exact multiplication."""
    _check(K)
    A, B, W = _oracle_W(K.k)
    Wn = W.power(K.n, _L1, _L0)
    return Wn @ A - B @ Wn


def oracle_trace(K: DoubleTwistKnot) -> LaurentBivar:
    _check(K)
    return _oracle_W(K.k)[2].trace()


def riley_oracle(K: DoubleTwistKnot):
    """(1,2) and (2,1) entries of the exact expansion of W^n A - B W^n."""
    D = oracle_difference(K)
    return D.b, D.c


# -- identities -----------------------------------------------------------------

def alpha_lambda_identity_check(K: DoubleTwistKnot) -> bool:
    """alpha^2 - alpha*lambda + 1 against its factored form, exactly."""
    _check(K)
    m = K.k // 2
    lam, alpha = lambda_poly(K), alpha_poly(K)
    lhs = alpha * alpha - alpha * lam + 1
    t = Y + 2 - X * X
    if K.k % 2 == 0:
        s = _Sy(m - 1)
        rhs = t * s * s * (lam + 2 - X * X)
    else:
        rhs = (1 + t * _Sy(m - 1) * _Sy(m)) * (2 - lam)
    return lhs == rhs


def negative_n_form_check(K: DoubleTwistKnot) -> bool:
    """For n < 0, phi equals S_l(lambda) - S_{l-1}(lambda) alpha with l = -n."""
    if K.n >= 0:
        raise ValueError("only meaningful for n < 0")
    data = riley_poly(K)
    l = -K.n
    s_l, s_lm1 = cheb_pair(l, data.lambda_poly)
    return data.phi_poly == ONE * s_l - ONE * s_lm1 * data.alpha_poly


def abelian_slice_check(K: DoubleTwistKnot) -> bool:
    """For odd k, phi(x, x^2 - 2) == 1 identically in x."""
    if K.k % 2 == 0:
        raise ValueError("identity holds for odd k only")
    return compose_y(riley_poly(K).phi_poly, X * X - 2) == ONE


def degree_law_holds(K: DoubleTwistKnot) -> bool:
    data = riley_poly(K)
    p = schubert_form(K).p if not K.is_trivial else 1
    lead = data.phi_poly.leading_y_coeff()
    return data.deg_y == (p - 1) // 2 and lead in (ONE, -ONE)


def oracle_agrees(K: DoubleTwistKnot) -> bool:
    """Closed form vs. matrix-word expansion, all four entries."""
    D = oracle_difference(K)
    target = substitute_x_eq_s_plus_sinv(riley_poly(K).phi_poly)
    y = LaurentBivar.y()
    return (D.a.is_zero() and D.d.is_zero() and D.b == target
            and D.c == (y - 2) * target)


def trace_agrees(K: DoubleTwistKnot) -> bool:
    return oracle_trace(K) == substitute_x_eq_s_plus_sinv(lambda_poly(K))
