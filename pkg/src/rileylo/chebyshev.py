"""Chebyshev-like polynomials S_j with S_0 = 1, S_1 = z, S_{j+1} = z S_j - S_{j-1}.

The recurrence is used for every integer j; negative indices run it backward
(S_{j-1} = z S_j - S_{j+1}), so S_{-1} = 0, S_{-2} = -1, S_{-j} = -S_{j-2}.

``cheb_eval`` is generic: it works for ints, floats, complex numbers, mpmath
numbers and the exact polynomial types in :mod:`rileylo.exactpoly`, as long as
the argument supports ``*`` and ``-`` against itself and plain ints.
"""

from __future__ import annotations

from typing import List

__all__ = [
    "cheb_eval",
    "cheb_pair",
    "cheb_poly",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_eval",
    "pell_identity_check",
]


def cheb_pair(j: int, z):
    """Return ``(S_j(z), S_{j-1}(z))`` by running the recurrence |j| steps."""
    if j >= 0:
        # (S_j, S_{j-1}) starting from (S_0, S_{-1}) = (1, 0)
        cur, prev = 1, 0
        for _ in range(j):
            cur, prev = z * cur - prev, cur
        return cur, prev
    # walk down: (S_{j}, S_{j+1}) starting from (S_0, S_1)
    cur, nxt = 1, z
    for _ in range(-j):
        cur, nxt = z * cur - nxt, cur
    below = z * cur - nxt
    return cur, below


def cheb_eval(j: int, z):
    """Evaluate S_j(z)."""
    return cheb_pair(j, z)[0]


# -- dense integer polynomials in z, coefficient lists low -> high -------------

def _trim(p: List[int]) -> List[int]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p, q):
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                  for i in range(n)])


def poly_sub(p, q):
    return poly_add(p, [-c for c in q])


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_eval(p, z):
    acc = 0
    for c in reversed(p):
        acc = acc * z + c
    return acc


def _shift(p):
    return [0] + list(p) if p else []


def cheb_poly(j: int) -> List[int]:
    """Exact coefficient list of S_j, lowest degree first.

    >>> cheb_poly(2)
    [-1, 0, 1]
    >>> cheb_poly(-2)
    [-1]
    """
    if j >= 0:
        cur, prev = [1], []
        for _ in range(j):
            cur, prev = poly_sub(_shift(cur), prev), cur
        return cur
    cur, nxt = [1], [0, 1]
    for _ in range(-j):
        cur, nxt = poly_sub(_shift(cur), nxt), cur
    return cur


def pell_identity_check(j: int) -> bool:
    """Check S_j^2 - z S_j S_{j-1} + S_{j-1}^2 == 1 as polynomials in z."""
    a, b = cheb_poly(j), cheb_poly(j - 1)
    lhs = poly_add(poly_sub(poly_mul(a, a), _shift(poly_mul(a, b))), poly_mul(b, b))
    return lhs == [1]
