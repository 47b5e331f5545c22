"""Sparse exact-integer polynomials in two variables.

Two concrete rings share one implementation:

* :class:`IntPolyXY`  -- ordinary polynomials in (x, y), used for lambda,
  alpha and the Riley polynomial.
* :class:`LaurentBivar` -- Laurent in s, ordinary in y; the entries of the
  matrices A, B, W when x = s + 1/s is kept symbolic.

Terms are stored as ``{(e0, e1): coeff}`` with no zero coefficients, so
equality is plain dict equality.
"""

from __future__ import annotations

from numbers import Integral

import mpmath

__all__ = [
    "IntPolyXY",
    "LaurentBivar",
    "poly_arith",
    "substitute_x_eq_s_plus_sinv",
    "compose_y",
    "eval_poly",
]


class _Sparse2:
    """Common arithmetic for the two sparse rings."""

    __slots__ = ("_terms", "_hash")
    names = ("u", "v")
    allow_negative_first = False

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                if c:
                    if b < 0 or (a < 0 and not self.allow_negative_first):
                        raise ValueError(f"exponent ({a}, {b}) not allowed in {type(self).__name__}")
                    clean[(int(a), int(b))] = int(c)
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def gen(cls, i):
        return cls({(1, 0) if i == 0 else (0, 1): 1})

    @classmethod
    def _wrap(cls, terms):
        # trusted path: terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, Integral):
            return type(self).const(int(other))
        return NotImplemented

    # inspection
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms sorted by (second exponent, first exponent)."""
        return sorted(self._terms.items(), key=lambda t: (t[0][1], t[0][0]))

    def is_zero(self):
        return not self._terms

    def degree(self, i):
        if not self._terms:
            return -1
        return max(e[i] for e in self._terms)

    def min_degree(self, i):
        if not self._terms:
            return 0
        return min(e[i] for e in self._terms)

    def coeff(self, a, b):
        return self._terms.get((a, b), 0)

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        get = out.get
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2)
                out[e] = get(e, 0) + c1 * c2
        return self._wrap({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, Integral) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = type(self).const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        u, v = self.names
        parts = []
        for (a, b), c in sorted(self._terms.items(), key=lambda t: (-t[0][1], -t[0][0])):
            mono = []
            for name, e in ((u, a), (v, b)):
                if e == 1:
                    mono.append(name)
                elif e:
                    mono.append(f"{name}^{e}")
            m = "*".join(mono)
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(m)
            elif c == -1:
                parts.append("-" + m)
            else:
                parts.append(f"{c}*{m}")
        return " + ".join(parts).replace("+ -", "- ")


class IntPolyXY(_Sparse2):
    """Polynomial in x and y with integer coefficients; keys are (deg_x, deg_y)."""

    __slots__ = ()
    names = ("x", "y")

    @classmethod
    def x(cls):
        return cls.gen(0)

    @classmethod
    def y(cls):
        return cls.gen(1)

    def deg_x(self):
        return self.degree(0)

    def deg_y(self):
        return self.degree(1)

    def leading_y_coeff(self):
        """Coefficient of y^deg_y, as an IntPolyXY in x alone."""
        d = self.deg_y()
        return IntPolyXY({(a, 0): c for (a, b), c in self._terms.items() if b == d})

    def x_parity_even(self):
        return all(a % 2 == 0 for a, _ in self._terms)


class LaurentBivar(_Sparse2):
    """Laurent polynomial in s (any integer exponent) times ordinary polynomial in y."""

    __slots__ = ()
    names = ("s", "y")
    allow_negative_first = True

    @classmethod
    def s(cls):
        return cls.gen(0)

    @classmethod
    def s_inv(cls):
        return cls({(-1, 0): 1})

    @classmethod
    def y(cls):
        return cls.gen(1)


def poly_arith(p, q, op):
    """Apply ``op`` in {"add", "sub", "mul"} to two polynomials of the same ring."""
    if type(p) is not type(q):
        raise TypeError("operands must be of the same polynomial type")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def _binomial_row(n):
    row = [1]
    for i in range(n):
        row.append(row[-1] * (n - i) // (i + 1))
    return row


def substitute_x_eq_s_plus_sinv(p: IntPolyXY) -> LaurentBivar:
    """Image of ``p`` under x -> s + s^-1 (y unchanged)."""
    out = {}
    for (a, b), c in p.terms.items():
        # (s + 1/s)^a = sum_i C(a, i) s^(a - 2i)
        for i, binom in enumerate(_binomial_row(a)):
            e = (a - 2 * i, b)
            out[e] = out.get(e, 0) + c * binom
    return LaurentBivar(out)


def compose_y(p: IntPolyXY, q: IntPolyXY) -> IntPolyXY:
    """Substitute y -> q(x, y) into p, exactly."""
    by_y = {}
    for (a, b), c in p.terms.items():
        by_y.setdefault(b, {})[(a, 0)] = c
    result = IntPolyXY()
    for d in range(p.deg_y(), -1, -1):
        result = result * q + IntPolyXY(by_y.get(d, {}))
    return result


def eval_poly(p: IntPolyXY, x, y, precision: int = 53):
    """Evaluate ``p`` at real (x, y) and round to ``precision`` bits.

    Horner evaluation runs with a guard margin proportional to the size of the
    polynomial, so the result is correctly rounded except for catastrophic
    cancellation beyond the guard bits.
    """
    if precision < 53:
        raise ValueError("precision must be at least 53 bits")
    guard = 64 + 4 * (p.deg_x() + p.deg_y() + 2)
    with mpmath.workprec(precision + guard):
        xv, yv = mpmath.mpf(x), mpmath.mpf(y)
        by_y = {}
        for (a, b), c in p.terms.items():
            by_y.setdefault(b, {})[a] = c
        acc = mpmath.mpf(0)
        for d in range(p.deg_y(), -1, -1):
            row = by_y.get(d, {})
            cx = mpmath.mpf(0)
            for a in range(max(row, default=0), -1, -1):
                cx = cx * xv + row.get(a, 0)
            acc = acc * yv + cx
    with mpmath.workprec(precision):
        return +acc
