"""Double twist knots J(k, 2n): normalization, Schubert form, case classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass

__all__ = [
    "KnotError",
    "TrivialKnot",
    "DoubleTwistKnot",
    "TwoBridgeForm",
    "CaseTag",
    "KnotClass",
    "normalize",
    "schubert_form",
    "classify",
]


class KnotError(ValueError):
    """Parameters do not describe a knot (k*l odd)."""


class TrivialKnot(KnotError):
    """Parameters describe the unknot."""


@dataclass(frozen=True)
class DoubleTwistKnot:
    """The knot J(k, 2n).

    ``n`` is half the second twist count.  ``mirrored`` records that the
    parameters came from the mirror image during normalization.
    """

    k: int
    n: int
    mirrored: bool = False

    @property
    def l(self) -> int:
        return 2 * self.n

    @property
    def m(self) -> int:
        return self.k // 2

    @property
    def is_trivial(self) -> bool:
        # J(1, 2) = b(1, .) is the unknot as well
        return self.k == 0 or self.n == 0 or (self.k == 1 and self.n == 1)

    def __str__(self) -> str:
        tag = "*" if self.mirrored else ""
        return f"J({self.k},{self.l}){tag}"


@dataclass(frozen=True)
class TwoBridgeForm:
    p: int
    m_schubert: int

    def __str__(self) -> str:
        return f"b({self.p},{self.m_schubert})"


class CaseTag(str, enum.Enum):
    EvenK_PosN = "EvenK_PosN"
    EvenK_NegN = "EvenK_NegN"
    OddK_PosN_EvenN = "OddK_PosN_EvenN"
    OddK_PosN_OddN = "OddK_PosN_OddN"
    OddK_NegN_OddN = "OddK_NegN_OddN"
    OddK_NegN_EvenN = "OddK_NegN_EvenN"
    Trivial = "Trivial"


@dataclass(frozen=True)
class KnotClass:
    tag: CaseTag
    m: int
    mirrored: bool

    @property
    def known_non_orderable(self) -> bool:
        return self.tag is CaseTag.EvenK_NegN


def normalize(k: int, l: int) -> DoubleTwistKnot:
    """Canonical parameters for J(k, l).

    Order of rewrites: put the even entry second, mirror so that k > 0, then
    replace J(2m+1, 2) (m > 0) by the isomorphic J(2m, -2).

    Raises KnotError for odd*odd input and TrivialKnot when k*l == 0 or the
    result is J(1, 2).
    """
    k, l = int(k), int(l)
    if (k * l) % 2:
        raise KnotError(f"J({k},{l}) is a two-component link, not a knot")
    if k * l == 0:
        raise TrivialKnot(f"J({k},{l}) is the trivial knot")
    if l % 2:
        k, l = l, k
    mirrored = False
    if k < 0:
        k, l, mirrored = -k, -l, True
    if k % 2 == 1 and k > 1 and l == 2:
        k, l = k - 1, -2
    knot = DoubleTwistKnot(k, l // 2, mirrored)
    if knot.is_trivial:
        raise TrivialKnot(f"{knot} is the trivial knot")
    return knot


def schubert_form(K: DoubleTwistKnot) -> TwoBridgeForm:
    """Schubert normal form b(p, m) of J(k, 2n), k > 0."""
    if K.is_trivial or K.k < 0:
        raise TrivialKnot(f"{K} has no two-bridge form here")
    k, n = K.k, K.n
    if n > 0:
        p, ms = 2 * k * n - 1, 2 * n
    else:
        p, ms = 1 - 2 * k * n, -2 * n
    # only k == 1, n > 0 needs the reduction (2n == p + 1); a convention, not a theorem
    ms %= p
    return TwoBridgeForm(p, ms)


def classify(K: DoubleTwistKnot) -> KnotClass:
    """Case tag driving the threshold formulas."""
    if K.is_trivial:
        return KnotClass(CaseTag.Trivial, max(K.k, 0) // 2, K.mirrored)
    k, n = K.k, K.n
    if k % 2 == 0:
        tag = CaseTag.EvenK_PosN if n > 0 else CaseTag.EvenK_NegN
    elif n > 0:
        tag = CaseTag.OddK_PosN_EvenN if n % 2 == 0 else CaseTag.OddK_PosN_OddN
    else:
        tag = CaseTag.OddK_NegN_EvenN if n % 2 == 0 else CaseTag.OddK_NegN_OddN
    return KnotClass(tag, k // 2, K.mirrored)


def group_word(K: DoubleTwistKnot) -> str:
    """Letters of w in the presentation <a, b | w^n a = b w^n>.

    Upper case letters stand for inverses:
    k = 2m gives (bA)^m (Ba)^m, k = 2m + 1 gives (bA)^m ba (Ba)^m.
    """
    m = K.k // 2
    middle = "ba" if K.k % 2 else ""
    return "bA" * m + middle + "Ba" * m
