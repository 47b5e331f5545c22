"""Riley polynomials and left-orderability certificates for double twist knots."""

from .knots import DoubleTwistKnot, KnotError, TrivialKnot, classify, normalize, schubert_form
from .riley import riley_poly
from .orderability import certify, root_location_audit, root_select, threshold

__version__ = "0.1.0"

__all__ = [
    "DoubleTwistKnot",
    "KnotError",
    "TrivialKnot",
    "classify",
    "normalize",
    "schubert_form",
    "riley_poly",
    "certify",
    "root_location_audit",
    "root_select",
    "threshold",
]
