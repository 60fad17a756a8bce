"""Finite rings, nil-clean style decompositions and brute-force result checks."""

from __future__ import annotations

from .config import size_cap
from .core.constructions import (
    corner_ring,
    direct_product,
    equal_diag_triangular,
    formal_matrix_ks,
    formal_matrix_ns,
    make_gf,
    make_zmod,
    matrix_ring,
    quotient,
    skew_polynomial_quotient,
    skew_triangular,
    toeplitz_triangular,
    trivial_extension,
    upper_triangular,
)
from .core.ring import FiniteRing, RingElement, RingEndomorphism
from .core.sets import ElementSet
from .errors import (
    InternalInconsistencyError,
    InvalidStructureError,
    NotAnIdealError,
    RingError,
    SizeCapError,
    UnknownCheckError,
)

__version__ = "0.1.0"
