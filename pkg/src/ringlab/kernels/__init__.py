"""Hot loops with a compiled backend and a numpy fallback.

The compiled module ``_ckernels`` is used for table-backed rings when it
imports; rings without tables, or a forced ``python`` backend, go through
``_fallback``.  Set ``RINGLAB_BACKEND=python`` to disable the extension.
"""

from __future__ import annotations

import contextlib
import contextvars
import os

import numpy as np

from . import _fallback
from ._fallback import LAWS

try:  # pragma: no cover - depends on the build
    if os.environ.get("RINGLAB_BACKEND", "").lower() == "python":
        raise ImportError("disabled by RINGLAB_BACKEND")
    from . import _ckernels as _native
except ImportError:  # pragma: no cover
    _native = None

NATIVE_AVAILABLE = _native is not None
_forced: contextvars.ContextVar[str | None] = contextvars.ContextVar("ringlab_backend", default=None)


def backend_name() -> str:
    return _forced.get() or ("native" if NATIVE_AVAILABLE else "python")


@contextlib.contextmanager
def use_backend(name: str):
    """Force ``"python"`` or ``"native"`` inside the block."""
    if name not in ("python", "native"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "native" and not NATIVE_AVAILABLE:
        raise RuntimeError("compiled kernels are not available")
    token = _forced.set(name)
    try:
        yield
    finally:
        _forced.reset(token)


def _native_for(R):
    if _native is None or R.mul_table is None or _forced.get() == "python":
        return None
    return _native


def nil_exponents(R) -> np.ndarray:
    nat = _native_for(R)
    if nat is not None:
        return nat.nil_exponents(R.mul_table, R.zero)
    return _fallback.nil_exponents(R)


def nil_exponents_of(R, elems) -> np.ndarray:
    """Nilpotency indices for selected elements only."""
    return _fallback.nil_exponents_of(R, elems)


def unit_mask(R) -> np.ndarray:
    nat = _native_for(R)
    if nat is not None:
        return nat.unit_mask(R.mul_table, R.one)
    return _fallback.unit_mask(R)


def quasi_regular_mask(R, units: np.ndarray, side: int) -> np.ndarray:
    nat = _native_for(R)
    units = np.ascontiguousarray(units, dtype=bool)
    if nat is not None:
        return nat.quasi_regular_mask(R.add_table, R.mul_table, R.neg_table, R.one, units, side)
    return _fallback.quasi_regular_mask(R, units, side)


def axiom_violation(R):
    nat = _native_for(R)
    if nat is not None:
        return nat.axiom_violation(R.add_table, R.mul_table, R.neg_table, R.zero, R.one)
    return _fallback.axiom_violation(R)


def nilclean_search(R, targets, idems, nil, signs, commuting: bool):
    nat = _native_for(R)
    nil = np.ascontiguousarray(nil, dtype=bool)
    if nat is not None:
        return nat.nilclean_search(R.add_table, R.mul_table, R.neg_table, targets, idems, nil, signs, commuting)
    return _fallback.nilclean_search(R, targets, idems, nil, signs, commuting)


def clean_search(R, targets, units, idem, signs):
    nat = _native_for(R)
    idem = np.ascontiguousarray(idem, dtype=bool)
    if nat is not None:
        return nat.clean_search(R.add_table, R.mul_table, R.neg_table, targets, units, idem, signs)
    return _fallback.clean_search(R, targets, units, idem, signs)


__all__ = [
    "LAWS",
    "NATIVE_AVAILABLE",
    "axiom_violation",
    "backend_name",
    "clean_search",
    "nil_exponents",
    "nil_exponents_of",
    "nilclean_search",
    "quasi_regular_mask",
    "unit_mask",
    "use_backend",
]
