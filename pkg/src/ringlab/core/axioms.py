"""Ring-axiom verification.

Rings up to :data:`ringlab.config.EXHAUSTIVE_AXIOM_LIMIT` elements are
checked over every pair and triple; larger rings check the unary and pairwise
laws exhaustively when tables exist and the triple laws on random samples.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import config, kernels
from ..errors import InvalidStructureError
from .ring import FiniteRing


@dataclass(frozen=True)
class AxiomViolation:
    law: str
    a: int
    b: int | None = None
    c: int | None = None

    def __str__(self) -> str:
        args = ", ".join(str(x) for x in (self.a, self.b, self.c) if x is not None)
        return f"{self.law} fails at ({args})"


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    mode: str  # "exhaustive" or "sampled"
    violation: AxiomViolation | None = None
    samples: int = 0


def _violation(code: int, a: int, b: int = -1, c: int = -1) -> AxiomViolation:
    return AxiomViolation(kernels.LAWS[code], int(a), None if b < 0 else int(b), None if c < 0 else int(c))


def _sampled(R: FiniteRing, samples: int, seed: int) -> AxiomViolation | None:
    n, zero, one = R.size, R.zero, R.one
    idx = R.elements()
    # unary laws are cheap to check on every element
    bad = np.flatnonzero(R.add(idx, zero) != idx)
    if bad.size:
        return _violation(0, bad[0])
    bad = np.flatnonzero(R.add(idx, R.neg(idx)) != zero)
    if bad.size:
        return _violation(1, bad[0])
    bad = np.flatnonzero((R.mul(idx, one) != idx) | (R.mul(one, idx) != idx))
    if bad.size:
        return _violation(3, bad[0])
    rng = np.random.default_rng(seed)
    a, b, c = (rng.integers(0, n, samples) for _ in range(3))
    checks = [
        (2, lambda: R.add(a, b) != R.add(b, a)),
        (4, lambda: R.add(R.add(a, b), c) != R.add(a, R.add(b, c))),
        (5, lambda: R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))),
        (6, lambda: R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c))),
        (7, lambda: R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c))),
    ]
    for code, check in sorted(checks):
        bad = np.flatnonzero(check())
        if bad.size:
            i = bad[0]
            return _violation(code, a[i], b[i], -1 if code == 2 else c[i])
    return None


def verify_axioms(
    R: FiniteRing, *, seed: int = 0, samples: int | None = None, exhaustive: bool | None = None
) -> AxiomReport:
    """Check the ring axioms on ``R``; the first failing law is reported."""
    if exhaustive is None:
        exhaustive = R.size <= config.EXHAUSTIVE_AXIOM_LIMIT
    if R.zero == R.one and R.size != 1:
        return AxiomReport(False, "exhaustive" if exhaustive else "sampled", AxiomViolation("zero differs from one", R.zero))
    if exhaustive:
        hit = kernels.axiom_violation(R)
        return AxiomReport(hit is None, "exhaustive", None if hit is None else _violation(*hit))
    samples = config.AXIOM_SAMPLES if samples is None else samples
    hit = _sampled(R, samples, seed)
    return AxiomReport(hit is None, "sampled", hit, samples)


def require_ring(R: FiniteRing, **kwargs) -> FiniteRing:
    """Raise :class:`InvalidStructureError` unless ``R`` satisfies the axioms."""
    report = verify_axioms(R, **kwargs)
    if not report.ok:
        raise InvalidStructureError(f"{R.label}: {report.violation}")
    return R
