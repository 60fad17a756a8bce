"""Bounded ring isomorphism testing.

Rings are first compared by invariant counts; when those agree a
backtracking search maps a set of additive generators of one ring into the
other, extends each partial assignment additively and prunes on
multiplicative consistency.  Any map found is re-verified exhaustively.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import config
from .core.ring import FiniteRing
from .subsets import center, idempotents, nil_exponents, units

ISOMORPHIC = "isomorphic"
FINGERPRINT_MISMATCH = "fingerprint-mismatch"
# fingerprints agreed but no bijection exists; reported separately so a
# collision is never mistaken for a match
COLLISION = "fingerprint-collision"
TOO_LARGE = "too-large"


def ring_fingerprint(R: FiniteRing) -> tuple[int, int, int, int, int, int]:
    """``(|R|, |U|, |Id|, |Nil|, |Z(R)|, char)``."""
    return (
        R.size,
        len(units(R)),
        len(idempotents(R)),
        int((nil_exponents(R) > 0).sum()),
        len(center(R)),
        R.characteristic,
    )


def _additive_orders(R: FiniteRing) -> np.ndarray:
    idx = R.elements()
    order = np.ones(R.size, dtype=np.int64)
    x = idx.copy()
    open_ = x != R.zero
    while open_.any():
        x = np.where(open_, R.add(x, idx), x)
        order[open_] += 1
        open_ &= x != R.zero
    return order


def _unit_orders(R: FiniteRing) -> np.ndarray:
    u = units(R).mask
    idx = R.elements()
    out = np.zeros(R.size, dtype=np.int64)
    x = np.where(u, idx, R.one)
    k = 1
    open_ = u & (x != R.one)
    out[u & ~open_] = 1
    while open_.any():
        x = np.where(open_, R.mul(x, idx), x)
        k += 1
        done = open_ & (x == R.one)
        out[done] = k
        open_ &= ~done
    return out


def element_fingerprints(R: FiniteRing) -> list[tuple[int, ...]]:
    """Per element: additive order, unit, idempotent, nilpotency index,
    central, multiplicative order of units."""

    def compute():
        cols = [
            _additive_orders(R),
            units(R).mask.astype(np.int64),
            idempotents(R).mask.astype(np.int64),
            nil_exponents(R).astype(np.int64),
            center(R).mask.astype(np.int64),
            _unit_orders(R),
        ]
        return [tuple(int(c[i]) for c in cols) for i in range(R.size)]

    return R.memo("element_fingerprints", compute)


@dataclass(frozen=True)
class IsomorphismResult:
    status: str
    mapping: tuple[int, ...] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.status == ISOMORPHIC


def _generators(R: FiniteRing, fps: list[tuple[int, ...]]) -> list[int]:
    """Additive generators, preferring elements with rare fingerprints."""
    counts = Counter(fps)
    order = sorted(range(R.size), key=lambda i: (counts[fps[i]], i))
    span = np.zeros(R.size, dtype=bool)
    span[R.zero] = True
    gens = []
    for g in order:
        if span[g]:
            continue
        gens.append(g)
        members = np.flatnonzero(span)
        shifted = members
        while True:
            shifted = np.asarray(R.add(shifted, g), dtype=np.int64)
            fresh = shifted[~span[shifted]]
            if not fresh.size:
                break
            span[fresh] = True
        if span.all():
            break
    return gens


def verify_isomorphism(R: FiniteRing, S: FiniteRing, mapping) -> bool:
    f = np.asarray(mapping, dtype=np.int64)
    if f.shape != (R.size,) or R.size != S.size or np.unique(f).size != R.size:
        return False
    if f[R.one] != S.one or f[R.zero] != S.zero:
        return False
    idx = R.elements()
    a, b = idx[:, None], idx[None, :]
    return bool(
        np.array_equal(f[R.add(a, b)], S.add(f[a], f[b])) and np.array_equal(f[R.mul(a, b)], S.mul(f[a], f[b]))
    )


def find_isomorphism(R: FiniteRing, S: FiniteRing, *, limit: int | None = None) -> IsomorphismResult:
    """Search for a ring isomorphism ``R -> S``."""
    limit = config.ISOMORPHISM_LIMIT if limit is None else limit
    if ring_fingerprint(R) != ring_fingerprint(S):
        return IsomorphismResult(FINGERPRINT_MISMATCH, detail=f"{ring_fingerprint(R)} vs {ring_fingerprint(S)}")
    if R.size > limit:
        return IsomorphismResult(TOO_LARGE, detail=f"{R.size} elements above the search bound {limit}")
    fr, fs = element_fingerprints(R), element_fingerprints(S)
    if Counter(fr) != Counter(fs):
        return IsomorphismResult(COLLISION, detail="element fingerprint multisets differ")
    gens = _generators(R, fr)
    candidates = [[h for h in range(S.size) if fs[h] == fr[g]] for g in gens]
    n = R.size

    def extend(f, used, g, h):
        f = f.copy()
        used = used.copy()
        src = np.flatnonzero(f >= 0)
        img = f[src]
        while True:
            src = np.asarray(R.add(src, g), dtype=np.int64)
            img = np.asarray(S.add(img, h), dtype=np.int64)
            known = f[src] >= 0
            if (f[src[known]] != img[known]).any():
                return None
            if known.all():
                break
            new_src, new_img = src[~known], img[~known]
            if used[new_img].any() or np.unique(new_img).size != new_img.size:
                return None
            f[new_src] = new_img
            used[new_img] = True
        dom = np.flatnonzero(f >= 0)
        prods = R.mul(dom[:, None], dom[None, :])
        known = f[prods] >= 0
        expect = S.mul(f[dom][:, None], f[dom][None, :])
        if (f[prods][known] != expect[known]).any():
            return None
        return f, used

    def search(level, f, used):
        if level == len(gens):
            return f if verify_isomorphism(R, S, f) else None
        for h in candidates[level]:
            step = extend(f, used, gens[level], h)
            if step is None:
                continue
            found = search(level + 1, *step)
            if found is not None:
                return found
        return None

    f0 = np.full(n, -1, dtype=np.int64)
    f0[R.zero] = S.zero
    used0 = np.zeros(n, dtype=bool)
    used0[S.zero] = True
    found = search(0, f0, used0)
    if found is None:
        return IsomorphismResult(COLLISION, detail="fingerprints agree but no isomorphism exists")
    return IsomorphismResult(ISOMORPHIC, tuple(int(x) for x in found))


def is_isomorphic(R: FiniteRing, S: FiniteRing) -> bool:
    return bool(find_isomorphism(R, S))


__all__ = [
    "COLLISION",
    "FINGERPRINT_MISMATCH",
    "ISOMORPHIC",
    "IsomorphismResult",
    "TOO_LARGE",
    "element_fingerprints",
    "find_isomorphism",
    "is_isomorphic",
    "ring_fingerprint",
    "verify_isomorphism",
]
