"""Distinguished subsets of a finite ring: U(R), Id(R), Nil(R), Z(R), J(R),
ideal closures and the prime radical.

Set-valued results are cached on the ring through :meth:`FiniteRing.memo`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels
from .core.constructions import _members, ideal_violation
from .core.ring import FiniteRing, RingElement
from .core.sets import ElementSet
from .errors import InternalInconsistencyError, NotAnIdealError

_BLOCK = 1 << 20


@dataclass(frozen=True)
class NilWitness:
    """A nilpotent element together with its exact nilpotency index."""

    element: int
    exponent: int


def _idx(R: FiniteRing, a) -> int:
    if isinstance(a, RingElement):
        return a.index
    a = int(a)
    if not 0 <= a < R.size:
        raise IndexError(f"{a} is not an element index of {R.label}")
    return a


# -- element-level ------------------------------------------------------------


def nil_exponents(R: FiniteRing) -> np.ndarray:
    """Nilpotency index per element, 0 for elements that are not nilpotent."""

    def compute():
        out = kernels.nil_exponents(R)
        out.setflags(write=False)
        return out

    return R.memo("nil_exponents", compute)


def nil_exponent(R: FiniteRing, a) -> int:
    """Nilpotency index of one element (0 if not nilpotent), without a full scan."""
    a = _idx(R, a)
    if R.materialized or "nil_exponents" in R._memo:
        return int(nil_exponents(R)[a])
    return int(kernels.nil_exponents_of(R, [a])[0])


def nil_mask_of(R: FiniteRing, elems) -> np.ndarray:
    """Nilpotency of each entry of ``elems``; avoids a full scan on large rings."""
    elems = np.asarray(elems, dtype=np.int64)
    if R.materialized or "nil_exponents" in R._memo:
        return nil_exponents(R)[elems] > 0
    return (kernels.nil_exponents_of(R, elems) > 0).reshape(elems.shape)


def is_nilpotent(R: FiniteRing, a) -> bool:
    return nil_exponent(R, a) > 0


def is_idempotent(R: FiniteRing, a) -> bool:
    a = _idx(R, a)
    return int(R.mul(a, a)) == a


def is_unit(R: FiniteRing, a) -> bool:
    a = _idx(R, a)
    if "units" in R._memo or R.materialized:
        return a in units(R)
    idx = R.elements()
    return bool(((R.mul(a, idx) == R.one) & (R.mul(idx, a) == R.one)).any())


def is_central(R: FiniteRing, a) -> bool:
    a = _idx(R, a)
    idx = R.elements()
    return bool(np.array_equal(R.mul(a, idx), R.mul(idx, a)))


# -- sets ---------------------------------------------------------------------


def units(R: FiniteRing) -> ElementSet:
    """Elements with a two-sided inverse."""
    return R.memo("units", lambda: ElementSet(R, mask=kernels.unit_mask(R)))


def idempotents(R: FiniteRing) -> ElementSet:
    def compute():
        idx = R.elements()
        return ElementSet(R, mask=R.mul(idx, idx) == idx)

    return R.memo("idempotents", compute)


def nil_set(R: FiniteRing) -> ElementSet:
    """Nil(R) as an :class:`ElementSet`."""
    return R.memo("nil_set", lambda: ElementSet(R, mask=nil_exponents(R) > 0))


def nilpotents(R: FiniteRing) -> list[NilWitness]:
    """Every nilpotent element with its index, in increasing element order."""
    exps = nil_exponents(R)
    return [NilWitness(int(i), int(exps[i])) for i in np.flatnonzero(exps)]


def center(R: FiniteRing) -> ElementSet:
    def compute():
        if R.materialized:
            t = R.mul_table
            return ElementSet(R, mask=(t == t.T).all(axis=1))
        n = R.size
        idx = R.elements()
        mask = np.zeros(n, dtype=bool)
        step = max(1, _BLOCK // n)
        for start in range(0, n, step):
            rows = idx[start : start + step, None]
            mask[start : start + step] = (R.mul(rows, idx[None, :]) == R.mul(idx[None, :], rows)).all(axis=1)
        return ElementSet(R, mask=mask)

    return R.memo("center", compute)


def jacobson_radical_side(R: FiniteRing, side: str) -> ElementSet:
    """``{x : 1 - r x is a unit for all r}`` (``side="left"``) or the mirror
    condition ``1 - x r`` (``side="right"``)."""
    code = {"left": 0, "right": 1}[side]
    return R.memo(
        f"jacobson_{side}",
        lambda: ElementSet(R, mask=kernels.quasi_regular_mask(R, units(R).mask, code)),
    )


def jacobson_radical(R: FiniteRing) -> ElementSet:
    """J(R) by quasi-regularity; the left and right versions must coincide."""

    def compute():
        left = jacobson_radical_side(R, "left")
        right = jacobson_radical_side(R, "right")
        if left != right:
            raise InternalInconsistencyError(f"left and right quasi-regular sets differ in {R.label}")
        return left

    return R.memo("jacobson", compute)


# -- ideals -------------------------------------------------------------------


def additive_span(R: FiniteRing, gens: Iterable[int]) -> ElementSet:
    """The additive subgroup generated by ``gens``."""
    mask = np.zeros(R.size, dtype=bool)
    mask[R.zero] = True
    members = np.array([R.zero], dtype=np.int64)
    for g in np.unique(np.fromiter((int(x) for x in gens), dtype=np.int64)):
        if mask[g]:
            continue
        # add multiples of g to every current member until nothing is new
        shifted = members
        while True:
            shifted = np.asarray(R.add(shifted, g), dtype=np.int64)
            fresh = shifted[~mask[shifted]]
            if fresh.size == 0:
                break
            mask[fresh] = True
        members = np.flatnonzero(mask)
    return ElementSet(R, mask=mask)


def ideal_closure(R: FiniteRing, gens: Iterable[int]) -> ElementSet:
    """Smallest two-sided ideal containing ``gens``: the additive span of all
    products ``r g s``."""
    gens = [_idx(R, g) for g in gens]
    idx = R.elements()
    terms = [np.array([R.zero], dtype=np.int64)]
    for g in sorted(set(gens)):
        left = np.unique(R.mul(idx, g))
        step = max(1, _BLOCK // R.size)
        for start in range(0, left.size, step):
            terms.append(np.unique(R.mul(left[start : start + step, None], idx[None, :])))
    return additive_span(R, np.unique(np.concatenate(terms)))


def is_ideal(R: FiniteRing, subset) -> bool:
    return ideal_violation(R, subset) is None


def is_nil_ideal(R: FiniteRing, ideal) -> bool:
    """True when every member of the two-sided ideal is nilpotent."""
    members = _members(R, ideal)
    why = ideal_violation(R, members)
    if why is not None:
        raise NotAnIdealError(f"subset of {R.label} is not a two-sided ideal: {why}")
    return bool((nil_exponents(R)[members] > 0).all())


def ideal_power_vanishes(R: FiniteRing, ideal) -> int:
    """Smallest k with I^k = 0, or 0 when the powers never vanish."""
    members = _members(R, ideal)
    current = ElementSet(R, members)
    k = 1
    while True:
        if current.members == (R.zero,):
            return k
        prods = np.unique(R.mul(current.indices[:, None], members[None, :]))
        nxt = additive_span(R, prods)
        if nxt == current:
            return 0
        current, k = nxt, k + 1


def prime_radical(R: FiniteRing) -> ElementSet:
    """The largest nilpotent ideal.

    Every nilpotent element of the answer generates a nilpotent ideal, and
    every other nilpotent element does not, so absorbing generators one at a
    time in any order reaches it.
    """

    def compute():
        nil = nil_exponents(R) > 0
        idx = R.elements()
        current = ElementSet(R, [R.zero])
        for q in np.flatnonzero(nil):
            if q in current:
                continue
            # cheap rejection: a one-sided multiple already fails to be nilpotent
            if not (nil[R.mul(q, idx)].all() and nil[R.mul(idx, q)].all()):
                continue
            cand = ideal_closure(R, list(current.members) + [int(q)])
            if nil[cand.indices].all():
                current = cand
        if ideal_power_vanishes(R, current) == 0:
            raise InternalInconsistencyError(f"nil ideal of {R.label} is not nilpotent")
        return current

    return R.memo("prime_radical", compute)


__all__ = [
    "NilWitness",
    "additive_span",
    "center",
    "ideal_closure",
    "ideal_power_vanishes",
    "idempotents",
    "is_central",
    "is_idempotent",
    "is_ideal",
    "is_nil_ideal",
    "is_nilpotent",
    "is_unit",
    "jacobson_radical",
    "jacobson_radical_side",
    "nil_exponent",
    "nil_exponents",
    "nil_mask_of",
    "nil_set",
    "nilpotents",
    "prime_radical",
    "units",
]
