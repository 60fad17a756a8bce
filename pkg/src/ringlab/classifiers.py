"""Element decompositions and ring-class predicates.

Each decomposition kind has a deterministic search.  Where an element-level
criterion is known (``a - a^2`` nilpotent for strongly nil-clean, ``a + a^2``
or ``a - a^2`` nilpotent for strongly weakly nil-clean) the ring-wide scans
compute both and raise :class:`InternalInconsistencyError` if they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import kernels
from .core.constructions import ideal_violation
from .core.ring import FiniteRing, RingElement
from .errors import InternalInconsistencyError
from .subsets import (
    center,
    idempotents,
    nil_exponent,
    nil_exponents,
    nil_mask_of,
    nil_set,
    prime_radical,
    units,
)

SNC = "strongly-nil-clean"
WNC = "weakly-nil-clean"
SWNC = "strongly-weakly-nil-clean"
SWC = "strongly-weakly-clean"
KINDS = (SNC, WNC, SWNC, SWC)

_BLOCK = 1 << 20


@dataclass(frozen=True)
class Decomposition:
    """``a = first_part + sign * nil_or_idem_part`` for the clean kind and
    ``a = nil_or_idem_part + sign * first_part`` for the nil-clean kinds.

    For nil-clean kinds ``first_part`` is the idempotent ``e`` and
    ``nil_or_idem_part`` the nilpotent ``q`` (with its index in
    ``exponent``); for the clean kind they are the unit ``u`` and the
    idempotent ``e``.
    """

    kind: str
    sign: int
    first_part: int
    nil_or_idem_part: int
    commuting: bool
    exponent: int | None = None

    @property
    def idempotent(self) -> int:
        return self.nil_or_idem_part if self.kind == SWC else self.first_part

    def to_dict(self, ring: FiniteRing | None = None) -> dict[str, Any]:
        if self.kind == SWC:
            parts = {"unit": self.first_part, "idempotent": self.nil_or_idem_part}
        else:
            parts = {"idempotent": self.first_part, "nilpotent": self.nil_or_idem_part}
        out: dict[str, Any] = {"kind": self.kind, "sign": "+" if self.sign > 0 else "-"}
        for name, i in parts.items():
            out[name] = {"index": i, "coords": ring.coords(i)} if ring is not None else i
        if self.exponent is not None:
            out["exponent"] = self.exponent
        out["commuting"] = self.commuting
        return out


def _idx(R: FiniteRing, a) -> int:
    if isinstance(a, RingElement):
        return a.index
    a = int(a)
    if not 0 <= a < R.size:
        raise IndexError(f"{a} is not an element index of {R.label}")
    return a


# -- element searches ---------------------------------------------------------

_NILCLEAN = {SNC: ((1,), True), WNC: ((1, -1), False), SWNC: ((1, -1), True)}


def _nilclean_one(R: FiniteRing, a: int, kind: str) -> Decomposition | None:
    signs, commuting = _NILCLEAN[kind]
    idems = idempotents(R).indices
    for sign in signs:
        q = np.asarray(R.add(a, R.neg(idems)) if sign > 0 else R.add(a, idems), dtype=np.int64)
        ok = nil_mask_of(R, q)
        if commuting:
            ok &= R.mul(idems, q) == R.mul(q, idems)
        hits = np.flatnonzero(ok)
        if hits.size:
            e, qq = int(idems[hits[0]]), int(q[hits[0]])
            return Decomposition(kind, sign, e, qq, commuting, nil_exponent(R, qq))
    return None


def _decompose(R: FiniteRing, a, kind: str) -> Decomposition | None:
    a = _idx(R, a)
    if R.materialized:
        return _table(R, kind).get(a)
    if kind == SWC:
        return _swc_one(R, a)
    return _nilclean_one(R, a, kind)


def _swc_one(R: FiniteRing, a: int) -> Decomposition | None:
    idem = idempotents(R).mask
    for u in units(R).indices:
        u = int(u)
        for sign in (1, -1):
            e = int(R.add(a, R.neg(u)) if sign > 0 else R.add(u, R.neg(a)))
            if idem[e] and int(R.mul(u, e)) == int(R.mul(e, u)):
                return Decomposition(SWC, sign, u, e, True)
    return None


def swnc_decompose(R: FiniteRing, a) -> Decomposition | None:
    """First ``a = q ± e`` with ``eq = qe`` (sign + first, then ``e`` ascending)."""
    return _decompose(R, a, SWNC)


def snc_decompose(R: FiniteRing, a) -> Decomposition | None:
    """First ``a = q + e`` with ``eq = qe``."""
    return _decompose(R, a, SNC)


def wnc_decompose(R: FiniteRing, a) -> Decomposition | None:
    """First ``a = q ± e`` without a commutation requirement."""
    return _decompose(R, a, WNC)


def swc_decompose(R: FiniteRing, a) -> Decomposition | None:
    """First ``a = u ± e`` with ``u`` a unit and ``ue = eu``; units ascending
    in the outer loop, sign + before - in the inner loop."""
    return _decompose(R, a, SWC)


DECOMPOSERS: dict[str, Callable[[FiniteRing, Any], Decomposition | None]] = {
    SNC: snc_decompose,
    WNC: wnc_decompose,
    SWNC: swnc_decompose,
    SWC: swc_decompose,
}


# -- ring-wide tables ---------------------------------------------------------


class _DecompTable:
    """Search results for every element of a ring."""

    def __init__(self, kind: str, sign: np.ndarray, first: np.ndarray, second: np.ndarray, exps: np.ndarray | None):
        self.kind = kind
        self.sign = sign
        self.first = first
        self.second = second
        self.exps = exps
        self.found = sign != 0

    def get(self, a: int) -> Decomposition | None:
        if not self.found[a]:
            return None
        exp = None if self.exps is None else int(self.exps[self.second[a]])
        commuting = self.kind != WNC
        return Decomposition(self.kind, int(self.sign[a]), int(self.first[a]), int(self.second[a]), commuting, exp)


def _table(R: FiniteRing, kind: str) -> _DecompTable:
    def compute():
        targets = R.elements()
        if kind == SWC:
            sign, u, e = kernels.clean_search(R, targets, units(R).indices, idempotents(R).mask, np.array([1, -1], np.int8))
            return _DecompTable(kind, sign, u, e, None)
        signs, commuting = _NILCLEAN[kind]
        exps = nil_exponents(R)
        sign, e, q = kernels.nilclean_search(
            R, targets, idempotents(R).indices, exps > 0, np.array(signs, np.int8), commuting
        )
        table = _DecompTable(kind, sign, e, q, exps)
        fast = _criterion_mask(R, kind)
        if fast is not None and not np.array_equal(fast, table.found):
            bad = int(np.flatnonzero(fast != table.found)[0])
            raise InternalInconsistencyError(
                f"{kind} criterion and search disagree at {R.format(bad)} in {R.label}"
            )
        return table

    return R.memo(f"decomp:{kind}", compute)


def _criterion_mask(R: FiniteRing, kind: str) -> np.ndarray | None:
    if kind == WNC:
        return None
    idx = R.elements()
    sq = R.mul(idx, idx)
    nil = nil_exponents(R) > 0
    minus = nil[R.add(idx, R.neg(sq))]
    if kind == SNC:
        return minus
    return minus | nil[R.add(idx, sq)]


def criterion_mask(R: FiniteRing, kind: str) -> np.ndarray:
    """Element-level criterion: ``a - a^2`` nilpotent (SNC) or ``a ± a^2``
    nilpotent (SWNC)."""
    mask = _criterion_mask(R, kind)
    if mask is None:
        raise ValueError(f"no element criterion for {kind}")
    return mask


def search_mask(R: FiniteRing, kind: str) -> np.ndarray:
    """Elements for which the decomposition search succeeds."""
    return _table(R, kind).found


# -- verdicts -----------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    """Outcome of a ring predicate.  False verdicts of universal predicates
    carry a counterexample."""

    name: str
    holds: bool
    witness: Any = None
    counterexample: Any = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self, ring: FiniteRing | None = None) -> dict[str, Any]:
        def render(x):
            if x is None:
                return None
            if isinstance(x, Decomposition):
                return x.to_dict(ring)
            if isinstance(x, (tuple, list)):
                return [render(v) for v in x]
            if isinstance(x, (int, np.integer)) and ring is not None:
                return {"index": int(x), "coords": ring.coords(int(x))}
            return x

        out = {"verdict": self.holds, "witness": render(self.witness), "counterexample": render(self.counterexample)}
        if self.detail:
            out["detail"] = self.detail
        return out


def _universal(name: str, R: FiniteRing, ok: np.ndarray, domain: np.ndarray | None = None, detail: str = "") -> Verdict:
    bad = ~ok if domain is None else (domain & ~ok)
    hits = np.flatnonzero(bad)
    if hits.size:
        return Verdict(name, False, counterexample=int(hits[0]), detail=detail)
    return Verdict(name, True, detail=detail)


def _cached(key: str):
    def wrap(fn):
        def inner(R: FiniteRing) -> Verdict:
            return R.memo(f"verdict:{key}", lambda: fn(R))

        inner.__name__ = fn.__name__
        inner.__doc__ = fn.__doc__
        inner.__wrapped__ = fn
        return inner

    return wrap


@_cached("gswnc")
def is_gswnc(R: FiniteRing) -> Verdict:
    """Every non-unit is strongly weakly nil-clean."""
    nonunits = ~units(R).mask
    return _universal("GSWNC", R, search_mask(R, SWNC), nonunits)


@_cached("swnc")
def is_swnc_ring(R: FiniteRing) -> Verdict:
    """Every element is strongly weakly nil-clean."""
    return _universal("SWNC", R, search_mask(R, SWNC))


@_cached("gsnc")
def is_gsnc(R: FiniteRing) -> Verdict:
    """Every non-unit is strongly nil-clean."""
    return _universal("GSNC", R, search_mask(R, SNC), ~units(R).mask)


@_cached("snc")
def is_snc_ring(R: FiniteRing) -> Verdict:
    return _universal("SNC", R, search_mask(R, SNC))


@_cached("wnc")
def is_weakly_nil_clean_ring(R: FiniteRing) -> Verdict:
    """Every element is ``q ± e`` with no commutation requirement."""
    return _universal("WNC", R, search_mask(R, WNC))


@_cached("swc")
def is_strongly_weakly_clean(R: FiniteRing) -> Verdict:
    return _universal("SWC", R, search_mask(R, SWC))


def gswnc_by_criterion(R: FiniteRing) -> bool:
    """GSWNC decided only by the ``a ± a^2`` criterion on non-units."""
    return bool(criterion_mask(R, SWNC)[~units(R).mask].all())


def gswnc_by_search(R: FiniteRing) -> bool:
    """GSWNC decided only by the decomposition search on non-units."""
    return bool(search_mask(R, SWNC)[~units(R).mask].all())


@_cached("uu")
def is_uu(R: FiniteRing) -> Verdict:
    """``U(R) ⊆ 1 + Nil(R)``."""
    nil = nil_set(R).mask
    u = units(R).mask
    idx = R.elements()
    return _universal("UU", R, nil[R.add(idx, R.neg(R.one))], u)


@_cached("wuu")
def is_wuu(R: FiniteRing) -> Verdict:
    """``U(R) = Nil(R) ± 1``."""
    nil = nil_set(R).mask
    u = units(R).mask
    idx = R.elements()
    ok = nil[R.add(idx, R.neg(R.one))] | nil[R.add(idx, R.one)]
    # Nil(R) ± 1 always consists of units; confirm rather than assume
    if not u[R.add(np.flatnonzero(nil), R.one)].all():
        raise InternalInconsistencyError(f"1 + nilpotent is not a unit in {R.label}")
    return _universal("WUU", R, ok, u)


def _sum_closure_violation(R: FiniteRing, subset: np.ndarray) -> tuple[int, int] | None:
    mask = np.zeros(R.size, dtype=bool)
    mask[subset] = True
    step = max(1, _BLOCK // max(1, subset.size))
    for start in range(0, subset.size, step):
        rows = subset[start : start + step, None]
        bad = ~mask[R.add(rows, subset[None, :])]
        hits = np.argwhere(bad)
        if hits.size:
            i, j = hits[0]
            return int(subset[start + i]), int(subset[j])
    return None


@_cached("local")
def is_local(R: FiniteRing) -> Verdict:
    """The non-units are closed under addition; cross-checked against the
    non-units forming a two-sided ideal."""
    nonunits = np.flatnonzero(~units(R).mask)
    if nonunits.size == 0:
        return Verdict("local", True, detail="no non-units")
    pair = _sum_closure_violation(R, nonunits)
    as_ideal = ideal_violation(R, nonunits) is None
    if (pair is None) != as_ideal:
        raise InternalInconsistencyError(f"locality tests disagree on {R.label}")
    if pair is not None:
        return Verdict("local", False, counterexample=pair, detail="sum of two non-units is a unit")
    return Verdict("local", True)


@_cached("trivial_idempotents")
def has_only_trivial_idempotents(R: FiniteRing) -> Verdict:
    mask = idempotents(R).mask.copy()
    ok = np.ones(R.size, dtype=bool)
    ok[mask] = False
    ok[[R.zero, R.one]] = True
    return _universal("trivial_idempotents", R, ok)


@_cached("abelian")
def is_abelian(R: FiniteRing) -> Verdict:
    """All idempotents are central."""
    return _universal("abelian", R, center(R).mask, idempotents(R).mask)


def _right_invertible(R: FiniteRing) -> np.ndarray:
    n = R.size
    idx = R.elements()
    out = np.zeros(n, dtype=bool)
    step = max(1, _BLOCK // n)
    for start in range(0, n, step):
        rows = idx[start : start + step, None]
        out[start : start + step] = (R.mul(rows, idx[None, :]) == R.one).any(axis=1)
    return out


@_cached("dedekind_finite")
def is_dedekind_finite(R: FiniteRing) -> Verdict:
    """``ab = 1`` implies ``ba = 1``: every right-invertible element is a unit."""
    return _universal("dedekind_finite", R, units(R).mask, _right_invertible(R))


@_cached("strongly_pi_regular")
def is_strongly_pi_regular(R: FiniteRing) -> Verdict:
    """For each ``a`` some ``n <= |R|`` has ``a^n ∈ a^(n+1) R``."""
    n = R.size
    idx = R.elements()
    open_ = np.ones(n, dtype=bool)
    witness_n = np.zeros(n, dtype=np.int64)
    power = idx.copy()  # a^k
    for k in range(1, n + 1):
        pos = np.flatnonzero(open_)
        if not pos.size:
            break
        nxt = np.asarray(R.mul(power[pos], pos), dtype=np.int64)  # a^(k+1)
        step = max(1, _BLOCK // n)
        for start in range(0, pos.size, step):
            sl = slice(start, start + step)
            row = R.mul(nxt[sl, None], idx[None, :])
            hit = (row == power[pos[sl], None]).any(axis=1)
            done = pos[sl][hit]
            open_[done] = False
            witness_n[done] = k
        power[pos] = nxt
    res = _universal("strongly_pi_regular", R, ~open_)
    if res.holds:
        return Verdict(res.name, True, detail=f"max n = {int(witness_n.max())}")
    return res


@_cached("2_primal")
def is_2_primal(R: FiniteRing) -> Verdict:
    """The prime radical equals Nil(R)."""
    return _universal("2_primal", R, prime_radical(R).mask, nil_set(R).mask)


@_cached("commutative")
def is_commutative(R: FiniteRing) -> Verdict:
    return _universal("commutative", R, center(R).mask)


PREDICATES: dict[str, Callable[[FiniteRing], Verdict]] = {
    "GSWNC": is_gswnc,
    "SWNC": is_swnc_ring,
    "GSNC": is_gsnc,
    "SNC": is_snc_ring,
    "WNC": is_weakly_nil_clean_ring,
    "SWC": is_strongly_weakly_clean,
    "UU": is_uu,
    "WUU": is_wuu,
    "local": is_local,
    "trivial_idempotents": has_only_trivial_idempotents,
    "abelian": is_abelian,
    "dedekind_finite": is_dedekind_finite,
    "strongly_pi_regular": is_strongly_pi_regular,
    "2_primal": is_2_primal,
    "commutative": is_commutative,
}


@dataclass
class ClassificationReport:
    label: str
    size: int
    results: dict[str, Verdict] = field(default_factory=dict)

    def __getitem__(self, name: str) -> Verdict:
        return self.results[name]

    def to_dict(self, ring: FiniteRing | None = None) -> dict[str, Any]:
        return {
            "ring": self.label,
            "size": self.size,
            "predicates": {k: v.to_dict(ring) for k, v in self.results.items()},
        }


def classify(R: FiniteRing) -> ClassificationReport:
    """Run every predicate on ``R``."""
    report = ClassificationReport(R.label, R.size)
    for name, pred in PREDICATES.items():
        report.results[name] = pred(R)
    return report


__all__ = [
    "ClassificationReport",
    "DECOMPOSERS",
    "Decomposition",
    "KINDS",
    "PREDICATES",
    "SNC",
    "SWC",
    "SWNC",
    "Verdict",
    "WNC",
    "classify",
    "criterion_mask",
    "gswnc_by_criterion",
    "gswnc_by_search",
    "has_only_trivial_idempotents",
    "is_2_primal",
    "is_abelian",
    "is_commutative",
    "is_dedekind_finite",
    "is_gsnc",
    "is_gswnc",
    "is_local",
    "is_snc_ring",
    "is_strongly_pi_regular",
    "is_strongly_weakly_clean",
    "is_swnc_ring",
    "is_uu",
    "is_weakly_nil_clean_ring",
    "is_wuu",
    "search_mask",
    "snc_decompose",
    "swc_decompose",
    "swnc_decompose",
    "wnc_decompose",
]
