"""Executable checks, one registry entry per result (iff results get one
entry per direction).

A check function takes a :class:`Catalog` and yields an :class:`Instance`
for every applicable case; cases whose hypotheses fail are skipped, so a
check that yields nothing is VACUOUS rather than PASS.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

import numpy as np

from .. import groups as grp
from ..classifiers import (
    SWC,
    SWNC,
    criterion_mask,
    gswnc_by_criterion,
    gswnc_by_search,
    has_only_trivial_idempotents,
    is_2_primal,
    is_commutative,
    is_dedekind_finite,
    is_gsnc,
    is_gswnc,
    is_local,
    is_snc_ring,
    is_strongly_pi_regular,
    is_strongly_weakly_clean,
    is_swnc_ring,
    is_uu,
    is_wuu,
    search_mask,
    swc_decompose,
    swnc_decompose,
)
from ..core.constructions import _wrap, corner_ring, quotient
from ..core.ring import FiniteRing
from ..core.sets import ElementSet
from ..errors import UnknownCheckError
from ..expressions import parse, predicted_size
from ..isomorphism import ISOMORPHIC, find_isomorphism
from ..kernels import nil_exponents_of
from ..subsets import (
    ideal_closure,
    ideal_power_vanishes,
    idempotents,
    jacobson_radical,
    nil_set,
    prime_radical,
    units,
)
from .catalog import Catalog


@dataclass
class Instance:
    labels: tuple[str, ...]
    holds: bool
    witnesses: list[dict] = field(default_factory=list)
    note: str = ""

    def to_dict(self) -> dict:
        out = {"labels": list(self.labels), "verdict": "pass" if self.holds else "fail", "witnesses": self.witnesses}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Check:
    id: str
    statement: str
    fn: Callable[[Catalog], Iterable[Instance]]
    bounded: bool = False

    @property
    def location(self) -> str:
        return location_of(self.id)


@dataclass
class CheckResult:
    id: str
    location: str
    statement: str
    bounded: bool
    instances: list[Instance]
    wall_time: float = 0.0

    @property
    def applicable(self) -> int:
        return len(self.instances)

    @property
    def failures(self) -> list[Instance]:
        return [i for i in self.instances if not i.holds]

    @property
    def status(self) -> str:
        if not self.instances:
            return "VACUOUS"
        return "FAIL" if self.failures else "PASS"


REGISTRY: dict[str, Check] = {}

_KINDS = {
    "Prop": "Proposition",
    "Cor": "Corollary",
    "Lemma": "Lemma",
    "Thm": "Theorem",
    "Example": "Example",
    "Remark": "Remark",
}


def location_of(check_id: str) -> str:
    head = check_id.split("(", 1)[0]
    kind, _, num = head.partition("-")
    return f"{_KINDS.get(kind, kind)} {num}".strip()


def check(check_id: str, statement: str, *, bounded: bool = False):
    def wrap(fn):
        if check_id in REGISTRY:
            raise ValueError(f"duplicate check id {check_id}")
        REGISTRY[check_id] = Check(check_id, statement, fn, bounded)
        return fn

    return wrap


def iff(check_id: str, forward: str, backward: str, *, bounded: bool = False):
    """Register ``ID(=>)`` and ``ID(<=)`` from one generator of
    ``(labels, lhs, rhs, witnesses, extra_ok)`` tuples.  ``extra_ok`` is a
    side condition both directions must also satisfy (e.g. a table identity)."""

    def wrap(fn):
        def direction(first: bool):
            def run(cat: Catalog) -> Iterator[Instance]:
                for labels, lhs, rhs, wit, extra in _cached_rows(cat, check_id, fn):
                    hyp, concl = (lhs, rhs) if first else (rhs, lhs)
                    if hyp:
                        yield Instance(labels, bool(concl) and extra is not False, wit, _extra_note(extra))

            return run

        check(f"{check_id}(=>)", forward, bounded=bounded)(direction(True))
        check(f"{check_id}(<=)", backward, bounded=bounded)(direction(False))
        return fn

    return wrap


def _extra_note(extra) -> str:
    return "side condition failed" if extra is False else ""


def _cached_rows(cat: Catalog, key: str, fn):
    store = cat.__dict__.setdefault("_rows", {})
    if key not in store:
        store[key] = list(fn(cat))
    return store[key]


# -- small helpers ------------------------------------------------------------


def W(role: str, R: FiniteRing, i) -> dict:
    i = int(i)
    return {"role": role, "ring": R.label, "index": i, "coords": _plain(R.coords(i))}


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return int(x)


def G(R: FiniteRing) -> bool:
    return is_gswnc(R).holds


def SW(R: FiniteRing) -> bool:
    return is_swnc_ring(R).holds


def SN(R: FiniteRing) -> bool:
    return is_snc_ring(R).holds


def GS(R: FiniteRing) -> bool:
    return is_gsnc(R).holds


def counter(R: FiniteRing, verdict, role: str = "counterexample") -> list[dict]:
    ce = verdict.counterexample
    return [W(role, R, ce)] if isinstance(ce, (int, np.integer)) else []


def two(R: FiniteRing) -> int:
    return R.integer(2)


def two_is_unit(R: FiniteRing) -> bool:
    return bool(units(R).mask[two(R)])


def is_nil(R: FiniteRing, x) -> bool:
    return bool(nil_set(R).mask[int(x)])


def J_is_nil(R: FiniteRing) -> bool:
    return jacobson_radical(R) <= nil_set(R)


def mod_J(R: FiniteRing) -> FiniteRing:
    return R.memo("harness:mod_J", lambda: quotient(R, jacobson_radical(R), label=f"{_wrap(R)}/J"))


def product_label(labels: Iterable[str]) -> str:
    return " x ".join(f"({t})" if " x " in t else t for t in labels)


def nonzero(R: FiniteRing) -> bool:
    return R.size > 1


# -- matrix units -------------------------------------------------------------


def find_matrix_units(R: FiniteRing, n: int = 3) -> dict | None:
    """Orthogonal nonzero idempotents ``e_1..e_n`` with ``x_k ∈ e_1Re_k``,
    ``y_k ∈ e_kRe_1``, ``x_k y_k = e_1``, ``y_k x_k = e_k``.  These exist
    exactly when some corner of ``R`` is an n×n matrix ring."""
    idem = [int(e) for e in idempotents(R).indices if e != R.zero]
    ids = np.array(idem, dtype=np.int64)
    idx = R.elements()
    if not idem:
        return None
    prod_l = R.mul(ids[:, None], ids[None, :])
    orth = (prod_l == R.zero) & (prod_l.T == R.zero)
    pos = {e: k for k, e in enumerate(idem)}

    def link(e1, ek):
        X = np.unique(R.mul(R.mul(e1, idx), ek))
        Y = np.unique(R.mul(R.mul(ek, idx), e1))
        xy = R.mul(X[:, None], Y[None, :]) == e1
        yx = R.mul(Y[None, :], X[:, None]) == ek
        hit = np.argwhere(xy & yx)
        if hit.size == 0:
            return None
        return int(X[hit[0, 0]]), int(Y[hit[0, 1]])

    def extend(chosen, links):
        if len(chosen) == n:
            return {"idempotents": chosen, "links": links}
        mask = np.ones(len(idem), dtype=bool)
        for e in chosen:
            mask &= orth[pos[e]]
        for k in np.flatnonzero(mask):
            ek = idem[k]
            if ek < chosen[-1]:
                continue
            pair = link(chosen[0], ek)
            if pair is None:
                continue
            found = extend(chosen + [ek], links + [pair])
            if found:
                return found
        return None

    for e1 in idem:
        found = extend([e1], [])
        if found:
            return found
    return None


# -- families -----------------------------------------------------------------

PAIR_BASE = ("Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z9", "GF(2,2)", "Z2 x Z2", "T2(Z2)", "S2(Z3)", "M2(Z2)", "TE(Z2)")
TRIPLE_BASE = ("Z2", "Z3", "Z4", "Z5", "Z6", "GF(2,2)", "TE(Z2)")
POWER_BASE = ("Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z9", "GF(2,2)", "T2(Z2)")


def _size_of(cat: Catalog, label: str) -> int:
    return predicted_size(parse(label))


def pair_products(cat: Catalog) -> list[tuple[str, tuple[str, ...]]]:
    out = []
    for a, b in itertools.combinations_with_replacement(PAIR_BASE, 2):
        lab = product_label([a, b])
        if _size_of(cat, lab) <= 256:
            out.append((lab, (a, b)))
    return out


def triple_products(cat: Catalog) -> list[tuple[str, tuple[str, ...]]]:
    out = []
    for combo in itertools.combinations_with_replacement(TRIPLE_BASE, 3):
        lab = product_label(combo)
        if _size_of(cat, lab) <= 512:
            out.append((lab, combo))
    return out


def catalog_products(cat: Catalog, min_factors: int = 2) -> list[tuple[str, tuple[str, ...]]]:
    out = []
    for lab in cat.ring_labels:
        R = cat.ring(lab)
        factors = getattr(R, "factors", None)
        if factors and len(factors) >= min_factors:
            out.append((lab, tuple(f.label for f in factors)))
    return out


def power_family(cat: Catalog) -> list[tuple[str, str, int]]:
    out = []
    for base in POWER_BASE:
        for n in (3, 4):
            lab = product_label([base] * n)
            if _size_of(cat, lab) <= 1296:
                out.append((lab, base, n))
    return out


# ============================================================================
# Section 2: general properties
# ============================================================================


@check("Lemma-2.2", "If a is strongly weakly nil-clean then -a is strongly weakly clean, with the explicit unit and idempotent built from the nil-clean parts.")
def _lemma_2_2(cat):
    for R in cat.rings():
        bad = None
        count = 0
        for a in range(R.size):
            d = swnc_decompose(R, a)
            if d is None:
                continue
            count += 1
            e, q = d.first_part, d.nil_or_idem_part
            f = int(R.sub(R.one, e))
            if d.sign > 0:
                u, s = int(R.neg(R.add(R.one, q))), 1
            else:
                u, s = int(R.sub(R.one, q)), -1
            target = int(R.neg(a))
            rhs = int(R.add(u, f)) if s > 0 else int(R.sub(u, f))
            ok = (
                units(R).mask[u]
                and int(R.mul(f, f)) == f
                and int(R.mul(u, f)) == int(R.mul(f, u))
                and rhs == target
                and swc_decompose(R, target) is not None
            )
            if not ok:
                bad = a
                break
        if count:
            yield Instance((R.label,), bad is None, [W("element", R, bad)] if bad is not None else [])


@check("Cor-2.3", "Every GSWNC ring is strongly weakly clean.")
def _cor_2_3(cat):
    for R in cat.rings():
        if G(R):
            v = is_strongly_weakly_clean(R)
            yield Instance((R.label,), v.holds, counter(R, v))


@check("Remark-2.3", "M2(Z2), M2(Z3) and Z3 x Z3 are GSWNC but not SWNC; M2(Z3), Z3 x Z3 and Z2 x Z3 are GSWNC but not GSNC.")
def _remark_2_3(cat):
    for lab in ("M2(Z2)", "M2(Z3)", "Z3 x Z3"):
        R = cat.ring(lab)
        v = is_swnc_ring(R)
        yield Instance((lab, "not SWNC"), G(R) and not v.holds, counter(R, v))
    for lab in ("M2(Z3)", "Z3 x Z3", "Z2 x Z3"):
        R = cat.ring(lab)
        v = is_gsnc(R)
        yield Instance((lab, "not GSNC"), G(R) and not v.holds, counter(R, v))


@check("Lemma-2.4", "Each factor of a GSWNC direct product is GSWNC.")
def _lemma_2_4(cat):
    for lab, factors in catalog_products(cat) + pair_products(cat) + triple_products(cat):
        P = cat.ring(lab)
        if G(P):
            bad = [f for f in factors if not G(cat.ring(f))]
            yield Instance((lab,), not bad, note=f"non-GSWNC factor {bad[0]}" if bad else "")


@check("Prop-2.5", "If R x S is GSWNC (both nonzero) then R and S are strongly weakly nil-clean.")
def _prop_2_5(cat):
    cases = catalog_products(cat) + pair_products(cat) + triple_products(cat)
    for lab, factors in cases:
        P = cat.ring(lab)
        if not G(P) or any(cat.ring(f).size == 1 for f in factors):
            continue
        # every split into one factor and the product of the others
        bad = []
        for k, f in enumerate(factors):
            rest = factors[:k] + factors[k + 1 :]
            parts = [f, rest[0] if len(rest) == 1 else product_label(rest)]
            bad += [p for p in parts if not SW(cat.ring(p))]
        yield Instance((lab,), not bad, note=f"{bad[0]} is not SWNC" if bad else "")


def _prop_2_6_rows(cat):
    for lab, factors in catalog_products(cat, 3) + triple_products(cat):
        P = cat.ring(lab)
        rings = [cat.ring(f) for f in factors]
        rhs = all(SW(r) for r in rings) and sum(not SN(r) for r in rings) <= 1
        yield (lab,), G(P), rhs, [], None


iff(
    "Prop-2.6",
    "A GSWNC product of at least three nonzero rings has all factors SWNC and at most one factor not SNC.",
    "A product of at least three rings, all SWNC and at most one not SNC, is GSWNC.",
)(_prop_2_6_rows)


def _cor_2_7_rows(cat):
    for lab, base, n in power_family(cat):
        P, R = cat.ring(lab), cat.ring(base)
        yield (lab, base), G(P), GS(P), SN(P), SN(R)


@check("Cor-2.7(=>)", "For n >= 3, if R^n is GSWNC then R^n is GSNC and SNC and R is SNC.")
def _cor_2_7_fwd(cat):
    for labels, g, gs, snp, snr in _cached_rows(cat, "Cor-2.7", _cor_2_7_rows):
        if g:
            yield Instance(labels, gs and snp and snr)


@check("Cor-2.7(<=)", "For n >= 3, if R is SNC then R^n is GSWNC, GSNC and SNC.")
def _cor_2_7_back(cat):
    for labels, g, gs, snp, snr in _cached_rows(cat, "Cor-2.7", _cor_2_7_rows):
        if snr:
            yield Instance(labels, g and gs and snp)


def _cor_2_8_rows(cat):
    for lab, base, n in power_family(cat):
        P, R = cat.ring(lab), cat.ring(base)
        yield (lab, base), GS(P), SN(R), [], None


iff(
    "Cor-2.8",
    "For n >= 3, R^n GSNC forces R to be SNC.",
    "For n >= 3, R SNC makes R^n GSNC.",
)(_cor_2_8_rows)


PROP_2_9_BASE = ("Z2", "Z3", "Z4", "GF(2,2)")


def _prop_2_9_rows(cat):
    for base in PROP_2_9_BASE:
        R = cat.ring(base)
        tri = {n: cat.ring(f"T{n}({base})") for n in (1, 2, 3)}
        labels = (base,) + tuple(T.label for T in tri.values())
        ii = all(SW(tri[n]) for n in (1, 2, 3))
        yield labels, SN(R), ii, SW(tri[3]), G(tri[3])


@check("Prop-2.9(=>)", "If R is SNC then T_n(R) is SWNC for n = 1, 2, 3 and T_3(R) is GSWNC (bounded to n <= 3).", bounded=True)
def _prop_2_9_fwd(cat):
    for labels, i, ii, iii, iv in _cached_rows(cat, "Prop-2.9", _prop_2_9_rows):
        if i:
            yield Instance(labels, ii and iii and iv)


@check("Prop-2.9(<=)", "If T_n(R) is SWNC for n <= 3, or T_3(R) is SWNC or GSWNC, then R is SNC (bounded to n <= 3).", bounded=True)
def _prop_2_9_back(cat):
    for labels, i, ii, iii, iv in _cached_rows(cat, "Prop-2.9", _prop_2_9_rows):
        if ii or iii or iv:
            yield Instance(labels, i)


@check("Example-2.9", "T2(Z3) is GSWNC even though Z3 is not SNC.")
def _example_2_9(cat):
    T, Z = cat.ring("T2(Z3)"), cat.ring("Z3")
    yield Instance((T.label, Z.label), G(T) and not SN(Z))


@check("Lemma-2.10", "The Jacobson radical of a GSWNC ring is nil.")
def _lemma_2_10(cat):
    for R in cat.rings():
        if G(R):
            J, N = jacobson_radical(R), nil_set(R)
            bad = np.flatnonzero(J.mask & ~N.mask)
            yield Instance((R.label,), bad.size == 0, [W("non-nilpotent", R, bad[0])] if bad.size else [])


@check("Prop-2.11", "R is GSWNC exactly when a + a^2 or a - a^2 is nilpotent for every non-unit a; criterion and decomposition search agree.")
def _prop_2_11(cat):
    for R in cat.rings():
        nonunit = ~units(R).mask
        crit, srch = criterion_mask(R, SWNC), search_mask(R, SWNC)
        diff = np.flatnonzero(nonunit & (crit != srch))
        ok = diff.size == 0 and gswnc_by_criterion(R) == gswnc_by_search(R) == G(R)
        yield Instance((R.label,), ok, [W("disagreement", R, diff[0])] if diff.size else [])


@check("Cor-2.12", "Every GSWNC ring is strongly pi-regular.")
def _cor_2_12(cat):
    for R in cat.rings():
        if G(R):
            v = is_strongly_pi_regular(R)
            yield Instance((R.label,), v.holds, counter(R, v))


def _nil_ideals(R: FiniteRing, limit: int = 6) -> list[tuple[str, np.ndarray]]:
    """Nonzero nil ideals: J (when nil), the prime radical and principal
    ideals of nilpotents (small rings only)."""
    nil = nil_set(R).mask
    seen, out = set(), []

    def add(name, mask):
        key = mask.tobytes()
        if mask.sum() > 1 and key not in seen and not (mask & ~nil).any():
            seen.add(key)
            out.append((name, mask))

    add("J", jacobson_radical(R).mask)
    add("P", prime_radical(R).mask)
    if R.size <= 256:
        for q in np.flatnonzero(nil):
            if len(out) >= limit:
                break
            if q != R.zero:
                add(f"<{int(q)}>", ideal_closure(R, [int(q)]).mask)
    return out


def _prop_2_13_i_rows(cat):
    for R in cat.rings():
        for name, mask in _nil_ideals(R):
            ideal = ElementSet(R, mask=mask)
            Q = R.memo(f"harness:quot:{name}", lambda: quotient(R, ideal, label=f"{_wrap(R)}/{name}"))
            yield (R.label, Q.label), G(R), G(Q), [], None


iff(
    "Prop-2.13(i)",
    "For a nil ideal I, R GSWNC implies R/I GSWNC.",
    "For a nil ideal I, R/I GSWNC implies R GSWNC.",
)(_prop_2_13_i_rows)


def _prop_2_13_ii_rows(cat):
    for R in cat.rings():
        yield (R.label,), G(R), J_is_nil(R) and G(mod_J(R)), [], None


iff(
    "Prop-2.13(ii)",
    "A GSWNC ring has nil J(R) and GSWNC R/J(R).",
    "If J(R) is nil and R/J(R) is GSWNC then R is GSWNC.",
)(_prop_2_13_ii_rows)


@check("Lemma-2.14", "Every corner eRe (e a nonzero idempotent) of a GSWNC ring is GSWNC.")
def _lemma_2_14(cat):
    for R in cat.rings():
        if not G(R):
            continue
        seen, bad, n = set(), None, 0
        for e in idempotents(R).indices:
            if e == R.zero:
                continue
            C = corner_ring(R, int(e))
            key = C.embedding.tobytes()
            if key in seen:
                continue
            seen.add(key)
            n += 1
            if not G(C):
                bad = int(e)
                break
        yield Instance((R.label,), bad is None, [W("idempotent", R, bad)] if bad is not None else [], f"{n} distinct corners")


def _te_rows(cat):
    for lab in cat.ring_labels + tuple(cat.group_ring_labels):
        R = cat.ring(lab)
        if 1 < R.size <= 27 or lab == "Z3 x Z3":
            T = cat.ring(f"TE({lab})")
            yield (lab, T.label), G(R), G(T), [], None


iff(
    "Cor-2.17",
    "If R is GSWNC then the trivial extension T(R, R) is GSWNC.",
    "If T(R, R) is GSWNC then R is GSWNC.",
)(_te_rows)

SKEW_BASE = (
    ("GF(2,2)", "frobenius"),
    ("GF(2,2)", "id"),
    ("Z4", "id"),
    ("Z2", "id"),
    ("Z3", "id"),
    ("Z6", "id"),
    ("GF(2,3)", "frobenius"),
    ("GF(3,2)", "frobenius"),
    ("Z3 x Z3", "id"),
)


def _skew_family(cat, kind: str):
    for base, alpha in SKEW_BASE:
        for n in (2, 3):
            lab = f"{kind}{n}({base}, {alpha})"
            if _size_of(cat, lab) <= 4096:
                yield base, alpha, n, lab


def _cor_2_20_rows(cat):
    for base, alpha, n, lab in _skew_family(cat, "Tskew"):
        R, T = cat.ring(base), cat.ring(lab)
        yield (base, lab), G(R), G(T), [], None


iff(
    "Cor-2.20",
    "If R is GSWNC then the skew triangular ring T_n(R, alpha) is GSWNC.",
    "If T_n(R, alpha) is GSWNC then R is GSWNC.",
)(_cor_2_20_rows)


def _cor_2_21_rows(cat):
    for base, alpha, n, lab in _skew_family(cat, "SkewPoly"):
        R, P = cat.ring(base), cat.ring(lab)
        T = cat.ring(f"Tskew{n}({base}, {alpha})")
        yield (base, lab), G(R), G(P), [], P.same_tables(T)


iff(
    "Cor-2.21",
    "If R is GSWNC then R[x, alpha]/(x^n) is GSWNC; its tables coincide with T_n(R, alpha).",
    "If R[x, alpha]/(x^n) is GSWNC then R is GSWNC.",
)(_cor_2_21_rows)


def _cor_2_22_rows(cat):
    for base in ("Z2", "Z3", "Z4", "Z6", "GF(2,2)", "Z3 x Z3"):
        for n in (2, 3, 4):
            lab = f"SkewPoly{n}({base}, id)"
            if _size_of(cat, lab) > 4096:
                continue
            R, P = cat.ring(base), cat.ring(lab)
            Tz = cat.ring(f"Toeplitz{n}({base})")
            yield (base, lab), G(R), G(P), [], P.same_tables(Tz)


iff(
    "Cor-2.22",
    "If R is GSWNC then R[x]/(x^n) is GSWNC; it matches the Toeplitz subring of T_n(R).",
    "If R[x]/(x^n) is GSWNC then R is GSWNC.",
)(_cor_2_22_rows)


def _cor_2_57_rows(cat):
    for base in ("Z2", "Z3", "Z4", "Z5", "Z6", "GF(2,2)", "Z2 x Z3", "Z3 x Z3"):
        for n in (2, 3, 4):
            lab = f"S{n}({base})"
            if _size_of(cat, lab) > 4096:
                continue
            R, S = cat.ring(base), cat.ring(lab)
            yield (base, lab), G(R), G(S), [], None


iff(
    "Cor-2.57",
    "If R is GSWNC then S_n(R) (equal diagonal, upper triangular) is GSWNC.",
    "If S_n(R) is GSWNC then R is GSWNC.",
)(_cor_2_57_rows)


@check("Example-2.24", "M2(Z2) is the union of its units, idempotents and nilpotents, is GSWNC and is not SWNC.")
def _example_2_24(cat):
    R = cat.ring("M2(Z2)")
    cover = units(R).mask | idempotents(R).mask | nil_set(R).mask
    v = is_swnc_ring(R)
    yield Instance((R.label,), bool(cover.all()) and G(R) and not v.holds, counter(R, v))


@check("Example-2.24b", "M2(Z_{2^k}) is GSWNC for k = 1, 2, 3.")
def _example_2_24b(cat):
    for k in (1, 2, 3):
        R = cat.ring(f"M2(Z{2**k})")
        v = is_gswnc(R)
        yield Instance((R.label,), v.holds, counter(R, v))


A_MATRIX = [[1, 1, 0], [1, 0, 0], [0, 0, 0]]


def _pad(A, n):
    return [row + [0] * (n - len(row)) for row in A] + [[0] * n for _ in range(n - len(A))]


@check("Thm-2.25", "For n >= 3, M_n(R) is not GSWNC: the non-unit A = [[1,1,0],[1,0,0],[0,0,0]] (padded) has A + A^2 and A - A^2 both non-nilpotent.")
def _thm_2_25(cat):
    for lab, n in (("M3(Z2)", 3), ("M3(Z3)", 3), ("M4(Z2)", 4)):
        R = cat.ring(lab)
        a = R.from_coords(_pad(A_MATRIX, n))
        a2 = int(R.mul(a, a))
        plus, minus = int(R.add(a, a2)), int(R.sub(a, a2))
        exps = nil_exponents_of(R, np.array([plus, minus]))
        nonunit = not bool((R.mul(a, R.elements()) == R.one).any())
        ok = nonunit and exps[0] == 0 and exps[1] == 0
        wit = [W("A", R, a)]
        if R.materialized:
            v = is_gswnc(R)
            ok = ok and not v.holds
            wit += counter(R, v, "first counterexample")
        yield Instance((lab,), ok, wit)


@check("Cor-2.35", "No corner of a GSWNC ring is an n x n matrix ring with n >= 3 (searched as a system of 3 x 3 matrix units).")
def _cor_2_35(cat):
    control = find_matrix_units(cat.ring("M3(Z2)"))
    for R in cat.rings():
        if G(R):
            found = find_matrix_units(R)
            wit = [W("idempotent", R, e) for e in found["idempotents"]] if found else []
            yield Instance(
                (R.label,),
                found is None and control is not None,
                wit,
                "" if control is not None else "control search failed on M3(Z2)",
            )


@check("Cor-2.36", "Every GSWNC ring is Dedekind-finite.")
def _cor_2_36(cat):
    for R in cat.rings():
        if G(R):
            v = is_dedekind_finite(R)
            yield Instance((R.label,), v.holds, counter(R, v))


@check("Lemma-2.26", "If M2(R) is GSWNC then R is SWNC.")
def _lemma_2_26(cat):
    for base in ("Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "GF(2,2)", "Z2 x Z2", "TE(Z2)", "GR(Z2, C2)"):
        M = cat.ring(f"M2({base})")
        if G(M):
            R = cat.ring(base)
            v = is_swnc_ring(R)
            yield Instance((base, M.label), v.holds, counter(R, v))


@check("Lemma-2.27", "A local ring with nil Jacobson radical is GSWNC.")
def _lemma_2_27(cat):
    for R in cat.rings():
        if is_local(R).holds and J_is_nil(R):
            v = is_gswnc(R)
            yield Instance((R.label,), v.holds, counter(R, v))


def _cor_2_50_rows(cat):
    for R in cat.rings():
        if has_only_trivial_idempotents(R).holds:
            yield (R.label,), G(R), is_local(R).holds and J_is_nil(R), [], None


iff(
    "Cor-2.50",
    "A GSWNC ring with only trivial idempotents is local with nil J(R).",
    "A local ring with nil J(R) (trivial idempotents) is GSWNC.",
)(_cor_2_50_rows)


@check("Lemma-2.55", "If R is GSWNC and 2 is not a unit then 2 or 6 is nilpotent.")
def _lemma_2_55(cat):
    for R in cat.rings():
        if G(R) and not two_is_unit(R):
            yield Instance((R.label,), is_nil(R, two(R)) or is_nil(R, R.integer(6)), [W("2", R, two(R))])


def _lemma_2_29_rows(cat):
    for R in cat.rings():
        if jacobson_radical(R).mask[two(R)]:
            yield (R.label,), G(R), GS(R), [], None


iff(
    "Lemma-2.29",
    "When 2 lies in J(R), a GSWNC ring is GSNC.",
    "When 2 lies in J(R), a GSNC ring is GSWNC.",
)(_lemma_2_29_rows)


def _lemma_2_56_rows(cat):
    for R in cat.rings():
        if not two_is_unit(R):
            yield (R.label,), G(R), GS(R) or SW(R), [], None


iff(
    "Lemma-2.56",
    "When 2 is not a unit, a GSWNC ring is GSNC or SWNC.",
    "When 2 is not a unit, a GSNC or SWNC ring is GSWNC.",
)(_lemma_2_56_rows)


def _lemma_2_30_rows(cat):
    for R in cat.rings():
        yield (R.label,), SW(R), is_wuu(R).holds and G(R), [], None


iff(
    "Lemma-2.30",
    "An SWNC ring is WUU and GSWNC.",
    "A ring that is WUU and GSWNC is SWNC.",
)(_lemma_2_30_rows)


def _lemma_2_31_rows(cat):
    for R in cat.rings():
        yield (R.label,), SN(R), G(R) and is_uu(R).holds, [], None


iff(
    "Lemma-2.31",
    "An SNC ring is GSWNC and UU.",
    "A GSWNC UU ring is SNC.",
)(_lemma_2_31_rows)


@check("Example-2.33", "R[x] and R[[x]] are not GSWNC: in R[x]/(x^n) the non-unit x has x + x^2 and x - x^2 of nilpotency index exactly n, so no power kills them in R[x] or R[[x]].", bounded=True)
def _example_2_33(cat):
    for base, top in (("Z2", 7), ("Z3", 5), ("Z4", 4)):
        labels, ok, wit = [base], True, []
        for n in range(2, top + 1):
            P = cat.ring(f"SkewPoly{n}({base}, id)")
            x = P.from_coords([0, 1] + [0] * (n - 2))
            x2 = int(P.mul(x, x))
            exps = nil_exponents_of(P, np.array([int(P.add(x, x2)), int(P.sub(x, x2))]))
            in_j = bool(jacobson_radical(P).mask[x])
            step = in_j and not units(P).mask[x] and int(exps[0]) == n and int(exps[1]) == n
            labels.append(P.label)
            if not step and ok:
                ok = False
                wit.append(W("x", P, x))
        yield Instance(tuple(labels), ok, wit)


@check("Thm-2.38", "If R is 2-primal, local and SWNC then M2(R) is GSWNC.")
def _thm_2_38(cat):
    for base in ("Z1", "Z2", "Z3", "Z4", "Z5", "Z7", "Z8", "GF(2,2)", "GF(2,3)", "Z2 x Z2", "T2(Z2)", "TE(Z2)", "S2(Z2)", "GR(Z2, C2)"):
        R = cat.ring(base)
        if is_2_primal(R).holds and is_local(R).holds and SW(R):
            M = cat.ring(f"M2({base})")
            v = is_gswnc(M)
            yield Instance((base, M.label), v.holds, counter(M, v))


# -- semi-local / Artinian characterisation ----------------------------------

BRANCH_TARGETS = (("R/J = M2(Z2)", "M2(Z2)"), ("R/J = M2(Z3)", "M2(Z3)"), ("R/J = Z3 x Z3", "Z3 x Z3"))


def branches(cat: Catalog, R: FiniteRing) -> tuple[list[str], list[str]]:
    """Branches of the characterisation satisfied by ``R`` plus notes on
    fingerprint collisions."""

    def compute():
        hit, notes = [], []
        jnil = J_is_nil(R)
        if is_local(R).holds and jnil:
            hit.append("local with nil J")
        if jnil:
            Q = mod_J(R)
            for name, target in BRANCH_TARGETS:
                res = find_isomorphism(Q, cat.ring(target))
                if res.status == ISOMORPHIC:
                    hit.append(name)
                elif res.status not in ("fingerprint-mismatch",):
                    notes.append(f"{name}: {res.status}")
        if SW(R):
            hit.append("SWNC")
        return hit, notes

    return R.memo("harness:branches", compute)


def _semilocal_rows(cat):
    for R in cat.rings():
        hit, notes = branches(cat, R)
        yield (R.label, "; ".join(hit) or "no branch"), G(R), bool(hit), [], None


iff(
    "Thm-2.36",
    "A semi-local GSWNC ring is local with nil J, or has nil J with R/J one of M2(Z2), M2(Z3), Z3 x Z3, or is SWNC.",
    "A semi-local ring in one of those branches is GSWNC.",
)(_semilocal_rows)

iff(
    "Cor-2.40",
    "A finite (Artinian) GSWNC ring falls in one of the branches.",
    "A finite ring in one of the branches is GSWNC.",
)(_semilocal_rows)


def _cor_2_39_rows(cat):
    for R in cat.rings():
        if R.size > 1 and not jacobson_radical(R).mask.sum() > 1:
            division = bool(units(R).mask.sum() == R.size - 1)
            hit, _ = branches(cat, R)
            iso = [h for h in hit if h.startswith("R/J")]
            found = (["division ring"] if division else []) + iso + (["SWNC"] if SW(R) else [])
            yield (R.label, "; ".join(found) or "no branch"), G(R), bool(found), [], None


iff(
    "Cor-2.39",
    "A semisimple GSWNC ring is a division ring, M2(Z2), M2(Z3), Z3 x Z3 or SWNC.",
    "A semisimple ring of one of those kinds is GSWNC.",
)(_cor_2_39_rows)


@check("Lemma-2.49", "A GSWNC ring in which 2 is a unit and every unit squares to 1 is commutative.")
def _lemma_2_49(cat):
    for R in cat.rings():
        if not (G(R) and two_is_unit(R)):
            continue
        u = units(R).indices
        if (R.mul(u, u) == R.one).all():
            v = is_commutative(R)
            yield Instance((R.label,), v.holds, counter(R, v))


# -- Morita contexts ----------------------------------------------------------

K_FAMILY = (("Z2", 0), ("Z3", 0), ("Z4", 0), ("Z4", 2), ("Z5", 0), ("Z6", 0), ("GF(2,2)", 0), ("Z8", 0), ("Z8", 2), ("Z8", 4))
T2_FAMILY = ("Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z9", "GF(2,2)", "Z2 x Z2", "Z3 x Z3", "TE(Z2)")


def _digits(R: FiniteRing, base: FiniteRing) -> list[np.ndarray]:
    return [np.asarray(d) for d in R.radix.split(R.elements())]


def _context_J(cat, lab: str, base: str, layout: str) -> bool:
    """J of a 2x2 context ring equals [[J(A), M], [N, J(B)]]."""
    R, A = cat.ring(lab), cat.ring(base)
    jA = jacobson_radical(A).mask
    d = _digits(R, A)
    if layout == "full":  # a, m, n, b
        expect = jA[d[0]] & jA[d[3]]
    else:  # triangular: a, m, b
        expect = jA[d[0]] & jA[d[2]]
    return bool(np.array_equal(expect, jacobson_radical(R).mask))


def _prop_2_41_rows(cat):
    for base, s in K_FAMILY:
        lab = f"K({base}, {s})"
        A = cat.ring(base)
        R = cat.ring(lab)
        yield (lab, base), G(R), None, [], ("fwd", SW(A), SN(A), _context_J(cat, lab, base, "full"))
    for base in T2_FAMILY:
        lab = f"T2({base})"
        A = cat.ring(base)
        R = cat.ring(lab)
        yield (lab, base), G(R), None, [], ("fwd", SW(A), SN(A), _context_J(cat, lab, base, "tri"))


@check("Prop-2.41(=>)", "If a Morita context with nilpotent MN and NM is GSWNC then A and B are SWNC (and J has the block form).")
def _prop_2_41_fwd(cat):
    for labels, g, _, _, (_, sw, _, jok) in _cached_rows(cat, "Prop-2.41", _prop_2_41_rows):
        if g:
            yield Instance(labels, sw and jok, note="" if jok else "J block form differs")


@check("Prop-2.41(<=)", "If one corner ring is SNC and the other SWNC, the Morita context with nilpotent MN and NM is GSWNC.")
def _prop_2_41_back(cat):
    for labels, g, _, _, (_, _, conv, jok) in _cached_rows(cat, "Prop-2.41", _prop_2_41_rows):
        if conv:
            yield Instance(labels, g and jok)


@check("Prop-2.41(J)", "J of such a Morita context is [[J(A), M], [N, J(B)]].")
def _prop_2_41_j(cat):
    for labels, _, _, _, (_, _, _, jok) in _cached_rows(cat, "Prop-2.41", _prop_2_41_rows):
        yield Instance(labels, jok)


def _cor_2_42_rows(cat):
    for base in T2_FAMILY:
        A, T = cat.ring(base), cat.ring(f"T2({base})")
        yield (T.label, base), G(T), SW(A), [], None


@check("Cor-2.42(=>)", "If the formal triangular ring T(A, A, A) is GSWNC then A is SWNC.")
def _cor_2_42_fwd(cat):
    for labels, g, sw, wit, _ in _cached_rows(cat, "Cor-2.42", _cor_2_42_rows):
        if g:
            yield Instance(labels, sw, wit)


@check("Cor-2.42(<=)", "If A is SNC then the formal triangular ring T(A, A, A) is GSWNC.")
def _cor_2_42_back(cat):
    for labels, g, _, wit, _ in _cached_rows(cat, "Cor-2.42", _cor_2_42_rows):
        if SN(cat.ring(labels[1])):
            yield Instance(labels, g, wit)


def _cor_2_43_rows(cat):
    for base, s in K_FAMILY:
        R, K = cat.ring(base), cat.ring(f"K({base}, {s})")
        yield (K.label, base), G(K), SW(R), SN(R), None


@check("Cor-2.43(=>)", "For s central and nilpotent, K_s(R) GSWNC implies R SWNC.")
def _cor_2_43_fwd(cat):
    for labels, g, sw, _, _ in _cached_rows(cat, "Cor-2.43", _cor_2_43_rows):
        if g:
            yield Instance(labels, sw)


@check("Cor-2.43(<=)", "For s central and nilpotent and R SNC, K_s(R) is GSWNC.")
def _cor_2_43_back(cat):
    for labels, g, _, sn, _ in _cached_rows(cat, "Cor-2.43", _cor_2_43_rows):
        if sn:
            yield Instance(labels, g)


MF_FAMILY = (("Z2", 0, 2), ("Z3", 0, 2), ("Z4", 0, 2), ("Z4", 2, 2), ("Z6", 0, 2), ("Z8", 4, 2), ("Z2", 0, 3), ("Z4", 2, 1))


def _cor_2_44_rows(cat):
    for base, s, n in MF_FAMILY:
        R, M = cat.ring(base), cat.ring(f"MF{n}({base}, {s})")
        yield (M.label, base), G(M), SW(R), SN(R), None


@check("Cor-2.44(=>)", "For s central and nilpotent, M_n(R; s) GSWNC implies R SWNC.")
def _cor_2_44_fwd(cat):
    for labels, g, sw, _, _ in _cached_rows(cat, "Cor-2.44", _cor_2_44_rows):
        if g:
            yield Instance(labels, sw)


@check("Cor-2.44(<=)", "For s central and nilpotent and R SNC, M_n(R; s) is GSWNC.")
def _cor_2_44_back(cat):
    for labels, g, _, sn, _ in _cached_rows(cat, "Cor-2.44", _cor_2_44_rows):
        if sn:
            yield Instance(labels, g)


@check("Cor-2.44(identity)", "M2(R; s) has the same tables as K_{s^2}(R), and M1(R; s) the same tables as R.")
def _cor_2_44_identity(cat):
    for base, s in (("Z2", 0), ("Z3", 0), ("Z4", 0), ("Z4", 2), ("Z6", 0), ("Z8", 2)):
        R = cat.ring(base)
        s2 = int(R.mul(s, s))
        M, K = cat.ring(f"MF2({base}, {s})"), cat.ring(f"K({base}, {R.coords(s2)})")
        yield Instance((M.label, K.label), M.same_tables(K))
    for base, s in (("Z4", 2), ("Z3", 0)):
        M, R = cat.ring(f"MF1({base}, {s})"), cat.ring(base)
        yield Instance((M.label, R.label), M.same_tables(R))


def _trivial_context_identity(cat, base: str) -> bool:
    """K_0(R) multiplies as the trivial extension of R x R by M + N with
    (a,b)(m,n) = (am, bn) and (m,n)(a,b) = (mb, na)."""
    K, R = cat.ring(f"K({base}, 0)"), cat.ring(base)
    d = _digits(K, R)
    a, m, n, b = (x[:, None] for x in d)
    a2, m2, n2, b2 = (x[None, :] for x in d)
    expect = K.radix.join(
        [R.mul(a, a2), R.add(R.mul(a, m2), R.mul(m, b2)), R.add(R.mul(b, n2), R.mul(n, a2)), R.mul(b, b2)]
    )
    idx = K.elements()
    return bool(np.array_equal(expect, K.mul(idx[:, None], idx[None, :])))


def _cor_2_45_rows(cat):
    for base in ("Z2", "Z3", "Z4", "Z5", "Z6", "GF(2,2)"):
        R, K = cat.ring(base), cat.ring(f"K({base}, 0)")
        yield (K.label, base), G(K), SW(R), SN(R), _trivial_context_identity(cat, base)


@check("Cor-2.45(=>)", "A GSWNC trivial Morita context (realised as K_0(R), a trivial extension of R x R) has SWNC corner rings.")
def _cor_2_45_fwd(cat):
    for labels, g, sw, _, ident in _cached_rows(cat, "Cor-2.45", _cor_2_45_rows):
        if g:
            yield Instance(labels, sw and ident, note="" if ident else "trivial extension identity failed")


@check("Cor-2.45(<=)", "A trivial Morita context with SNC corner rings is GSWNC.")
def _cor_2_45_back(cat):
    for labels, g, _, sn, ident in _cached_rows(cat, "Cor-2.45", _cor_2_45_rows):
        if sn:
            yield Instance(labels, g and ident)


# ============================================================================
# Group rings
# ============================================================================


def _primes(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]


def _delta(RG: FiniteRing):
    return grp.augmentation_ideal(RG)


def _delta_nil(RG: FiniteRing) -> bool:
    return _delta(RG) <= nil_set(RG)


def _delta_idem_free(RG: FiniteRing) -> bool:
    return not bool((_delta(RG).mask & idempotents(RG).mask & (RG.elements() != RG.zero)).any())


def _pair(RG: FiniteRing) -> tuple[FiniteRing, grp.FiniteGroup]:
    return RG.coefficient_ring, RG.group


@check("Lemma-3.1", "If RG is GSWNC then R is GSWNC.")
def _lemma_3_1(cat):
    for RG in cat.group_rings():
        if G(RG):
            R, _ = _pair(RG)
            yield Instance((RG.label, R.label), G(R))


@check("Lemma-3.1(RG/Delta)", "RG modulo the augmentation ideal is a copy of R, checked on full tables.")
def _lemma_3_1_quotient(cat):
    for RG in cat.group_rings():
        R, Gp = _pair(RG)
        Q = grp.augmentation_quotient(RG)
        sec = Q.projection[grp.section(RG)]
        idx = R.elements()
        a, b = idx[:, None], idx[None, :]
        ok = (
            Q.size == R.size
            and _delta(RG).mask.sum() == R.size ** (Gp.size - 1)
            and np.array_equal(Q.add(sec[a], sec[b]), sec[R.add(a, b)])
            and np.array_equal(Q.mul(sec[a], sec[b]), sec[R.mul(a, b)])
        )
        yield Instance((RG.label, R.label), bool(ok))


@check("Lemma-3.2", "If R is GSWNC, p is nilpotent in R and G is a p-group, then RG is GSWNC and the augmentation ideal is nil.")
def _lemma_3_2(cat):
    for RG in cat.group_rings():
        R, Gp = _pair(RG)
        if not G(R) or Gp.size == 1:
            continue
        for p in _primes(Gp.size):
            if grp.is_p_group(Gp, p) and is_nil(R, R.integer(p)):
                yield Instance((RG.label, f"p={p}"), G(RG) and _delta_nil(RG))


def _epi_rows(cat):
    for RG in cat.group_rings():
        if _delta_idem_free(RG):
            R, _ = _pair(RG)
            yield (RG.label, f"-> {R.label}"), G(RG), G(R) and _delta_nil(RG), [], None
    for R in cat.rings():
        J = jacobson_radical(R)
        if J.mask.sum() > 1:
            yield (R.label, f"-> {mod_J(R).label}"), G(R), G(mod_J(R)) and J <= nil_set(R), [], None


iff(
    "Lemma-3.5",
    "For an onto map R -> S whose kernel has no nonzero idempotent, R GSWNC gives S GSWNC and a nil kernel.",
    "For such a map, S GSWNC with a nil kernel gives R GSWNC.",
)(_epi_rows)


def _cor_3_6_rows(cat):
    for RG in cat.group_rings():
        if _delta_idem_free(RG):
            R, _ = _pair(RG)
            yield (RG.label,), G(RG), G(R) and _delta_nil(RG), [], None


iff(
    "Cor-3.6",
    "If the augmentation ideal has no nonzero idempotent and RG is GSWNC, then R is GSWNC and the augmentation ideal is nil.",
    "If the augmentation ideal has no nonzero idempotent, R is GSWNC and the augmentation ideal is nil, then RG is GSWNC.",
)(_cor_3_6_rows)


def _lemma_3_8_rows(cat):
    for RG in cat.group_rings():
        R, Gp = _pair(RG)
        for p in _primes(Gp.size):
            if grp.is_p_group(Gp, p) and jacobson_radical(R).mask[R.integer(p)]:
                in_j = _delta(RG) <= jacobson_radical(RG)
                yield (RG.label, f"p={p}"), G(RG), G(R) and _delta_nil(RG), [], in_j


iff(
    "Lemma-3.8",
    "For a p-group G with p in J(R): RG GSWNC gives R GSWNC and nil augmentation ideal (which lies in J(RG)).",
    "For a p-group G with p in J(R): R GSWNC and nil augmentation ideal give RG GSWNC.",
)(_lemma_3_8_rows)


@check("Lemma-RG/J", "If R is GSWNC and the augmentation ideal lies in J(RG), then RG/J(RG) is GSWNC.")
def _lemma_rg_j(cat):
    for RG in cat.group_rings():
        R, _ = _pair(RG)
        if G(R) and _delta(RG) <= jacobson_radical(RG):
            Q = mod_J(RG)
            yield Instance((RG.label, Q.label), G(Q))


@check("Thm-3.3", "If 2 is not a unit of R and RG is GSWNC, then G is a 2-group and 2 is nilpotent in R.")
def _thm_3_3(cat):
    for RG in cat.group_rings():
        R, Gp = _pair(RG)
        if not two_is_unit(R) and G(RG):
            yield Instance((RG.label,), grp.is_p_group(Gp, 2) and is_nil(R, two(R)))


def _example_3_4_rows(cat):
    for RG in cat.group_rings():
        R, Gp = _pair(RG)
        m = R.size
        if R.label == f"Z{m}" and m % 2 == 0 and Gp.size > 1:
            power_of_two = m & (m - 1) == 0
            yield (RG.label,), G(RG), power_of_two and grp.is_p_group(Gp, 2), [], None


iff(
    "Example-3.4",
    "For even m and nontrivial G, a GSWNC group ring Z_m G has m a power of 2 and G a 2-group.",
    "If m is a power of 2 and G a nontrivial 2-group then Z_m G is GSWNC.",
)(_example_3_4_rows)


@check("Lemma-3.9", "If 2 is not a unit of R and RG is GSNC then the centre of G is a 2-group.")
def _lemma_3_9(cat):
    for RG in cat.group_rings():
        R, Gp = _pair(RG)
        if not two_is_unit(R) and GS(RG):
            Z = grp.group_center(Gp)
            yield Instance((RG.label, f"Z(G)={Z}"), all(_power_of(Gp.order(z), 2) for z in Z))


def _power_of(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def _nilpotent_pairs(cat):
    for RG in cat.group_rings():
        R, Gp = _pair(RG)
        if not two_is_unit(R) and grp.is_nilpotent_group(Gp):
            yield RG, R, Gp


def _lemma_3_11_rows(cat):
    for RG, R, Gp in _nilpotent_pairs(cat):
        yield (RG.label,), GS(RG), GS(R) and grp.is_p_group(Gp, 2), [], None


iff(
    "Lemma-3.11",
    "For nilpotent G and 2 not a unit: RG GSNC gives R GSNC and G a 2-group.",
    "For nilpotent G and 2 not a unit: R GSNC and G a 2-group give RG GSNC.",
)(_lemma_3_11_rows)


def _thm_3_12_rows(cat):
    for RG, R, Gp in _nilpotent_pairs(cat):
        yield (RG.label,), G(RG), GS(R) and grp.is_p_group(Gp, 2), [], None


iff(
    "Thm-3.12",
    "For nilpotent G and 2 not a unit: RG GSWNC gives R GSNC and G a 2-group.",
    "For nilpotent G and 2 not a unit: R GSNC and G a 2-group give RG GSWNC.",
)(_thm_3_12_rows)


# -- running ------------------------------------------------------------------


def resolve_ids(ids: Iterable[str] | str | None) -> list[str]:
    """Expand ``"all"``, exact ids and id prefixes (``Prop-2.13`` selects
    every sub-check) into registry order."""
    if ids is None or ids == "all":
        return list(REGISTRY)
    if isinstance(ids, str):
        ids = [t for t in ids.split(",") if t.strip()]
    chosen: list[str] = []
    for raw in ids:
        key = raw.strip()
        if key.lower() == "all":
            hits = list(REGISTRY)
        elif key in REGISTRY:
            hits = [key]
        else:
            hits = [c for c in REGISTRY if c.lower() == key.lower() or c.lower().startswith(key.lower() + "(")]
        if not hits:
            raise UnknownCheckError(key)
        chosen += [h for h in hits if h not in chosen]
    return [c for c in REGISTRY if c in chosen]


def run_check(check_id: str, catalog: Catalog | None = None) -> CheckResult:
    from .catalog import default_catalog

    if check_id not in REGISTRY:
        raise UnknownCheckError(check_id)
    cat = catalog if catalog is not None else default_catalog()
    chk = REGISTRY[check_id]
    start = time.perf_counter()
    try:
        instances = list(chk.fn(cat))
    except Exception as exc:  # an exception is recorded as a failed instance
        instances = [Instance(("<error>",), False, note=f"{type(exc).__name__}: {exc}")]
    return CheckResult(chk.id, chk.location, chk.statement, chk.bounded, instances, time.perf_counter() - start)


def run_all(catalog: Catalog | None = None, ids=None) -> list[CheckResult]:
    return [run_check(c, catalog) for c in resolve_ids(ids)]


__all__ = [
    "Check",
    "CheckResult",
    "Instance",
    "REGISTRY",
    "branches",
    "find_matrix_units",
    "location_of",
    "resolve_ids",
    "run_all",
    "run_check",
]
