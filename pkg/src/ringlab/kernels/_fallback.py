"""Vectorised numpy implementations of the hot loops.

These work on any ring object exposing ``size``, ``zero``, ``one`` and
vectorised ``add``/``mul``/``neg``; tables are not required.  The compiled
module mirrors the signatures for table-backed rings.
"""

from __future__ import annotations

import numpy as np

_BLOCK = 1 << 20

# axiom codes, checked in this order
LAWS = (
    "additive identity",
    "additive inverse",
    "additive commutativity",
    "multiplicative identity",
    "additive associativity",
    "multiplicative associativity",
    "left distributivity",
    "right distributivity",
)


def _rows_per_block(n: int, width: int) -> int:
    return max(1, _BLOCK // max(1, n * width))


def nil_exponents(R) -> np.ndarray:
    """Nilpotency index of every element (0 when not nilpotent)."""
    return nil_exponents_of(R, np.arange(R.size, dtype=np.int64))


def nil_exponents_of(R, elems) -> np.ndarray:
    """Nilpotency index of each entry of ``elems`` (0 when not nilpotent).

    Tortoise-and-hare over the power sequence decides nilpotency; the exact
    index is then counted only for the nilpotent elements.
    """
    elems = np.asarray(elems, dtype=np.int64).ravel()
    out = np.zeros(elems.size, dtype=np.int32)
    zero = R.zero
    nil = elems == zero
    pos = np.flatnonzero(~nil)
    a = elems[pos]
    tort, hare = a.copy(), np.asarray(R.mul(a, a), dtype=np.int64)
    while pos.size:
        hit = hare == zero
        nil[pos[hit]] = True
        keep = ~hit & (tort != hare)
        pos, a, tort, hare = pos[keep], a[keep], tort[keep], hare[keep]
        if not pos.size:
            break
        tort = np.asarray(R.mul(tort, a), dtype=np.int64)
        hare = np.asarray(R.mul(R.mul(hare, a), a), dtype=np.int64)
    pos = np.flatnonzero(nil)
    base = elems[pos]
    power = base.copy()
    k = 1
    while pos.size:
        done = power == zero
        out[pos[done]] = k
        pos, base, power = pos[~done], base[~done], power[~done]
        power = np.asarray(R.mul(power, base), dtype=np.int64)
        k += 1
    return out


def unit_mask(R) -> np.ndarray:
    """Elements with a two-sided inverse."""
    n, one = R.size, R.one
    idx = np.arange(n, dtype=np.int64)
    out = np.zeros(n, dtype=bool)
    step = _rows_per_block(n, 1)
    for start in range(0, n, step):
        a = idx[start : start + step, None]
        right = R.mul(a, idx[None, :]) == one
        left = R.mul(idx[None, :], a) == one
        out[start : start + step] = (right & left).any(axis=1)
    return out


def quasi_regular_mask(R, units: np.ndarray, side: int) -> np.ndarray:
    """``x`` with ``1 - r x`` (side 0) or ``1 - x r`` (side 1) a unit for all r."""
    n, one = R.size, R.one
    idx = np.arange(n, dtype=np.int64)
    out = np.zeros(n, dtype=bool)
    step = _rows_per_block(n, 1)
    for start in range(0, n, step):
        x = idx[start : start + step, None]
        prod = R.mul(idx[None, :], x) if side == 0 else R.mul(x, idx[None, :])
        out[start : start + step] = units[R.add(one, R.neg(prod))].all(axis=1)
    return out


def _first(bad: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(bad)
    return tuple(int(v) for v in hits[0]) if hits.size else None


def axiom_violation(R) -> tuple[int, int, int, int] | None:
    """First failing law as ``(law, a, b, c)`` over all elements, or None."""
    n, zero, one = R.size, R.zero, R.one
    idx = np.arange(n, dtype=np.int64)
    if (hit := _first(R.add(idx, zero) != idx)) is not None:
        return (0, hit[0], -1, -1)
    if (hit := _first(R.add(idx, R.neg(idx)) != zero)) is not None:
        return (1, hit[0], -1, -1)
    step = _rows_per_block(n, 1)
    for start in range(0, n, step):
        a = idx[start : start + step, None]
        if (hit := _first(R.add(a, idx[None, :]) != R.add(idx[None, :], a))) is not None:
            return (2, start + hit[0], hit[1], -1)
    bad = (R.mul(idx, one) != idx) | (R.mul(one, idx) != idx)
    if (hit := _first(bad)) is not None:
        return (3, hit[0], -1, -1)

    b = idx[:, None]
    c = idx[None, :]
    add_bc = np.asarray(R.add(b, c), dtype=np.int64)
    mul_bc = np.asarray(R.mul(b, c), dtype=np.int64)
    step = _rows_per_block(n, n)
    laws = []
    laws.append(lambda a3: R.add(R.add(a3, b[None]), c[None]) != R.add(a3, add_bc[None]))
    laws.append(lambda a3: R.mul(R.mul(a3, b[None]), c[None]) != R.mul(a3, mul_bc[None]))
    laws.append(lambda a3: R.mul(a3, add_bc[None]) != R.add(R.mul(a3, b[None]), R.mul(a3, c[None])))
    laws.append(
        lambda a3: R.mul(R.add(a3, b[None]), c[None]) != R.add(R.mul(a3, c[None]), R.mul(b[None], c[None]))
    )
    for code, law in enumerate(laws, start=4):
        for start in range(0, n, step):
            a3 = idx[start : start + step, None, None]
            if (hit := _first(law(a3))) is not None:
                return (code, start + hit[0], hit[1], hit[2])
    return None


def nilclean_search(R, targets, idems, nil, signs, commuting: bool):
    """For each target ``a`` the first ``(sign, e, q)`` with ``a = q + sign*e``,
    ``e`` from ``idems`` (in the given order), ``nil[q]`` true and, when
    ``commuting``, ``eq = qe``.  Signs are tried in the given order, each
    over every idempotent.  Missing entries are ``(0, -1, -1)``."""
    targets = np.asarray(targets, dtype=np.int64)
    m = targets.size
    out_sign = np.zeros(m, dtype=np.int8)
    out_e = np.full(m, -1, dtype=np.int64)
    out_q = np.full(m, -1, dtype=np.int64)
    open_ = np.ones(m, dtype=bool)
    for sign in signs:
        for e in idems:
            if not open_.any():
                return out_sign, out_e, out_q
            pos = np.flatnonzero(open_)
            a = targets[pos]
            e = int(e)
            q = np.asarray(R.add(a, R.neg(e)) if sign > 0 else R.add(a, e), dtype=np.int64)
            ok = nil[q]
            if commuting:
                ok &= R.mul(e, q) == R.mul(q, e)
            hit = pos[ok]
            out_sign[hit] = sign
            out_e[hit] = e
            out_q[hit] = q[ok]
            open_[hit] = False
    return out_sign, out_e, out_q


def clean_search(R, targets, units, idem, signs):
    """For each target ``a`` the first ``(sign, u, e)`` with ``a = u + sign*e``,
    ``u`` from ``units`` (outer loop, given order), ``idem[e]`` true and
    ``ue = eu``; signs form the inner loop."""
    targets = np.asarray(targets, dtype=np.int64)
    m = targets.size
    out_sign = np.zeros(m, dtype=np.int8)
    out_u = np.full(m, -1, dtype=np.int64)
    out_e = np.full(m, -1, dtype=np.int64)
    open_ = np.ones(m, dtype=bool)
    for u in units:
        u = int(u)
        for sign in signs:
            if not open_.any():
                return out_sign, out_u, out_e
            pos = np.flatnonzero(open_)
            a = targets[pos]
            e = np.asarray(R.add(a, R.neg(u)) if sign > 0 else R.add(u, R.neg(a)), dtype=np.int64)
            ok = idem[e] & (R.mul(u, e) == R.mul(e, u))
            hit = pos[ok]
            out_sign[hit] = sign
            out_u[hit] = u
            out_e[hit] = e[ok]
            open_[hit] = False
    return out_sign, out_u, out_e
