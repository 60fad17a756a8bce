"""Constructors for every ring family ringlab works with.

Index layouts
-------------
* ``Zn``: index ``i`` is the residue ``i``.
* ``GF(p,k)``: index ``sum c_i p**i`` is the polynomial ``sum c_i x**i``
  (constant coefficient least significant).
* products, matrices and all other composite rings: mixed radix over the
  coordinate list, first coordinate most significant (last one fastest).
  Matrix coordinates are the free entries in row-major order.
"""

from __future__ import annotations

import itertools
import json
from typing import Any, Sequence

import numpy as np

from .. import config
from ..errors import InvalidStructureError, NotAnIdealError, SizeCapError
from .ring import FiniteRing, RingElement, RingEndomorphism
from .sets import ElementSet

_BLOCK = 1 << 20


class MixedRadix:
    """Mixed-radix codec, first digit most significant."""

    def __init__(self, radices: Sequence[int]):
        self.radices = tuple(int(r) for r in radices)
        weights, acc = [], 1
        for r in reversed(self.radices):
            weights.append(acc)
            acc *= r
        self.weights = tuple(reversed(weights))
        self.size = acc

    def split(self, idx) -> list[np.ndarray]:
        idx = np.asarray(idx, dtype=np.int64)
        return [(idx // w) % r for w, r in zip(self.weights, self.radices)]

    def join(self, digits) -> np.ndarray:
        total = np.int64(0)
        for d, w in zip(digits, self.weights):
            total = total + np.asarray(d, dtype=np.int64) * w
        return np.asarray(total, dtype=np.int64)


def _check_cap(what: str, size: int, max_size: int | None) -> None:
    cap = config.max_size() if max_size is None else max_size
    if size > cap:
        raise SizeCapError(what, size, cap)


def _index(R: FiniteRing, s) -> int:
    if isinstance(s, RingElement):
        if s.ring is not R:
            raise InvalidStructureError("element belongs to a different ring")
        return s.index
    s = int(s)
    if not 0 <= s < R.size:
        raise InvalidStructureError(f"{s} is not an element index of {R.label}")
    return s


def literal(R: FiniteRing, i: int) -> str:
    """Compact coordinate literal used inside ring labels."""
    return json.dumps(R.coords(i), separators=(",", ":"))


def _wrap(R: FiniteRing) -> str:
    return f"({R.label})" if getattr(R, "infix_product", False) else R.label


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


# -- Z/n ----------------------------------------------------------------------


def make_zmod(n: int, *, max_size: int | None = None) -> FiniteRing:
    """The ring of integers modulo ``n``."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidStructureError(f"Z/n needs a positive modulus, got {n!r}")
    n = int(n)
    _check_cap(f"Z{n}", n, max_size)
    R = FiniteRing(
        n,
        add=lambda a, b: (a + b) % n,
        mul=lambda a, b: (a * b) % n,
        neg=lambda a: (-a) % n,
        zero=0,
        one=1 % n,
        label=f"Z{n}",
        commutative_hint=True,
    )
    R.modulus = n
    return R


# -- GF(p^k) ------------------------------------------------------------------

# monic, coefficients from the constant term up
IRREDUCIBLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
}


def _poly_mulmod(a: list[int], b: list[int], modulus: Sequence[int], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for t in range(k + 1):
                prod[d - k + t] = (prod[d - k + t] - c * modulus[t]) % p
    return prod[:k]


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Irreducibility by trial division with every monic polynomial of
    degree at most k/2."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            rem = list(modulus)
            for top in range(k, d - 1, -1):
                c = rem[top]
                if c:
                    for t in range(d + 1):
                        rem[top - d + t] = (rem[top - d + t] - c * divisor[t]) % p
            if not any(rem[:d]):
                return False
    return True


def irreducible_polynomial(p: int, k: int) -> tuple[int, ...]:
    """Fixed defining polynomial for GF(p^k); a table entry when present,
    otherwise the first monic irreducible in lexicographic coefficient order."""
    if (p, k) in IRREDUCIBLE:
        return IRREDUCIBLE[(p, k)]
    if k == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=k):
        cand = tuple(reversed(low)) + (1,)
        if cand[0] and _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")


def make_gf(p: int, k: int = 1, *, max_size: int | None = None) -> FiniteRing:
    """The field with ``p**k`` elements; exposes ``.frobenius``."""
    if not isinstance(p, (int, np.integer)) or not _is_prime(int(p)):
        raise InvalidStructureError(f"GF(p,k) needs a prime p, got {p!r}")
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise InvalidStructureError(f"GF(p,k) needs k >= 1, got {k!r}")
    p, k = int(p), int(k)
    q = p**k
    _check_cap(f"GF({p},{k})", q, max_size)
    modulus = irreducible_polynomial(p, k)
    powers = [p**i for i in range(k)]

    def to_poly(i: int) -> list[int]:
        return [(i // w) % p for w in powers]

    def from_poly(c: Sequence[int]) -> int:
        return sum(ci * w for ci, w in zip(c, powers))

    # discrete log tables from the first primitive element
    exp = log = None
    for g in range(1, q):
        seq = [1]
        cur = [1] + [0] * (k - 1)
        gp = to_poly(g)
        while True:
            cur = _poly_mulmod(cur, gp, modulus, p)
            v = from_poly(cur)
            if v == 1:
                break
            seq.append(v)
        if len(seq) == q - 1:
            exp = np.array(seq, dtype=np.int64)
            log = np.zeros(q, dtype=np.int64)
            log[exp] = np.arange(q - 1)
            break
    assert exp is not None

    def add(a, b):
        out = np.int64(0)
        for w in powers:
            out = out + (((a // w) % p + (b // w) % p) % p) * w
        return out

    def neg(a):
        out = np.int64(0)
        for w in powers:
            out = out + ((-((a // w) % p)) % p) * w
        return out

    def mul(a, b):
        a, b = np.broadcast_arrays(np.asarray(a, np.int64), np.asarray(b, np.int64))
        prod = exp[(log[a] + log[b]) % (q - 1)]
        return np.where((a == 0) | (b == 0), 0, prod)

    F = FiniteRing(
        q,
        add=add,
        mul=mul,
        neg=neg,
        zero=0,
        one=1 % q,
        label=f"GF({p},{k})",
        commutative_hint=True,
    )
    F.modulus_polynomial = modulus
    F.prime = p
    F.degree = k
    F.frobenius = RingEndomorphism(F, F.pow(F.elements(), p), "frobenius")
    return F


def named_endomorphism(R: FiniteRing, name: str) -> RingEndomorphism:
    """Resolve ``id``/``identity`` or ``frobenius`` on ``R``."""
    key = name.lower()
    if key in ("id", "identity"):
        return RingEndomorphism.identity(R)
    if key == "frobenius":
        frob = getattr(R, "frobenius", None)
        if frob is None:
            raise InvalidStructureError(f"{R.label} has no Frobenius endomorphism")
        return frob
    raise InvalidStructureError(f"unknown endomorphism {name!r}")


# -- products -----------------------------------------------------------------


def direct_product(rings: Sequence[FiniteRing], *, max_size: int | None = None) -> FiniteRing:
    """Componentwise product; the last factor varies fastest."""
    rings = list(rings)
    if not rings:
        raise InvalidStructureError("direct product of an empty list")
    radix = MixedRadix([R.size for R in rings])
    label = " x ".join(_wrap(R) for R in rings)
    _check_cap(label, radix.size, max_size)

    def binop(name):
        def op(a, b):
            da, db = radix.split(a), radix.split(b)
            return radix.join([getattr(R, name)(x, y) for R, x, y in zip(rings, da, db)])

        return op

    def neg(a):
        return radix.join([R.neg(x) for R, x in zip(rings, radix.split(a))])

    def coords(i):
        return [R.coords(int(d)) for R, d in zip(rings, radix.split(i))]

    def from_coords(value):
        if isinstance(value, (int, np.integer)):
            return P.integer(int(value))
        if not isinstance(value, (list, tuple)) or len(value) != len(rings):
            raise InvalidStructureError(f"expected {len(rings)} coordinates for {label}")
        return int(radix.join([R.from_coords(v) for R, v in zip(rings, value)]))

    P = FiniteRing(
        radix.size,
        add=binop("add"),
        mul=binop("mul"),
        neg=neg,
        zero=int(radix.join([R.zero for R in rings])),
        one=int(radix.join([R.one for R in rings])),
        label=label,
        coords=coords,
        from_coords=from_coords,
    )
    P.infix_product = len(rings) > 1
    P.factors = tuple(rings)
    P.radix = radix
    return P


# -- matrix-shaped rings ------------------------------------------------------


def _matrix_family(
    R: FiniteRing,
    n: int,
    layout: list[list[tuple[int, int]]],
    label: str,
    *,
    twist=None,
    max_size: int | None = None,
) -> FiniteRing:
    """Rings of n×n matrices whose free coordinates are given by ``layout``.

    Each coordinate fills every position listed for it; other positions are
    zero.  ``twist(i, k, j)`` optionally returns a central element index that
    multiplies the term ``a_ik b_kj`` of the product.
    """
    if n < 1:
        raise InvalidStructureError("matrix size must be positive")
    size = R.size ** len(layout)
    _check_cap(label, size, max_size)
    radix = MixedRadix([R.size] * len(layout))
    where: dict[tuple[int, int], int] = {}
    for d, positions in enumerate(layout):
        for pos in positions:
            where[pos] = d

    terms = []  # per output coordinate: [(digit_a, digit_b, twist_elem|None)]
    for positions in layout:
        i, j = positions[0]
        row = []
        for k in range(n):
            if (i, k) in where and (k, j) in where:
                tw = twist(i, k, j) if twist is not None else None
                if tw is not None and tw == R.zero:
                    continue
                if tw == R.one:
                    tw = None
                row.append((where[i, k], where[k, j], tw))
        terms.append(row)

    def add(a, b):
        return radix.join([R.add(x, y) for x, y in zip(radix.split(a), radix.split(b))])

    def neg(a):
        return radix.join([R.neg(x) for x in radix.split(a)])

    def mul(a, b):
        da, db = radix.split(a), radix.split(b)
        out = []
        for row in terms:
            acc = None
            for ia, ib, tw in row:
                t = R.mul(da[ia], db[ib])
                if tw is not None:
                    t = R.mul(tw, t)
                acc = t if acc is None else R.add(acc, t)
            out.append(R.zero if acc is None else acc)
        return radix.join(out)

    one_digits = []
    for positions in layout:
        diag = [i == j for i, j in positions]
        if all(diag):
            one_digits.append(R.one)
        elif not any(diag):
            one_digits.append(R.zero)
        else:
            raise InvalidStructureError("a coordinate mixes diagonal and off-diagonal positions")
    if any((i, i) not in where for i in range(n)):
        raise InvalidStructureError("layout does not contain the identity matrix")

    def coords(i):
        digits = [int(d) for d in radix.split(i)]
        return [
            [R.coords(digits[where[r, c]]) if (r, c) in where else R.coords(R.zero) for c in range(n)]
            for r in range(n)
        ]

    def from_coords(value):
        if isinstance(value, (int, np.integer)):
            return M.integer(int(value))
        if not isinstance(value, (list, tuple)) or len(value) != n or any(
            not isinstance(row, (list, tuple)) or len(row) != n for row in value
        ):
            raise InvalidStructureError(f"expected an {n}x{n} matrix for {label}")
        digits: list[int | None] = [None] * len(layout)
        for r in range(n):
            for c in range(n):
                x = R.from_coords(value[r][c])
                if (r, c) not in where:
                    if x != R.zero:
                        raise InvalidStructureError(f"entry ({r},{c}) must be zero in {label}")
                    continue
                d = where[r, c]
                if digits[d] is None:
                    digits[d] = x
                elif digits[d] != x:
                    raise InvalidStructureError(f"entries tied together differ in {label}")
        return int(radix.join(digits))

    M = FiniteRing(
        size,
        add=add,
        mul=mul,
        neg=neg,
        zero=0,
        one=int(radix.join(one_digits)),
        label=label,
        coords=coords,
        from_coords=from_coords,
    )
    M.base = R
    M.matrix_size = n
    M.layout = tuple(tuple(p) for p in layout)
    M.radix = radix
    return M


def matrix_ring(R: FiniteRing, n: int, *, max_size: int | None = None) -> FiniteRing:
    """All n×n matrices over ``R``, entries row-major."""
    layout = [[(i, j)] for i in range(n) for j in range(n)]
    return _matrix_family(R, n, layout, f"M{n}({R.label})", max_size=max_size)


def upper_triangular(R: FiniteRing, n: int, *, max_size: int | None = None) -> FiniteRing:
    """Upper triangular n×n matrices; coordinates are the entries on or
    above the diagonal, row-major."""
    layout = [[(i, j)] for i in range(n) for j in range(i, n)]
    return _matrix_family(R, n, layout, f"T{n}({R.label})", max_size=max_size)


def equal_diag_triangular(R: FiniteRing, n: int, *, max_size: int | None = None) -> FiniteRing:
    """Upper triangular matrices with a constant diagonal.  Coordinate 0 is
    the diagonal value, then the strictly upper entries row-major."""
    layout = [[(i, i) for i in range(n)]] + [[(i, j)] for i in range(n) for j in range(i + 1, n)]
    return _matrix_family(R, n, layout, f"S{n}({R.label})", max_size=max_size)


def toeplitz_triangular(R: FiniteRing, n: int, *, max_size: int | None = None) -> FiniteRing:
    """Upper triangular matrices constant along each diagonal, as a subring
    of ``T_n(R)``; coordinate k is the k-th superdiagonal."""
    layout = [[(i, i + k) for i in range(n - k)] for k in range(n)]
    return _matrix_family(R, n, layout, f"Toeplitz{n}({R.label})", max_size=max_size)


def _central_index(R: FiniteRing, s) -> int:
    s = _index(R, s)
    idx = R.elements()
    if not np.array_equal(R.mul(s, idx), R.mul(idx, s)):
        raise InvalidStructureError(f"{literal(R, s)} is not central in {R.label}")
    return s


def formal_matrix_ks(R: FiniteRing, s, *, max_size: int | None = None) -> FiniteRing:
    """The generalized 2×2 matrix ring ``K_s(R)``: entries ``[[a, x], [y, b]]``
    with the off-diagonal products scaled by the central element ``s``."""
    s = _central_index(R, s)
    layout = [[(0, 0)], [(0, 1)], [(1, 0)], [(1, 1)]]

    def twist(i, k, j):
        return s if i == j and k != i else None

    K = _matrix_family(R, 2, layout, f"K({R.label}, {literal(R, s)})", twist=twist, max_size=max_size)
    K.twist_element = s
    return K


def formal_matrix_ns(R: FiniteRing, n: int, s, *, max_size: int | None = None) -> FiniteRing:
    """``M_n(R; s)``: n×n matrices where the term ``a_ik b_kj`` of entry
    ``(i, j)`` is scaled by ``s**(1 + [i=j] - [i=k] - [k=j])``."""
    s = _central_index(R, s)
    powers = [R.one, s, int(R.mul(s, s))]

    def twist(i, k, j):
        return powers[1 + (i == j) - (i == k) - (k == j)]

    layout = [[(i, j)] for i in range(n) for j in range(n)]
    M = _matrix_family(R, n, layout, f"MF{n}({R.label}, {literal(R, s)})", twist=twist, max_size=max_size)
    M.twist_element = s
    return M


# -- skew triangular and truncated skew polynomials ---------------------------


def skew_triangular(R: FiniteRing, alpha: RingEndomorphism, n: int, *, max_size: int | None = None) -> FiniteRing:
    """``T_n(R, alpha)``: tuples ``(a_0, ..., a_{n-1})`` with product
    ``c_i = sum_k a_k * alpha^k(b_{i-k})``."""
    if alpha.domain is not R:
        raise InvalidStructureError("endomorphism is defined on a different ring")
    if n < 1:
        raise InvalidStructureError("n must be positive")
    alpha.validate()
    size = R.size**n
    label = f"Tskew{n}({R.label}, {alpha.name})"
    _check_cap(label, size, max_size)
    radix = MixedRadix([R.size] * n)
    apow = [alpha.power(k).map for k in range(n)]

    def add(a, b):
        return radix.join([R.add(x, y) for x, y in zip(radix.split(a), radix.split(b))])

    def neg(a):
        return radix.join([R.neg(x) for x in radix.split(a)])

    def mul(a, b):
        da, db = radix.split(a), radix.split(b)
        out = []
        for i in range(n):
            acc = None
            for k in range(i + 1):
                t = R.mul(da[k], apow[k][db[i - k]])
                acc = t if acc is None else R.add(acc, t)
            out.append(acc)
        return radix.join(out)

    def coords(i):
        return [R.coords(int(d)) for d in radix.split(i)]

    def from_coords(value):
        if isinstance(value, (int, np.integer)):
            return T.integer(int(value))
        if not isinstance(value, (list, tuple)) or len(value) != n:
            raise InvalidStructureError(f"expected {n} coordinates for {label}")
        return int(radix.join([R.from_coords(v) for v in value]))

    T = FiniteRing(
        size,
        add=add,
        mul=mul,
        neg=neg,
        zero=0,
        one=int(radix.join([R.one] + [R.zero] * (n - 1))),
        label=label,
        coords=coords,
        from_coords=from_coords,
    )
    T.base = R
    T.alpha = alpha
    T.radix = radix
    return T


def skew_polynomial_quotient(
    R: FiniteRing, alpha: RingEndomorphism, n: int, *, max_size: int | None = None
) -> FiniteRing:
    """``R[x, alpha] / <x^n>`` with coefficient vectors ``(a_0, ..., a_{n-1})``.

    Products are formed monomial by monomial, commuting each ``x`` past a
    coefficient with ``x r = alpha(r) x`` one step at a time and dropping
    terms of degree ``>= n``.
    """
    if alpha.domain is not R:
        raise InvalidStructureError("endomorphism is defined on a different ring")
    size = R.size**n
    label = f"SkewPoly{n}({R.label}, {alpha.name})"
    _check_cap(label, size, max_size)
    radix = MixedRadix([R.size] * n)

    def add(a, b):
        return radix.join([R.add(x, y) for x, y in zip(radix.split(a), radix.split(b))])

    def neg(a):
        return radix.join([R.neg(x) for x in radix.split(a)])

    def mul(a, b):
        da, db = radix.split(a), radix.split(b)
        shape = np.broadcast(np.asarray(a), np.asarray(b)).shape
        coeffs = [np.full(shape, R.zero, dtype=np.int64) for _ in range(n)]
        for i in range(n):
            for j in range(n - i):
                moved = db[j]
                for _ in range(i):  # x^i * b = alpha^i(b) * x^i
                    moved = alpha.map[moved]
                coeffs[i + j] = R.add(coeffs[i + j], R.mul(da[i], moved))
        return radix.join(coeffs)

    def from_coords(value):
        if isinstance(value, (int, np.integer)):
            return Q.integer(int(value))
        if not isinstance(value, (list, tuple)) or len(value) != n:
            raise InvalidStructureError(f"expected {n} coefficients for {label}")
        return int(radix.join([R.from_coords(v) for v in value]))

    Q = FiniteRing(
        size,
        add=add,
        mul=mul,
        neg=neg,
        zero=0,
        one=int(radix.join([R.one] + [R.zero] * (n - 1))),
        label=label,
        coords=lambda i: [R.coords(int(d)) for d in radix.split(i)],
        from_coords=from_coords,
    )
    Q.radix = radix
    Q.base = R
    Q.alpha = alpha
    return Q


# -- trivial extension --------------------------------------------------------


def trivial_extension(R: FiniteRing, *, max_size: int | None = None) -> FiniteRing:
    """``T(R, R)``: pairs ``(r, m)`` with ``(r, m)(s, n) = (rs, rn + ms)``."""
    size = R.size * R.size
    label = f"TE({R.label})"
    _check_cap(label, size, max_size)
    radix = MixedRadix([R.size, R.size])

    def add(a, b):
        (r1, m1), (r2, m2) = radix.split(a), radix.split(b)
        return radix.join([R.add(r1, r2), R.add(m1, m2)])

    def neg(a):
        r, m = radix.split(a)
        return radix.join([R.neg(r), R.neg(m)])

    def mul(a, b):
        (r, m), (s, n) = radix.split(a), radix.split(b)
        return radix.join([R.mul(r, s), R.add(R.mul(r, n), R.mul(m, s))])

    def from_coords(value):
        if isinstance(value, (int, np.integer)):
            return E.integer(int(value))
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            raise InvalidStructureError(f"expected a pair (r, m) for {label}")
        return int(radix.join([R.from_coords(value[0]), R.from_coords(value[1])]))

    E = FiniteRing(
        size,
        add=add,
        mul=mul,
        neg=neg,
        zero=0,
        one=int(radix.join([R.one, R.zero])),
        label=label,
        coords=lambda i: [R.coords(int(d)) for d in radix.split(i)],
        from_coords=from_coords,
    )
    E.base = R
    E.radix = radix
    return E


# -- ideals, quotients and corners -------------------------------------------


def _members(R: FiniteRing, ideal) -> np.ndarray:
    if isinstance(ideal, ElementSet):
        if ideal.ring is not R:
            raise InvalidStructureError("ideal belongs to a different ring")
        return ideal.indices.astype(np.int64)
    idx = np.unique(np.fromiter((int(i) for i in ideal), dtype=np.int64))
    if idx.size and (idx.min() < 0 or idx.max() >= R.size):
        raise InvalidStructureError("ideal member outside the ring")
    return idx


def ideal_violation(R: FiniteRing, ideal) -> str | None:
    """Why ``ideal`` fails to be a two-sided ideal, or None if it is one."""
    members = _members(R, ideal)
    if members.size == 0 or R.zero not in members:
        return "does not contain zero"
    mask = np.zeros(R.size, dtype=bool)
    mask[members] = True
    if not mask[R.neg(members)].all():
        return "not closed under negation"
    step = max(1, _BLOCK // max(1, R.size))
    for start in range(0, members.size, step):
        chunk = members[start : start + step, None]
        if not mask[R.add(chunk, members[None, :])].all():
            return "not closed under addition"
    idx = R.elements()
    for start in range(0, members.size, step):
        chunk = members[start : start + step, None]
        if not mask[R.mul(idx[None, :], chunk)].all():
            return "not closed under left multiplication"
        if not mask[R.mul(chunk, idx[None, :])].all():
            return "not closed under right multiplication"
    return None


def require_ideal(R: FiniteRing, ideal) -> np.ndarray:
    members = _members(R, ideal)
    why = ideal_violation(R, members)
    if why is not None:
        raise NotAnIdealError(f"subset of {R.label} is not a two-sided ideal: {why}")
    return members


def quotient(R: FiniteRing, ideal, *, label: str | None = None, validate: bool = True, seed: int = 0) -> FiniteRing:
    """``R / I``.  Each coset is represented by its least element index and
    cosets are numbered in increasing order of representative."""
    members = require_ideal(R, ideal) if validate else _members(R, ideal)
    n = R.size
    rep_of = np.empty(n, dtype=np.int64)
    idx = R.elements()
    step = max(1, _BLOCK // max(1, members.size))
    for start in range(0, n, step):
        rows = idx[start : start + step, None]
        rep_of[start : start + step] = np.asarray(R.add(rows, members[None, :])).min(axis=1)
    reps = np.unique(rep_of)
    proj = np.searchsorted(reps, rep_of)
    proj.setflags(write=False)

    if validate:
        # products and sums of shifted representatives land in the same coset
        rng = np.random.default_rng(seed)
        a = rng.integers(0, n, 256)
        b = rng.integers(0, n, 256)
        a2 = R.add(a, members[rng.integers(0, members.size, 256)])
        b2 = R.add(b, members[rng.integers(0, members.size, 256)])
        if not (
            np.array_equal(proj[R.mul(a, b)], proj[R.mul(a2, b2)])
            and np.array_equal(proj[R.add(a, b)], proj[R.add(a2, b2)])
        ):
            raise NotAnIdealError("induced operations depend on coset representatives")

    label = label or f"{_wrap(R)}/I{members.size}"
    Q = FiniteRing(
        reps.size,
        add=lambda a, b: proj[R.add(reps[a], reps[b])],
        mul=lambda a, b: proj[R.mul(reps[a], reps[b])],
        neg=lambda a: proj[R.neg(reps[a])],
        zero=int(proj[R.zero]),
        one=int(proj[R.one]),
        label=label,
        coords=lambda i: R.coords(int(reps[i])),
        from_coords=lambda v: int(proj[R.from_coords(v)]),
    )
    Q.parent = R
    Q.projection = proj
    Q.representatives = reps
    Q.ideal = ElementSet(R, members)
    return Q


def corner_ring(R: FiniteRing, e) -> FiniteRing:
    """``eRe`` with identity ``e``; elements are numbered in increasing
    order of their index in ``R``."""
    e = _index(R, e)
    if int(R.mul(e, e)) != e:
        raise InvalidStructureError(f"{literal(R, e)} is not idempotent")
    idx = R.elements()
    members = np.unique(R.mul(R.mul(e, idx), e)).astype(np.int64)

    def pos(x):
        return np.searchsorted(members, x)

    C = FiniteRing(
        members.size,
        add=lambda a, b: pos(R.add(members[a], members[b])),
        mul=lambda a, b: pos(R.mul(members[a], members[b])),
        neg=lambda a: pos(R.neg(members[a])),
        zero=int(pos(R.zero)),
        one=int(pos(e)),
        label=f"corner({R.label}, {literal(R, e)})",
        coords=lambda i: R.coords(int(members[i])),
    )
    C.parent = R
    C.embedding = members
    return C


def ring_from_tables(add, mul, neg, zero: int, one: int, label: str) -> FiniteRing:
    """Wrap explicit Cayley tables as a ring (no axiom check; see
    :func:`ringlab.core.axioms.verify_axioms`)."""
    add = np.asarray(add)
    n = add.shape[0]
    return FiniteRing(
        n,
        add=None,
        mul=None,
        neg=None,
        zero=zero,
        one=one,
        label=label,
        tables=(add, mul, neg),
    )


def describe(R: FiniteRing, i: int) -> Any:
    return {"index": int(i), "coords": R.coords(int(i))}
