"""Finite groups, group rings and augmentation ideals."""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from . import config
from .core.constructions import MixedRadix, _wrap, quotient
from .core.ring import FiniteRing
from .core.sets import ElementSet
from .errors import InvalidStructureError, SizeCapError


class FiniteGroup:
    """A finite group given by its composition table.  Element 0 need not be
    the identity; ``identity`` names it."""

    def __init__(self, table, identity: int, label: str, *, validate: bool = True):
        table = np.asarray(table, dtype=np.int64)
        n = table.shape[0]
        if table.shape != (n, n) or n < 1:
            raise InvalidStructureError("group table must be square and non-empty")
        self.size = n
        self.table = table
        self.table.setflags(write=False)
        self.identity = int(identity)
        self.label = label
        inv = np.argmax(table == self.identity, axis=1)
        self.inverse = inv
        if validate:
            self.validate()

    def compose(self, g, h):
        return self.table[g, h]

    def validate(self) -> None:
        t, e, n = self.table, self.identity, self.size
        idx = np.arange(n)
        if t.min() < 0 or t.max() >= n:
            raise InvalidStructureError(f"{self.label}: table entries out of range")
        if not (np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx)):
            raise InvalidStructureError(f"{self.label}: identity is not two-sided")
        if not (np.array_equal(t[idx, self.inverse], np.full(n, e)) and np.array_equal(t[self.inverse, idx], np.full(n, e))):
            raise InvalidStructureError(f"{self.label}: some element has no inverse")
        if not np.array_equal(t[t[:, :, None], idx[None, None, :]], t[idx[:, None, None], t[None, :, :]]):
            raise InvalidStructureError(f"{self.label}: composition is not associative")

    def order(self, g: int) -> int:
        k, x = 1, int(g)
        while x != self.identity:
            x = int(self.table[x, g])
            k += 1
        return k

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.label} |G|={self.size}>"


def make_cyclic(n: int) -> FiniteGroup:
    """``C_n`` with element ``k`` standing for ``g^k``."""
    if n < 1:
        raise InvalidStructureError("cyclic group order must be positive")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, 0, f"C{n}")


def make_group_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """``G × H``; pair ``(g, h)`` has index ``g·|H| + h``."""
    m = H.size
    idx = np.arange(G.size * m)
    g, h = idx // m, idx % m
    table = G.table[g[:, None], g[None, :]] * m + H.table[h[:, None], h[None, :]]
    return FiniteGroup(table, G.identity * m + H.identity, f"{G.label} x {H.label}", validate=False)


def make_dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order ``2n``.  Index ``k`` is the
    rotation ``r^k`` and ``n + k`` the reflection ``s r^k``."""
    if n < 1:
        raise InvalidStructureError("dihedral parameter must be positive")

    def mul(x, y):
        fx, kx = divmod(x, n)
        fy, ky = divmod(y, n)
        # s^fx r^kx s^fy r^ky = s^(fx+fy) r^((-1)^fy kx + ky)
        k = (ky + (kx if fy == 0 else -kx)) % n
        return ((fx + fy) % 2) * n + k

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    return FiniteGroup(table, 0, f"D{n}")


def make_quaternion8() -> FiniteGroup:
    """Order listed as 1, -1, i, -i, j, -j, k, -k."""
    names = ["1", "i", "j", "k"]
    # unit quaternion basis products: (sign, basis)
    prod = {
        ("1", b): (1, b) for b in names
    }
    prod.update({(b, "1"): (1, b) for b in names})
    prod.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })
    elems = [(s, b) for b in names for s in (1, -1)]
    pos = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, b1 in elems:
        row = []
        for s2, b2 in elems:
            s, b = prod[b1, b2]
            row.append(pos[(s1 * s2 * s, b)])
        table.append(row)
    return FiniteGroup(table, 0, "Q8")


def make_symmetric3() -> FiniteGroup:
    """Permutations of {0, 1, 2} in lexicographic order; composition
    ``(p q)(x) = p(q(x))``."""
    perms = list(itertools.permutations(range(3)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    return FiniteGroup(table, 0, "S3")


# -- group properties ---------------------------------------------------------


def is_p_group(G: FiniteGroup, p: int) -> bool:
    """Every element order is a power of ``p``."""
    for g in range(G.size):
        k = G.order(g)
        while k % p == 0:
            k //= p
        if k != 1:
            return False
    return True


def group_center(G: FiniteGroup) -> list[int]:
    t = G.table
    return [int(g) for g in np.flatnonzero((t == t.T).all(axis=1))]


def upper_central_series(G: FiniteGroup) -> list[list[int]]:
    """``Z_0 = 1 ⊆ Z_1 = Z(G) ⊆ ...`` until it stabilises."""
    t = G.table
    series = [[G.identity]]
    while True:
        current = np.zeros(G.size, dtype=bool)
        current[series[-1]] = True
        # g ∈ Z_{i+1} iff the commutator [g, x] lies in Z_i for every x
        nxt = []
        for g in range(G.size):
            comm = t[t[G.inverse[g], G.inverse], t[g, np.arange(G.size)]]
            if current[comm].all():
                nxt.append(g)
        if len(nxt) == len(series[-1]):
            return series
        series.append(nxt)


def is_nilpotent_group(G: FiniteGroup) -> bool:
    return len(upper_central_series(G)[-1]) == G.size


# -- group rings --------------------------------------------------------------


def group_ring(R: FiniteRing, G: FiniteGroup, *, max_size: int | None = None) -> FiniteRing:
    """``RG``: coefficient vectors over the group elements (element 0 of G
    first, most significant), multiplied by convolution."""
    n = G.size
    size = R.size**n
    cap = config.max_size() if max_size is None else max_size
    label = f"GR({R.label}, {G.label})"
    if size > cap:
        raise SizeCapError(label, size, cap)
    radix = MixedRadix([R.size] * n)
    # pairs (g, h) grouped by their product
    by_product = [[(g, h) for g in range(n) for h in range(n) if G.table[g, h] == k] for k in range(n)]

    def add(a, b):
        return radix.join([R.add(x, y) for x, y in zip(radix.split(a), radix.split(b))])

    def neg(a):
        return radix.join([R.neg(x) for x in radix.split(a)])

    def mul(a, b):
        da, db = radix.split(a), radix.split(b)
        out = []
        for pairs in by_product:
            acc = None
            for g, h in pairs:
                t = R.mul(da[g], db[h])
                acc = t if acc is None else R.add(acc, t)
            out.append(acc)
        return radix.join(out)

    def coords(i):
        return [R.coords(int(d)) for d in radix.split(i)]

    def from_coords(value):
        if isinstance(value, (int, np.integer)):
            return RG.integer(int(value))
        if not isinstance(value, (list, tuple)) or len(value) != n:
            raise InvalidStructureError(f"expected {n} coefficients for {label}")
        return int(radix.join([R.from_coords(v) for v in value]))

    one = [R.zero] * n
    one[G.identity] = R.one
    RG = FiniteRing(
        size,
        add=add,
        mul=mul,
        neg=neg,
        zero=0,
        one=int(radix.join(one)),
        label=label,
        coords=coords,
        from_coords=from_coords,
    )
    RG.coefficient_ring = R
    RG.group = G
    RG.radix = radix
    return RG


def coefficients(RG: FiniteRing, x) -> list[int]:
    """Coefficient indices of ``x`` in group-element order."""
    return [int(d) for d in RG.radix.split(int(x))]


def from_coefficients(RG: FiniteRing, coeffs: Sequence[int]) -> int:
    return int(RG.radix.join(list(coeffs)))


def group_element(RG: FiniteRing, g: int) -> int:
    """The basis element ``1·g``."""
    R = RG.coefficient_ring
    coeffs = [R.zero] * RG.group.size
    coeffs[g] = R.one
    return from_coefficients(RG, coeffs)


def augmentation(RG: FiniteRing, x) -> int:
    """Sum of the coefficients, as an element index of the coefficient ring."""
    R = RG.coefficient_ring
    total = R.zero
    for c in coefficients(RG, x):
        total = int(R.add(total, c))
    return total


def augmentation_map(RG: FiniteRing) -> np.ndarray:
    """Augmentation of every element, vectorised."""

    def compute():
        R = RG.coefficient_ring
        digits = RG.radix.split(RG.elements())
        total = np.full(RG.size, R.zero, dtype=np.int64)
        for d in digits:
            total = np.asarray(R.add(total, d), dtype=np.int64)
        total.setflags(write=False)
        return total

    return RG.memo("augmentation", compute)


def section(RG: FiniteRing) -> np.ndarray:
    """The embedding ``r -> r·1`` of the coefficient ring."""
    R = RG.coefficient_ring
    out = []
    for r in range(R.size):
        coeffs = [R.zero] * RG.group.size
        coeffs[RG.group.identity] = r
        out.append(from_coefficients(RG, coeffs))
    return np.array(out, dtype=np.int64)


def augmentation_ideal(RG: FiniteRing) -> ElementSet:
    """Kernel of the augmentation map, validated as an ideal with
    ``RG / Δ ≅ R`` through the section ``r -> r·1``."""

    def compute():
        R = RG.coefficient_ring
        delta = ElementSet(RG, mask=augmentation_map(RG) == R.zero)
        Q = quotient(RG, delta, label=f"{_wrap(RG)}/Delta")
        # cosets of r·1 are distinct and carry R's operations
        sec = Q.projection[section(RG)]
        if np.unique(sec).size != R.size or Q.size != R.size:
            raise InvalidStructureError(f"augmentation quotient of {RG.label} has the wrong size")
        idx = R.elements()
        a, b = idx[:, None], idx[None, :]
        if not (
            np.array_equal(Q.add(sec[a], sec[b]), sec[R.add(a, b)])
            and np.array_equal(Q.mul(sec[a], sec[b]), sec[R.mul(a, b)])
        ):
            raise InvalidStructureError(f"augmentation quotient of {RG.label} is not a copy of {R.label}")
        return delta

    return RG.memo("augmentation_ideal", compute)


def augmentation_quotient(RG: FiniteRing) -> FiniteRing:
    delta = augmentation_ideal(RG)
    return RG.memo("augmentation_quotient", lambda: quotient(RG, delta, label=f"{_wrap(RG)}/Delta"))


__all__ = [
    "FiniteGroup",
    "augmentation",
    "augmentation_ideal",
    "augmentation_map",
    "augmentation_quotient",
    "coefficients",
    "from_coefficients",
    "group_center",
    "group_element",
    "group_ring",
    "is_nilpotent_group",
    "is_p_group",
    "make_cyclic",
    "make_dihedral",
    "make_group_product",
    "make_quaternion8",
    "make_symmetric3",
    "section",
    "upper_central_series",
]
