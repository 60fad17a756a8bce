"""Finite rings over opaque integer indices.

Every ring in ringlab has elements ``0 .. size-1``.  Operations are
vectorised: ``add``, ``mul`` and ``neg`` accept integers or numpy index
arrays (broadcasting like numpy ufuncs) and return index arrays.  Rings up
to :data:`ringlab.config.TABLE_LIMIT` elements carry full Cayley tables;
larger rings evaluate their construction formulas on demand.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from typing import Any, Callable, Iterator

import numpy as np

from .. import config
from ..errors import InvalidStructureError

Op2 = Callable[[np.ndarray, np.ndarray], np.ndarray]
Op1 = Callable[[np.ndarray], np.ndarray]

TABLE_DTYPE = np.int16
_BLOCK = 1 << 20


def _as_index(a) -> np.ndarray:
    return np.asarray(a, dtype=np.int64)


class FiniteRing:
    """An immutable finite ring with identity.

    Parameters
    ----------
    size:
        Number of elements.
    add, mul, neg:
        Vectorised operations on index arrays.
    zero, one:
        Indices of the additive and multiplicative identities.
    label:
        Display string.  Constructors use the canonical ring expression.
    coords, from_coords:
        Optional converters between indices and a structured, JSON-friendly
        description of elements (nested lists of base-ring coordinates).
    """

    def __init__(
        self,
        size: int,
        add: Op2,
        mul: Op2,
        neg: Op1,
        zero: int,
        one: int,
        label: str,
        *,
        coords: Callable[[int], Any] | None = None,
        from_coords: Callable[[Any], int] | None = None,
        commutative_hint: bool | None = None,
        tables: tuple[np.ndarray, np.ndarray, np.ndarray] | None = None,
    ):
        if size < 1:
            raise InvalidStructureError("a ring needs at least one element")
        if not (0 <= zero < size and 0 <= one < size):
            raise InvalidStructureError("zero and one must be element indices")
        if zero == one and size != 1:
            raise InvalidStructureError("zero equals one in a ring with more than one element")
        self.size = int(size)
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self.commutative_hint = commutative_hint
        self._add_fn = add
        self._mul_fn = mul
        self._neg_fn = neg
        self._coords = coords
        self._from_coords = from_coords
        self._memo: dict[str, Any] = {}
        self._memo_lock = threading.Lock()
        self.add_table: np.ndarray | None = None
        self.mul_table: np.ndarray | None = None
        self.neg_table: np.ndarray | None = None
        if tables is not None:
            self._set_tables(*tables)
        elif self.size <= config.TABLE_LIMIT:
            self._materialize()

    # -- tables -----------------------------------------------------------

    def _set_tables(self, add_t, mul_t, neg_t) -> None:
        n = self.size
        add_t = np.ascontiguousarray(add_t, dtype=TABLE_DTYPE)
        mul_t = np.ascontiguousarray(mul_t, dtype=TABLE_DTYPE)
        neg_t = np.ascontiguousarray(neg_t, dtype=TABLE_DTYPE)
        if add_t.shape != (n, n) or mul_t.shape != (n, n) or neg_t.shape != (n,):
            raise InvalidStructureError("operation tables have the wrong shape")
        for t in (add_t, mul_t, neg_t):
            if t.size and (t.min() < 0 or t.max() >= n):
                raise InvalidStructureError("operation table entries out of range")
            t.setflags(write=False)
        self.add_table, self.mul_table, self.neg_table = add_t, mul_t, neg_t

    def _materialize(self) -> None:
        n = self.size
        idx = np.arange(n, dtype=np.int64)
        add_t = np.empty((n, n), dtype=TABLE_DTYPE)
        mul_t = np.empty((n, n), dtype=TABLE_DTYPE)
        step = max(1, _BLOCK // n)
        cols = idx[None, :]
        for start in range(0, n, step):
            rows = idx[start : start + step, None]
            shape = (rows.shape[0], n)
            add_t[start : start + step] = np.broadcast_to(self._add_fn(rows, cols), shape)
            mul_t[start : start + step] = np.broadcast_to(self._mul_fn(rows, cols), shape)
        neg_t = np.broadcast_to(self._neg_fn(idx), (n,))
        self._set_tables(add_t, mul_t, neg_t)

    @property
    def materialized(self) -> bool:
        return self.mul_table is not None

    # -- arithmetic -------------------------------------------------------

    def add(self, a, b) -> np.ndarray:
        if self.add_table is not None:
            return self.add_table[a, b]
        return self._add_fn(_as_index(a), _as_index(b))

    def mul(self, a, b) -> np.ndarray:
        if self.mul_table is not None:
            return self.mul_table[a, b]
        return self._mul_fn(_as_index(a), _as_index(b))

    def neg(self, a) -> np.ndarray:
        if self.neg_table is not None:
            return self.neg_table[a]
        return self._neg_fn(_as_index(a))

    def sub(self, a, b) -> np.ndarray:
        return self.add(a, self.neg(b))

    def pow(self, a, k: int) -> np.ndarray:
        """``a**k`` for ``k >= 0`` by repeated squaring."""
        if k < 0:
            raise ValueError("negative exponent")
        a = _as_index(a)
        result = np.full(a.shape, self.one, dtype=np.int64)
        base = a
        while k:
            if k & 1:
                result = _as_index(self.mul(result, base))
            k >>= 1
            if k:
                base = _as_index(self.mul(base, base))
        return result if result.shape else result[()]

    def times(self, k: int, a) -> np.ndarray:
        """The integer multiple ``k·a`` (negative ``k`` allowed)."""
        a = _as_index(a)
        if k < 0:
            k, a = -k, _as_index(self.neg(a))
        result = np.full(a.shape, self.zero, dtype=np.int64)
        base = a
        while k:
            if k & 1:
                result = _as_index(self.add(result, base))
            k >>= 1
            if k:
                base = _as_index(self.add(base, base))
        return result if result.shape else result[()]

    def integer(self, k: int) -> int:
        """Index of ``k·1``."""
        return int(self.times(k, self.one))

    def mul_block(self, rows, cols) -> np.ndarray:
        rows = _as_index(rows)
        cols = _as_index(cols)
        return np.broadcast_to(self.mul(rows[:, None], cols[None, :]), (rows.size, cols.size))

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)

    @property
    def characteristic(self) -> int:
        """Additive order of the identity."""
        k, x = 1, self.one
        while x != self.zero:
            x = int(self.add(x, self.one))
            k += 1
        return k

    # -- presentation -----------------------------------------------------

    def coords(self, i: int) -> Any:
        if self._coords is None:
            return int(i)
        return self._coords(int(i))

    def from_coords(self, value: Any) -> int:
        """Element index from a coordinate description.

        A bare integer is accepted by every ring; composite rings read it as
        the integer multiple ``k·1``.
        """
        if self._from_coords is not None:
            return int(self._from_coords(value))
        if isinstance(value, (int, np.integer)) and 0 <= value < self.size:
            return int(value)
        raise InvalidStructureError(f"cannot read {value!r} as an element of {self.label}")

    def format(self, i: int) -> str:
        return json.dumps(self.coords(i), separators=(",", ":"))

    def element(self, i) -> "RingElement":
        return RingElement(self, int(i))

    def __getitem__(self, i: int) -> "RingElement":
        if not 0 <= int(i) < self.size:
            raise IndexError(i)
        return RingElement(self, int(i))

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator["RingElement"]:
        return (RingElement(self, i) for i in range(self.size))

    def __repr__(self) -> str:
        return f"<FiniteRing {self.label} |R|={self.size}>"

    # -- memo -------------------------------------------------------------

    def memo(self, key: str, compute: Callable[[], Any]) -> Any:
        """Per-ring cache.  Values are computed outside the lock so nested
        memo calls on other rings cannot deadlock; a racing duplicate is
        discarded."""
        try:
            return self._memo[key]
        except KeyError:
            pass
        value = compute()
        with self._memo_lock:
            return self._memo.setdefault(key, value)

    def same_tables(self, other: "FiniteRing") -> bool:
        """True when both rings have identical operation tables and identities."""
        if self.size != other.size or self.zero != other.zero or self.one != other.one:
            return False
        if self.materialized and other.materialized:
            return (
                np.array_equal(self.add_table, other.add_table)
                and np.array_equal(self.mul_table, other.mul_table)
                and np.array_equal(self.neg_table, other.neg_table)
            )
        idx = self.elements()
        step = max(1, _BLOCK // self.size)
        for start in range(0, self.size, step):
            rows = idx[start : start + step, None]
            if not np.array_equal(self.add(rows, idx[None, :]), other.add(rows, idx[None, :])):
                return False
            if not np.array_equal(self.mul(rows, idx[None, :]), other.mul(rows, idx[None, :])):
                return False
        return True


@dataclass(frozen=True, eq=True)
class RingElement:
    """Convenience wrapper pairing an index with its ring."""

    ring: FiniteRing
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ring.size:
            raise IndexError(self.index)

    def _lift(self, other) -> int:
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise ValueError("elements belong to different rings")
            return other.index
        return self.ring.integer(int(other))

    def __add__(self, other):
        return RingElement(self.ring, int(self.ring.add(self.index, self._lift(other))))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.ring, int(self.ring.sub(self.index, self._lift(other))))

    def __rsub__(self, other):
        return RingElement(self.ring, int(self.ring.sub(self._lift(other), self.index)))

    def __mul__(self, other):
        return RingElement(self.ring, int(self.ring.mul(self.index, self._lift(other))))

    def __rmul__(self, other):
        return RingElement(self.ring, int(self.ring.mul(self._lift(other), self.index)))

    def __neg__(self):
        return RingElement(self.ring, int(self.ring.neg(self.index)))

    def __pow__(self, k: int):
        return RingElement(self.ring, int(self.ring.pow(self.index, k)))

    def __int__(self) -> int:
        return self.index

    def __index__(self) -> int:
        return self.index

    @property
    def coords(self) -> Any:
        return self.ring.coords(self.index)

    def __repr__(self) -> str:
        return f"{self.ring.format(self.index)}@{self.ring.label}"


class RingEndomorphism:
    """A unital ring endomorphism given by its action on indices."""

    def __init__(self, domain: FiniteRing, mapping, name: str | None = None, *, validate: bool = True):
        self.domain = domain
        self.map = np.asarray(mapping, dtype=np.int64).copy()
        self.map.setflags(write=False)
        self.name = name or "alpha"
        if self.map.shape != (domain.size,):
            raise InvalidStructureError("endomorphism map must have one entry per element")
        if validate:
            self.validate()

    @classmethod
    def identity(cls, ring: FiniteRing) -> "RingEndomorphism":
        return cls(ring, ring.elements(), "id", validate=False)

    def __call__(self, a):
        return self.map[a]

    def validate(self) -> None:
        R, f = self.domain, self.map
        if f.min() < 0 or f.max() >= R.size:
            raise InvalidStructureError("endomorphism values out of range")
        if f[R.zero] != R.zero or f[R.one] != R.one:
            raise InvalidStructureError(f"{self.name} does not fix 0 and 1")
        idx = R.elements()
        step = max(1, _BLOCK // R.size)
        for start in range(0, R.size, step):
            a = idx[start : start + step, None]
            b = idx[None, :]
            if not np.array_equal(f[R.add(a, b)], R.add(f[a], f[b])):
                raise InvalidStructureError(f"{self.name} is not additive")
            if not np.array_equal(f[R.mul(a, b)], R.mul(f[a], f[b])):
                raise InvalidStructureError(f"{self.name} is not multiplicative")

    def compose(self, other: "RingEndomorphism") -> "RingEndomorphism":
        """``self ∘ other``."""
        if other.domain is not self.domain:
            raise ValueError("endomorphisms of different rings")
        return RingEndomorphism(self.domain, self.map[other.map], f"{self.name}*{other.name}", validate=False)

    def power(self, k: int) -> "RingEndomorphism":
        m = self.domain.elements()
        for _ in range(k):
            m = self.map[m]
        return RingEndomorphism(self.domain, m, f"{self.name}^{k}", validate=False)

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.map, self.domain.elements()))

    def order(self) -> int:
        ident = self.domain.elements()
        m, k = self.map, 1
        while not np.array_equal(m, ident):
            m = self.map[m]
            k += 1
        return k

    def __repr__(self) -> str:
        return f"<RingEndomorphism {self.name} of {self.domain.label}>"
