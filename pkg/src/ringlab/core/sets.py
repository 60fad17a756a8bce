"""Subsets of a ring's elements."""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .ring import FiniteRing


class ElementSet:
    """An immutable set of element indices of one ring, backed by a mask."""

    __slots__ = ("ring", "mask", "_members")

    def __init__(self, ring: FiniteRing, members: Iterable[int] | None = None, *, mask: np.ndarray | None = None):
        self.ring = ring
        if mask is None:
            mask = np.zeros(ring.size, dtype=bool)
            if members is not None:
                idx = np.fromiter((int(m) for m in members), dtype=np.int64)
                if idx.size and (idx.min() < 0 or idx.max() >= ring.size):
                    raise IndexError("member index outside the ring")
                mask[idx] = True
        else:
            mask = np.array(mask, dtype=bool)
            if mask.shape != (ring.size,):
                raise ValueError("mask length must equal the ring size")
        mask.setflags(write=False)
        self.mask = mask
        self._members: tuple[int, ...] | None = None

    @property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @property
    def members(self) -> tuple[int, ...]:
        if self._members is None:
            self._members = tuple(int(i) for i in np.flatnonzero(self.mask))
        return self._members

    def __contains__(self, i) -> bool:
        i = int(i)
        return 0 <= i < self.ring.size and bool(self.mask[i])

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def _check(self, other: "ElementSet") -> None:
        if other.ring is not self.ring:
            raise ValueError("sets belong to different rings")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return other.ring is self.ring and bool(np.array_equal(self.mask, other.mask))

    def __hash__(self) -> int:
        return hash((id(self.ring), self.mask.tobytes()))

    def __le__(self, other: "ElementSet") -> bool:
        self._check(other)
        return not bool((self.mask & ~other.mask).any())

    def issubset(self, other: "ElementSet") -> bool:
        return self <= other

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.ring, mask=self.mask & other.mask)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.ring, mask=self.mask | other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.ring, mask=self.mask & ~other.mask)

    def complement(self) -> "ElementSet":
        return ElementSet(self.ring, mask=~self.mask)

    def __repr__(self) -> str:
        shown = ", ".join(str(m) for m in self.members[:12])
        more = ", ..." if len(self) > 12 else ""
        return f"ElementSet({self.ring.label}: {{{shown}{more}}})"
