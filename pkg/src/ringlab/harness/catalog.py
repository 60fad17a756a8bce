"""The curated set of rings and group rings the checks run over."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core.ring import FiniteRing
from ..expressions import Builder, canonical

RING_LABELS: tuple[str, ...] = (
    *(f"Z{n}" for n in range(1, 13)),
    "Z16",
    "Z27",
    "GF(2,2)",
    "GF(2,3)",
    "GF(3,2)",
    "Z2 x Z2",
    "Z2 x Z3",
    "Z3 x Z3",
    "Z2 x Z2 x Z3",
    "Z2 x Z3 x Z3",
    "Z2 x Z2 x Z2",
    "Z3 x Z3 x Z3",
    "Z4 x Z4 x Z4",
    "M2(Z2)",
    "M2(Z3)",
    "M2(Z4)",
    "M2(Z8)",
    "M3(Z2)",
    "T2(Z2)",
    "T2(Z3)",
    "T3(Z2)",
    "T3(Z3)",
    "S2(Z3)",
    "S2(Z4)",
    "S3(Z2)",
    "Tskew2(GF(2,2), frobenius)",
    "Tskew2(GF(2,2), id)",
    "Tskew2(Z4, id)",
    "K(Z4, 2)",
    "K(Z8, 2)",
    "K(Z4, 0)",
    "MF2(Z4, 2)",
    "MF3(Z2, 0)",
    "TE(Z2)",
    "TE(Z4)",
    "TE(Z3 x Z3)",
)

GROUP_RING_PAIRS: tuple[tuple[str, str], ...] = (
    ("Z2", "C2"),
    ("Z4", "C2"),
    ("Z2", "C2 x C2"),
    ("Z2", "C3"),
    ("Z6", "C2"),
    ("Z3", "C3"),
    ("Z2", "C4"),
    ("Z4", "C4"),
    ("Z2", "D4"),
    ("Z2", "Q8"),
    ("Z2", "S3"),
    ("Z3", "C2"),
)


@dataclass
class Catalog:
    """Ring and group-ring entries, built on first use and shared with every
    ring the checks derive from them."""

    ring_labels: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]
    builder: Builder = field(default_factory=Builder)

    def __post_init__(self):
        self.ring_labels = tuple(canonical(t) for t in self.ring_labels)
        labels = list(self.ring_labels) + self.group_ring_labels
        if len(set(labels)) != len(labels):
            raise ValueError("catalog labels must be unique")

    @property
    def group_ring_labels(self) -> list[str]:
        return [f"GR({r}, {g})" for r, g in self.pairs]

    @property
    def labels(self) -> list[str]:
        return list(self.ring_labels) + self.group_ring_labels

    def ring(self, expr: str) -> FiniteRing:
        """Any ring expression; catalog entries and derived rings share the cache."""
        return self.builder(expr)

    def rings(self) -> list[FiniteRing]:
        """Every entry, group rings included."""
        return [self.ring(t) for t in self.labels]

    def plain_rings(self) -> list[FiniteRing]:
        return [self.ring(t) for t in self.ring_labels]

    def group_rings(self) -> list[FiniteRing]:
        return [self.ring(t) for t in self.group_ring_labels]

    def __contains__(self, label: str) -> bool:
        return canonical(label) in self.labels

    def __len__(self) -> int:
        return len(self.labels)


_DEFAULT: Catalog | None = None


def default_catalog() -> Catalog:
    """The shipped catalog (one shared instance, so builds are reused)."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = Catalog(RING_LABELS, GROUP_RING_PAIRS)
    return _DEFAULT


__all__ = ["Catalog", "GROUP_RING_PAIRS", "RING_LABELS", "default_catalog"]
