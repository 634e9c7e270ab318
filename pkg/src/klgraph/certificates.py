"""(k, l)-partition certificates and their verifier."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .graph import Graph, iter_bits, mask_of

MISSING_VERTEX = "missing-vertex"
DUPLICATED_VERTEX = "duplicated-vertex"
EDGE_IN_INDEPENDENT_SET = "edge-inside-independent-set"
NON_EDGE_IN_CLIQUE = "non-edge-inside-clique"


@dataclass(frozen=True)
class KLPartition:
    """k independent sets plus l cliques; empty parts are allowed."""

    independent_sets: tuple[frozenset[int], ...]
    cliques: tuple[frozenset[int], ...]

    @classmethod
    def of(
        cls,
        independent_sets: Iterable[Iterable[int]] = (),
        cliques: Iterable[Iterable[int]] = (),
    ) -> "KLPartition":
        return cls(
            tuple(frozenset(s) for s in independent_sets),
            tuple(frozenset(c) for c in cliques),
        )

    @classmethod
    def from_masks(cls, independent_masks: Iterable[int], clique_masks: Iterable[int]) -> "KLPartition":
        return cls(
            tuple(frozenset(iter_bits(m)) for m in independent_masks),
            tuple(frozenset(iter_bits(m)) for m in clique_masks),
        )

    @property
    def k(self) -> int:
        return len(self.independent_sets)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.cliques)

    def swap(self) -> "KLPartition":
        """Exchange the roles of independent sets and cliques (complement duality)."""
        return KLPartition(self.cliques, self.independent_sets)

    def padded(self, k: int, l: int) -> "KLPartition":
        """Append empty parts up to k independent sets and l cliques."""
        if k < self.k or l < self.l:
            raise ValueError(f"cannot pad a ({self.k},{self.l}) partition down to ({k},{l})")
        empty = frozenset()
        return KLPartition(
            self.independent_sets + (empty,) * (k - self.k),
            self.cliques + (empty,) * (l - self.l),
        )

    def remap(self, mapping: list[int]) -> "KLPartition":
        """Translate vertex labels through ``mapping`` (new index -> old vertex)."""
        return KLPartition(
            tuple(frozenset(mapping[v] for v in s) for s in self.independent_sets),
            tuple(frozenset(mapping[v] for v in c) for c in self.cliques),
        )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "independent_sets": [sorted(s) for s in self.independent_sets],
            "cliques": [sorted(c) for c in self.cliques],
        }

    @classmethod
    def from_json(cls, data: dict) -> "KLPartition":
        return cls.of(data["independent_sets"], data["cliques"])


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: Union[int, tuple[int, int]]


def verify_kl(g: Graph, p: KLPartition) -> Union[bool, Violation]:
    """Return ``True`` if ``p`` is a valid partition of ``g``, else the first Violation.

    Scan order is fixed so the reported violation is reproducible: vertex
    coverage first (lowest vertex), then the independent sets in order, then
    the cliques, each reporting its lexicographically smallest bad pair.
    """
    parts = list(p.independent_sets) + list(p.cliques)
    counts = [0] * g.n
    for part in parts:
        for v in sorted(part):
            if not 0 <= v < g.n:
                # a label outside the graph leaves some real vertex uncovered
                return Violation(MISSING_VERTEX, v)
            counts[v] += 1
    for v in range(g.n):
        if counts[v] == 0:
            return Violation(MISSING_VERTEX, v)
        if counts[v] > 1:
            return Violation(DUPLICATED_VERTEX, v)
    rows = g.rows
    for part in p.independent_sets:
        mask = mask_of(part)
        for u in sorted(part):
            hit = rows[u] & mask & ~((2 << u) - 1)
            if hit:
                return Violation(EDGE_IN_INDEPENDENT_SET, (u, (hit & -hit).bit_length() - 1))
    for part in p.cliques:
        mask = mask_of(part)
        for u in sorted(part):
            miss = mask & ~rows[u] & ~((2 << u) - 1)
            if miss:
                return Violation(NON_EDGE_IN_CLIQUE, (u, (miss & -miss).bit_length() - 1))
    return True


def is_valid(g: Graph, p: KLPartition) -> bool:
    return verify_kl(g, p) is True
