"""Seeded instance generators.

Randomness comes from SplitMix64 (Steele, Lea & Flood 2014): a 64-bit
counter advanced by 0x9E3779B97F4A7C15 and passed through a fixed mixing
function.  It is tiny and fully specified, so any language reproduces the
same stream from the same seed.  A pair is drawn as an edge when the top 53
bits of the next output, read as a fraction in [0, 1), fall below p; pairs
are visited in lexicographic order (u < v).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .certificates import KLPartition
from .graph import Graph, build_graph, disjoint_union

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")


def gnp(n: int, p: float, seed: int) -> Graph:
    _check_p(p)
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return build_graph(n, edges)


def planted_kl(
    independent_sizes: list[int],
    clique_sizes: list[int],
    p_cross: float = 0.5,
    seed: int = 0,
    shuffle: bool = False,
) -> tuple[Graph, KLPartition]:
    """A graph built around a known (k, l)-partition.

    Parts occupy consecutive vertex ranges (independent sets first) unless
    ``shuffle`` relabels vertices with the same generator.
    """
    _check_p(p_cross)
    sizes = list(independent_sizes) + list(clique_sizes)
    if any(s < 0 for s in sizes):
        raise ValueError("part sizes must be non-negative")
    n = sum(sizes)
    rng = SplitMix64(seed)
    label = list(range(n))
    if shuffle:
        rng.shuffle(label)
    part_of = []
    for idx, size in enumerate(sizes):
        part_of.extend([idx] * size)
    k = len(independent_sizes)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            pu, pv = part_of[u], part_of[v]
            if pu == pv:
                if pu >= k:
                    edges.append((label[u], label[v]))
            elif rng.random() < p_cross:
                edges.append((label[u], label[v]))
    parts: list[set[int]] = [set() for _ in sizes]
    for u in range(n):
        parts[part_of[u]].add(label[u])
    return build_graph(n, edges), KLPartition.of(parts[:k], parts[k:])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return build_graph(n, [])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def t_k3(t: int) -> Graph:
    return disjoint_union(*[complete(3)] * t)


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


_NAMED = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "empty": empty,
    "petersen": petersen,
    "tK3": t_k3,
    "bowtie": bowtie,
}


def named(name: str) -> Graph:
    """Parse names like ``cycle(5)``, ``tK3(3)``, ``petersen``."""
    match = re.fullmatch(r"\s*(\w+)\s*(?:\(\s*(\d+)\s*\))?\s*", name)
    if not match or match.group(1) not in _NAMED:
        raise ValueError(f"unknown named graph {name!r}")
    fn = _NAMED[match.group(1)]
    arg = match.group(2)
    try:
        return fn(int(arg)) if arg is not None else fn()
    except TypeError as exc:
        raise ValueError(f"bad arguments for named graph {name!r}") from exc


@dataclass
class GenSpec:
    kind: str
    n: int = 0
    p: float = 0.5
    part_sizes: list[int] = field(default_factory=list)
    k: int = 0
    name: str = ""
    seed: int = 0

    def build(self) -> tuple[Graph, Optional[KLPartition]]:
        if self.kind == "gnp":
            return gnp(self.n, self.p, self.seed), None
        if self.kind == "planted":
            if sum(self.part_sizes) != self.n and self.n:
                raise ValueError("planted part sizes must sum to n")
            return planted_kl(self.part_sizes[: self.k], self.part_sizes[self.k:], self.p, self.seed)
        if self.kind == "named":
            return named(self.name), None
        raise ValueError(f"unknown generator kind {self.kind!r}")


def parse_genspec(text: str, seed: int = 0) -> GenSpec:
    """Parse ``gnp:n=10,p=0.3``, ``planted:ind=3+3,cliques=4,p=0.5`` or ``named:cycle(5)``."""
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    if kind == "named":
        return GenSpec("named", name=rest.strip(), seed=seed)
    fields = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, eq, value = item.partition("=")
        if not eq:
            raise ValueError(f"expected key=value, got {item!r}")
        fields[key.strip()] = value.strip()
    try:
        if kind == "gnp":
            return GenSpec("gnp", n=int(fields["n"]), p=float(fields.get("p", 0.5)), seed=int(fields.get("seed", seed)))
        if kind == "planted":
            ind = [int(x) for x in fields.get("ind", "").split("+") if x]
            clq = [int(x) for x in fields.get("cliques", "").split("+") if x]
            return GenSpec(
                "planted",
                n=sum(ind) + sum(clq),
                p=float(fields.get("p", 0.5)),
                part_sizes=ind + clq,
                k=len(ind),
                seed=int(fields.get("seed", seed)),
            )
    except KeyError as exc:
        raise ValueError(f"missing field {exc} in {text!r}") from exc
    raise ValueError(f"unknown generator kind {kind!r}")
