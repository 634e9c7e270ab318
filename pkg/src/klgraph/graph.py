"""Immutable simple undirected graphs.

Vertices are the integers ``0..n-1``.  Every graph carries two views: sorted
adjacency lists for traversals, and one bitmask per vertex (a row of the
adjacency bit-matrix, stored as a Python ``int``) for constant-time adjacency
probes and word-parallel set operations.

Vertex sets are passed around internally as bitmasks; the public helpers
return ``frozenset`` objects.
"""

from __future__ import annotations

import os
from functools import cached_property
from typing import Iterable, Iterator, Sequence

#: Largest vertex count accepted by :func:`build_graph`.
MAX_VERTICES = int(os.environ.get("KLGRAPH_MAX_VERTICES", "50000"))


class GraphError(ValueError):
    """Raised for malformed graph input (loops, duplicates, bad indices)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: int) -> int:
    """Index of the lowest set bit; -1 for an empty mask."""
    return (mask & -mask).bit_length() - 1


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Build one with :func:`build_graph`; the constructor trusts its input.
    """

    __slots__ = ("n", "rows", "__dict__")

    def __init__(self, n: int, rows: Sequence[int]):
        self.n = n
        self.rows: tuple[int, ...] = tuple(rows)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def complement_edge_count(self) -> int:
        return self.n * (self.n - 1) // 2 - self.m

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(iter_bits(r)) for r in self.rows)

    @property
    def adj_matrix(self) -> list[list[int]]:
        return [[(r >> v) & 1 for v in range(self.n)] for r in self.rows]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u, r in enumerate(self.rows):
            for v in iter_bits(r >> (u + 1)):
                out.append((u, u + 1 + v))
        return tuple(out)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, rejecting loops, duplicate pairs and bad indices."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if n > MAX_VERTICES:
        raise GraphError(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
    rows = [0] * n
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if (rows[u] >> v) & 1:
            raise GraphError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complement_rows(rows: Sequence[int], n: int) -> list[int]:
    full = (1 << n) - 1
    return [full ^ r ^ (1 << u) for u, r in enumerate(rows)]


def complement(g: Graph) -> Graph:
    return Graph(g.n, complement_rows(g.rows, g.n))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def induced_rows(rows: Sequence[int], mask: int) -> tuple[list[int], list[int]]:
    """Rows of the subgraph induced by ``mask``, re-indexed 0..k-1.

    Returns ``(new_rows, mapping)`` where ``mapping[i]`` is the original
    vertex behind new index ``i``.
    """
    mapping = bits_list(mask)
    index = {v: i for i, v in enumerate(mapping)}
    new_rows = []
    for v in mapping:
        r = 0
        for w in iter_bits(rows[v] & mask):
            r |= 1 << index[w]
        new_rows.append(r)
    return new_rows, mapping


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    mask = 0
    for v in vertices:
        _check_vertex(g, v)
        mask |= 1 << v
    new_rows, mapping = induced_rows(g.rows, mask)
    return Graph(len(mapping), new_rows), mapping


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    _check_vertex(g, v)
    return frozenset(iter_bits(g.rows[v]))


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    _check_vertex(g, v)
    return frozenset(iter_bits(g.rows[v] | (1 << v)))


def non_neighborhood(g: Graph, v: int) -> frozenset[int]:
    _check_vertex(g, v)
    return frozenset(iter_bits(g.full & ~(g.rows[v] | (1 << v))))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph(offset, rows)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, list[int]]:
    _check_vertex(g, v)
    return induced_subgraph(g, (u for u in range(g.n) if u != v))
