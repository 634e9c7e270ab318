"""Bipartite, co-bipartite and split recognition, odd cycles, and incremental 2-colorings.

The ``*_mask`` helpers work on a row table (one adjacency bitmask per vertex)
restricted to a vertex bitmask, so callers can test induced subgraphs without
materializing them.  The public functions take a :class:`Graph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .certificates import KLPartition, verify_kl
from .graph import Graph, iter_bits, lowest, mask_of

Rows = Sequence[int]


@dataclass(frozen=True)
class Bipartition:
    side_x: frozenset[int]
    side_y: frozenset[int]

    def certificate(self) -> KLPartition:
        return KLPartition((self.side_x, self.side_y), ())


@dataclass(frozen=True)
class CoBipartition:
    clique_x: frozenset[int]
    clique_y: frozenset[int]

    def certificate(self) -> KLPartition:
        return KLPartition((), (self.clique_x, self.clique_y))


@dataclass(frozen=True)
class SplitPartition:
    clique_side: frozenset[int]
    independent_side: frozenset[int]

    def certificate(self) -> KLPartition:
        return KLPartition((self.independent_side,), (self.clique_side,))


@dataclass(frozen=True)
class OddCycle:
    """A cycle given as its cyclic vertex sequence; odd length >= 3."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(vs) % 2 == 0 or len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


# ---------------------------------------------------------------------------
# mask-level primitives


def two_color(rows: Rows, mask: int) -> Optional[tuple[int, int]]:
    """2-color ``G[mask]`` by level-synchronous BFS.

    Components are rooted at their lowest vertex; even BFS levels form the
    first side.  Returns ``None`` when some level contains an edge, which is
    exactly when the induced subgraph is not bipartite.
    """
    side0 = side1 = 0
    rest = mask
    while rest:
        frontier = rest & -rest
        seen = frontier
        even = True
        while frontier:
            if even:
                side0 |= frontier
            else:
                side1 |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                r = rows[low.bit_length() - 1]
                if r & frontier:
                    return None
                nxt |= r
                f ^= low
            frontier = nxt & mask & ~seen
            seen |= frontier
            even = not even
        rest &= ~seen
    return side0, side1


def co_two_color(rows: Rows, mask: int) -> Optional[tuple[int, int]]:
    """Cover ``G[mask]`` by two cliques: :func:`two_color` on the complement.

    Complement rows are formed on the fly and restricted to ``mask``.
    """
    side0 = side1 = 0
    rest = mask
    while rest:
        frontier = rest & -rest
        seen = frontier
        even = True
        while frontier:
            if even:
                side0 |= frontier
            else:
                side1 |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                r = mask & ~rows[low.bit_length() - 1] & ~low
                if r & frontier:
                    return None
                nxt |= r
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
            even = not even
        rest &= ~seen
    return side0, side1


def is_bipartite_mask(rows: Rows, mask: int) -> bool:
    return two_color(rows, mask) is not None


def is_cobipartite_mask(rows: Rows, mask: int) -> bool:
    # a co-bipartite graph has independence number at most 2
    return co_two_color(rows, mask) is not None


def is_clique_mask(rows: Rows, mask: int) -> bool:
    for v in iter_bits(mask):
        if (rows[v] | (1 << v)) & mask != mask:
            return False
    return True


def is_independent_mask(rows: Rows, mask: int) -> bool:
    for v in iter_bits(mask):
        if rows[v] & mask:
            return False
    return True


def split_partition(rows: Rows, mask: int) -> Optional[tuple[int, int]]:
    """Split partition ``(K, I)`` of ``G[mask]`` with K maximal, or ``None``.

    Degree-sequence test: with degrees sorted d_1 >= ... >= d_s and
    p = max{i : d_i >= i - 1}, the graph is split iff
    sum_{i<=p} d_i == p(p-1) + sum_{i>p} d_i, and then the p vertices of
    largest degree form a clique that no vertex of the rest dominates.
    """
    verts = list(iter_bits(mask))
    degs = {v: (rows[v] & mask).bit_count() for v in verts}
    order = sorted(verts, key=lambda v: (-degs[v], v))
    p = 0
    for i, v in enumerate(order, start=1):
        if degs[v] >= i - 1:
            p = i
        else:
            break
    head = sum(degs[v] for v in order[:p])
    tail = sum(degs[v] for v in order[p:])
    if head != p * (p - 1) + tail:
        return None
    clique = mask_of(order[:p])
    return clique, mask & ~clique


def is_split_mask(rows: Rows, mask: int) -> bool:
    return split_partition(rows, mask) is not None


def _climb(rows: Rows, levels: list[int], x: int, y: int) -> list[int]:
    """Close the odd cycle formed by same-level vertices x, y and their BFS ancestors."""
    left, right = [x], [y]
    depth = len(levels) - 1
    while left[-1] != right[-1]:
        depth -= 1
        prev = levels[depth]
        left.append(lowest(rows[left[-1]] & prev))
        right.append(lowest(rows[right[-1]] & prev))
    return left + right[-2::-1]


def rooted_odd_cycle(rows: Rows, mask: int, root: int) -> Optional[list[int]]:
    """BFS from ``root`` inside ``G[mask]``; close the first same-level edge.

    The first level holding an edge is scanned from its lowest vertex ``x``
    and ``x``'s lowest same-level neighbour ``y``; parents are the lowest
    adjacent vertex one level up.
    """
    frontier = 1 << root
    seen = frontier
    levels = []
    while frontier:
        levels.append(frontier)
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            x = low.bit_length() - 1
            r = rows[x]
            hit = r & frontier
            if hit:
                return _climb(rows, levels, x, lowest(hit))
            nxt |= r
            f ^= low
        frontier = nxt & mask & ~seen
        seen |= frontier
    return None


def find_odd_cycle(rows: Rows, mask: int) -> Optional[list[int]]:
    """Some odd cycle of ``G[mask]``, or ``None`` if it is bipartite."""
    rest = mask
    while rest:
        root = lowest(rest)
        cycle = rooted_odd_cycle(rows, mask, root)
        if cycle is not None:
            return cycle
        rest &= ~_component(rows, mask, root)
    return None


def _component(rows: Rows, mask: int, root: int) -> int:
    seen = frontier = 1 << root
    while frontier:
        nxt = 0
        for x in iter_bits(frontier):
            nxt |= rows[x]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen


def shortest_odd_cycle_mask(rows: Rows, mask: int, roots: int) -> Optional[list[int]]:
    """Shortest odd cycle of ``G[mask]`` among those through a vertex of ``roots``.

    One BFS per root, in increasing root order; the first root producing the
    minimum length wins.
    """
    best: Optional[list[int]] = None
    for r in iter_bits(roots & mask):
        cycle = rooted_odd_cycle(rows, mask, r)
        if cycle is not None and (best is None or len(cycle) < len(best)):
            best = cycle
            if len(best) == 3:
                break
    return best


# ---------------------------------------------------------------------------
# public recognizers


def bipartite_check(g: Graph) -> Union[Bipartition, OddCycle]:
    coloring = two_color(g.rows, g.full)
    if coloring is None:
        return OddCycle(tuple(find_odd_cycle(g.rows, g.full)))
    x, y = coloring
    return Bipartition(frozenset(iter_bits(x)), frozenset(iter_bits(y)))


def cobipartite_check(g: Graph) -> Union[CoBipartition, OddCycle]:
    """Two cliques covering ``g``, or an odd cycle of the complement."""
    cover = co_two_color(g.rows, g.full)
    if cover is None:
        full = g.full
        crows = [full & ~r & ~(1 << u) for u, r in enumerate(g.rows)]
        return OddCycle(tuple(find_odd_cycle(crows, full)))
    x, y = cover
    return CoBipartition(frozenset(iter_bits(x)), frozenset(iter_bits(y)))


def split_check(g: Graph) -> Optional[SplitPartition]:
    found = split_partition(g.rows, g.full)
    if found is None:
        return None
    k, i = found
    result = SplitPartition(frozenset(iter_bits(k)), frozenset(iter_bits(i)))
    if verify_kl(g, result.certificate()) is not True:
        raise AssertionError(f"split certificate failed to verify on {g!r}")
    return result


def shortest_odd_cycle_via(g: Graph, roots) -> Optional[OddCycle]:
    """Shortest odd cycle of ``g`` found by BFS from each vertex of ``roots``.

    The result is a shortest odd cycle whenever every odd cycle of ``g``
    meets ``roots``; ``None`` means no odd cycle passes through ``roots``
    (so ``g`` is bipartite under that promise).
    """
    cycle = shortest_odd_cycle_mask(g.rows, g.full, mask_of(roots))
    return None if cycle is None else OddCycle(tuple(cycle))


def odd_cycle_core_mask(rows: Rows, mask: int) -> int:
    core = 0
    for w in iter_bits(mask):
        if two_color(rows, mask & ~(1 << w)) is not None:
            core |= 1 << w
    return core


def odd_cycle_core(g: Graph) -> frozenset[int]:
    """Vertices whose deletion leaves ``g`` bipartite.

    For a non-bipartite graph these are the vertices lying on every odd cycle.
    """
    return frozenset(iter_bits(odd_cycle_core_mask(g.rows, g.full)))


# ---------------------------------------------------------------------------
# incremental bipartitions


@dataclass(frozen=True)
class ComponentBipartition:
    """2-coloring of ``G[covered]`` kept per connected component.

    ``components`` holds one ``(side0, side1)`` bitmask pair per component.
    Values are immutable; :meth:`try_add` returns a new instance.
    """

    rows: tuple[int, ...]
    covered: int
    components: tuple[tuple[int, int], ...]

    def component_of(self, v: int) -> int:
        bit = 1 << v
        for i, (a, b) in enumerate(self.components):
            if (a | b) & bit:
                return i
        raise KeyError(v)

    def color_of(self, v: int) -> int:
        a, _ = self.components[self.component_of(v)]
        return 0 if (a >> v) & 1 else 1

    @property
    def side_sizes(self) -> list[tuple[int, int]]:
        return [(a.bit_count(), b.bit_count()) for a, b in self.components]

    def covered_set(self) -> frozenset[int]:
        return frozenset(iter_bits(self.covered))

    def sides(self) -> tuple[int, int]:
        """Global bipartition: union of first sides, union of second sides."""
        x = y = 0
        for a, b in self.components:
            x |= a
            y |= b
        return x, y

    def conflicts(self, q: int) -> bool:
        """True iff adding ``q`` would create an odd cycle."""
        nq = self.rows[q] & self.covered
        if not nq:
            return False
        for a, b in self.components:
            if nq & a and nq & b:
                return True
        return False

    def try_add(self, q: int) -> Optional["ComponentBipartition"]:
        bit = 1 << q
        if self.covered & bit:
            raise ValueError(f"vertex {q} is already covered")
        nq = self.rows[q] & self.covered
        same, opposite = bit, 0
        kept = []
        for a, b in self.components:
            ha, hb = nq & a, nq & b
            if ha and hb:
                return None
            if ha:
                opposite |= a
                same |= b
            elif hb:
                opposite |= b
                same |= a
            else:
                kept.append((a, b))
        kept.append((same, opposite))
        return ComponentBipartition(self.rows, self.covered | bit, tuple(kept))


def cb_from_mask(rows: Sequence[int], mask: int) -> Optional[ComponentBipartition]:
    rows = tuple(rows)
    comps = []
    rest = mask
    while rest:
        frontier = rest & -rest
        seen = frontier
        a = b = 0
        even = True
        while frontier:
            if even:
                a |= frontier
            else:
                b |= frontier
            nxt = 0
            for x in iter_bits(frontier):
                r = rows[x]
                if r & frontier:
                    return None
                nxt |= r
            frontier = nxt & mask & ~seen
            seen |= frontier
            even = not even
        comps.append((a, b))
        rest &= ~seen
    return ComponentBipartition(rows, mask, tuple(comps))


def cb_init(g: Graph, vertices) -> Union[ComponentBipartition, OddCycle]:
    mask = mask_of(vertices)
    state = cb_from_mask(g.rows, mask)
    if state is None:
        return OddCycle(tuple(find_odd_cycle(g.rows, mask)))
    return state


def cb_try_add(state: ComponentBipartition, q: int) -> Optional[ComponentBipartition]:
    """Extend ``state`` by ``q``; ``None`` signals a conflict (odd cycle)."""
    return state.try_add(q)
