"""Recognition of (2,1)- and (1,2)-graphs.

A (2,1)-partition is a pair (B, C) with ``G[B]`` bipartite and C a clique.
Every vertex is first classified by two local tests:

* ``G[N(v)]`` split -- necessary when v ends up in B;
* ``G[V - N[v]]`` bipartite -- necessary when v ends up in C.

Vertices failing the first test are forced into C (``C^F``), vertices
failing the second are forced into B (``B^F``) and the rest (``R``) are
free.  The free vertices are then settled either through a triangle of
``G[R]`` (one of its corners lies in C) or, when ``G[R]`` is triangle-free,
through a shortest odd cycle of ``G[B^F + R]`` (one of its free vertices
lies in C, together with at most one more free neighbour).

All work happens on row bitmasks restricted to a vertex mask, so the same
code recognizes induced subgraphs without copying them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .basic import (
    is_bipartite_mask,
    is_split_mask,
    odd_cycle_core_mask,
    shortest_odd_cycle_mask,
    split_partition,
    two_color,
)
from .certificates import KLPartition, verify_kl
from .errors import InvariantError, PreconditionError
from .graph import Graph, complement_rows, iter_bits, lowest

Rows = Sequence[int]
Partition21 = KLPartition


@dataclass(frozen=True)
class TriClassification21:
    """Vertex classes as bitmasks; frozenset views via ``c_f``, ``b_f``, ``r``.

    When ``reject_witness`` is set and the classification was computed with
    early exit, vertices after the witness are left unclassified.
    """

    c_f_mask: int
    b_f_mask: int
    r_mask: int
    reject_witness: Optional[int] = None

    @property
    def c_f(self) -> frozenset[int]:
        return frozenset(iter_bits(self.c_f_mask))

    @property
    def b_f(self) -> frozenset[int]:
        return frozenset(iter_bits(self.b_f_mask))

    @property
    def r(self) -> frozenset[int]:
        return frozenset(iter_bits(self.r_mask))


def classify_mask(rows: Rows, mask: int, stop_at_witness: bool = False) -> TriClassification21:
    cf = bf = r = 0
    witness = None
    for v in iter_bits(mask):
        bit = 1 << v
        nbrs = rows[v] & mask
        split_ok = is_split_mask(rows, nbrs)
        bip_ok = is_bipartite_mask(rows, mask & ~nbrs & ~bit)
        if split_ok and bip_ok:
            r |= bit
        elif bip_ok:
            cf |= bit
        elif split_ok:
            bf |= bit
        elif witness is None:
            witness = v
            if stop_at_witness:
                break
    return TriClassification21(cf, bf, r, witness)


def _adjacent_to_all(rows: Rows, v: int, target: int) -> bool:
    return rows[v] & target == target


def _clique_ok(rows: Rows, cf: int, extra: Sequence[int]) -> bool:
    """Is ``C^F`` plus ``extra`` a clique, given that ``C^F`` already is one."""
    for i, v in enumerate(extra):
        if not _adjacent_to_all(rows, v, cf):
            return False
        for w in extra[i + 1:]:
            if not (rows[v] >> w) & 1:
                return False
    return True


def modify_mask(rows: Rows, mask: int, x: int) -> Optional[tuple[int, int]]:
    """Decide whether some (2,1)-partition of ``G[mask]`` puts ``x`` in the clique.

    A clique through x lies in N[x], and a clique of the split graph
    ``G[N(x)] = K + I`` (K maximal) holds at most one vertex of I.  So the
    candidate cliques are ``{x} + K`` and ``{x, j} + (K & N(j))`` for j in I;
    each is the largest clique of its family, and shrinking C only shrinks
    what must be bipartite, so testing these maximal ones suffices.
    Returns ``(B, C)`` masks for the first success.
    """
    bit = 1 << x
    found = split_partition(rows, rows[x] & mask)
    if found is None:
        raise PreconditionError(f"G[N({x})] is not split")
    k, ind = found
    candidates = [bit | k]
    for j in iter_bits(ind):
        candidates.append(bit | (1 << j) | (k & rows[j]))
    for c in candidates:
        b = mask & ~c
        if is_bipartite_mask(rows, b):
            return b, c
    return None


def _find_triangle(rows: Rows, r: int) -> Optional[tuple[int, int, int]]:
    for u in iter_bits(r):
        ru = rows[u] & r
        for w in iter_bits(ru >> (u + 1)):
            w += u + 1
            common = ru & rows[w]
            if common:
                return tuple(sorted((u, w, lowest(common))))
    return None


def solve_low_mask(rows: Rows, mask: int, cls: TriClassification21) -> Optional[tuple[int, int]]:
    """Settle the free vertices when ``G[R]`` is triangle-free.

    Either ``B^F + R`` is already bipartite, or some free vertex of a
    shortest odd cycle of ``G[B^F + R]`` must join the clique, possibly with
    one free neighbour.  Outside vertices see at most two vertices of a
    shortest odd cycle of length >= 5 (and at most one free one of a
    triangle, as ``G[R]`` is triangle-free), so O(n) candidates remain.
    """
    cf, bf, r = cls.c_f_mask, cls.b_f_mask, cls.r_mask
    if cls.reject_witness is not None or not r:
        raise PreconditionError("classification must be free of witnesses with R nonempty")
    h = bf | r
    if is_bipartite_mask(rows, h):
        return h, cf
    cycle = shortest_odd_cycle_mask(rows, h, r)
    if cycle is None:
        raise InvariantError("odd cycle of G[B^F + R] avoids R although G[B^F] is bipartite")
    on_cycle = 0
    for v in cycle:
        on_cycle |= 1 << v

    singles = [v for v in sorted(cycle) if (r >> v) & 1]
    pairs = []
    for v in iter_bits(r):
        rv = rows[v] & r
        for w in iter_bits(rv >> (v + 1)):
            w += v + 1
            if (on_cycle >> v) & 1 or (on_cycle >> w) & 1:
                pairs.append((v, w))
    n = mask.bit_count()
    size = len(cycle)
    if len(pairs) > size + 2 * (n - size) or len(singles) + len(pairs) > 3 * n:
        raise InvariantError(
            f"{len(pairs)} edge candidates around an odd cycle of length {size} on {n} vertices"
        )
    for extra in [(v,) for v in singles] + pairs:
        if not _clique_ok(rows, cf, extra):
            continue
        c = cf
        for v in extra:
            c |= 1 << v
        b = h & ~c
        if is_bipartite_mask(rows, b):
            return b, c
    return None


def solve_oddcore_mask(rows: Rows, mask: int, cls: TriClassification21) -> Optional[tuple[int, int]]:
    """Same decision as :func:`solve_low_mask` through odd-cycle cores.

    A free vertex w alone completes the clique iff it is adjacent to all of
    ``C^F`` and lies on every odd cycle of ``G[B^F + R]``; a free edge vw
    does iff w lies on every odd cycle once v is removed.
    """
    cf, bf, r = cls.c_f_mask, cls.b_f_mask, cls.r_mask
    h = bf | r
    if is_bipartite_mask(rows, h):
        return h, cf
    r_star = 0
    for v in iter_bits(r):
        if _adjacent_to_all(rows, v, cf):
            r_star |= 1 << v
    if not r_star:
        return None
    hit = odd_cycle_core_mask(rows, h) & r_star
    if hit:
        w = lowest(hit)
        return h & ~(1 << w), cf | (1 << w)
    for v in iter_bits(r_star):
        rest = h & ~(1 << v)
        hit = odd_cycle_core_mask(rows, rest) & rows[v] & r_star
        if hit:
            w = lowest(hit)
            pair = (1 << v) | (1 << w)
            return h & ~pair, cf | pair
    return None


def recognize_mask(rows: Rows, mask: int, engine: str = "main") -> Optional[tuple[int, int]]:
    """``(B, C)`` masks of a (2,1)-partition of ``G[mask]``, or ``None``."""
    cls = classify_mask(rows, mask, stop_at_witness=True)
    if cls.reject_witness is not None:
        return None
    cf, bf, r = cls.c_f_mask, cls.b_f_mask, cls.r_mask
    for v in iter_bits(cf):
        if not _adjacent_to_all(rows, v, cf & ~(1 << v)):
            return None
    if not is_bipartite_mask(rows, bf):
        return None
    if not r:
        return bf, cf
    triangle = _find_triangle(rows, r)
    if triangle is not None:
        for x in triangle:
            found = modify_mask(rows, mask, x)
            if found is not None:
                return found
        return None
    if engine == "oddcore":
        return solve_oddcore_mask(rows, mask, cls)
    return solve_low_mask(rows, mask, cls)


def _certificate(rows: Rows, found: tuple[int, int]) -> KLPartition:
    b, c = found
    sides = two_color(rows, b)
    if sides is None:
        raise InvariantError("bipartite side of a (2,1)-partition is not bipartite")
    return KLPartition.from_masks(sides, (c,))


def _checked(g: Graph, cert: KLPartition) -> KLPartition:
    if verify_kl(g, cert) is not True:
        raise InvariantError(f"certificate {cert} failed verification: {verify_kl(g, cert)}")
    return cert


# ---------------------------------------------------------------------------
# Graph-level API


def classify_vertices_21(g: Graph) -> TriClassification21:
    return classify_mask(g.rows, g.full)


def solve_low_clique_R(g: Graph, cls: TriClassification21) -> Optional[Partition21]:
    if not _is_clique(g.rows, cls.c_f_mask) or not is_bipartite_mask(g.rows, cls.b_f_mask):
        raise PreconditionError("C^F must be a clique and G[B^F] bipartite")
    if _find_triangle(g.rows, cls.r_mask) is not None:
        raise PreconditionError("G[R] contains a triangle")
    found = solve_low_mask(g.rows, g.full, cls)
    return None if found is None else _checked(g, _certificate(g.rows, found))


def _is_clique(rows: Rows, mask: int) -> bool:
    return all(_adjacent_to_all(rows, v, mask & ~(1 << v)) for v in iter_bits(mask))


def modify(g: Graph, x: int, cls: Optional[TriClassification21] = None) -> Optional[Partition21]:
    """A (2,1)-partition of ``g`` whose clique contains ``x``, if any exists."""
    if cls is not None and not (cls.r_mask >> x) & 1:
        raise PreconditionError(f"vertex {x} is not free")
    found = modify_mask(g.rows, g.full, x)
    return None if found is None else _checked(g, _certificate(g.rows, found))


def recognize_21(g: Graph) -> Optional[Partition21]:
    found = recognize_mask(g.rows, g.full)
    return None if found is None else _checked(g, _certificate(g.rows, found))


def recognize_21_oddcore(g: Graph) -> Optional[Partition21]:
    found = recognize_mask(g.rows, g.full, engine="oddcore")
    return None if found is None else _checked(g, _certificate(g.rows, found))


def recognize_12_mask(crows: Rows, mask: int) -> Optional[KLPartition]:
    """(1,2)-certificate of ``G[mask]`` from complement rows ``crows``; labels are host vertices."""
    found = recognize_mask(crows, mask)
    if found is None:
        return None
    return _certificate(crows, found).swap()


def recognize_12(g: Graph) -> Optional[KLPartition]:
    """One independent set and two cliques, via (2,1) on the complement."""
    crows = complement_rows(g.rows, g.n)
    cert = recognize_12_mask(crows, g.full)
    return None if cert is None else _checked(g, cert)


def recognize_21_masked_certificate(rows: Rows, mask: int) -> Optional[KLPartition]:
    """(2,1)-certificate of ``G[mask]`` labelled by host vertices."""
    found = recognize_mask(rows, mask)
    return None if found is None else _certificate(rows, found)
