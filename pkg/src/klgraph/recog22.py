"""Recognition of (2,2)-graphs: a bipartite side B and a co-bipartite side C.

The search specializes the sparse-dense framework (bipartite vs co-bipartite,
intersection bound 4):

1. Vertices are classified by whether ``G[N(v)]`` is a (1,2)-graph (needed
   for v in B) and whether ``G[V - N[v]]`` is a (2,1)-graph (needed for v
   in C).
2. Around a free vertex v of minimum degree, certificates of ``G[N[v]]`` and
   ``G[V - N[v]]`` split V into three cliques and three independent sets.
   B meets each clique in at most two vertices, so a largest admissible
   B inside the independent sets falls at most six short of any true B.
3. At most six growth steps turn that seed into a bipartite set at least
   as large as every feasible B, and the feasible B's are then within four
   removals and as many additions of it.

Removed sets P always induce one of the nine graphs on at most four vertices
that are bipartite and co-bipartite; they are generated from edges and edge
pairs rather than by blind subset enumeration.  Added sets Q are found by
backtracking over incremental per-component 2-colorings.

Everything runs on row bitmasks; the whole procedure is applied to the
complement when that has fewer edges, swapping the roles of the sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .basic import (
    ComponentBipartition,
    cb_from_mask,
    co_two_color,
    is_bipartite_mask,
    is_cobipartite_mask,
    two_color,
)
from .certificates import KLPartition, verify_kl
from .errors import InvariantError, PreconditionError
from .graph import Graph, bits_list, complement_rows, iter_bits, mask_of
from .recog21 import recognize_12_mask, recognize_21_masked_certificate, recognize_mask

Rows = Sequence[int]
Partition22 = KLPartition

#: Growth steps needed after seeding: B exceeds the seed by at most 2 per clique.
SEED_SLACK = 6


class SmallGraphKind(Enum):
    EMPTY = "empty"
    K1 = "K1"
    K2 = "K2"
    TWO_K1 = "2K1"
    K1_PLUS_K2 = "K1+K2"
    K1_2 = "K1,2"
    TWO_K2 = "2K2"
    P4 = "P4"
    C4 = "C4"


def small_kind_mask(rows: Rows, mask: int) -> Optional[SmallGraphKind]:
    """Which of the nine bipartite and co-bipartite graphs ``G[mask]`` is, if any."""
    size = mask.bit_count()
    if size > 4:
        return None
    degs = sorted((rows[v] & mask).bit_count() for v in iter_bits(mask))
    edges = sum(degs) // 2
    if size == 0:
        return SmallGraphKind.EMPTY
    if size == 1:
        return SmallGraphKind.K1
    if size == 2:
        return SmallGraphKind.K2 if edges else SmallGraphKind.TWO_K1
    if size == 3:
        return {1: SmallGraphKind.K1_PLUS_K2, 2: SmallGraphKind.K1_2}.get(edges)
    if degs == [1, 1, 1, 1]:
        return SmallGraphKind.TWO_K2
    if degs == [1, 1, 2, 2]:
        return SmallGraphKind.P4
    if degs == [2, 2, 2, 2]:
        return SmallGraphKind.C4
    return None


def is_small_bicobipartite_mask(rows: Rows, mask: int) -> bool:
    return mask.bit_count() <= 4 and is_bipartite_mask(rows, mask) and is_cobipartite_mask(rows, mask)


def small_sets(rows: Rows, ground: int, required: int = 0) -> list[int]:
    """Sets P with required <= P <= ground inducing one of the nine small graphs.

    Output is sorted by size, then lexicographically by vertex list.
    Three-vertex members carry one or two edges and four-vertex members
    (2K2, P4, C4) a perfect matching, so those are grown from edges and
    disjoint edge pairs.
    """
    if required & ~ground or required.bit_count() > 4:
        return []
    verts = bits_list(ground)
    found: set[int] = {0}
    found.update(1 << v for v in verts)
    found.update((1 << a) | (1 << b) for a, b in combinations(verts, 2))
    edges = [(a, b) for a in verts for b in iter_bits(rows[a] & ground) if b > a]
    for a, b in edges:
        ab = (1 << a) | (1 << b)
        for c in verts:
            if c == a or c == b:
                continue
            # exclude the triangle; an edge is present by construction
            if not ((rows[c] >> a) & 1 and (rows[c] >> b) & 1):
                found.add(ab | (1 << c))
    for i, (a, b) in enumerate(edges):
        ab = (1 << a) | (1 << b)
        for c, d in edges[i + 1:]:
            cd = (1 << c) | (1 << d)
            if ab & cd:
                continue
            four = ab | cd
            if four not in found and small_kind_mask(rows, four) is not None:
                found.add(four)
    out = [p for p in found if p & required == required]
    out.sort(key=lambda p: (p.bit_count(), bits_list(p)))
    return out


def _q_sets(state: ComponentBipartition, cands: list[int], start: int, need: int) -> Iterator[int]:
    """Every Q of ``need`` vertices from ``cands[start:]`` keeping the coloring proper.

    Lexicographic order.  The last vertex is only tested for a conflict; no
    merged structure is built for it.
    """
    if need == 0:
        yield 0
        return
    if need == 1:
        for q in cands[start:]:
            if not state.conflicts(q):
                yield 1 << q
        return
    for i in range(start, len(cands) - need + 1):
        q = cands[i]
        nxt = state.try_add(q)
        if nxt is None:
            continue
        for rest in _q_sets(nxt, cands, i + 1, need - 1):
            yield rest | (1 << q)


def _extensions(rows: Rows, full: int, s: int, p: int, sizes) -> Iterator[int]:
    """Sets Q outside ``s`` (so disjoint from P) with ``G[(s - P) + Q]`` bipartite."""
    state = cb_from_mask(rows, s & ~p)
    if state is None:
        raise InvariantError("removing vertices from a bipartite set broke bipartiteness")
    cands = [q for q in iter_bits(full & ~s) if not state.conflicts(q)]
    for need in sizes:
        if need <= len(cands):
            yield from _q_sets(state, cands, 0, need)


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class TriClassification22:
    b_f_mask: int
    c_f_mask: int
    r_mask: int
    reject_witness: Optional[int] = None

    @property
    def b_f(self) -> frozenset[int]:
        return frozenset(iter_bits(self.b_f_mask))

    @property
    def c_f(self) -> frozenset[int]:
        return frozenset(iter_bits(self.c_f_mask))

    @property
    def r(self) -> frozenset[int]:
        return frozenset(iter_bits(self.r_mask))


@dataclass(frozen=True)
class Decomposition22:
    """``N[v] = c1 + c2 + i3`` and ``V - N[v] = c3 + i1 + i2``; all fields but v are bitmasks."""

    v: int
    c1: int
    c2: int
    i3: int
    c3: int
    i1: int
    i2: int

    def parts(self) -> dict[str, frozenset[int]]:
        return {
            name: frozenset(iter_bits(getattr(self, name)))
            for name in ("c1", "c2", "i3", "c3", "i1", "i2")
        }

    @property
    def independent_union(self) -> int:
        return self.i1 | self.i2 | self.i3

    @property
    def cliques(self) -> tuple[int, int, int]:
        return self.c1, self.c2, self.c3


# ---------------------------------------------------------------------------
# mask-level pipeline


def classify_mask(rows: Rows, crows: Rows, full: int, stop_at_witness: bool = False) -> TriClassification22:
    bf = cf = r = 0
    witness = None
    for v in iter_bits(full):
        bit = 1 << v
        nbrs = rows[v] & full
        in12 = recognize_mask(crows, nbrs) is not None
        in21 = recognize_mask(rows, full & ~nbrs & ~bit) is not None
        if in12 and in21:
            r |= bit
        elif in12:
            bf |= bit
        elif in21:
            cf |= bit
        elif witness is None:
            witness = v
            if stop_at_witness:
                break
    return TriClassification22(bf, cf, r, witness)


def decompose_mask(rows: Rows, crows: Rows, full: int, cls: TriClassification22) -> Decomposition22:
    if cls.reject_witness is not None or not cls.r_mask:
        raise PreconditionError("decomposition needs a witness-free classification with R nonempty")
    v = min(iter_bits(cls.r_mask), key=lambda u: (rows[u].bit_count(), u))
    bit = 1 << v
    nbrs = rows[v]
    inner = recognize_12_mask(crows, nbrs)
    outer = recognize_21_masked_certificate(rows, full & ~nbrs & ~bit)
    if inner is None or outer is None:
        raise InvariantError(f"free vertex {v} lacks its neighbourhood certificates")
    (i3,) = (mask_of(s) for s in inner.independent_sets)
    c1, c2 = (mask_of(c) for c in inner.cliques)
    i1, i2 = (mask_of(s) for s in outer.independent_sets)
    (c3,) = (mask_of(c) for c in outer.cliques)
    return Decomposition22(v, c1 | bit, c2, i3, c3, i1, i2)


def find_seed_mask(rows: Rows, cls: TriClassification22, dec: Decomposition22) -> Optional[int]:
    """Largest admissible B inside ``i1 + i2 + i3``, or ``None`` if none exists.

    The complement ``P + P'`` of B in the independent sets is enumerated by
    increasing size, so the first admissible candidate is a largest one; ties
    go to the first (P, P') in enumeration order.
    """
    bf, cf = cls.b_f_mask, cls.c_f_mask
    i12 = dec.i1 | dec.i2
    universe = i12 | dec.i3
    p_list = small_sets(rows, i12 & ~bf, cf & i12)
    base = cf & dec.i3
    if base.bit_count() > 2:
        return None
    extra = bits_list(dec.i3 & ~bf & ~base)
    room = 2 - base.bit_count()
    p_prime = [base]
    for size in range(1, room + 1):
        p_prime.extend(base | mask_of(e) for e in combinations(extra, size))
    by_size: dict[int, list[int]] = {}
    for pp in p_prime:
        by_size.setdefault(pp.bit_count(), []).append(pp)
    for total in range(0, 7):
        for p in p_list:
            psize = p.bit_count()
            if psize > total:
                break
            if (p & dec.i1).bit_count() > 2 or (p & dec.i2).bit_count() > 2:
                continue
            for pp in by_size.get(total - psize, ()):
                removed = p | pp
                b = universe & ~removed
                if is_cobipartite_mask(rows, removed) and is_bipartite_mask(rows, b):
                    return b
    return None


def phase1_mask(rows: Rows, full: int, s0: int, max_iters: Optional[int] = SEED_SLACK) -> tuple[int, int]:
    """Grow bipartite ``s0`` by swaps (drop P, add |P|+1); returns (S, improvements)."""
    if not is_bipartite_mask(rows, s0):
        raise PreconditionError("phase 1 needs a bipartite starting set")
    s = s0
    steps = 0
    while max_iters is None or steps < max_iters:
        improved = False
        for p in small_sets(rows, s):
            for q in _extensions(rows, full, s, p, (p.bit_count() + 1,)):
                s = (s & ~p) | q
                improved = True
                break
            if improved:
                break
        if not improved:
            break
        steps += 1
    return s, steps


def phase2_mask(rows: Rows, full: int, s_star: int) -> Optional[tuple[int, int]]:
    """First ``(S'', V - S'')`` near ``s_star`` with a bipartite and a co-bipartite side."""
    if not is_bipartite_mask(rows, s_star):
        raise PreconditionError("phase 2 needs a bipartite set")
    for p in small_sets(rows, s_star):
        for q in _extensions(rows, full, s_star, p, range(p.bit_count() + 1)):
            s2 = (s_star & ~p) | q
            rest = full & ~s2
            if is_cobipartite_mask(rows, rest):
                return s2, rest
    return None


def _split_certificate(rows: Rows, b: int, c: int) -> KLPartition:
    sides = two_color(rows, b)
    cover = co_two_color(rows, c)
    if sides is None or cover is None:
        raise InvariantError("(2,2) sides failed their own checks")
    return KLPartition.from_masks(sides, cover)


def recognize_rows(rows: Rows, n: int, use_complement: bool = True) -> Optional[KLPartition]:
    full = (1 << n) - 1
    m = sum(r.bit_count() for r in rows) // 2
    crows = complement_rows(rows, n)
    if use_complement and n * (n - 1) // 2 - m < m:
        cert = recognize_rows(crows, n, use_complement=False)
        return None if cert is None else cert.swap()
    cls = classify_mask(rows, crows, full, stop_at_witness=True)
    if cls.reject_witness is not None:
        return None
    if not is_bipartite_mask(rows, cls.b_f_mask) or not is_cobipartite_mask(rows, cls.c_f_mask):
        return None
    if not cls.r_mask:
        return _split_certificate(rows, cls.b_f_mask, cls.c_f_mask)
    dec = decompose_mask(rows, crows, full, cls)
    seed = find_seed_mask(rows, cls, dec)
    if seed is None:
        return None
    s_star, _ = phase1_mask(rows, full, seed, SEED_SLACK)
    found = phase2_mask(rows, full, s_star)
    if found is None:
        return None
    return _split_certificate(rows, *found)


# ---------------------------------------------------------------------------
# Graph-level API


def is_small_bicobipartite(g: Graph, vertices) -> bool:
    return is_small_bicobipartite_mask(g.rows, mask_of(vertices))


def small_graph_kind(g: Graph, vertices) -> Optional[SmallGraphKind]:
    return small_kind_mask(g.rows, mask_of(vertices))


def enumerate_small_P(g: Graph, ground, required=()) -> Iterator[frozenset[int]]:
    for p in small_sets(g.rows, mask_of(ground), mask_of(required)):
        yield frozenset(iter_bits(p))


def classify_vertices_22(g: Graph) -> TriClassification22:
    return classify_mask(g.rows, complement_rows(g.rows, g.n), g.full)


def decompose_around_min_degree(g: Graph, cls: TriClassification22) -> Decomposition22:
    return decompose_mask(g.rows, complement_rows(g.rows, g.n), g.full, cls)


def find_seed_B(g: Graph, cls: TriClassification22, dec: Decomposition22) -> Optional[frozenset[int]]:
    seed = find_seed_mask(g.rows, cls, dec)
    return None if seed is None else frozenset(iter_bits(seed))


def phase1_22(g: Graph, s0, max_iters: Optional[int] = SEED_SLACK) -> frozenset[int]:
    s, _ = phase1_mask(g.rows, g.full, mask_of(s0), max_iters)
    return frozenset(iter_bits(s))


def phase2_22(g: Graph, s_star) -> Optional[Partition22]:
    found = phase2_mask(g.rows, g.full, mask_of(s_star))
    if found is None:
        return None
    return _checked(g, _split_certificate(g.rows, *found))


def recognize_22(g: Graph) -> Optional[Partition22]:
    cert = recognize_rows(g.rows, g.n)
    return None if cert is None else _checked(g, cert)


def _checked(g: Graph, cert: KLPartition) -> KLPartition:
    outcome = verify_kl(g, cert)
    if outcome is not True:
        raise InvariantError(f"(2,2) certificate failed verification: {outcome}")
    return cert
