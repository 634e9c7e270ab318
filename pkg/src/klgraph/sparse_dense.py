"""Generic sparse-dense partition search.

Given two hereditary graph classes, "sparse" and "dense", whose members
share at most ``c`` vertices, every graph has few partitions (V_S, V_D)
with ``G[V_S]`` sparse and ``G[V_D]`` dense, and they all lie close to any
local maximum of the sparse side:

* phase 1 grows a sparse set by swaps that drop at most ``c`` vertices and
  add one more than dropped, until no such swap exists;
* phase 2 tries every set within ``c`` removals and as many additions of
  that local maximum.

Predicates see freshly induced subgraphs; results are memoized per run on
the vertex set so each subset is classified at most once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

from .basic import co_two_color, is_clique_mask, is_independent_mask, two_color
from .errors import InvariantError, PreconditionError
from .graph import Graph, bits_list, induced_rows, iter_bits, mask_of


def induced(g: Graph, mask: int) -> Graph:
    rows, mapping = induced_rows(g.rows, mask)
    return Graph(len(mapping), rows)


def is_bipartite(g: Graph) -> bool:
    return two_color(g.rows, g.full) is not None


def is_cobipartite(g: Graph) -> bool:
    return co_two_color(g.rows, g.full) is not None


def is_edgeless(g: Graph) -> bool:
    return is_independent_mask(g.rows, g.full)


def is_complete(g: Graph) -> bool:
    return is_clique_mask(g.rows, g.full)


@dataclass(frozen=True)
class SparseDenseProblem:
    sparse_test: Callable[[Graph], bool]
    dense_test: Callable[[Graph], bool]
    c: int
    name: str = field(default="custom", compare=False)

    def __post_init__(self):
        if self.c < 0:
            raise ValueError("intersection bound must be non-negative")


#: (2,2)-graphs: a bipartite and a co-bipartite graph share at most 4 vertices.
BIPARTITE_COBIPARTITE = SparseDenseProblem(is_bipartite, is_cobipartite, 4, "bipartite/co-bipartite")
#: split graphs: an independent set and a clique share at most 1 vertex.
EDGELESS_COMPLETE = SparseDenseProblem(is_edgeless, is_complete, 1, "edgeless/complete")
EDGELESS_COBIPARTITE = SparseDenseProblem(is_edgeless, is_cobipartite, 2, "edgeless/co-bipartite")
BIPARTITE_COMPLETE = SparseDenseProblem(is_bipartite, is_complete, 2, "bipartite/complete")

PROBLEMS = {p.name: p for p in (BIPARTITE_COBIPARTITE, EDGELESS_COMPLETE, EDGELESS_COBIPARTITE, BIPARTITE_COMPLETE)}


@dataclass(frozen=True)
class SparseDensePartition:
    v_s: frozenset[int]
    v_d: frozenset[int]

    @classmethod
    def from_masks(cls, s: int, d: int) -> "SparseDensePartition":
        return cls(frozenset(iter_bits(s)), frozenset(iter_bits(d)))

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.v_s))


class _Tester:
    """Memoized class membership of induced subgraphs of one graph."""

    def __init__(self, g: Graph, prob: SparseDenseProblem):
        self.g = g
        self.prob = prob
        self._sparse: dict[int, bool] = {}
        self._dense: dict[int, bool] = {}

    def sparse(self, mask: int) -> bool:
        hit = self._sparse.get(mask)
        if hit is None:
            hit = self._sparse[mask] = bool(self.prob.sparse_test(induced(self.g, mask)))
        return hit

    def dense(self, mask: int) -> bool:
        hit = self._dense.get(mask)
        if hit is None:
            hit = self._dense[mask] = bool(self.prob.dense_test(induced(self.g, mask)))
        return hit


def _swaps(g: Graph, s: int, c: int, grow: bool):
    """Candidate sets (s - P) + Q in deterministic order.

    ``grow``: |Q| = |P| + 1 (phase 1); otherwise |Q| <= |P| (phase 2).
    P runs by size then lexicographically, Q likewise.
    """
    inside = bits_list(s)
    outside = bits_list(g.full & ~s)
    for size in range(min(c, len(inside)) + 1):
        for p in combinations(inside, size):
            base = s & ~mask_of(p)
            q_sizes = [size + 1] if grow else range(size + 1)
            for qsize in q_sizes:
                for q in combinations(outside, qsize):
                    yield base | mask_of(q)


def _phase1(tester: _Tester, s: int, max_iters: Optional[int]) -> tuple[int, int]:
    g, c = tester.g, tester.prob.c
    steps = 0
    while max_iters is None or steps < max_iters:
        for cand in _swaps(g, s, c, grow=True):
            if tester.sparse(cand):
                if cand.bit_count() != s.bit_count() + 1:
                    raise InvariantError("phase 1 step did not grow the sparse side by one")
                s = cand
                steps += 1
                break
        else:
            break
    if steps > g.n:
        raise InvariantError(f"phase 1 took {steps} steps on {g.n} vertices")
    return s, steps


def phase1(g: Graph, prob: SparseDenseProblem, s0: Iterable[int] = (), max_iters: Optional[int] = None) -> frozenset[int]:
    """Grow a sparse set by (2c+1)-local improvements until none applies."""
    tester = _Tester(g, prob)
    start = mask_of(s0)
    if not tester.sparse(start):
        raise PreconditionError("the starting set must induce a sparse graph")
    s, _ = _phase1(tester, start, max_iters)
    return frozenset(iter_bits(s))


def _phase2(tester: _Tester, s_star: int) -> list[SparseDensePartition]:
    g = tester.g
    seen = set()
    out = []
    for cand in _swaps(g, s_star, tester.prob.c, grow=False):
        if cand in seen:
            continue
        seen.add(cand)
        if tester.sparse(cand) and tester.dense(g.full & ~cand):
            out.append(SparseDensePartition.from_masks(cand, g.full & ~cand))
    return out


def phase2(g: Graph, prob: SparseDenseProblem, s_star: Iterable[int]) -> list[SparseDensePartition]:
    """All sparse-dense partitions within 2c-local distance of ``s_star``."""
    tester = _Tester(g, prob)
    s = mask_of(s_star)
    if not tester.sparse(s):
        raise PreconditionError("s_star must induce a sparse graph")
    return _phase2(tester, s)


def all_sparse_dense_partitions(g: Graph, prob: SparseDenseProblem) -> list[SparseDensePartition]:
    tester = _Tester(g, prob)
    s, _ = _phase1(tester, 0, None)
    out = _phase2(tester, s)
    # the n^{2c} count bound is asymptotic: K1 alone has two partitions
    if g.n >= 2 and len(out) > g.n ** (2 * prob.c):
        raise InvariantError(f"{len(out)} partitions exceed n^(2c) = {g.n ** (2 * prob.c)}")
    return out


def phase1_local_optimum(g: Graph, prob: SparseDenseProblem) -> tuple[frozenset[int], int]:
    """Phase 1 from the empty set; returns the optimum and the number of improvements."""
    s, steps = _phase1(_Tester(g, prob), 0, None)
    return frozenset(iter_bits(s)), steps
