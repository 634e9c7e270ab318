"""Exponential-time ground truth for (k, l)-membership and sparse-dense partitions."""

from __future__ import annotations

import os
from typing import Mapping, Optional

from .certificates import KLPartition
from .graph import Graph, iter_bits

DEFAULT_CUTOFF = 18


class OracleCutoffError(ValueError):
    pass


def oracle_cutoff() -> int:
    return int(os.environ.get("KLGRAPH_ORACLE_CUTOFF", DEFAULT_CUTOFF))


def _check_cutoff(g: Graph, cutoff: Optional[int]) -> None:
    limit = oracle_cutoff() if cutoff is None else cutoff
    if g.n > limit:
        raise OracleCutoffError(f"oracle refuses n={g.n} > cutoff {limit}")


def oracle_kl(g: Graph, k: int, l: int, cutoff: Optional[int] = None) -> Optional[KLPartition]:
    """Find a partition into k independent sets and l cliques by backtracking."""
    return oracle_kl_forced(g, k, l, {}, cutoff=cutoff)


def oracle_kl_forced(
    g: Graph,
    k: int,
    l: int,
    forced: Mapping[int, int],
    cutoff: Optional[int] = None,
) -> Optional[KLPartition]:
    """Like :func:`oracle_kl` with some vertices pinned to parts.

    ``forced`` maps a vertex to a part index: ``0..k-1`` are the independent
    sets, ``k..k+l-1`` the cliques.  Contradictory pins give ``None``.
    """
    _check_cutoff(g, cutoff)
    nparts = k + l
    for v, part in forced.items():
        if not 0 <= v < g.n:
            raise ValueError(f"forced vertex {v} out of range")
        if not 0 <= part < nparts:
            raise ValueError(f"forced part {part} out of range for ({k},{l})")
    rows = g.rows
    parts = [0] * nparts
    for v, part in forced.items():
        parts[part] |= 1 << v
    for i, mask in enumerate(parts):
        independent = i < k
        for v in iter_bits(mask):
            inside = rows[v] & mask
            if independent and inside:
                return None
            if not independent and inside | (1 << v) != mask:
                return None

    free = [v for v in sorted(range(g.n), key=lambda v: (-g.degree(v), v)) if v not in forced]

    def place(i: int) -> bool:
        if i == len(free):
            return True
        v = free[i]
        r = rows[v]
        tried_empty_ind = tried_empty_clq = False
        for j in range(nparts):
            mask = parts[j]
            if j < k:
                if mask == 0:
                    # empty parts of one kind are interchangeable
                    if tried_empty_ind:
                        continue
                    tried_empty_ind = True
                elif r & mask:
                    continue
            else:
                if mask == 0:
                    if tried_empty_clq:
                        continue
                    tried_empty_clq = True
                elif r & mask != mask:
                    continue
            parts[j] = mask | (1 << v)
            if place(i + 1):
                return True
            parts[j] = mask
        return False

    if not place(0):
        return None
    return KLPartition.from_masks(parts[:k], parts[k:])


def oracle_all_sparse_dense(g: Graph, prob, cutoff: int = 20) -> list:
    """Every split (V_S, V_D) of ``g`` accepted by the problem's predicates, by subset scan."""
    from .sparse_dense import SparseDensePartition, induced

    if g.n > cutoff:
        raise OracleCutoffError(f"subset scan refuses n={g.n} > cutoff {cutoff}")
    full = g.full
    out = []
    for s in range(1 << g.n):
        if prob.sparse_test(induced(g, s)) and prob.dense_test(induced(g, full & ~s)):
            out.append(SparseDensePartition.from_masks(s, full & ~s))
    return out


def forced_clique(k: int, x: int) -> dict[int, int]:
    """Pin vertex ``x`` to the first clique of a (k, l) search."""
    return {x: k}


def oracle_member(g: Graph, k: int, l: int) -> bool:
    return oracle_kl(g, k, l) is not None

