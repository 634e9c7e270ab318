"""Map a (k, l) class and an engine name to a recognizer."""

from __future__ import annotations

from typing import Callable, Optional

from .basic import Bipartition, CoBipartition, bipartite_check, cobipartite_check, split_check
from .certificates import KLPartition
from .graph import Graph, complement, induced_subgraph
from .oracle import oracle_kl
from .recog21 import recognize_12, recognize_21, recognize_21_oddcore
from .recog22 import recognize_22
from .sparse_dense import (
    BIPARTITE_COBIPARTITE,
    BIPARTITE_COMPLETE,
    EDGELESS_COBIPARTITE,
    EDGELESS_COMPLETE,
    SparseDenseProblem,
    all_sparse_dense_partitions,
)

ENGINES = ("main", "oddcore", "generic", "oracle")


class UnsupportedClass(ValueError):
    pass


def parse_class(text: str) -> tuple[int, int]:
    """Accept ``2,1``, ``2x1`` or ``(2,1)``."""
    cleaned = text.strip().strip("()").lower().replace("x", ",")
    try:
        k, l = (int(part) for part in cleaned.split(","))
    except ValueError as exc:
        raise UnsupportedClass(f"cannot read class {text!r}; expected K,L") from exc
    if k < 0 or l < 0:
        raise UnsupportedClass(f"class ({k},{l}) has a negative part count")
    return k, l


def _bipartite(g: Graph) -> Optional[KLPartition]:
    result = bipartite_check(g)
    return result.certificate() if isinstance(result, Bipartition) else None


def _cobipartite(g: Graph) -> Optional[KLPartition]:
    result = cobipartite_check(g)
    return result.certificate() if isinstance(result, CoBipartition) else None


def _split(g: Graph) -> Optional[KLPartition]:
    result = split_check(g)
    return None if result is None else result.certificate()


def _edgeless(g: Graph) -> Optional[KLPartition]:
    return None if g.m else KLPartition.of([range(g.n)], [])


def _complete(g: Graph) -> Optional[KLPartition]:
    return None if g.complement_edge_count else KLPartition.of([], [range(g.n)])


def _nothing(g: Graph) -> Optional[KLPartition]:
    return KLPartition((), ()) if g.n == 0 else None


_MAIN: dict[tuple[int, int], Callable[[Graph], Optional[KLPartition]]] = {
    (0, 0): _nothing,
    (1, 0): _edgeless,
    (0, 1): _complete,
    (2, 0): _bipartite,
    (0, 2): _cobipartite,
    (1, 1): _split,
    (2, 1): recognize_21,
    (1, 2): recognize_12,
    (2, 2): recognize_22,
}

# generic framework instantiations: (sparse, dense) -> (k independent, l cliques)
_GENERIC: dict[tuple[int, int], tuple[SparseDenseProblem, tuple[int, int], tuple[int, int]]] = {
    (1, 1): (EDGELESS_COMPLETE, (1, 0), (0, 1)),
    (2, 1): (BIPARTITE_COMPLETE, (2, 0), (0, 1)),
    (1, 2): (EDGELESS_COBIPARTITE, (1, 0), (0, 2)),
    (2, 2): (BIPARTITE_COBIPARTITE, (2, 0), (0, 2)),
}


def _generic(g: Graph, k: int, l: int) -> Optional[KLPartition]:
    prob, sparse_kl, dense_kl = _GENERIC[(k, l)]
    parts = all_sparse_dense_partitions(g, prob)
    if not parts:
        return None
    first = parts[0]
    sparse_g, smap = induced_subgraph(g, first.v_s)
    dense_g, dmap = induced_subgraph(g, first.v_d)
    sparse_cert = _MAIN[sparse_kl](sparse_g).remap(smap)
    dense_cert = _MAIN[dense_kl](dense_g).remap(dmap)
    return KLPartition(sparse_cert.independent_sets, dense_cert.cliques).padded(k, l)


def supported(k: int, l: int, engine: str = "main") -> bool:
    if engine == "main":
        return (k, l) in _MAIN
    if engine == "oddcore":
        return (k, l) in ((2, 1), (1, 2))
    if engine == "generic":
        return (k, l) in _GENERIC
    if engine == "oracle":
        return True
    return False


def recognize(g: Graph, k: int, l: int, engine: str = "main") -> Optional[KLPartition]:
    """Certificate padded to exactly k independent sets and l cliques, or ``None``."""
    if engine not in ENGINES:
        raise UnsupportedClass(f"unknown engine {engine!r}")
    if not supported(k, l, engine):
        raise UnsupportedClass(f"class ({k},{l}) is not supported by engine {engine!r}")
    if engine == "oracle":
        return oracle_kl(g, k, l)
    if engine == "generic":
        return _generic(g, k, l)
    if engine == "oddcore":
        if (k, l) == (2, 1):
            cert = recognize_21_oddcore(g)
        else:
            cert = recognize_21_oddcore(complement(g))
            cert = None if cert is None else cert.swap()
    else:
        cert = _MAIN[(k, l)](g)
    return None if cert is None else cert.padded(k, l)
