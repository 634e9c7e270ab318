import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from klgraph.errors import PreconditionError
from klgraph.generators import complete, cycle, empty, path, t_k3
from klgraph.graph import build_graph, complement
from klgraph.oracle import oracle_all_sparse_dense
from klgraph.sparse_dense import (
    BIPARTITE_COBIPARTITE,
    BIPARTITE_COMPLETE,
    EDGELESS_COBIPARTITE,
    EDGELESS_COMPLETE,
    PROBLEMS,
    all_sparse_dense_partitions,
    phase1,
    phase1_local_optimum,
    phase2,
)

from conftest import graphs, to_nx

BC = BIPARTITE_COBIPARTITE


def nx_brute_force(g, sparse, dense):
    """Subset brute force with networkx predicates, as sorted V_S tuples."""
    h = to_nx(g)
    hc = to_nx(complement(g))
    found = []
    for size in range(g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            rest = [v for v in range(g.n) if v not in s]
            if sparse(h.subgraph(s)) and dense(hc.subgraph(rest)):
                found.append(s)
    return sorted(found)


def keys(parts):
    return sorted(p.key() for p in parts)


def test_phase1_examples(c5):
    assert phase1(cycle(4), BC) == set(range(4))
    assert len(phase1(complete(5), BC)) == 2
    assert len(phase1(c5, BC)) == 4


def test_phase1_respects_iteration_cap():
    assert len(phase1(cycle(6), BC, max_iters=2)) == 2


def test_phase1_rejects_bad_start():
    with pytest.raises(PreconditionError):
        phase1(complete(3), BC, s0=[0, 1, 2])


def test_phase2_examples():
    assert len(phase2(cycle(4), BC, range(4))) == 16
    assert len(phase2(path(3), BC, range(3))) == 8
    assert len(phase2(build_graph(1, []), BC, [0])) == 2


def test_all_partitions_examples():
    assert len(all_sparse_dense_partitions(cycle(4), BC)) == 16
    assert all_sparse_dense_partitions(t_k3(3), BC) == []
    got = all_sparse_dense_partitions(empty(3), BC)
    assert len(got) == 7
    assert all(len(p.v_d) <= 2 for p in got)


def test_trivial_sizes_exceed_the_power_bound():
    # n^(2c) is 0 for n = 0 and 1 for n = 1; the true counts are 1 and 2
    assert len(all_sparse_dense_partitions(empty(0), BC)) == 1
    assert len(all_sparse_dense_partitions(empty(1), BC)) == 2


def test_split_problem_counts():
    # P4 = 0-1-2-3 splits only as clique {1,2} plus independent {0,3}
    parts = all_sparse_dense_partitions(path(4), EDGELESS_COMPLETE)
    assert [(p.key(), sorted(p.v_d)) for p in parts] == [((0, 3), [1, 2])]
    # K3 splits four ways: the whole clique, or one vertex moved to the independent side
    assert len(all_sparse_dense_partitions(complete(3), EDGELESS_COMPLETE)) == 4


def test_problem_registry():
    assert PROBLEMS["bipartite/co-bipartite"] is BC
    assert BC.c == 4 and EDGELESS_COMPLETE.c == 1


@pytest.mark.parametrize(
    "prob, sparse, dense",
    [
        (BIPARTITE_COBIPARTITE, nx.is_bipartite, nx.is_bipartite),
        (EDGELESS_COMPLETE, lambda h: h.number_of_edges() == 0, lambda hc: hc.number_of_edges() == 0),
        (EDGELESS_COBIPARTITE, lambda h: h.number_of_edges() == 0, nx.is_bipartite),
        (BIPARTITE_COMPLETE, nx.is_bipartite, lambda hc: hc.number_of_edges() == 0),
    ],
    ids=lambda v: getattr(v, "name", ""),
)
@settings(max_examples=40, deadline=None)
@given(g=graphs(max_n=6))
def test_matches_networkx_brute_force(prob, sparse, dense, g):
    got = all_sparse_dense_partitions(g, prob)
    assert keys(got) == nx_brute_force(g, sparse, dense)
    assert len({p.key() for p in got}) == len(got)
    for p in got:
        assert p.v_s | p.v_d == set(range(g.n)) and not p.v_s & p.v_d


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_local_optimum_dominates(g):
    s_star, steps = phase1_local_optimum(g, BC)
    assert steps == len(s_star) <= g.n
    for p in oracle_all_sparse_dense(g, BC):
        assert len(s_star) >= len(p.v_s)


def test_no_five_vertex_set_is_both():
    # certifies the intersection bound c = 4 used by the (2,2) instantiation
    from conftest import labeled_graphs

    for g in labeled_graphs(5):
        h = to_nx(g)
        assert not (nx.is_bipartite(h) and nx.is_bipartite(to_nx(complement(g))))
