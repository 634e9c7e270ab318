import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klgraph.certificates import verify_kl
from klgraph.generators import complete, cycle, gnp, t_k3
from klgraph.graph import complement
from klgraph.oracle import (
    OracleCutoffError,
    forced_clique,
    oracle_all_sparse_dense,
    oracle_kl,
    oracle_kl_forced,
)
from klgraph.sparse_dense import BIPARTITE_COBIPARTITE

from conftest import graphs


def naive_member(g, k, l):
    """Try every assignment of vertices to k + l labelled parts."""
    for labels in itertools.product(range(k + l), repeat=g.n):
        ok = True
        for u, v in itertools.combinations(range(g.n), 2):
            if labels[u] == labels[v]:
                adjacent = g.has_edge(u, v)
                if (labels[u] < k and adjacent) or (labels[u] >= k and not adjacent):
                    ok = False
                    break
        if ok:
            return True
    return False


def test_examples(c5):
    assert oracle_kl(c5, 2, 0) is None
    cert = oracle_kl(c5, 2, 1)
    assert cert is not None and verify_kl(c5, cert) is True
    assert oracle_kl(t_k3(3), 2, 2) is None


def test_forced_examples(c5):
    assert oracle_kl_forced(complete(4), 2, 1, {0: 2}) is not None
    assert oracle_kl_forced(c5, 2, 0, {0: 0, 1: 0}) is None
    for x in range(9):
        assert oracle_kl_forced(t_k3(3), 2, 1, forced_clique(2, x)) is None


def test_forced_respects_pins():
    g = cycle(6)
    cert = oracle_kl_forced(g, 2, 1, {0: 2, 1: 2})
    assert cert is not None and {0, 1} <= cert.cliques[0]
    assert oracle_kl_forced(g, 2, 1, {0: 2, 2: 2}) is None
    with pytest.raises(ValueError):
        oracle_kl_forced(g, 2, 1, {0: 3})


def test_sparse_dense_examples():
    assert len(oracle_all_sparse_dense(cycle(4), BIPARTITE_COBIPARTITE)) == 16
    assert len(oracle_all_sparse_dense(complete(1), BIPARTITE_COBIPARTITE)) == 2
    assert oracle_all_sparse_dense(t_k3(3), BIPARTITE_COBIPARTITE) == []


def test_cutoff(monkeypatch):
    with pytest.raises(OracleCutoffError):
        oracle_kl(gnp(20, 0.5, 1), 2, 2)
    oracle_kl(gnp(20, 0.9, 1), 2, 2, cutoff=20)
    monkeypatch.setenv("KLGRAPH_ORACLE_CUTOFF", "4")
    with pytest.raises(OracleCutoffError):
        oracle_kl(cycle(5), 2, 1)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), st.sampled_from([(1, 1), (2, 0), (0, 2), (2, 1), (1, 2), (2, 2), (3, 0)]))
def test_matches_naive_enumeration(g, kl):
    k, l = kl
    cert = oracle_kl(g, k, l)
    assert (cert is not None) == naive_member(g, k, l)
    if cert is not None:
        assert verify_kl(g, cert) is True and (cert.k, cert.l) == (k, l)


@pytest.mark.parametrize("seed", range(12))
def test_matches_naive_enumeration_eight_vertices(seed):
    g = gnp(8, (0.2, 0.5, 0.8)[seed % 3], seed)
    for k, l in ((2, 1), (2, 2)):
        assert (oracle_kl(g, k, l) is not None) == naive_member(g, k, l)


@given(graphs(max_n=8))
def test_monotone_in_both_counts(g):
    for k, l in ((1, 1), (2, 1), (1, 2)):
        if oracle_kl(g, k, l) is not None:
            assert oracle_kl(g, k + 1, l) is not None
            assert oracle_kl(g, k, l + 1) is not None


@given(graphs(max_n=8))
def test_complement_duality(g):
    for k, l in ((2, 1), (1, 2), (2, 2), (1, 1)):
        assert (oracle_kl(g, k, l) is None) == (oracle_kl(complement(g), l, k) is None)
