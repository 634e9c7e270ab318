import networkx as nx
import pytest

from klgraph.certificates import verify_kl
from klgraph.dispatch import recognize
from klgraph.generators import (
    GenSpec,
    SplitMix64,
    complete,
    gnp,
    named,
    parse_genspec,
    petersen,
    planted_kl,
)
from klgraph.oracle import oracle_kl

from conftest import to_nx


def test_splitmix_reference_stream():
    # reference outputs for seed 1234567 from the published C implementation
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_splitmix_helpers():
    rng = SplitMix64(9)
    assert all(0.0 <= rng.random() < 1.0 for _ in range(100))
    assert all(0 <= rng.below(7) < 7 for _ in range(100))
    items = list(range(10))
    rng.shuffle(items)
    assert sorted(items) == list(range(10))
    with pytest.raises(ValueError):
        rng.below(0)


def test_gnp_extremes():
    assert gnp(5, 0.0, 3).m == 0
    assert gnp(5, 1.0, 3) == complete(5)
    with pytest.raises(ValueError):
        gnp(5, 1.5, 3)


def test_gnp_deterministic():
    assert gnp(100, 0.5, 42).edges == gnp(100, 0.5, 42).edges
    assert gnp(100, 0.5, 42).edges != gnp(100, 0.5, 43).edges


def test_planted_examples():
    g, cert = planted_kl([3, 3], [3], 0.5, seed=4)
    assert verify_kl(g, cert) is True and (cert.k, cert.l) == (2, 1)
    assert recognize(g, 2, 1) is not None
    g, cert = planted_kl([], [4, 4], 0.3, seed=4)
    assert verify_kl(g, cert) is True
    assert recognize(g, 0, 2) is not None
    g, cert = planted_kl([5, 5], [], 1.0, seed=4)
    assert nx.is_isomorphic(to_nx(g), nx.complete_bipartite_graph(5, 5))


@pytest.mark.parametrize("seed", range(15))
@pytest.mark.parametrize("shape", [([4, 3], [3]), ([2], [3, 3]), ([3, 3], [2, 3]), ([4], [4])])
def test_planted_always_recognized(seed, shape):
    ind, clq = shape
    g, cert = planted_kl(ind, clq, (0.1, 0.5, 0.9)[seed % 3], seed, shuffle=True)
    assert verify_kl(g, cert) is True
    got = recognize(g, len(ind), len(clq))
    assert got is not None and verify_kl(g, got) is True


def test_named_examples():
    assert named("cycle(5)").edges == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))
    tk3 = named("tK3(3)")
    assert tk3.n == 9 and tk3.m == 9 and oracle_kl(tk3, 2, 2) is None
    p = named("petersen")
    assert (p.n, p.m) == (10, 15)
    assert nx.girth(to_nx(p)) == 5
    assert nx.is_isomorphic(to_nx(p), nx.petersen_graph())
    assert named("bowtie").m == 6
    for bad in ("nosuch", "petersen(3)", "cycle(2)"):
        with pytest.raises(ValueError):
            named(bad)


def test_genspec_parsing():
    spec = parse_genspec("gnp:n=10,p=0.3", seed=5)
    assert spec == GenSpec("gnp", n=10, p=0.3, seed=5)
    spec = parse_genspec("planted:ind=3+3,cliques=4,p=0.5,seed=9")
    assert (spec.part_sizes, spec.k, spec.seed, spec.n) == ([3, 3, 4], 2, 9, 10)
    g, cert = spec.build()
    assert g.n == 10 and verify_kl(g, cert) is True
    assert parse_genspec("named:cycle(5)").build()[0].n == 5
    for bad in ("gnp:p=0.3", "gnp:n", "ring:n=3"):
        with pytest.raises(ValueError):
            parse_genspec(bad)


def test_genspec_deterministic():
    a = parse_genspec("gnp:n=30,p=0.4", seed=11).build()[0]
    b = parse_genspec("gnp:n=30,p=0.4", seed=11).build()[0]
    assert a.edges == b.edges
