"""Benchmark suites writing one CSV row per (instance, class, engine) run."""

from __future__ import annotations

import csv
import itertools
import logging
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, TextIO

from .certificates import verify_kl
from .dispatch import recognize
from .errors import InvariantError
from .generators import SplitMix64, gnp, planted_kl
from .graph import Graph, build_graph

log = logging.getLogger(__name__)

SUITES = ("r21-scaling", "r22-scaling", "engines-compare")
FIELDS = ("instance", "n", "m", "class", "engine", "time_ms", "member")


@dataclass
class BenchRow:
    instance: str
    n: int
    m: int
    kl: tuple[int, int]
    engine: str
    time_ms: float
    member: bool

    def as_dict(self) -> dict:
        return {
            "instance": self.instance,
            "n": self.n,
            "m": self.m,
            "class": f"{self.kl[0]},{self.kl[1]}",
            "engine": self.engine,
            "time_ms": f"{self.time_ms:.3f}",
            "member": int(self.member),
        }


def timed_run(name: str, g: Graph, k: int, l: int, engine: str) -> BenchRow:
    start = time.perf_counter()
    cert = recognize(g, k, l, engine)
    elapsed = (time.perf_counter() - start) * 1000.0
    if cert is not None and verify_kl(g, cert) is not True:
        raise InvariantError(f"{engine} certificate for {name} failed verification")
    return BenchRow(name, g.n, g.m, (k, l), engine, elapsed, cert is not None)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield build_graph(n, [pr for i, pr in enumerate(pairs) if code >> i & 1])


def _check_agreement(rows: list[BenchRow]) -> int:
    """Count (instance, class) groups whose engines disagree on membership."""
    verdicts: dict[tuple[str, tuple[int, int]], set[bool]] = {}
    for row in rows:
        verdicts.setdefault((row.instance, row.kl), set()).add(row.member)
    return sum(1 for v in verdicts.values() if len(v) > 1)


def r21_scaling(sizes: Iterable[int] = (250, 500, 1000, 2000), seed: int = 1) -> list[BenchRow]:
    rows = []
    for n in sizes:
        g = gnp(n, 8 / n, seed)
        rows.append(timed_run(f"gnp-{n}-sparse", g, 2, 1, "main"))
        h = (n - 10) // 2
        planted, _ = planted_kl([h, n - 10 - h], [10], 8 / n, seed, shuffle=True)
        rows.append(timed_run(f"planted21-{n}-sparse", planted, 2, 1, "main"))
        rows.append(timed_run(f"planted21-{n}-sparse", planted, 2, 1, "oddcore"))
        log.info("r21-scaling n=%d done", n)
    return rows


def r22_scaling(sizes: Iterable[int] = (10, 14, 18, 22), seed: int = 1) -> list[BenchRow]:
    rows = []
    for n in sizes:
        q = n // 4
        planted, _ = planted_kl([q, q], [q, n - 3 * q], 0.5, seed, shuffle=True)
        rows.append(timed_run(f"planted22-{n}", planted, 2, 2, "main"))
        for p in (0.1, 0.5, 0.9):
            rows.append(timed_run(f"gnp-{n}-{p}", gnp(n, p, seed), 2, 2, "main"))
        log.info("r22-scaling n=%d done", n)
    return rows


def engines_corpus(max_n: int = 6, random_count: int = 200, seed: int = 7) -> Iterator[tuple[str, Graph]]:
    for n in range(max_n + 1):
        for i, g in enumerate(all_labeled_graphs(n)):
            yield f"all{n}-{i}", g
    rng = SplitMix64(seed)
    for i in range(random_count):
        n = 7 + rng.below(6)
        p = (0.1, 0.3, 0.5, 0.7, 0.9)[rng.below(5)]
        yield f"rand-{i}", gnp(n, p, rng.next_u64())


def engines_compare(max_n: int = 6, random_count: int = 200, seed: int = 7) -> list[BenchRow]:
    rows = []
    for name, g in engines_corpus(max_n, random_count, seed):
        for engine in ("main", "oddcore", "generic", "oracle"):
            rows.append(timed_run(name, g, 2, 1, engine))
        for engine in ("main", "generic", "oracle"):
            rows.append(timed_run(name, g, 2, 2, engine))
    return rows


def bench_run(suite: str, out: Optional[TextIO] = None, **options) -> list[BenchRow]:
    """Run a suite, write CSV to ``out`` and fail on any verdict disagreement."""
    if suite == "r21-scaling":
        rows = r21_scaling(**options)
    elif suite == "r22-scaling":
        rows = r22_scaling(**options)
    elif suite == "engines-compare":
        rows = engines_compare(**options)
    else:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    if out is not None:
        writer = csv.DictWriter(out, fieldnames=FIELDS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row.as_dict())
    bad = _check_agreement(rows)
    if bad:
        raise InvariantError(f"{bad} instances with engine disagreement in suite {suite}")
    return rows
