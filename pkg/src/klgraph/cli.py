"""Command-line interface: ``klgraph {recognize,oracle,gen,bench,selftest}``.

Exit codes: 0 on a completed run (membership is reported in the JSON, never
through the exit code), 2 on usage or input errors, 3 when an internal
invariant fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from .bench import SUITES, all_labeled_graphs, bench_run
from .certificates import KLPartition, verify_kl
from .dispatch import ENGINES, UnsupportedClass, parse_class, recognize, supported
from .errors import InvariantError
from .formats import FORMATS, parse_graph, write_graph
from .generators import parse_genspec
from .graph import Graph, GraphError
from .oracle import OracleCutoffError, oracle_kl

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3

log = logging.getLogger("klgraph")


@dataclass
class RecognitionReport:
    kl: tuple[int, int]
    member: bool
    certificate: Optional[KLPartition]
    engine: str
    timings: dict[str, float] = field(default_factory=dict)

    def to_json(self) -> dict:
        k, l = self.kl
        out = {"member": self.member, "k": k, "l": l, "independent_sets": [], "cliques": []}
        if self.certificate is not None:
            out.update(self.certificate.to_json())
        out["engine"] = self.engine
        out["timings_ms"] = {name: round(ms, 3) for name, ms in self.timings.items()}
        return out


def _load(args) -> Graph:
    source = sys.stdin if args.input == "-" else args.input
    return parse_graph(source, args.format)


def _report(g: Graph, k: int, l: int, engine: str) -> RecognitionReport:
    start = time.perf_counter()
    cert = recognize(g, k, l, engine)
    elapsed = (time.perf_counter() - start) * 1000.0
    timings = {"recognize": elapsed}
    if cert is not None:
        start = time.perf_counter()
        outcome = verify_kl(g, cert)
        timings["verify"] = (time.perf_counter() - start) * 1000.0
        if outcome is not True:
            raise InvariantError(f"certificate failed verification: {outcome}")
    return RecognitionReport((k, l), cert is not None, cert, engine, timings)


def cmd_recognize(args) -> int:
    k, l = parse_class(args.cls)
    if not supported(k, l, args.engine):
        raise UnsupportedClass(
            f"class ({k},{l}) is not supported by engine {args.engine!r}"
            + (" (NP-complete for k >= 3 or l >= 3)" if k >= 3 or l >= 3 else "")
        )
    g = _load(args)
    report = _report(g, k, l, args.engine)
    data = report.to_json()
    if args.certificate:
        data["verified"] = report.certificate is None or verify_kl(g, report.certificate) is True
    print(json.dumps(data))
    return EXIT_OK


def cmd_oracle(args) -> int:
    k, l = parse_class(args.cls)
    g = _load(args)
    start = time.perf_counter()
    cert = oracle_kl(g, k, l)
    elapsed = (time.perf_counter() - start) * 1000.0
    print(json.dumps(RecognitionReport((k, l), cert is not None, cert, "oracle", {"oracle": elapsed}).to_json()))
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = parse_genspec(args.spec, seed=args.seed)
    g, planted = spec.build()
    text = write_graph(g, args.format)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    if planted is not None and args.certificate_out:
        with open(args.certificate_out, "w", encoding="ascii") as fh:
            json.dump(planted.to_json(), fh)
    return EXIT_OK


def cmd_bench(args) -> int:
    options = {}
    if args.sizes:
        options["sizes"] = [int(s) for s in args.sizes.split(",")]
    if args.suite == "engines-compare":
        options["max_n"] = args.max_n
    if args.out == "-":
        bench_run(args.suite, sys.stdout, **options)
    else:
        with open(args.out, "w", newline="", encoding="ascii") as fh:
            rows = bench_run(args.suite, fh, **options)
        log.info("wrote %d rows to %s", len(rows), args.out)
    return EXIT_OK


CLASSES = [(2, 0), (0, 2), (1, 1), (2, 1), (1, 2), (2, 2)]


def cmd_selftest(args) -> int:
    disagreements = 0
    total = 0
    for n in range(args.max_n + 1):
        for g in all_labeled_graphs(n):
            total += 1
            for k, l in CLASSES:
                got = recognize(g, k, l)
                want = oracle_kl(g, k, l) is not None
                if (got is not None) != want:
                    disagreements += 1
                    log.error("(%d,%d) disagreement on n=%d edges=%s", k, l, n, g.edges)
        log.info("n=%d checked", n)
    print(json.dumps({"graphs": total, "classes": len(CLASSES), "disagreements": disagreements}))
    return EXIT_OK if disagreements == 0 else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="klgraph", description="Recognize (k,l)-graphs with certificates.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    rec = sub.add_parser("recognize", help="decide membership and print a JSON report")
    rec.add_argument("--class", dest="cls", required=True, help="K,L such as 2,1")
    rec.add_argument("--input", required=True, help="graph file, or - for stdin")
    rec.add_argument("--format", choices=FORMATS, default="edgelist")
    rec.add_argument("--engine", choices=ENGINES, default="main")
    rec.add_argument("--certificate", action="store_true", help="re-verify the certificate and say so")
    rec.set_defaults(func=cmd_recognize)

    orc = sub.add_parser("oracle", help="exhaustive backtracking decision (small graphs)")
    orc.add_argument("--class", dest="cls", required=True)
    orc.add_argument("--input", required=True)
    orc.add_argument("--format", choices=FORMATS, default="edgelist")
    orc.set_defaults(func=cmd_oracle)

    gen = sub.add_parser("gen", help="generate an instance")
    gen.add_argument("--spec", required=True, help="gnp:n=10,p=0.3 | planted:ind=3+3,cliques=4,p=0.5 | named:cycle(5)")
    gen.add_argument("--seed", type=int, default=0, help="used unless the generator string sets seed=")
    gen.add_argument("--format", choices=FORMATS, default="edgelist")
    gen.add_argument("--out")
    gen.add_argument("--certificate-out", help="write the planted certificate as JSON")
    gen.set_defaults(func=cmd_gen)

    ben = sub.add_parser("bench", help="run a benchmark suite to CSV")
    ben.add_argument("--suite", choices=SUITES, required=True)
    ben.add_argument("--out", default="-")
    ben.add_argument("--sizes", help="comma-separated vertex counts")
    ben.add_argument("--max-n", type=int, default=6, help="exhaustive corpus size for engines-compare")
    ben.set_defaults(func=cmd_bench)

    st = sub.add_parser("selftest", help="exhaustive oracle equivalence on all small labeled graphs")
    st.add_argument("--max-n", type=int, default=6)
    st.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (InvariantError, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UnsupportedClass, GraphError, OracleCutoffError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
