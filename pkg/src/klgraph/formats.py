"""Readers and writers for edge-list, DIMACS and graph6 files.

* edgelist: header ``n m`` followed by m lines ``u v`` (0-based).
* dimacs: ``p edge n m`` header, ``e u v`` lines (1-based), ``c`` comments.
* graph6: the standard printable 6-bit encoding of the upper triangle.

Every reader re-indexes to 0-based vertices and rejects loops and repeated
edges through :func:`build_graph`.
"""

from __future__ import annotations

import io
import os
from typing import TextIO, Union

import networkx as nx

from .graph import Graph, GraphError, build_graph

FORMATS = ("edgelist", "dimacs", "graph6")


class GraphFormatError(GraphError):
    pass


def _ints(tokens: list[str], line_no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphFormatError(f"line {line_no}: expected integers, got {' '.join(tokens)!r}") from exc


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def parse_edgelist(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("empty edge list: missing 'n m' header")
    no, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise GraphFormatError(f"line {no}: header must be 'n m'")
    n, m = _ints(fields, no)
    edges = []
    for no, line in lines[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"line {no}: expected 'u v'")
        u, v = _ints(fields, no)
        edges.append((u, v))
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def parse_dimacs(text: str) -> Graph:
    n = m = None
    edges = []
    for no, line in _content_lines(text):
        fields = line.split()
        tag = fields[0]
        if tag == "c":
            continue
        if tag == "p":
            if n is not None:
                raise GraphFormatError(f"line {no}: second problem line")
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise GraphFormatError(f"line {no}: expected 'p edge n m'")
            n, m = _ints(fields[2:], no)
        elif tag == "e":
            if n is None:
                raise GraphFormatError(f"line {no}: edge before problem line")
            if len(fields) != 3:
                raise GraphFormatError(f"line {no}: expected 'e u v'")
            u, v = _ints(fields[1:], no)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {no}: unknown line type {tag!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge n m' line")
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data or "\n" in data:
        raise GraphFormatError("expected exactly one graph6 string")
    try:
        nxg = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise GraphFormatError(f"bad graph6 string: {exc}") from exc
    return build_graph(nxg.number_of_nodes(), nxg.edges())


_PARSERS = {"edgelist": parse_edgelist, "dimacs": parse_dimacs, "graph6": parse_graph6}


def parse_graph(source: Union[str, os.PathLike, TextIO], fmt: str = "edgelist") -> Graph:
    """Read a graph from a path or an open text stream."""
    if fmt not in _PARSERS:
        raise GraphFormatError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="ascii") as fh:
            text = fh.read()
    else:
        text = source.read()
    return _PARSERS[fmt](text)


def parse_text(text: str, fmt: str = "edgelist") -> Graph:
    return parse_graph(io.StringIO(text), fmt)


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def write_graph6(g: Graph) -> str:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii")


_WRITERS = {"edgelist": write_edgelist, "dimacs": write_dimacs, "graph6": write_graph6}


def write_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt not in _WRITERS:
        raise GraphFormatError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return _WRITERS[fmt](g)
