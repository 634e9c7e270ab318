import csv
import io
import json
import subprocess
import sys

import pytest

from klgraph.certificates import KLPartition, verify_kl
from klgraph.cli import main
from klgraph.dispatch import UnsupportedClass, parse_class, recognize, supported
from klgraph.formats import parse_graph, write_graph
from klgraph.generators import cycle, gnp, t_k3


@pytest.fixture
def write(tmp_path):
    def _write(g, fmt="edgelist", name="g.txt"):
        path = tmp_path / name
        path.write_text(write_graph(g, fmt))
        return str(path)

    return _write


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_recognize_c5(capsys, write):
    path = write(cycle(5))
    code, data = run_json(capsys, ["recognize", "--class", "2,1", "--input", path, "--certificate"])
    assert code == 0
    assert data["member"] is True and data["verified"] is True
    assert (data["k"], data["l"]) == (2, 1)
    cert = KLPartition.from_json(data)
    assert verify_kl(cycle(5), cert) is True


def test_recognize_non_member(capsys, write):
    path = write(t_k3(3))
    code, data = run_json(capsys, ["recognize", "--class", "2,2", "--input", path])
    assert code == 0
    assert data["member"] is False
    assert data["independent_sets"] == [] and data["cliques"] == []


def test_unsupported_class_exits_2(capsys, write):
    path = write(cycle(5))
    assert main(["recognize", "--class", "3,1", "--input", path]) == 2
    assert "not supported" in capsys.readouterr().err


@pytest.mark.parametrize("engine", ["main", "oddcore", "generic", "oracle"])
@pytest.mark.parametrize("fmt", ["edgelist", "dimacs", "graph6"])
def test_engines_and_formats(capsys, write, engine, fmt):
    g = gnp(8, 0.4, 3)
    path = write(g, fmt)
    code, data = run_json(capsys, ["recognize", "--class", "2x1", "--input", path, "--format", fmt, "--engine", engine])
    assert code == 0 and data["engine"] == engine
    if data["member"]:
        assert verify_kl(g, KLPartition.from_json(data)) is True


def test_bad_input_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    assert main(["recognize", "--class", "2,1", "--input", str(bad)]) == 2
    assert main(["recognize", "--class", "2,1", "--input", str(tmp_path / "missing")]) == 2
    assert main(["recognize", "--class", "two", "--input", str(bad)]) == 2


def test_oracle_command(capsys, write):
    code, data = run_json(capsys, ["oracle", "--class", "2,2", "--input", write(t_k3(3))])
    assert code == 0 and data["member"] is False and data["engine"] == "oracle"


def test_gen_command(capsys, tmp_path):
    out = tmp_path / "g.g6"
    cert_out = tmp_path / "c.json"
    argv = ["gen", "--spec", "planted:ind=3+3,cliques=4,p=0.5", "--seed", "3", "--format", "graph6"]
    assert main(argv + ["--out", str(out), "--certificate-out", str(cert_out)]) == 0
    g = parse_graph(str(out), "graph6")
    cert = KLPartition.from_json(json.loads(cert_out.read_text()))
    assert g.n == 10 and verify_kl(g, cert) is True
    assert main(argv) == 0
    assert capsys.readouterr().out.strip() == out.read_text().strip()


def test_bench_command(tmp_path):
    out = tmp_path / "r22.csv"
    assert main(["bench", "--suite", "r22-scaling", "--sizes", "8,10", "--out", str(out)]) == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert len(rows) == 8
    assert set(rows[0]) == {"instance", "n", "m", "class", "engine", "time_ms", "member"}


def test_selftest_command(capsys):
    assert main(["selftest", "--max-n", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["disagreements"] == 0


def test_module_entry_point(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(write_graph(cycle(5), "edgelist"))
    done = subprocess.run(
        [sys.executable, "-m", "klgraph", "recognize", "--class", "1,2", "--input", str(path)],
        capture_output=True,
        text=True,
        check=False,
    )
    assert done.returncode == 0
    assert json.loads(done.stdout)["member"] is True


def test_parse_class_forms():
    assert parse_class("2,1") == parse_class("2x1") == parse_class("(2,1)") == (2, 1)
    with pytest.raises(UnsupportedClass):
        parse_class("2")
    with pytest.raises(UnsupportedClass):
        parse_class("-1,2")


def test_dispatch_padding_and_support():
    cert = recognize(cycle(4), 2, 2)
    assert (cert.k, cert.l) == (2, 2)
    assert supported(2, 2, "main") and not supported(2, 2, "oddcore")
    assert not supported(3, 1) and supported(3, 1, "oracle")
    with pytest.raises(UnsupportedClass):
        recognize(cycle(4), 2, 2, "oddcore")
    with pytest.raises(UnsupportedClass):
        recognize(cycle(4), 2, 2, "nosuch")
