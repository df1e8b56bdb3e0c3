import json
import subprocess
import sys

import pytest

from heckeposet.cli import build_parser, expansion, expansion_tsv, hasse_dot, main, read_expansion_tsv
from heckeposet.compositions import Composition
from heckeposet.posets import LabeledPoset
from heckeposet.qsym import QsymElement
from heckeposet.tableaux import poset_dual_immaculate

RUNNING = LabeledPoset.from_covers(5, [(5, 1), (1, 3), (1, 4), (2, 4)])


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return [line.split("\t") for line in text.splitlines()]


@pytest.fixture
def chain3(tmp_path):
    path = tmp_path / "chain3.json"
    path.write_text(json.dumps({"n": 3, "covers": [[1, 2], [2, 3]]}))
    return str(path)


def test_expand_final_example(capsys):
    code, out, _ = run(capsys, "expand", "--family", "dimm", "--alpha", "2,1,2")
    assert code == 0
    assert ["(4,1)", "2", "1/2"] in rows(out)
    code, out, _ = run(capsys, "expand", "--family", "ext", "--alpha", "2,1,2")
    assert ["(4,1)", "1", "1/4"] in rows(out)


@pytest.mark.parametrize("route", ["strips", "starred", "solve"])
def test_expand_routes_agree(capsys, route):
    _, out, _ = run(capsys, "expand", "--family", "dimm", "--alpha", "3,1,2", "--route", route)
    _, base, _ = run(capsys, "expand", "--family", "dimm", "--alpha", "3,1,2")
    assert out == base


def test_expand_poset_in_F(capsys, chain3):
    code, out, _ = run(capsys, "expand", "--family", "poset", "--covers-file", chain3, "--basis", "F")
    assert code == 0 and out == "F_(3)\t1\n"


@pytest.mark.parametrize("family", ["rdimm", "rext", "qs", "yqs", "yrqs", "rqs"])
def test_expand_other_families(capsys, family):
    code, out, _ = run(capsys, "expand", "--family", family, "--alpha", "2,1,2", "--basis", "F")
    assert code == 0 and out.startswith("F_(")


def test_expansion_round_trips(capsys):
    for fmt in ("tsv", "json"):
        for basis in ("Psi", "F", "M"):
            _, out, _ = run(capsys, "expand", "--family", "qs", "--alpha", "2,2,1", "--basis", basis, "--format", fmt)
            back = QsymElement.from_json(out) if fmt == "json" else read_expansion_tsv(out)
            args = build_parser().parse_args(["expand", "--family", "qs", "--alpha", "2,2,1"])
            assert back == expansion(args)
    x = QsymElement("Psi", {Composition((2, 1)): 1})
    assert read_expansion_tsv(expansion_tsv(x)) == x


def test_bad_inputs_exit_nonzero(capsys, tmp_path):
    code, _, err = run(capsys, "expand", "--family", "dimm", "--alpha", "2,0,1")
    assert code != 0 and "bad composition" in err
    code, _, err = run(capsys, "expand", "--family", "poset")
    assert code != 0 and "covers-file" in err
    missing = tmp_path / "nope.json"
    code, _, _ = run(capsys, "expand", "--family", "poset", "--covers-file", str(missing))
    assert code != 0
    code, _, err = run(capsys, "expand", "--family", "dimm", "--alpha", "5,5")
    assert code != 0 and "hard cap" in err
    code, _, _ = run(capsys, "build-d", "--alpha", "1,1,1", "--rho", "123")
    assert code != 0
    with pytest.raises(SystemExit):
        main(["expand", "--family", "nonsense", "--alpha", "1"])


def test_hasse_running_example(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(RUNNING.to_json()))
    code, out, _ = run(capsys, "hasse", "--covers-file", str(path))
    assert code == 0
    edges = [line for line in out.splitlines() if "->" in line]
    assert len(edges) == 4
    assert sum("penwidth=2" in e for e in edges) == 1
    assert "  5 -> 1 [dir=none, penwidth=2];" in edges
    nodes = {tok.rstrip(";") for line in out.splitlines() if "rank=same" in line for tok in line.split()[2:-1]}
    assert nodes == {"1", "2", "3", "4", "5"}


def test_hasse_chain_is_a_path():
    dot = hasse_dot(LabeledPoset.chain(3))
    assert "1 -> 2" in dot and "2 -> 3" in dot and "1 -> 3" not in dot
    assert dot.count("rank=same") == 3


def test_hasse_family(capsys):
    _, out, _ = run(capsys, "hasse", "--family", "dimm", "--alpha", "3,2,4")
    edges = sorted(
        tuple(int(x) for x in line.split("[")[0].replace("->", " ").split())
        for line in out.splitlines()
        if "->" in line
    )
    assert edges == sorted(poset_dual_immaculate(Composition((3, 2, 4))).covers())
    assert out.count(";") - out.count("->") >= 9


def test_poset_and_interval(capsys):
    _, out, _ = run(capsys, "poset", "--sigma", "25134", "--rho", "52143")
    data = json.loads(out)
    assert data["regular"] and len(data["sigma_R"]) == 4
    _, out, _ = run(capsys, "interval", "--sigma", "25134", "--rho", "52143")
    data = json.loads(out)
    assert data["elements"] == ["25134", "25143", "52134", "52143"]
    assert data["poset"]["n"] == 5
    code, _, err = run(capsys, "interval", "--sigma", "321", "--rho", "123")
    assert code != 0 and "not below" in err


def test_build_d(capsys):
    _, out, _ = run(capsys, "build-d", "--alpha", "1,1,2,2,1,1,1", "--rho", "841539762")
    data = json.loads(out)
    assert data["rows"] == [[1, 4, 8], [3, 5], [2, 6, 7, 9]]
    assert data["columns"] == [[1, 2], [3], [4, 5, 6], [7], [8, 9]]
    assert len(data["cells"]) == 9


def test_sink_tableau(capsys):
    _, out, _ = run(capsys, "sink-tableau", "--tableau", "3 2/6 5 4/7 1/11 10 9 8")
    (record,) = json.loads(out)
    assert record["sink"]["read"] == "1,5,2,8,6,3,9,11,10,7,4"
    _, out, _ = run(capsys, "sink-tableau", "--alpha", "2,3,2,4")
    assert len(json.loads(out)) == 3


def test_verify_small(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--suite", "twists", "--n", "3", "--out", str(report))
    data = json.loads(report.read_text())
    assert code == 0 and data["passed"] and data["suites"][0]["checks"] > 0


def test_outputs_are_deterministic():
    cmd = [sys.executable, "-m", "heckeposet", "expand", "--family", "qs", "--alpha", "2,1,2"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
    cmd = [sys.executable, "-m", "heckeposet", "verify", "--suite", "relations", "--n", "3"]
    runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
    assert runs[0].returncode == 0 and runs[0].stdout == runs[1].stdout
