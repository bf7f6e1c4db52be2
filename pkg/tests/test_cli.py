import json

import pytest

from nestgraphs.cli import AnalysisReport, analyze, main
from nestgraphs.bicirculant import NestParams


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "5;1,2,3;2")
    assert code == 0
    assert "aut_order     120" in out and "class         AT" in out and "lambda        3" in out


def test_analyze_hat(capsys):
    code, out, _ = run(capsys, "analyze", "108;9,34,79;53", "--no-census")
    assert code == 0
    assert "class         HAT" in out and "alternets     9" in out and "girth         6" in out


def test_analyze_json_round_trip(capsys):
    code, out, _ = run(capsys, "analyze", "28;1,6,19;13", "--json")
    assert code == 0
    rep = AnalysisReport.from_json(out)
    assert rep == analyze(NestParams(28, 1, 6, 19, 13))
    assert rep.census[5]["identities"] and rep.alternet_count == 1


def test_analyze_generators(capsys):
    code, out, _ = run(capsys, "analyze", "7;1,2,4;2", "--generators", "--no-census")
    assert code == 0 and "(u0" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "6;1,2,3;3"],
        ["analyze", "garbage"],
        ["alternets", "5;1,2,3;2"],
        ["families", "--family", "nope", "--max-order", "40"],
        ["enumerate", "--max-order", "41"],
        ["enumerate", "--max-order", "40", "--valence", "12"],
        ["verify", "--table", "9"],
        [],
    ],
)
def test_user_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2


def test_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "enumerate", "--max-order", "10", "--out", str(tmp_path / "no" / "x.csv"))
    assert code == 3 and "cannot write" in err


def test_enumerate_csv_deterministic(capsys, tmp_path):
    out = tmp_path / "c.csv"
    assert run(capsys, "enumerate", "--max-order", "40", "--out", str(out), "--quiet")[0] == 0
    first = out.read_text()
    assert run(capsys, "enumerate", "--max-order", "40", "--out", str(out), "--quiet", "--jobs", "2")[0] == 0
    assert out.read_text() == first
    assert first.splitlines()[0] == "n,a,b,c,k,girth,bipartite,stab,class"
    report = json.loads((tmp_path / "c.csv.report.json").read_text())
    assert report["rows"] == len(first.splitlines()) - 1


def test_enumerate_stdout_higher_valence(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-order", "30", "--valence", "7", "--quiet")
    assert code == 0 and out.splitlines() == ["n,spokes,k,girth,bipartite,stab,class"]


def test_families(capsys):
    code, out, _ = run(capsys, "families", "--family", "at1", "--max-order", "40")
    assert code == 0
    assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["6", "10", "14", "18"]
    code, out, _ = run(capsys, "families", "--family", "g3-iii", "--max-order", "120", "--check")
    lines = out.splitlines()[1:]
    assert lines and all(line.endswith("HAT,3") for line in lines)


def test_alternets_command(capsys, tmp_path):
    path = tmp_path / "o.txt"
    code, out, _ = run(capsys, "alternets", "84;1,10,51;41", "--orientation-out", str(path))
    assert code == 0
    assert "alternets   3" in out and "same partition" in out and "predicted   3" in out
    assert path.read_text().splitlines()[0] == "u0>u1"
    assert len(path.read_text().splitlines()) == 3 * 168


def test_verify_table2(capsys):
    code, out, _ = run(capsys, "verify", "--table", "2")
    assert code == 0 and "46/46" in out


def test_verify_table1_small(capsys):
    code, out, _ = run(capsys, "verify", "--table", "1", "--max-order", "40", "--quiet")
    assert code == 0 and "pass" in out
