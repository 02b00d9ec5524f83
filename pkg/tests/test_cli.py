import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from pglcent.cli import main
from pglcent.compgroup import component_group
from pglcent.cyclofield import CycNum
from pglcent.exactla import diag
from pglcent.report import emit_report, parse_suite_text
from pglcent.twistcent import GeneratorSet

GOLDEN = Path(__file__).parent / "golden"
W = CycNum.root(3)

CUBE_ROOT = "order = 3\ndim = 3\ngen = [[z,0,0],[0,z^2,0],[0,0,1]]\nexpected = Z/3Z\n"


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def problem(tmp_path):
    def write(text):
        path = tmp_path / "p.txt"
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def test_component_group_text(problem, capsys):
    code, out, _ = run(["component-group", "--input", problem(CUBE_ROOT)], capsys)
    assert code == 0
    assert "component group: Z/3Z" in out
    assert "(1): dim 3, witness [[0,1,0],[0,0,1],[1,0,0]]" in out
    assert "invariant factors: [3]" in out


def test_component_group_json(problem, capsys):
    code, out, _ = run(["component-group", "--input", problem(CUBE_ROOT), "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert list(data) == [
        "case",
        "dim",
        "order",
        "centralizer_dim",
        "strata",
        "invariant_factors",
        "iso_label",
    ]
    assert data["invariant_factors"] == [3]
    assert [s["twist"] for s in data["strata"]] == [[0], [1], [2]]
    assert data["strata"][1]["witness"] == [["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"]]


def test_trivial_report_text():
    r = component_group(GeneratorSet((diag([2, 3, 1], 3),)))
    assert "component group: trivial" in emit_report(r)


def test_centralizer_subcommand(problem, capsys):
    code, out, _ = run(
        ["centralizer", "--input", problem("family = dihedral-chi; c = 7"), "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 3 and len(data["basis"]) == 2


def test_family_case_names_character_value(problem, capsys):
    code, out, _ = run(["component-group", "--input", problem("family = steinberg2-chi; k = 7")], capsys)
    assert code == 0
    assert out.startswith("case: steinberg2-chi(k=7)\n")
    _, out, _ = run(["component-group", "--input", problem("family = steinberg3")], capsys)
    assert out.startswith("case: steinberg3\n")


def test_expected_mismatch_exits_1(problem, capsys):
    code, _, err = run(["component-group", "--input", problem(CUBE_ROOT.replace("Z/3Z", "trivial"))], capsys)
    assert code == 1 and "mismatch" in err


def test_singular_exits_1(problem, capsys):
    code, _, err = run(["component-group", "--input", problem("gen = [[1,1],[2,2]]")], capsys)
    assert code == 1 and "singular" in err


def test_parse_error_exits_2(problem, capsys):
    code, _, err = run(["component-group", "--input", problem("order = 3\ngen = [[1,0],[0,1\n")], capsys)
    assert code == 2 and "line 2" in err


def test_missing_file_exits_1(tmp_path, capsys):
    code, _, _ = run(["centralizer", "--input", str(tmp_path / "nope")], capsys)
    assert code == 1


def test_seed_flag_overrides_file_seed(problem, capsys):
    path = problem(CUBE_ROOT + "seed = 9\n")
    a = run(["component-group", "--input", path], capsys)
    b = run(["component-group", "--input", path, "--seed", "9"], capsys)
    assert a == b


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_byte_identical_across_processes(problem, fmt):
    path = problem("gen = [[1,2,0],[0,1,z],[z^2,0,1]]\ngen = [[0,1,0],[0,0,1],[1,0,0]]\n")
    cmd = [sys.executable, "-m", "pglcent", "component-group", "--input", path, "--format", fmt]
    outs = {subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1


def test_stdin_input(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(CUBE_ROOT))
    code, out, _ = run(["component-group", "--input", "-"], capsys)
    assert code == 0 and "Z/3Z" in out


def test_paper_text_golden(capsys):
    code, out, _ = run(["paper"], capsys)
    assert code == 0
    assert out == (GOLDEN / "paper.txt").read_text(encoding="utf-8")


def test_paper_json_and_text_agree(capsys):
    _, text, _ = run(["paper"], capsys)
    _, js, _ = run(["paper", "--format", "json"], capsys)
    data = json.loads(js)
    from_json = [
        {
            "case": c["case"],
            "centralizer_dim": c["centralizer_dim"],
            "nonempty_twists": [s["twist"] for s in c["strata"] if "witness" in s],
            "iso_label": c["iso_label"],
            "matches_paper": c["matches_paper"],
        }
        for c in data["cases"]
    ]
    assert parse_suite_text(text) == from_json
    assert [r["iso_label"] for r in from_json] == ["trivial", "Z/3Z"] + ["trivial"] * 4


def test_paper_negative_control(capsys):
    code, out, _ = run(["paper", "--expect", "steinberg3=Z/3Z"], capsys)
    assert code == 1
    assert "all match: no" in out
    row = next(r for r in parse_suite_text(out) if r["case"] == "steinberg3")
    assert row["matches_paper"] is False


def test_paper_bad_expect(capsys):
    code, _, _ = run(["paper", "--expect", "nonsense"], capsys)
    assert code == 1
