import io
import json
import subprocess
import sys

import pytest

from strangeorbits.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run("--format", "json", *argv)
    return code, json.loads(text)


def test_index_borel():
    code, res = run_json("index", "--borel", "6")
    assert code == 0 and res["index_upper_bound"] == 2 and res["agree"]


def test_index_maximal_parabolic_frobenius():
    code, res = run_json("index", "--parabolic", "1", "--n", "5", "--sl")
    assert code == 0 and res["index_upper_bound"] == 0 and res["dk_index"] == 0


def test_index_seaweed_agree_text():
    code, text = run("index", "--seaweed", "1|2|6 / 9", "--sl")
    assert code == 0 and "AGREE" in text and "DISAGREE" not in text


def test_index_levi_notation_and_gl():
    code, res = run_json("index", "--parabolic", "A={2,5}", "--n", "6")
    assert code == 0 and res["dim"] == 22 and res["dk_index"] == 0
    code, res = run_json("index", "--borel", "3", "--gl")
    assert res["dk_index"] == res["index_upper_bound"] == 2


@pytest.mark.parametrize("argv", [
    ["index"],
    ["index", "--seaweed", "1|2"],
    ["index", "--parabolic", "7", "--n", "6"],
    ["index", "--parabolic", "A={9}", "--n", "6"],
    ["check", "--partition", "5,x", "--witness", "fig1"],
    ["check", "--partition", "5", "--witness", "nonsense"],
    ["reproduce", "nope"],
    ["--trials", "0", "index", "--borel", "3"],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_check_examples():
    code, res = run_json("check", "--partition", "5,2,2", "--witness", "flag3")
    assert code == 0 and res["is_strange_pair"]
    code, res = run_json("check", "--partition", "6,3", "--witness", "flag2")
    assert code == 0 and res["is_strange_pair"]
    code, text = run("check", "--partition", "5,1", "--witness", "fig1")
    assert code == 1 and "dim mismatch" in text
    code, _ = run("check", "--partition", "4,2", "--witness", "flag3")
    assert code == 1


def test_check_witness_file_roundtrip(tmp_path):
    path = tmp_path / "w.json"
    code, _ = run("check", "--partition", "3,3", "--witness", "fig1", "--save", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["provenance"] == "fig1" and all(isinstance(x, str) for x in data["matrices"][0][0])
    code, res = run_json("check", "--partition", "3,3", "--witness", str(path))
    assert code == 0 and res["is_strange_pair"]


def test_check_invalid_witness_file(tmp_path):
    z = ["0", "0"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"provenance": "hand", "algebra": "gl_2",
                                "matrices": [[["0", "1"], z], [z, ["1", "0"]]]}))
    assert run("check", "--partition", "2", "--witness", str(path))[0] == 4
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert run("check", "--partition", "2", "--witness", str(broken))[0] == 2


def test_survey_examples():
    for n in (4, 5):
        code, res = run_json("survey", str(n))
        assert code == 0 and res["summary"] == {"Strange": len(res["verdicts"]),
                                                "NotStrange": 0, "Unknown": 0}
    code, res = run_json("survey", "6")
    bad = [v["partition"] for v in res["verdicts"] if v["status"] != "Strange"]
    assert bad == ["5,1"]


def test_survey_deterministic_and_parallel():
    a = run("--format", "json", "survey", "6")[1]
    b = run("--format", "json", "survey", "6")[1]
    c = run("--format", "json", "--parallel", "survey", "6")[1]
    assert a == b
    assert json.loads(a)["verdicts"] == json.loads(c)["verdicts"]


def test_seed_env_override(monkeypatch):
    monkeypatch.setenv("STRANGE_SEED", "17")
    _, res = run_json("survey", "4")
    assert res["config"]["seed"] == 17
    _, res = run_json("--seed", "3", "survey", "4")
    assert res["config"]["seed"] == 3
    monkeypatch.setenv("STRANGE_SEED", "x")
    assert run("survey", "4")[0] == 2


def test_flags_after_subcommand():
    _, res = run_json("survey", "3", "--seed", "9")
    assert res["config"]["seed"] == 9


def test_reproduce_examples():
    code, res = run_json("reproduce", "frobdims", "--n", "6")
    assert code == 0 and res["passed"] and "[22, 24, 26, 30]" in res["items"][0]["detail"]
    code, res = run_json("reproduce", "thm52", "--max-n", "6")
    assert code == 0 and len(res["items"]) == 15
    code, text = run("reproduce", "elashvili", "--n", "6")
    assert code == 0 and text.count("[pass]") == 11 and "index<=5" in text


def test_centralizer_and_meander():
    code, res = run_json("centralizer", "--partition", "5,2,2")
    assert code == 0 and res["centralizer_dim"] == 20 and res["orbit_dim"] == 60
    code, text = run("centralizer", "--partition", "2", "--gl", "--basis")
    assert code == 0 and "dim 2" in text
    code, res = run_json("meander", "--seaweed", "1|2|6 / 9")
    assert code == 0 and (res["cycles"], res["paths"], res["index_sl"]) == (0, 1, 0)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "strangeorbits", "index", "--borel", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "meander index = 1" in proc.stdout
