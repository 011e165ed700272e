import json

import pytest
from click.testing import CliRunner

from descentkit.cli import main


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, env=None):
        return runner.invoke(main, list(args), env=env)
    return invoke


@pytest.mark.parametrize("args, out", [
    (["stat", "3247516", "--set", "2,3"], "5"),
    (["stat", "123", "--d", "0"], "3"),
    (["stat", "31452867", "--word", "UUD"], "6"),
    (["stat", "1573426", "--d", "1"], "6"),
    (["stat", "42783561", "--comp", "1,1,2"], "5"),
    (["stat", "42783561", "--comp", "1,1,1"], "6"),
    (["stat", "1573426", "--alt"], "5"),
    (["stat", "21", "--set", ""], "1"),
])
def test_stat(run, args, out):
    res = run(*args)
    assert res.exit_code == 0, res.output
    assert res.output.strip() == out


def test_stat_json(run):
    res = run("stat", "42783561", "--set", "1,3,4", "--json")
    assert json.loads(res.output) == {"perm": [4, 2, 7, 8, 3, 5, 6, 1], "selector": "D=1,3,4", "value": 5}


def test_stat_all_matches_oracle(run):
    a = run("stat", "3247516", "--all", "--json")
    b = run("stat", "3247516", "--all", "--oracle", "--json")
    assert a.exit_code == b.exit_code == 0
    assert json.loads(a.output)["profile"] == json.loads(b.output)["profile"]
    assert len(json.loads(a.output)["profile"]) == 64


@pytest.mark.parametrize("args", [
    ["stat", "3247516"],
    ["stat", "3247516", "--d", "1", "--alt"],
    ["stat", "3247516", "--word", "UX"],
    ["stat", "3247516", "--set", "a"],
    ["stat", "3247516", "--d", "1", "--oracle"],
    ["stat", "3247 5x16", "--d", "1"],
    ["stat", "4,4,1", "--d", "1"],
    ["rsk", "1234567890"],
    ["evac", "[1 3][2 2]"],
    ["verify", "--max-n", "2", "--checks", "bogus", "--out", "-"],
    ["census", "--n", "2", "--which", "bogus", "--out", "-"],
])
def test_usage_errors_exit_2(run, args):
    assert run(*args).exit_code == 2


def test_guard_exit_3(run):
    assert run("stat", "1 2 3 4 5 6 7 8 9 10 11 12 13 14 15", "--all").exit_code == 3
    assert run("verify", "--max-n", "9", "--out", "-").exit_code == 3
    assert run("census", "--n", "3", "--out", "-", env={"DESCENTKIT_MAX_N": "2"}).exit_code == 3


def test_rsk(run):
    res = run("rsk", "4365172")
    lines = res.output.splitlines()
    assert lines[1] == "Q = [1 3 6][2 4][5 7]"
    payload = json.loads(run("rsk", "4365172", "--format", "json").output)
    assert payload["Q"] == [[1, 3, 6], [2, 4], [5, 7]]
    assert run("rsk", "4365172", "--format", "dot").output.startswith("digraph rsk")


def test_evac(run):
    assert run("evac", "[1 2 4][3][5]").output.strip() == "[1 3 5][2][4]"
    payload = json.loads(run("evac", "5316274", "--format", "json").output)
    assert payload["evac"][0] == [1, 3, 5]


def test_growth(run):
    payload = json.loads(run("growth", "34251", "--format", "json").output)
    assert [1, 5, [2, 1, 1]] in payload["cells"]
    art = run("growth", "[1 2 4][3][5]").output.splitlines()
    assert art[0].strip() == "311"
    assert run("growth", "34251", "--format", "dot").exit_code == 0


def test_verify(run, tmp_path):
    out = tmp_path / "r.json"
    res = run("verify", "--max-n", "6", "--checks", "evac-involution", "--out", str(out))
    assert res.exit_code == 0
    assert res.output.strip() == "PASS evac-involution n≤6"
    report = json.loads(out.read_text())
    assert report["passed"] and "generated_at" in report["meta"]
    res = run("verify", "--max-n", "1", "--checks", "all", "--out", "-")
    assert res.exit_code == 0 and len(res.output.splitlines()) == 28


def test_verify_failure_exit_1(run, monkeypatch):
    from descentkit import census
    monkeypatch.setitem(census.CHECKS, "always-fails", lambda x: "forced")
    res = run("verify", "--max-n", "2", "--checks", "always-fails", "--out", "-")
    assert res.exit_code == 1
    assert res.output.startswith("FAIL always-fails n≤2 (3 of 3; first: [1] forced)")


def test_census(run):
    res = run("census", "--n", "2", "--which", "asc-is", "--out", "-")
    assert res.exit_code == 0
    assert res.output.strip() == "PASS asc-is n=2: direct=2 formula=2"
    res = run("census", "--n", "4", "--out", "-")
    assert res.exit_code == 0 and len(res.output.splitlines()) == 5


def test_determinism(run, tmp_path):
    for args in (["stat", "3247516", "--all", "--json"], ["growth", "3247516"],
                 ["rsk", "4365172", "--format", "json"]):
        assert run(*args).output == run(*args).output
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("census", "--n", "5", "--out", str(a), "--no-timestamp")
    run("census", "--n", "5", "--out", str(b), "--no-timestamp")
    assert a.read_bytes() == b.read_bytes()
