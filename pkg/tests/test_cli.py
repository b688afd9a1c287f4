import json
import subprocess
import sys
from pathlib import Path

import pytest

from groupement import __version__, schema
from groupement.cli import FORMAT_ENV, run

FIXTURES = Path(__file__).with_name("fixtures")
CASES = json.loads((FIXTURES / "cli_cases.json").read_text())

# files whose JSON is exactly what the serializer writes (no file references, no un-normalized rationals)
CANONICAL_FILES = sorted(
    p.name
    for p in FIXTURES.glob("*.json")
    if p.name not in {"cli_cases.json", "malformed.json", "gmor_not_gfonc.json", "not_gmor.json",
                      "trans_const.json", "trans_bad.json", "unnormalized.json"}
    and not p.name.startswith("bad_")
    and p.name != "negative_duration.json"
)


@pytest.fixture
def in_fixtures(monkeypatch):
    monkeypatch.chdir(FIXTURES)
    monkeypatch.delenv(FORMAT_ENV, raising=False)


def _run(capsys, args):
    code = run(args)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("case", CASES, ids=lambda c: " ".join(c["args"]))
def test_exit_codes_and_messages(in_fixtures, capsys, case):
    code, out, err = _run(capsys, case["args"])
    assert code == case["exit"]
    assert case["contains"] in (out if code != 2 else err)
    if code == 2:
        assert out == ""


@pytest.mark.parametrize("case", [c for c in CASES if c["exit"] != 2], ids=lambda c: " ".join(c["args"]))
def test_json_output_parses(in_fixtures, capsys, case):
    code, out, _ = _run(capsys, ["--format", "json", *case["args"]])
    assert code == case["exit"]
    data = json.loads(out)
    assert isinstance(data, dict)


def test_format_flag_after_subcommand(in_fixtures, capsys):
    code, out, _ = _run(capsys, ["check", "one.json", "--format", "json"])
    assert code == 0 and json.loads(out)["ok"] is True


def test_format_from_environment(in_fixtures, capsys, monkeypatch):
    monkeypatch.setenv(FORMAT_ENV, "json")
    _, out, _ = _run(capsys, ["check", "bad_gr2.json"])
    data = json.loads(out)
    assert data["ok"] is False
    assert data["axioms"]["GR 2"]["witness"] == [1, 1]
    # the flag wins over the environment
    _, out, _ = _run(capsys, ["--format", "text", "check", "one.json"])
    assert out.strip() == "GR 1-3: pass"


def test_enumerate_json_schema(in_fixtures, capsys):
    _, out, _ = _run(capsys, ["--format", "json", "enumerate", "--n", "2", "--class", "star", "--canonical"])
    assert json.loads(out) == {
        "query": {"n": 2, "class": "star", "canonical": True},
        "count": 13,
        "tool_version": __version__,
    }


def test_compose_json_reports_composability(in_fixtures, capsys):
    _, out, _ = _run(capsys, ["--format", "json", "moore", "compose", "path_a.json", "path_far.json"])
    data = json.loads(out)
    assert data["composable"] is False
    assert data["cube"] == json.loads((FIXTURES / "path_a.json").read_text())


def test_classify_json(in_fixtures, capsys):
    _, out, _ = _run(capsys, ["--format", "json", "classify", "and.json"])
    assert json.loads(out) == {
        "groupement": True,
        "category": False,
        "star": True,
        "alexandroff": True,
        "alexis": 1,
        "identities": [1],
        "invertibles": [1],
    }


def test_outputs_load_back(in_fixtures, capsys, tmp_path):
    for args in (["complete", "one.json"], ["hat", "z2.json"], ["dual", "and.json"], ["moore", "compose", "path_a.json", "path_b.json"]):
        _, out, _ = _run(capsys, args)
        p = tmp_path / "out.json"
        p.write_text(out)
        value = schema.load(p)
        assert schema.dump(value) == json.loads(out)


@pytest.mark.parametrize("name", CANONICAL_FILES)
def test_fixture_files_round_trip(name):
    raw = json.loads((FIXTURES / name).read_text())
    assert schema.dump(schema.load(FIXTURES / name)) == raw


def test_unnormalized_rationals_are_rewritten():
    c = schema.load(FIXTURES / "unnormalized.json")
    assert schema.dump(c)["grids"] == [["0", "1/2"]]
    assert schema.dump(c)["values"] == [["1/2"], ["1"]]


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "groupement", "check", "one.json"],
        cwd=FIXTURES,
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    assert r.stdout.strip() == "GR 1-3: pass"
