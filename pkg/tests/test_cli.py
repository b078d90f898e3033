import json
from pathlib import Path

import pytest

from reebcert.cli import (
    EXIT_FILE,
    EXIT_INPUT,
    EXIT_INVARIANT,
    cfrac_payload,
    main,
)

GOLDEN = Path(__file__).parent / "golden"

COMMANDS = {
    "cfrac_5_3": ["cfrac", "5", "3"],
    "lens_enumerate_3_1": ["lens", "enumerate", "3", "1"],
    "survey_10": ["survey", "10"],
    "brieskorn_2": ["brieskorn", "2"],
    "diagram_l3_1": ["diagram", "examples/l3_1.diagram"],
    "diagram_sigma_2_3_11": ["diagram", "examples/sigma_2_3_11.diagram"],
}


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", COMMANDS)
@pytest.mark.parametrize("fmt, ext", [("text", "txt"), ("machine", "json")])
def test_golden(capsys, name, fmt, ext):
    code, out, _ = run(capsys, COMMANDS[name] + ["--format", fmt])
    assert code == 0
    assert out == (GOLDEN / f"{name}.{ext}").read_text()


@pytest.mark.parametrize("name", COMMANDS)
def test_machine_output_round_trips(capsys, name):
    _, out, _ = run(capsys, COMMANDS[name] + ["--format", "machine"])
    payload = json.loads(out)
    assert json.dumps(payload, indent=2) + "\n" == out


def test_cfrac_payload_values():
    d = cfrac_payload(5, 3)
    assert d == {"p": 5, "q": 3, "cfrac": [-2, -3], "qseq": [0, 1, 3, 5], "odd": True}
    assert cfrac_payload(3, 2)["odd"] is False


def test_cfrac_not_coprime(capsys):
    code, _, err = run(capsys, ["cfrac", "4", "2"])
    assert code == EXIT_INPUT and "not coprime" in err


def test_lens_count(capsys):
    assert run(capsys, ["lens", "count", "5", "3"])[1] == "2\n"


def test_lens_enumerate_even(capsys):
    _, out, _ = run(capsys, ["lens", "enumerate", "3", "2", "--format", "machine"])
    d = json.loads(out)
    assert d["structures"] == [
        {"rotations": [0, 0], "reeb_class": 0, "certified": False, "conjugation": "self"}
    ]


def test_survey_rows_and_flags(capsys):
    _, out, _ = run(capsys, ["survey", "--pmax", "3", "--format", "machine"])
    d = json.loads(out)
    assert len(d["rows"]) == 3 and d["summary"]["violations"] == 0
    _, par, _ = run(capsys, ["survey", "3", "--parallel", "on", "--format", "machine"])
    assert par == out


def test_survey_bad_pmax(capsys):
    assert run(capsys, ["survey", "1"])[0] == EXIT_INPUT
    assert run(capsys, ["survey"])[0] == EXIT_INPUT


def test_brieskorn_errors_and_poincare(capsys):
    assert run(capsys, ["brieskorn", "0"])[0] == EXIT_INPUT
    _, out, _ = run(capsys, ["brieskorn", "1", "--format", "machine"])
    assert json.loads(out)["poincare_sphere"] is True


def test_diagram_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, ["diagram", str(tmp_path / "none.diagram")])
    assert code == EXIT_FILE and "cannot read" in err


def test_diagram_parse_vs_validation_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.diagram"
    bad.write_text("{not json")
    parse_code, _, err = run(capsys, ["diagram", str(bad)])
    assert parse_code == EXIT_FILE and "malformed" in err

    invalid = tmp_path / "invalid.diagram"
    invalid.write_text(json.dumps({
        "ambient": "S3",
        "knots": [{"id": "K1", "tb": -1, "rot": 1, "unknot": True}],
        "linking": [[-2]],
    }))
    val_code, _, err = run(capsys, ["diagram", str(invalid)])
    assert val_code == EXIT_INPUT and "Bennequin" in err
    assert parse_code != val_code


def test_diagram_one_handles_rejected(capsys, tmp_path):
    f = tmp_path / "s1s2.diagram"
    f.write_text(json.dumps({"ambient": "#1 S1xS2", "knots": [], "linking": []}))
    code, _, err = run(capsys, ["diagram", str(f)])
    assert code == EXIT_INPUT and "only surgery on S3" in err


def test_diagram_local_file_with_zero_rotations(capsys, tmp_path):
    f = tmp_path / "e.diagram"
    f.write_text(json.dumps({
        "ambient": "S3",
        "knots": [{"id": "K1", "tb": -1, "rot": 0, "unknot": True}],
        "linking": [[-2]],
    }))
    code, out, _ = run(capsys, ["diagram", str(f), "--format", "machine"])
    v = json.loads(out)["verdict"]
    assert code == 0 and not v["chen1_applies"] and not v["chen2_applies"]


def test_invariant_violation_exit_code(capsys, monkeypatch):
    import reebcert.cli as cli

    def broken(path):
        raise cli.InvariantViolation("boom")

    monkeypatch.setattr(cli, "diagram_payload", broken)
    assert run(capsys, ["diagram", "examples/l3_1.diagram"])[0] == EXIT_INVARIANT


def test_determinism(capsys):
    outs = {run(capsys, ["survey", "12", "--format", "machine"])[1] for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run(
        [sys.executable, "-m", "reebcert", "cfrac", "5", "3", "--format", "machine"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["cfrac"] == [-2, -3]
    res = subprocess.run(
        [sys.executable, "-m", "reebcert", "cfrac", "4", "2"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == EXIT_INPUT
