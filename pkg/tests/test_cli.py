import json
import subprocess
import sys

import pytest

from superleib import io
from superleib.catalog import make_family
from superleib.cli import main
from superleib.core import SuperAlgebra


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    paths = {}
    for key, A in {
        "thm21": make_family("Thm21-even", 3, 0),
        "abelian": SuperAlgebra(2, 1),
        "broken": SuperAlgebra.from_names(1, 0, {("x1", "x1"): {"x1": 1}}),
        "L": make_family("L", 4, 3, {"a4": 1, "theta": 2}),
    }.items():
        paths[key] = tmp_path / f"{key}.json"
        io.save_algebra(A, paths[key])
    return paths


def test_nilindex_prints_four(capsys, files):
    assert run(capsys, "nilindex", files["thm21"])[:2] == (0, "4\n")


def test_check_abelian(capsys, files):
    code, out, _ = run(capsys, "check", files["abelian"])
    assert code == 0 and json.loads(out)["violations"] == []


def test_check_violation_exit_one(capsys, files):
    code, out, _ = run(capsys, "check", files["broken"])
    report = json.loads(out)
    assert code == 1 and report["violations"][0]["triple"] == ["x1", "x1", "x1"]


def test_charseq_of_random_M(capsys, tmp_path):
    path = tmp_path / "m4.json"
    assert run(capsys, "family", "--name", "M", "--n", 4, "--seed", 7, "--output", path)[0] == 0
    code, out, _ = run(capsys, "charseq", path)
    data = json.loads(out)
    assert code == 0 and data["char_sequence"] == "(3,1 | 4)"
    assert data["strategy"] == "combined" and data["seed"] == 0 and data["samples"] == 16


def test_charseq_flags(capsys, files):
    code, out, _ = run(capsys, "charseq", files["L"], "--strategy", "seeded-random", "--seed", 5, "--samples", 4)
    data = json.loads(out)
    assert code == 0 and data["strategy"] == "seeded-random" and data["seed"] == 5


def test_series_gradation_annihilator_fingerprint(capsys, files):
    code, out, _ = run(capsys, "series", files["L"])
    assert code == 0 and json.loads(out)["dims"] == [7, 5, 4, 3, 2, 1, 0]
    code, out, _ = run(capsys, "gradation", files["thm21"])
    assert code == 0 and json.loads(out)["layers"] == [1, 1, 1]
    code, out, _ = run(capsys, "annihilator", files["thm21"])
    assert code == 0 and json.loads(out)["dim"] == 2
    code, out, _ = run(capsys, "fingerprint", files["L"])
    assert code == 0 and json.loads(out)["nilindex"] == 7


def test_not_nilpotent_reports(capsys, files):
    assert run(capsys, "nilindex", files["broken"])[0] == 1
    assert run(capsys, "gradation", files["broken"])[0] == 1
    assert run(capsys, "fingerprint", files["broken"])[0] == 1


def test_family_params(capsys):
    code, out, _ = run(capsys, "family", "--name", "L", "--n", 6, "--params", "a4=1/2,theta=z^2", "--conductor", 3)
    data = json.loads(out)
    assert code == 0 and data["conductor"] == 3 and data["metadata"]["params"]["theta"] == "-1 - z"


def test_family_strict_and_bypass(capsys):
    code, out, err = run(capsys, "family", "--name", "H", "--n", 4, "--params", "gamma=1")
    assert code == 1 and "fails the Leibniz superidentity" in err
    assert json.loads(out)["violations"]
    code, out, _ = run(capsys, "family", "--name", "H", "--n", 4, "--params", "gamma=1", "--no-verify")
    assert code == 1 and json.loads(out)["metadata"]["violations"] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["family", "--name", "L", "--n", 4, "--params", "a4=1/0"],
        ["family", "--name", "L", "--n", 4, "--params", "q=1"],
        ["family", "--name", "L", "--n", 4, "--params", "theta=z"],
        ["family", "--name", "L", "--n", 4, "--params", "theta"],
        ["family", "--name", "L", "--n", 4, "--m", 4],
        ["family", "--name", "Leib2m-a", "--n", 2, "--m", 4],
        ["check", "missing.json"],
    ],
)
def test_input_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_usage_errors_exit_two(capsys):
    for argv in (["bogus"], ["check"], ["charseq", "x.json", "--strategy", "all"], []):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2
    capsys.readouterr()


def test_constraints(capsys):
    code, out, _ = run(capsys, "constraints", "--name", "G", "--n", 5)
    assert code == 0 and json.loads(out)["constraints"] == []
    code, out, _ = run(capsys, "constraints", "--name", "H", "--n", 5)
    data = json.loads(out)
    assert code == 1
    assert data["constraints"] == [{"triple": ["x2", "x2", "y1"], "coordinate": "y5", "poly": "-1/2*gamma"}]


def test_corpus_verify(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_n": 3, "mutations": 1, "list_max_n": 3}))
    code, out, _ = run(capsys, "corpus-verify", "--theorem", "Thm3.3", "--config", cfg)
    data = json.loads(out)
    assert code == 0 and data["pass"] and data["control"]["detected"]
    assert data["config"]["mutations"] == 1 and data["seed"] == 0 and "not a proof" in data["limitation"]
    cfg.write_text(json.dumps({"depth": 1}))
    assert run(capsys, "corpus-verify", "--theorem", "Thm3.3", "--config", cfg)[0] == 2
    cfg.write_text("[]")
    assert run(capsys, "corpus-verify", "--theorem", "Thm3.3", "--config", cfg)[0] == 2


def test_reports_are_byte_identical(capsys, files):
    first = run(capsys, "fingerprint", files["L"], "--seed", 3)[1]
    second = run(capsys, "fingerprint", files["L"], "--seed", 3)[1]
    assert first == second


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "superleib", "nilindex", str(files["thm21"])], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "4\n"
