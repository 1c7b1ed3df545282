import json
import subprocess
import sys

import pytest

from artifact.algebra import Polynomial, parse
from artifact.cli import run
from artifact.partitions import MultiPartition


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_residual_example(capsys):
    assert call(capsys, "residual", "--label", "1^2") == (0, "2*Σ*Ψ - 6*Σ^2 + 2*Δ\n", "")


def test_residual_pair_json(capsys):
    code, out, _ = call(capsys, "residual", "--pair", "2^1;1^2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and MultiPartition.parse(data["label"]) == MultiPartition.parse("2^1;1^2")
    assert Polynomial.from_json(data["class"]) == parse("6*Σ*(2*Σ - Ψ)*(5*Σ - 2*Ψ) - 6*Δ*(7*Ψ - 2*N)")


def test_hurwitz_example(capsys):
    assert call(capsys, "hurwitz", "--label", "2^1", "--n", "3")[:2] == (0, "1\n")
    code, out, _ = call(capsys, "hurwitz", "--label", "1^2", "--n", "4..6", "--format", "json")
    data = json.loads(out)
    assert [d["hurwitz"] for d in data] == ["12", "1440", "241920"]
    assert set(data[0]) >= {"label", "class", "degree", "hurwitz"}


def test_strata_latex(capsys):
    code, out, _ = call(capsys, "strata", "--label", "2^1", "--genus0", "--format", "latex")
    assert out == "6(n-1)\\psi-3\\delta_{0,0}\n"


def test_strata_json_round_trip(capsys):
    code, out, _ = call(capsys, "strata", "--label", "2^1;1^2", "--format", "json")
    data = json.loads(out)
    from artifact.strata import sigma_general

    assert Polynomial.from_json(data["class"]) == sigma_general("2^1;1^2")
    assert str(MultiPartition.parse(data["label"])) == data["label"]


def test_degrees_json(capsys):
    code, out, _ = call(capsys, "degrees", "--all", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert data["deg1"] == "25" and data["deg_delta_{0,0}"] == "110"


def test_oracle(capsys):
    assert call(capsys, "oracle", "--label", "2^1;1^2", "--n", "5", "--genus", "0")[:2] == (0, "288\n")
    code, _, err = call(capsys, "oracle", "--label", "2^1", "--n", "9")
    assert code == 2 and "ResourceBound" in err


def test_ring_and_grr(capsys):
    assert call(capsys, "ring", "--reduce", "Π^2")[1] == "-Π*Ψ\n"
    assert call(capsys, "ring", "--push", "Σ^2*Ψ")[1] == "ξ_1*ψ\n"
    assert call(capsys, "ring", "--check", "thm3.3")[0] == 0
    code, out, _ = call(capsys, "grr", "--check", "eq3.6")
    assert code == 0 and "level 4: -1/720" in out and out.rstrip().endswith("PASS (12 items)")


def test_verify_codes(capsys):
    assert call(capsys, "verify", "--check", "strata")[0] == 0
    assert call(capsys, "verify", "--against-oracle", "--max-n", "5")[0] == 0
    assert call(capsys, "verify", "--check", "nope")[0] == 2


def test_empty_report():
    from artifact.verify import Report

    assert Report().to_text() == "PASS (0 items)"


@pytest.mark.parametrize("argv", [["residual"], ["hurwitz", "--label", "2^1", "--n", "5..4"], ["bogus"],
                                  ["residual", "--label", "x"], ["residual", "--label", "2^1;1^2"]])
def test_usage_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "artifact", "strata", "--label", "1^2;1^2", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_cache_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("STRATA_CACHE_DIR", str(tmp_path))
    assert call(capsys, "residual", "--label", "1^3")[0] == 0
    data = json.loads((tmp_path / "residuals.json").read_text(encoding="utf-8"))
    assert data["schema"] == 1 and "1^3" in data["residuals"]
    (tmp_path / "residuals.json").write_text('{"schema": 0}', encoding="utf-8")
    code, out, err = call(capsys, "residual", "--label", "1^2")
    assert code == 0 and "warning" in err
