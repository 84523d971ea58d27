"""Front-end behaviour: flags, formats, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

from coprimetric import cli
from coprimetric.qi import EmbeddingSpec, QIReport

CMD = [sys.executable, "-m", "coprimetric.cli"]


def run(*args, **kwargs):
    return subprocess.run(
        CMD + list(args), capture_output=True, text=True, **kwargs
    )


def test_fib_table():
    res = run("fib", "--k", "1", "--from", "-5", "--to", "5")
    assert res.returncode == 0
    assert "-4  -3" in res.stdout


def test_fib_pell_csv():
    res = run("fib", "--k", "2", "--from", "0", "--to", "5", "--format", "csv")
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "k,n,value"
    assert [line.split(",")[2] for line in lines[1:]] == ["0", "1", "2", "5", "12", "29"]


def test_fib_rejects_k_zero():
    res = run("fib", "--k", "0", "--from", "0", "--to", "3")
    assert res.returncode == 2
    assert "error" in res.stderr


def test_fib_rejects_empty_range():
    res = run("fib", "--from", "5", "--to", "1")
    assert res.returncode == 2


def test_q_witness():
    res = run("q", "--tuple", "5,8", "--target", "1", "--format", "json")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["value"] == "5"
    assert payload["witness"] == ["-3", "2"]


def test_q_membership():
    res = run("q", "--tuple", "5,8,13", "--target", "13", "--format", "json")
    payload = json.loads(res.stdout)
    assert payload["value"] == "1"
    assert payload["witness"] == ["0", "0", "1"]


def test_q_non_coprime_tuple_is_usage_error():
    res = run("q", "--tuple", "4,6", "--target", "5")
    assert res.returncode == 2
    assert "gcd" in res.stderr


def test_q_malformed_tuple():
    res = run("q", "--tuple", "4,x", "--target", "5")
    assert res.returncode == 2
    assert "malformed" in res.stderr


def test_dist_examples():
    res = run("dist", "--a", "2,3", "--b", "5,8", "--format", "json")
    payload = json.loads(res.stdout)
    assert payload["max_q"] == "3"
    assert payload["log_value"].startswith("2.28301")

    res = run("dist", "--a", "1", "--b", "1,2", "--format", "json")
    payload = json.loads(res.stdout)
    assert payload["max_q"] == "2"
    assert payload["cross_cardinality"] is True
    assert payload["log_value"].startswith("1.44042")

    res = run("dist", "--a", "2,3", "--b", "2,3", "--format", "json")
    payload = json.loads(res.stdout)
    assert payload["max_q"] == "1"
    assert float(payload["log_value"]) == 0.0


def test_dist_rejects_small_base():
    res = run("dist", "--a", "2,3", "--b", "5,8", "--base", "real:0.9")
    assert res.returncode == 2


def test_verify_qi_csv_passes():
    res = run("verify-qi", "--k", "1", "--ell", "2", "--max-index", "12", "--format", "csv")
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0].startswith("n,m,gap,q_nm,q_mn,max_q,")
    assert len(lines) == 1 + 12 * 13 // 2
    assert all(line.endswith("true") for line in lines[1:])


def test_verify_qi_json_ints_are_strings():
    res = run("verify-qi", "--k", "3", "--ell", "2", "--max-index", "6", "--format", "json")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["all_pass"] is True
    assert payload["config"]["base"] == "metallic:3"
    row = payload["rows"][-1]
    assert isinstance(row["max_q"], str) and row["max_q"].isdigit()
    assert isinstance(row["row_pass"], bool)


def test_verify_qi_experimental_gate():
    res = run("verify-qi", "--k", "2", "--ell", "3", "--max-index", "5")
    assert res.returncode == 2
    res = run("verify-qi", "--k", "2", "--ell", "3", "--max-index", "5", "--experimental")
    assert res.returncode in (0, 1)  # no pass/fail contract, but it runs


def test_verify_qi_threads_output_identical():
    a = run("verify-qi", "--k", "1", "--ell", "3", "--max-index", "8", "--format", "csv")
    b = run(
        "verify-qi", "--k", "1", "--ell", "3", "--max-index", "8",
        "--format", "csv", "--threads", "4",
    )
    assert a.stdout == b.stdout


def test_byte_identical_reruns():
    args = ("axioms", "--samples", "50", "--max-value", "40", "--ell", "2",
            "--seed", "42", "--format", "json")
    first, second = run(*args), run(*args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_axioms_csv_and_exit():
    res = run("axioms", "--samples", "30", "--max-value", "30", "--ell", "3",
              "--seed", "7", "--format", "csv")
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "check,runs,violations"
    assert all(line.endswith(",0") for line in lines[1:])


def test_axioms_zero_samples_trivially_pass():
    res = run("axioms", "--samples", "0", "--seed", "3", "--format", "json")
    assert res.returncode == 0
    assert json.loads(res.stdout)["all_pass"] is True


def test_axioms_entropy_seed_is_echoed():
    res = run("axioms", "--samples", "1", "--seed", "0", "--format", "json")
    assert res.returncode == 0
    assert "seed derived from entropy" in res.stderr
    echoed = int(json.loads(res.stdout)["config"]["seed"])
    assert echoed != 0


def test_output_file(tmp_path):
    target = tmp_path / "rows.csv"
    res = run("verify-qi", "--k", "1", "--ell", "2", "--max-index", "5",
              "--format", "csv", "--output", str(target))
    assert res.returncode == 0
    assert res.stdout == ""
    assert target.read_text().startswith("n,m,gap,")


def test_failing_report_maps_to_exit_one(monkeypatch):
    fake_spec = EmbeddingSpec(k=1, ell=2)
    failing = QIReport(spec=fake_spec, max_index=1, rows=(), all_pass=False)
    monkeypatch.setattr(cli, "qi_scan", lambda *a, **k: failing)
    rc = cli.main(["verify-qi", "--k", "1", "--ell", "2", "--max-index", "1",
                   "--format", "csv", "--output", "/dev/null"])
    assert rc == 1


def test_version_mentions_kernel():
    res = run("--version")
    assert res.returncode == 0
    assert "solver kernel" in res.stdout
