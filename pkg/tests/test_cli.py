"""Command line surface: output formats, exit codes, cache, fixtures."""

import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from torus_super import cli

FIXTURES = Path(__file__).parent.parent / "src" / "torus_super" / "fixtures"


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("TORUS_SUPER_CACHE", str(tmp_path / "cache"))


def run(capsys, *args):
    code = cli.main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_plain(capsys):
    code, out, err = run(capsys, "compute", "2", "3")
    assert code == 0
    assert out == "P(2,3) = 1 + q^4*t^2 + a^2*q^2*t^3\n"


def test_compute_grouped(capsys):
    code, out, _ = run(capsys, "compute", "2", "3", "--grouped")
    assert code == 0
    assert out == "a^0: 1 + q^4*t^2\na^2: q^2*t^3\n"


def test_compute_latex(capsys):
    code, out, _ = run(capsys, "compute", "2", "3", "--latex")
    assert code == 0
    assert out.startswith("\\begin{array}{c|l}")
    assert "\\textbf{a}^{2} & \\textbf{q}^{2} \\textbf{t}^{3}" in out
    assert out.rstrip().endswith("\\end{array}")


def test_compute_json_matches_fixture(capsys):
    code, out, _ = run(capsys, "compute", "3", "4", "--json")
    assert code == 0
    assert out.strip() == (FIXTURES / "3_4.json").read_text().strip()


def test_compute_json_bit_identical_across_runs(capsys):
    first = run(capsys, "compute", "3", "5", "--json")
    second = run(capsys, "compute", "3", "5", "--json")  # now served from cache
    assert first == second


def test_compute_nonpolynomial_exit(capsys):
    code, out, err = run(capsys, "compute", "2", "4")
    assert code == 2
    assert out == ""
    assert "gcd(2,4) = 2" in err


def test_compute_raw_prints_content(capsys):
    code, out, _ = run(capsys, "compute", "2", "3", "--raw")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("content: ")
    assert lines[1].startswith("P(2,3) = ")


def test_compute_raw_json_rejected(capsys):
    with pytest.raises(SystemExit):
        cli.main(["compute", "2", "3", "--raw", "--json"])
    capsys.readouterr()


def test_verify_corpus_passes(capsys):
    code, out, _ = run(capsys, "verify", "corpus")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == len(cli.CORPUS_PAIRS)
    assert all(line.endswith(" ok") for line in lines)


def test_verify_corpus_flags_corruption(tmp_path, capsys):
    bad = tmp_path / "fixtures"
    shutil.copytree(FIXTURES, bad)
    payload = json.loads((bad / "2_3.json").read_text())
    payload["terms"][1][3] = "2"
    (bad / "2_3.json").write_text(json.dumps(payload, separators=(",", ":")))
    code, out, _ = run(capsys, "verify", "corpus", "--fixtures", str(bad))
    assert code == 1
    assert "(2,3) MISMATCH" in out
    assert "fixture=2 computed=1" in out


def test_verify_corpus_missing_fixture(tmp_path, capsys):
    code, _, err = run(capsys, "verify", "corpus", "--fixtures", str(tmp_path / "nowhere"))
    assert code == 3
    assert "missing fixture" in err


def test_verify_oracle_small(capsys):
    code, out, _ = run(capsys, "verify", "oracle", "--max-size", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines
    assert all(line.startswith("ok ") for line in lines)


def test_genfun_json(capsys):
    code, out, _ = run(capsys, "genfun", "2", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 2 and payload["r"] == 1
    assert [0, 0, 0] in payload["denominator"]
    assert [0, 4, 2] in payload["denominator"]


def test_specialize(capsys):
    code, out, _ = run(capsys, "specialize", "2", "3", "--at", "jones")
    assert code == 0
    assert out == "1 + q^4 - q^6\n"
    code, out, _ = run(capsys, "specialize", "2", "3", "--at", "homfly")
    assert out == "1 + q^4 - a^2*q^2\n"
    code, _, err = run(capsys, "specialize", "2", "4", "--at", "homfly")
    assert code == 2


def test_scan_stdout_and_file(tmp_path, capsys):
    code, out, _ = run(capsys, "scan", "--n-max", "3", "--m-max", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,m,gcd,status,a_max,q_max,t_max,term_count,millis"
    assert any(line.startswith("2,4,2,nonpolynomial,") for line in lines)
    target = tmp_path / "report.csv"
    code, out, _ = run(capsys, "scan", "--n-max", "3", "--m-max", "5", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().splitlines()[0] == lines[0]


def test_scan_unwritable_output(tmp_path, capsys):
    code, _, err = run(
        capsys, "scan", "--n-max", "2", "--m-max", "3",
        "--out", str(tmp_path / "no" / "dir" / "report.csv"),
    )
    assert code == 3
    assert "cannot write" in err


def test_cache_round_trip_and_corruption_recovery(tmp_path, capsys):
    cache = tmp_path / "cache"
    first = run(capsys, "compute", "2", "7", "--json")
    entries = list(cache.glob("2_7_*.json"))
    assert len(entries) == 1
    assert run(capsys, "compute", "2", "7", "--json") == first
    entries[0].write_text("{ not json")
    assert run(capsys, "compute", "2", "7", "--json") == first


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "torus_super", "compute", "2", "3"],
        capture_output=True,
        text=True,
        env={"PATH": "", "TORUS_SUPER_CACHE": str(tmp_path / "cache")},
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("P(2,3) = ")
