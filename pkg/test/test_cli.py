"""Tests for the tailprob.py command line."""

import csv
import io
import json
from fractions import Fraction

import pytest

from distribution.sums import central_prob
from exactnum.dyadic import DyadicProb
from test.conftest import run_cli


@pytest.mark.unit
class TestPnCommand:
    """Test the pn subcommand."""

    def test_text_output(self) -> None:
        proc = run_cli("pn", "7")
        assert proc.returncode == 0
        assert "35/64" in proc.stdout
        assert "0.5469" in proc.stdout

    def test_json_record(self) -> None:
        proc = run_cli("pn", "7", "--format", "json")
        assert proc.returncode == 0
        record = json.loads(proc.stdout)
        assert record["n"] == 7
        assert record["k"] == 2
        assert record["p_exact"] == "35/64"
        assert record["side"] == "B"
        assert record["increment"] == "-15/64"
        assert record["bound_class"] == "3..7"

    def test_zero_is_one(self) -> None:
        proc = run_cli("pn", "0", "--format", "json")
        assert proc.returncode == 0
        record = json.loads(proc.stdout)
        assert record["p_exact"] == "1"
        assert record["side"] == "none"

    def test_other_threshold(self) -> None:
        proc = run_cli("pn", "10", "--a", "2", "--format", "json")
        assert proc.returncode == 0
        record = json.loads(proc.stdout)
        assert record["p_exact"] == "501/512"
        assert record["a"] == "2"
        assert record["side"] == "none"

    def test_engines_agree(self) -> None:
        for engine in ("direct", "recursive", "enumerate", "convolve"):
            proc = run_cli("pn", "14", "--engine", engine, "--format", "json")
            assert proc.returncode == 0, proc.stderr
            assert json.loads(proc.stdout)["p_exact"] == "4719/8192"

    def test_enumerate_with_workers(self) -> None:
        proc = run_cli("pn", "16", "--engine", "enumerate", "--workers", "2", "--format", "json")
        assert proc.returncode == 0, proc.stderr
        assert json.loads(proc.stdout)["p_exact"] == "25883/32768"

    def test_csv_has_table_header(self) -> None:
        proc = run_cli("pn", "4", "--format", "csv")
        assert proc.returncode == 0
        assert proc.stdout == "n,k,side,increment,p_exact,p_decimal\n4,2,A,+1/8,7/8,0.8750\n"

    def test_digits(self) -> None:
        proc = run_cli("pn", "7", "--digits", "2", "--format", "json")
        assert json.loads(proc.stdout)["p_decimal"] == "0.55"

    def test_usage_errors(self) -> None:
        for args in (
            ["pn", "-1"],
            ["pn", "7", "--a", "x"],
            ["pn", "7", "--a", "-1"],
            ["pn", "30", "--engine", "enumerate"],
            ["pn", "7", "--a", "2", "--engine", "recursive"],
            ["pn", "7", "--digits", "0"],
            ["pn", "7", "--workers", "0"],
        ):
            proc = run_cli(*args)
            assert proc.returncode == 2, args
            assert "error" in proc.stderr.lower()

    def test_verbose_logs_to_stderr(self) -> None:
        proc = run_cli("pn", "7", "-v")
        assert proc.returncode == 0
        assert "INFO" in proc.stderr
        assert "INFO" not in proc.stdout


@pytest.mark.unit
class TestTableCommand:
    """Test the table subcommand."""

    def test_first_block_csv(self) -> None:
        proc = run_cli("table", "3", "7")
        assert proc.returncode == 0
        assert proc.stdout.splitlines() == [
            "n,k,side,increment,p_exact,p_decimal",
            "3,2,A,+1/4,3/4,0.7500",
            "4,2,A,+1/8,7/8,0.8750",
            "5,2,B,-1/4,5/8,0.6250",
            "6,2,A,+5/32,25/32,0.7812",
            "7,2,B,-15/64,35/64,0.5469",
        ]
        assert "\r" not in proc.stdout

    def test_reproduces_exact_fractions(self) -> None:
        proc = run_cli("table", "3", "23", "--format", "csv")
        assert proc.returncode == 0
        rows = {int(r["n"]): r for r in csv.DictReader(io.StringIO(proc.stdout))}
        assert sorted(rows) == list(range(3, 24))
        assert rows[8]["p_exact"] == "91/128"
        assert rows[9]["p_exact"] == "105/128"
        assert rows[10]["p_exact"] == "21/32"
        assert rows[14]["p_exact"] == "4719/8192"
        assert rows[16]["p_exact"] == "25883/32768"
        assert rows[23]["p_exact"] == "156009/262144"
        for n, row in rows.items():
            assert DyadicProb.parse(row["p_exact"]) == central_prob(n)
            k = int(row["k"])
            offset = n - k * k
            assert row["side"] == ("A" if offset == -1 or offset % 2 == 0 else "B")

    def test_json_stream(self) -> None:
        proc = run_cli("table", "8", "14", "--format", "json")
        assert proc.returncode == 0
        records = json.loads(proc.stdout)
        assert [r["n"] for r in records] == list(range(8, 15))
        assert all(r["bound_class"] == "8..14" for r in records)

    def test_initial_values(self) -> None:
        proc = run_cli("table", "0", "2", "--format", "json")
        records = json.loads(proc.stdout)
        assert [r["p_exact"] for r in records] == ["1", "1", "1/2"]
        assert all(r["side"] == "none" for r in records)

    def test_single_row(self) -> None:
        proc = run_cli("table", "5", "5")
        assert proc.returncode == 0
        assert len(proc.stdout.splitlines()) == 2

    def test_engines_give_same_table(self) -> None:
        direct = run_cli("table", "0", "40").stdout
        for engine in ("recursive", "convolve"):
            proc = run_cli("table", "0", "40", "--engine", engine)
            assert proc.returncode == 0, proc.stderr
            assert proc.stdout == direct

    def test_bad_range(self) -> None:
        assert run_cli("table", "5", "3").returncode == 2
        assert run_cli("table", "-1", "3").returncode == 2


@pytest.mark.unit
class TestEnvelopesCommand:
    """Test the envelopes subcommand."""

    def test_rows(self) -> None:
        proc = run_cli("envelopes", "--max-k", "6", "--digits", "10")
        assert proc.returncode == 0
        rows = list(csv.DictReader(io.StringIO(proc.stdout)))
        assert [int(r["k"]) for r in rows] == [2, 3, 4, 5, 6]
        assert (rows[0]["q_minus"], rows[0]["q_plus"]) == ("35/64", "7/8")
        assert (rows[1]["q_minus"], rows[1]["q_plus"]) == ("4719/8192", "105/128")
        gaps_minus = [Fraction(r["gap_minus"]) for r in rows]
        gaps_plus = [Fraction(r["gap_plus"]) for r in rows]
        assert all(g > 0 for g in gaps_minus + gaps_plus)
        assert gaps_minus == sorted(gaps_minus, reverse=True)
        assert gaps_plus == sorted(gaps_plus, reverse=True)

    def test_bad_max_k(self) -> None:
        assert run_cli("envelopes", "--max-k", "1").returncode == 2


@pytest.mark.unit
class TestDeltasCommand:
    """Test the deltas subcommand."""

    def test_block_two(self) -> None:
        proc = run_cli("deltas", "2", "--format", "json")
        assert proc.returncode == 0
        records = json.loads(proc.stdout)
        assert [(r["i"], r["delta"]) for r in records] == [(0, "-1/8"), (1, "-5/64")]

    def test_text(self) -> None:
        proc = run_cli("deltas", "3")
        assert proc.returncode == 0
        assert len(proc.stdout.splitlines()) == 3
        assert "-7/128" in proc.stdout

    def test_bad_block(self) -> None:
        assert run_cli("deltas", "1").returncode == 2


@pytest.mark.unit
class TestCompareCommand:
    """Test the compare subcommand."""

    def test_one_sigma(self) -> None:
        proc = run_cli("compare", "7", "--format", "json")
        assert proc.returncode == 0
        record = json.loads(proc.stdout)
        assert record["exact"] == "35/64"
        assert record["chebyshev"] == "0"
        assert record["chebyshev_vacuous"] is True
        assert record["normal"] == "0.6826894921"
        assert record["exact_minus_normal"] == "-0.1358144921"

    def test_two_sigma(self) -> None:
        proc = run_cli("compare", "100", "--a", "2", "--format", "json")
        assert proc.returncode == 0
        record = json.loads(proc.stdout)
        assert record["chebyshev"] == "3/4"
        assert record["chebyshev_vacuous"] is False
        assert Fraction(record["exact"]) >= Fraction(3, 4)
        assert record["normal"] == "0.9544997361"

    def test_text(self) -> None:
        proc = run_cli("compare", "4")
        assert proc.returncode == 0
        assert "7/8" in proc.stdout
        assert "vacuous" in proc.stdout

    def test_bad_threshold(self) -> None:
        assert run_cli("compare", "5", "--a", "0").returncode == 2
        assert run_cli("compare", "0").returncode == 2


@pytest.mark.unit
class TestVerifyCommand:
    """Test the verify subcommand."""

    def test_small_run_passes(self) -> None:
        proc = run_cli("verify", "--max-n", "20", "--max-k", "2")
        assert proc.returncode == 0, proc.stdout
        report = json.loads(proc.stdout)
        assert list(report) == ["config", "checks", "flags"]
        assert report["config"] == {"max_n": 20, "max_k": 2}
        assert all(c["pass"] for c in report["checks"])
        by_name = {c["name"]: c for c in report["checks"]}
        assert by_name["enumerate-oracle"]["range"] == "1..20"
        assert by_name["enumerate-oracle"]["checked"] == 20

    def test_flags(self) -> None:
        proc = run_cli("verify", "--max-n", "20", "--max-k", "2")
        flags = {f["name"]: f for f in json.loads(proc.stdout)["flags"]}
        assert flags["upper-bound-n15-misprint"]["printed"] == "25833/32768"
        assert flags["upper-bound-n15-misprint"]["computed"] == "25883/32768"
        assert flags["limit-notation"]["computed"] == "0.6826894921"

    def test_text_report(self) -> None:
        proc = run_cli("verify", "--max-n", "20", "--max-k", "3", "--format", "text")
        assert proc.returncode == 0
        assert proc.stdout.startswith("Verification: SUCCESS")
        assert "FLAG upper-bound-n15-misprint" in proc.stdout

    def test_usage_errors(self) -> None:
        assert run_cli("verify", "--max-n", "1").returncode == 2
        assert run_cli("verify", "--max-k", "1").returncode == 2
        assert run_cli("verify", "--format", "csv").returncode == 2


@pytest.mark.unit
class TestParser:
    """Test argument parsing."""

    def test_help(self) -> None:
        proc = run_cli("--help")
        assert proc.returncode == 0
        for command in ("pn", "table", "envelopes", "deltas", "verify", "compare"):
            assert command in proc.stdout

    def test_missing_command(self) -> None:
        proc = run_cli()
        assert proc.returncode == 2

    def test_invalid_choice(self) -> None:
        proc = run_cli("pn", "7", "--engine", "montecarlo")
        assert proc.returncode == 2
        assert "invalid choice" in proc.stderr.lower()


@pytest.mark.integration
class TestShippedVerification:
    """The verification suite on its default configuration."""

    def test_default_verify_passes(self) -> None:
        proc = run_cli("verify", timeout=1800)
        assert proc.returncode == 0, proc.stdout
        report = json.loads(proc.stdout)
        assert report["config"] == {"max_n": 2000, "max_k": 100}
        assert all(c["pass"] for c in report["checks"])
