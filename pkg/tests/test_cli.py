"""Command line behavior: formats, exit codes, determinism."""
from __future__ import annotations

import json
import subprocess
import sys

import pytest

from treelap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCoeffs:
    def test_single_tree(self, capsys, tmp_path):
        f = tmp_path / "t.txt"
        f.write_text("4 0 1 1 2 2 3\n")
        code, out, _ = run(capsys, "coeffs", str(f))
        assert code == 0
        assert out == "1,6,10,4,0\n"

    def test_engine_flag(self, capsys, tmp_path):
        f = tmp_path / "t.txt"
        f.write_text("5 0 1 1 2 2 3 3 4\n")
        _, a, _ = run(capsys, "coeffs", str(f))
        _, b, _ = run(capsys, "coeffs", str(f), "--engine", "charpoly")
        assert a == b

    def test_multiple_trees_json(self, capsys, tmp_path):
        f = tmp_path / "t.txt"
        f.write_text("2 0 1\n3 0 1 1 2\n")
        code, out, _ = run(capsys, "coeffs", str(f), "--format", "json")
        rows = json.loads(out)
        assert code == 0
        assert rows[0]["coeffs"] == [1, 2, 0]
        assert rows[1]["coeffs"] == [1, 4, 3, 0]

    def test_parse_error_exit_2(self, capsys, tmp_path):
        f = tmp_path / "t.txt"
        f.write_text("3 0 1 9 2\n")
        code, _, err = run(capsys, "coeffs", str(f))
        assert code == 2
        assert "line 1" in err

    def test_empty_input(self, capsys, tmp_path):
        f = tmp_path / "t.txt"
        f.write_text("\n")
        code, _, err = run(capsys, "coeffs", str(f))
        assert code == 2


class TestCompare:
    def test_text_output(self, capsys, tmp_path):
        f = tmp_path / "t.txt"
        f.write_text("4 0 1 1 2 2 3\n4 0 1 0 2 0 3\n")
        code, out, _ = run(capsys, "compare", str(f))
        assert code == 0
        assert out.startswith("Dominates smaller=second")

    def test_needs_exactly_two(self, capsys, tmp_path):
        f = tmp_path / "t.txt"
        f.write_text("2 0 1\n")
        code, _, err = run(capsys, "compare", str(f))
        assert code == 2
        assert "exactly 2" in err


class TestEnumerate:
    def test_line_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "7")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 11
        assert all(line.startswith("7 ") for line in lines)

    def test_trees_parse_back(self, capsys):
        from treelap import canonical_code, parse_trees

        code, out, _ = run(capsys, "enumerate", "--n", "6")
        trees = parse_trees(out)
        assert len({canonical_code(t) for t in trees}) == 6

    def test_limit_exit_2(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "21")
        assert code == 2
        assert "--force" in err


class TestTable:
    def test_default_rows(self, capsys):
        code, out, _ = run(capsys, "table1", "--max-n", "9")
        assert code == 0
        assert out.splitlines() == [
            "n,trees,type1,type2,incomparable,percent",
            "3,1,0,0,0,0.00",
            "4,2,0,0,0,0.00",
            "5,3,0,0,0,0.00",
            "6,6,0,0,0,0.00",
            "7,11,0,0,0,0.00",
            "8,23,7,0,7,2.77",
            "9,47,56,0,56,5.18",
        ]

    def test_jobs_byte_identical(self):
        cmd = [sys.executable, "-m", "treelap.cli", "table1", "--max-n", "10"]
        a = subprocess.run(cmd + ["--jobs", "1"], capture_output=True)
        b = subprocess.run(cmd + ["--jobs", "3"], capture_output=True)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout

    def test_classify_pairs_single_row(self, capsys):
        code, out, _ = run(capsys, "classify-pairs", "--n", "10")
        assert out.splitlines()[1] == "10,106,476,5,481,8.64"


class TestChainAndVerify:
    def test_chain_verify_ok(self, capsys):
        code, out, err = run(capsys, "chain", "--n", "8", "--verify")
        assert code == 0
        assert len(out.strip().splitlines()) == 10  # 9 steps, 10 trees
        assert "9 steps" in err

    def test_chain_json(self, capsys):
        code, out, _ = run(capsys, "chain", "--n", "6", "--format", "json")
        data = json.loads(out)
        assert data["n"] == 6
        assert len(data["trees"]) == data["steps"] + 1

    def test_verify_ok_exit_0(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorem", "delta", "--max-n", "8")
        assert code == 0
        assert "violations=0" in out

    def test_verify_dash_alias(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--theorem", "two-edge-shift", "--max-n", "8"
        )
        assert code == 0


class TestAnalysisCommands:
    def test_extremal_text(self, capsys):
        code, out, _ = run(
            capsys, "extremal", "--n", "8", "--class", "diameter=4", "--mode", "min"
        )
        assert code == 0
        assert "simultaneous" in out

    def test_extremal_bad_class(self, capsys):
        code, _, err = run(capsys, "extremal", "--n", "8", "--class", "girth=3")
        assert code == 2

    def test_closed_form_table(self, capsys):
        code, out, _ = run(capsys, "closed-form", "--n", "9")
        lines = out.splitlines()
        assert lines[0] == "n,k,t1,t2"
        assert lines[1] == "9,0,1,1"
        assert len(lines) == 11

    def test_crossing(self, capsys):
        code, out, _ = run(capsys, "crossing", "--n", "200")
        assert code == 0
        assert "k_star=154" in out

    def test_poset_stats(self, capsys):
        code, out, _ = run(capsys, "poset-stats", "--n", "7", "--format", "csv")
        assert out.splitlines() == [
            "n,trees,distinct,longest_chain,max_antichain",
            "7,11,11,11,1",
        ]


class TestPlumbing:
    def test_output_file(self, capsys, tmp_path):
        dest = tmp_path / "out.csv"
        code, out, _ = run(
            capsys, "table1", "--max-n", "8", "--output", str(dest)
        )
        assert code == 0
        assert out == ""
        assert dest.read_text().endswith("8,23,7,0,7,2.77\n")

    def test_bad_jobs(self, capsys):
        code, _, err = run(capsys, "table1", "--max-n", "8", "--jobs", "0")
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_stdin_dash(self, tmp_path):
        proc = subprocess.run(
            [sys.executable, "-m", "treelap.cli", "coeffs", "-"],
            input=b"4 0 1 1 2 2 3\n",
            capture_output=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == b"1,6,10,4,0\n"
