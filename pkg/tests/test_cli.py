"""End-to-end CLI behavior: exit codes, JSON stability, file round trips."""

import json

import pytest

from codeent.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInfo:
    def test_repetition(self, capsys):
        code, out, _ = run(capsys, "info", "--family", "repetition", "--n", "3")
        assert code == 0
        assert "n = 3" in out and "k = 1" in out and "0.333333" in out

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("110\n011\n")
        code, out, _ = run(capsys, "info", "--file", str(path))
        assert code == 0
        assert "n = 3" in out and "k = 2" in out

    def test_malformed_file_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("110\n01\n")
        code, _, err = run(capsys, "info", "--file", str(path))
        assert code == 2
        assert "line 2" in err

    def test_missing_source_exits_2(self, capsys):
        code, _, err = run(capsys, "info")
        assert code == 2
        assert "family" in err


class TestAnalyze:
    def test_toric_with_oracle(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "--family", "toric", "--L", "2", "--oracle", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["j"] == 0
        assert doc["geometric_entanglement"] == 3.0
        assert doc["injective_norm"] == pytest.approx(2 ** -1.5, abs=1e-9)

    def test_full_code_norm_one(self, capsys):
        code, out, _ = run(capsys, "analyze", "--family", "full", "--n", "4", "--json")
        assert code == 0
        assert json.loads(out)["injective_norm"] == 1.0

    def test_numeric_agrees(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "--family", "repetition", "--n", "3", "--numeric", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["numeric_gap"] <= 1e-6

    def test_oracle_guard_exits_2(self, capsys):
        code, _, err = run(capsys, "analyze", "--family", "zero", "--n", "21", "--oracle")
        assert code == 2
        assert "n <= 20" in err

    def test_json_byte_stable(self, capsys):
        args = ("analyze", "--family", "random", "--n", "8", "--k", "4", "--json", "--seed", "5")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second


class TestCss:
    @pytest.fixture
    def pair(self, tmp_path, capsys):
        c1 = tmp_path / "c1.txt"
        c2 = tmp_path / "c2.txt"
        main(["gen", "--family", "full", "--n", "3", "--out", str(c1)])
        main(["gen", "--family", "repetition", "--n", "3", "--out", str(c2)])
        capsys.readouterr()  # drop the fixture's own output
        return c1, c2

    def test_basis_state_norm(self, capsys, pair):
        c1, c2 = pair
        code, out, _ = run(
            capsys, "css", "--c1", str(c1), "--c2", str(c2), "--enumerate-cosets", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["injective_norm"] == pytest.approx(2 ** -0.5, abs=1e-9)
        assert doc["basis_states"] == 4
        assert doc["cosets_checked"] == 4

    def test_not_subcode_exits_2(self, capsys, pair):
        c1, c2 = pair
        code, _, err = run(capsys, "css", "--c1", str(c2), "--c2", str(c1))
        assert code == 2
        assert "not a subcode" in err
        assert any(ch in err for ch in "01")  # names the violating row

    def test_equal_codes(self, capsys, pair):
        _, c2 = pair
        code, out, _ = run(capsys, "css", "--c1", str(c2), "--c2", str(c2), "--json")
        assert code == 0
        assert json.loads(out)["basis_states"] == 1


class TestGen:
    def test_round_trips_through_file(self, capsys, tmp_path):
        path = tmp_path / "toric.txt"
        code, _, _ = run(capsys, "gen", "--family", "toric", "--L", "2", "--out", str(path))
        assert code == 0
        code, out, _ = run(capsys, "info", "--file", str(path), "--json")
        assert code == 0
        doc = json.loads(out)
        assert (doc["n"], doc["k"]) == (8, 3)


class TestVerify:
    ARGS = ("verify", "--max-n", "4", "--random-codes", "10", "--restarts", "20", "--seed", "1")

    def test_default_passes(self, capsys):
        code, out, _ = run(capsys, *self.ARGS)
        assert code == 0
        assert "FAIL" not in out
        # One line per check, sorted by label.
        labels = [line.split()[0] for line in out.strip().splitlines()]
        assert labels == sorted(labels)

    def test_deterministic_summary(self, capsys):
        _, first, _ = run(capsys, *self.ARGS)
        _, second, _ = run(capsys, *self.ARGS)
        assert first == second

    def test_injected_mutant_exits_3(self, capsys):
        code, out, err = run(capsys, *self.ARGS, "--inject-j-mutant")
        assert code == 3
        assert "FAIL" in out
        assert "generator for reproduction" in err

    def test_report_dir(self, capsys, tmp_path):
        outdir = tmp_path / "report"
        code, out, _ = run(capsys, *self.ARGS, "--report-dir", str(outdir))
        assert code == 0
        assert (outdir / "verify_results.csv").exists()
        assert (outdir / "suite_norms.csv").exists()
        assert (outdir / "norms_compare.png").exists()
        assert (outdir / "entanglement.png").exists()
