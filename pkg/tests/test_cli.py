"""End-to-end CLI behavior: outputs, reproducibility, exit codes."""

import json

import pytest

from mcskit.cli import main


@pytest.fixture
def toy_file(tmp_path):
    p = tmp_path / "toy.txt"
    p.write_text("TEGAP\nGAEPR\n", encoding="utf-8")
    return str(p)


@pytest.fixture
def cols_csv(tmp_path):
    p = tmp_path / "cols.csv"
    p.write_text(
        "day,pop.location,software.version\n"
        "2015-12-01,POP-A1,v1.0\n"
        "2015-12-17,POP-B2,build-7\n"
        "2015-12-30,POP-C3,8.4\n",
        encoding="utf-8",
    )
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestMcsCommand:
    def test_single_run_prints_known_solution(self, capsys, toy_file):
        code, out, _ = run(capsys, "mcs", "--input", toy_file, "--seed", "7", "--runs", "1")
        assert code == 0
        assert out.strip() in {"GAP", "EP"}

    def test_multiple_runs_reproducible(self, capsys, toy_file):
        code, first, _ = run(capsys, "mcs", "--input", toy_file, "--seed", "3", "--runs", "5")
        assert code == 0
        code, second, _ = run(capsys, "mcs", "--input", toy_file, "--seed", "3", "--runs", "5")
        assert first == second
        assert set(first.split()) <= {"GAP", "EP"}

    def test_longest_and_constrain(self, capsys, toy_file):
        code, out, _ = run(
            capsys, "mcs", "--input", toy_file, "--runs", "50", "--longest"
        )
        assert code == 0 and out.strip() == "GAP"
        code, out, _ = run(
            capsys, "mcs", "--input", toy_file, "--runs", "3", "--constrain", "GP"
        )
        assert code == 0 and out.split() == ["GAP", "GAP", "GAP"]

    def test_non_common_constraint_is_usage_error(self, capsys, toy_file):
        code, _, err = run(capsys, "mcs", "--input", toy_file, "--constrain", "ZZ")
        assert code == 2
        assert "error" in err

    def test_dedup_flag(self, capsys, tmp_path):
        p = tmp_path / "dup.txt"
        p.write_text("TEGAP\nTEGAP\nGAEPR\n", encoding="utf-8")
        code, out, _ = run(capsys, "mcs", "--input", str(p), "--runs", "2", "--dedup")
        assert code == 0 and set(out.split()) <= {"GAP", "EP"}

    def test_longest_with_constraint(self, capsys, toy_file):
        code, out, _ = run(
            capsys, "mcs", "--input", toy_file, "--runs", "20",
            "--longest", "--constrain", "GP",
        )
        assert code == 0 and out.strip() == "GAP"

    def test_weighted_flag_accepted(self, capsys, toy_file):
        code, out, _ = run(
            capsys, "mcs", "--input", toy_file, "--runs", "3", "--weighted", "--seed", "5"
        )
        assert code == 0 and set(out.split()) <= {"GAP", "EP"}


class TestLcsCommand:
    def test_toy(self, capsys, toy_file):
        code, out, _ = run(capsys, "lcs", "--input", toy_file)
        assert code == 0
        assert out.splitlines() == ["GAP", "length 3"]

    def test_guard_violation_exits_3(self, capsys, tmp_path):
        p = tmp_path / "five.txt"
        p.write_text("a\na\na\na\na\n", encoding="utf-8")
        code, _, err = run(capsys, "lcs", "--input", str(p))
        assert code == 3
        assert "at most" in err


class TestOneMcsCommand:
    def test_toy_and_reverse(self, capsys, toy_file):
        code, out, _ = run(capsys, "one-mcs", "--input", toy_file)
        assert code == 0 and out.strip() in {"GAP", "EP"}
        code, rev, _ = run(capsys, "one-mcs", "--input", toy_file, "--reverse-order")
        assert code == 0 and rev.strip() in {"GAP", "EP"}


class TestEstimateCommand:
    def test_json_shape_and_values(self, capsys, toy_file):
        code, out, _ = run(
            capsys, "estimate", "--input", toy_file, "--runs", "2000", "--seed", "1"
        )
        assert code == 0
        payload = json.loads(out)
        assert set(payload) == {
            "total_runs",
            "counts",
            "probabilities",
            "longest",
            "degenerate",
        }
        assert payload["total_runs"] == 2000
        assert set(payload["counts"]) == {"GAP", "EP"}
        assert payload["longest"] == "GAP"
        assert abs(payload["probabilities"]["GAP"] - 2 / 3) < 0.05
        assert sum(payload["counts"].values()) == 2000

    def test_schema_stable_across_seeds(self, capsys, toy_file):
        keysets = []
        for seed in ("1", "2"):
            _, out, _ = run(capsys, "estimate", "--input", toy_file, "--runs", "50", "--seed", seed)
            keysets.append(set(json.loads(out)))
        assert keysets[0] == keysets[1]

    def test_degenerate_warns(self, capsys, tmp_path):
        p = tmp_path / "disjoint.txt"
        p.write_text("abc\nxyz\n", encoding="utf-8")
        code, out, err = run(capsys, "estimate", "--input", str(p), "--runs", "5")
        assert code == 0
        assert json.loads(out)["degenerate"] is True
        assert "no character" in err


class TestSimulateCommand:
    def test_random_corpus(self, capsys, tmp_path):
        out_dir = tmp_path / "corp"
        code, out, _ = run(
            capsys, "simulate", "random", "--l", "3", "--n", "10",
            "--alphabet", "4", "--seed", "2", "--out", str(out_dir),
        )
        assert code == 0
        lines = (out_dir / "strings.txt").read_text().splitlines()
        assert len(lines) == 3 and all(len(s) == 10 for s in lines)
        meta = json.loads((out_dir / "meta.json").read_text())
        assert meta["kind"] == "random" and meta["seed"] == 2

    def test_planted_corpus(self, capsys, tmp_path):
        out_dir = tmp_path / "corp"
        code, out, _ = run(
            capsys, "simulate", "planted", "--l", "5", "--length", "20",
            "--planted-lengths", "2,3", "--seed", "4", "--out", str(out_dir),
        )
        assert code == 0
        meta = json.loads((out_dir / "meta.json").read_text())
        assert meta["kind"] == "planted"
        assert [len(p) for p in meta["planted"]] == [2, 3]

    def test_oversubscribed_plant_is_usage_error(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "simulate", "planted", "--l", "2", "--length", "4",
            "--planted-lengths", "3,3", "--out", str(tmp_path / "x"),
        )
        assert code == 2 and "error" in err


class TestBenchCommand:
    def test_small_quick_bench_prints_table(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--l-values", "40,80", "--n", "20",
            "--alphabet", "4", "--runs", "3",
        )
        assert "median_s" in out
        assert code in (0, 1)


class TestProfileCommand:
    def test_table_output(self, capsys, cols_csv):
        code, out, _ = run(capsys, "profile", "--csv", cols_csv, "--runs", "100")
        assert code == 0
        assert "2015-12-*" in out
        assert "POP-*" in out

    def test_json_output(self, capsys, cols_csv):
        code, out, _ = run(
            capsys, "profile", "--csv", cols_csv, "--runs", "100", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        by_name = {c["column"]: c for c in payload["columns"]}
        assert by_name["day"]["pattern"] == "2015-12-*"
        assert by_name["pop.location"]["pattern"] == "POP-*"
        assert by_name["software.version"]["pattern"] == "*"
        assert by_name["day"]["n_values"] == 3

    def test_single_column_selection(self, capsys, cols_csv):
        code, out, _ = run(
            capsys, "profile", "--csv", cols_csv, "--column", "day", "--runs", "50"
        )
        assert code == 0
        assert "2015-12-*" in out and "POP" not in out

    def test_unknown_column_is_usage_error(self, capsys, cols_csv):
        code, _, err = run(capsys, "profile", "--csv", cols_csv, "--column", "nope")
        assert code == 2 and "nope" in err

    def test_headerless_empty_csv_rejected(self, capsys, tmp_path):
        p = tmp_path / "empty.csv"
        p.write_text("", encoding="utf-8")
        code, _, _ = run(capsys, "profile", "--csv", str(p))
        assert code == 2


class TestExitCodes:
    def test_missing_file_is_io_error(self, capsys):
        code, _, err = run(capsys, "mcs", "--input", "/nonexistent/file.txt")
        assert code == 4 and "error" in err

    def test_empty_input_file_is_usage_error(self, capsys, tmp_path):
        p = tmp_path / "empty.txt"
        p.write_text("", encoding="utf-8")
        code, _, _ = run(capsys, "mcs", "--input", str(p))
        assert code == 2

    def test_unknown_flag_exits_2(self, toy_file):
        with pytest.raises(SystemExit) as exc:
            main(["mcs", "--input", toy_file, "--frobnicate"])
        assert exc.value.code == 2

    def test_unknown_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["transmogrify"])
        assert exc.value.code == 2

    def test_default_seed_documented_reproducibility(self, capsys, toy_file):
        _, a, _ = run(capsys, "mcs", "--input", toy_file)
        _, b, _ = run(capsys, "mcs", "--input", toy_file)
        assert a == b
