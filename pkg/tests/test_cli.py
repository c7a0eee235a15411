import csv
import io
import json
import subprocess
import sys

import pytest

from aqsc import cli


@pytest.fixture
def run(capsys, monkeypatch):
    def _run(argv, env_format=None):
        if env_format is None:
            monkeypatch.delenv("AQSC_FORMAT", raising=False)
        else:
            monkeypatch.setenv("AQSC_FORMAT", env_format)
        code = cli.main(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run


def rows_of_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestParams:
    def test_genus5_37(self, run):
        code, out, err = run(["params", "-p", "3", "-q", "7", "-g", "5",
                              "--non-orientable"])
        assert code == 0 and err == ""
        (row,) = rows_of_csv(out)
        assert (row["p"], row["q"], row["n_f"], row["n"], row["k"],
                row["d_z"], row["d_x"]) == ("3", "7", "42", "63", "5", "7", "4")
        assert row["l_pq"] == "1.0905"

    def test_genus9_58(self, run):
        code, out, _ = run(["params", "-p", "5", "-q", "8", "-g", "9",
                            "--non-orientable"])
        assert code == 0
        (row,) = rows_of_csv(out)
        assert (row["n"], row["k"], row["d_z"], row["d_x"]) == ("20", "9", "3", "2")

    def test_inadmissible_exits_2(self, run):
        code, out, err = run(["params", "-p", "4", "-q", "4", "-g", "1",
                              "--orientable"])
        assert code == 2
        assert out == ""
        assert err.startswith("inadmissible:")

    def test_fractional_vertex_count_exits_2(self, run):
        code, _, err = run(["params", "-p", "3", "-q", "10", "-g", "5",
                            "--non-orientable"])
        assert code == 2 and "vertex count" in err

    def test_orientability_required(self, run):
        code, _, _ = run(["params", "-p", "3", "-q", "7", "-g", "5"])
        assert code == 1

    def test_both_orientabilities_rejected(self, run):
        code, _, _ = run(["params", "-p", "3", "-q", "7", "-g", "5",
                          "--orientable", "--non-orientable"])
        assert code == 1

    def test_bad_symbol_exits_1(self, run):
        code, _, _ = run(["params", "-p", "2", "-q", "7", "-g", "5",
                          "--non-orientable"])
        assert code == 1

    def test_json_carries_full_precision(self, run):
        code, out, _ = run(["params", "-p", "3", "-q", "7", "-g", "5",
                            "--non-orientable", "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["columns"][0] == "p"
        (row,) = payload["rows"]
        assert row["l_pq"] == 1.0905496635070873
        assert row["l_pq_display"] == "1.0905"
        assert row["provenance"] == "formula"


class TestEnumerate:
    def test_superset_of_table(self, run):
        code, out, _ = run(["enumerate", "-g", "7", "--non-orientable",
                            "--max", "21"])
        assert code == 0
        pairs = {(r["p"], r["q"]) for r in rows_of_csv(out)}
        assert {("3", "7"), ("3", "21"), ("4", "5"), ("7", "3")} <= pairs

    def test_flat_surface_yields_empty_stream(self, run):
        code, out, err = run(["enumerate", "-g", "1", "--orientable",
                              "--max", "30"])
        assert code == 0 and err == ""
        assert rows_of_csv(out) == []

    def test_min_rate(self, run):
        code, out, _ = run(["enumerate", "-g", "5", "--non-orientable",
                            "--max", "30", "--min-rate", "1/6"])
        assert code == 0
        rows = rows_of_csv(out)
        assert rows and all(
            int(r["k"]) * 6 >= int(r["n"]) for r in rows)

    def test_split_bounds(self, run):
        code, out, _ = run(["enumerate", "-g", "11", "--non-orientable",
                            "--p-max", "6", "--q-max", "12"])
        assert code == 0
        pairs = {(r["p"], r["q"]) for r in rows_of_csv(out)}
        assert ("6", "12") in pairs
        assert all(int(p) <= 6 and int(q) <= 12 for p, q in pairs)


class TestTables:
    @pytest.mark.parametrize("table,n_rows", [("1", 9), ("2", 12), ("3", 14),
                                              ("4", 15)])
    def test_row_counts(self, run, table, n_rows):
        code, out, _ = run(["tables", table])
        assert code == 0
        assert len(rows_of_csv(out)) == n_rows

    def test_table2_known_rows(self, run):
        code, out, _ = run(["tables", "2"])
        rows = {(r["p"], r["q"]): r for r in rows_of_csv(out)}
        assert rows[("4", "14")]["n_f"] == "7"
        assert rows[("4", "14")]["n"] == "14"
        assert rows[("3", "21")]["d_z"] == "5"   # corrected ceiling
        assert rows[("3", "7")]["n"] == "105"

    def test_families_table(self, run):
        for name in ("5", "families"):
            code, out, _ = run(["tables", name])
            assert code == 0
            rows = rows_of_csv(out)
            assert len(rows) == 7
            assert {"p", "q", "n_f", "n", "k"} <= set(rows[0])
            assert any(r["n"] == "21(g-2)" for r in rows)

    def test_correction_noted_in_json(self, run):
        code, out, _ = run(["tables", "2", "--format", "json"])
        rows = json.loads(out)["rows"]
        (fixed,) = [r for r in rows if r["p"] == 3 and r["q"] == 21]
        assert fixed["d_z"] == 5
        assert "printed d_z=4" in fixed["note"]

    def test_bracket_typo_noted_in_json(self, run):
        code, out, _ = run(["tables", "3", "--format", "json"])
        rows = json.loads(out)["rows"]
        (noted,) = [r for r in rows if r["p"] == 3 and r["q"] == 27]
        assert "bracket" in noted["note"]

    def test_unknown_table_exits_1(self, run):
        assert run(["tables", "9"])[0] == 1


class TestFigures:
    def test_rate_series(self, run):
        code, out, _ = run(["figures", "5"])
        assert code == 0
        rows = rows_of_csv(out)
        assert len(rows) == 14 * 7
        from fractions import Fraction
        for r in rows:
            g = int(r["genus"])
            assert g % 2 == 1
            r1 = Fraction(r["rate_orientable"])
            r2 = Fraction(r["rate_non_orientable"])
            assert r2 > r1
            assert Fraction(r["ratio"]) == Fraction(g - 2, g - 1)

    def test_rate_series_alias(self, run):
        assert run(["figures", "rates"])[1] == run(["figures", "5"])[1]

    def test_asymmetry_series_default(self, run):
        code, out, _ = run(["figures", "6"])
        rows = rows_of_csv(out)
        assert [r["genus"] for r in rows] == [str(g) for g in range(5, 32, 2)]
        by_genus = {r["genus"]: r for r in rows}
        assert (by_genus["5"]["d_z"], by_genus["5"]["d_x"]) == ("7", "4")
        assert by_genus["11"]["gap"] == "5"

    def test_asymmetry_custom_symbol_and_genera(self, run):
        code, out, _ = run(["figures", "asymmetry", "-p", "3", "-q", "8",
                            "--genera", "3", "4", "5"])
        assert code == 0
        rows = rows_of_csv(out)
        assert [r["genus"] for r in rows] == ["3", "4", "5"]

    def test_unknown_figure_exits_1(self, run):
        assert run(["figures", "7"])[0] == 1


class TestVerify:
    def test_small_suite_passes(self, run):
        code, out, _ = run(["verify", "all", "--h-max", "3", "--pq-max", "9",
                            "--toric-max", "3", "--format", "csv"])
        assert code == 0
        rows = rows_of_csv(out)
        assert rows and all(r["ok"] == "True" for r in rows)

    def test_json_default_format(self, run):
        code, out, _ = run(["verify", "tables"])
        assert code == 0
        json.loads(out)

    def test_failure_count_in_exit_code(self, run, monkeypatch):
        from aqsc.cli import Check

        def broken():
            return [Check("a", False, ""), Check("b", True, ""),
                    Check("c", False, "")]

        monkeypatch.setattr(cli, "_suite_tables", broken)
        code, out, _ = run(["verify", "tables"])
        assert code == 4  # 2 + number of failures

    def test_suite_selection(self, run):
        code, out, _ = run(["verify", "oracle", "--toric-max", "2",
                            "--format", "csv"])
        assert code == 0
        assert all(r["suite"] == "oracle" for r in rows_of_csv(out))


class TestFormats:
    ARGS = ["params", "-p", "3", "-q", "7", "-g", "5", "--non-orientable"]

    def test_markdown_structure(self, run):
        code, out, _ = run(self.ARGS + ["--format", "markdown"])
        lines = out.strip().splitlines()
        assert lines[0].startswith("| p |")
        assert set(lines[1]) <= {"|", "-", " ", ":"}
        assert " 63 " in lines[2]

    def test_formats_agree_on_values(self, run):
        _, out_csv, _ = run(self.ARGS)
        _, out_json, _ = run(self.ARGS + ["--format", "json"])
        (crow,) = rows_of_csv(out_csv)
        (jrow,) = json.loads(out_json)["rows"]
        for key in ("p", "q", "n_f", "n", "k", "d_z", "d_x"):
            assert crow[key] == str(jrow[key])
        assert crow["l_pq"] == jrow["l_pq_display"]

    def test_env_format(self, run):
        code, out, _ = run(self.ARGS, env_format="markdown")
        assert code == 0 and out.startswith("|")

    def test_flag_overrides_env(self, run):
        code, out, _ = run(self.ARGS + ["--format", "csv"], env_format="json")
        assert code == 0 and out.startswith("p,")

    def test_invalid_env_format_exits_1(self, run):
        code, _, _ = run(self.ARGS, env_format="yaml")
        assert code == 1

    def test_byte_identical_reruns(self, run):
        first = run(["tables", "3", "--format", "json"])
        second = run(["tables", "3", "--format", "json"])
        assert first == second


class TestEntryPoints:
    def test_console_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "aqsc", "params", "-p", "3", "-q", "7",
             "-g", "5", "--non-orientable"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "63" in proc.stdout

    def test_usage_error_exits_1(self):
        proc = subprocess.run([sys.executable, "-m", "aqsc", "bogus"],
                              capture_output=True, text=True)
        assert proc.returncode == 1

    def test_no_command_exits_1(self, run):
        assert run([])[0] == 1
