from huim.cli import main
from conftest import write_sample_files

SAMPLE_LINES = "a c #UTIL: 510\nb c #UTIL: 660\na c f #UTIL: 600\n"


def run_mine(tmp_path, *extra, command="mine", out_name="out.txt"):
    tx_path, ut_path = write_sample_files(tmp_path)
    out = tmp_path / out_name
    code = main(
        [
            command,
            "--input", str(tx_path),
            "--utility-table", str(ut_path),
            "--precision", "0",
            "--output", str(out),
            *extra,
        ]
    )
    return code, out


class TestMineCommand:
    def test_worked_sample_golden(self, tmp_path):
        code, out = run_mine(tmp_path, "--min-util", "500")
        assert code == 0
        assert out.read_text() == SAMPLE_LINES

    def test_default_precision_renders_decimals(self, tmp_path):
        tx_path, ut_path = write_sample_files(tmp_path)
        out = tmp_path / "out.txt"
        code = main(
            ["mine", "--input", str(tx_path), "--utility-table", str(ut_path),
             "--min-util", "500", "--output", str(out)]
        )
        assert code == 0
        # integer inputs scale by 10^2 under the default precision
        assert out.read_text().splitlines()[0] == "a c #UTIL: 510.00"

    def test_threshold_above_total_gives_empty_file(self, tmp_path):
        code, out = run_mine(tmp_path, "--min-util", "100000")
        assert code == 0
        assert out.read_text() == ""

    def test_percentage_threshold(self, tmp_path):
        # 1510 * 33% = 498.3 -> same three itemsets as 500
        code, out = run_mine(tmp_path, "--min-util-pct", "33")
        assert code == 0
        assert out.read_text() == SAMPLE_LINES

    def test_order_flag_does_not_change_bytes(self, tmp_path):
        _, out_support = run_mine(tmp_path, "--min-util", "500", "--order", "support")
        support_bytes = out_support.read_bytes()
        _, out_twu = run_mine(tmp_path, "--min-util", "500", "--order", "twu", out_name="o2.txt")
        assert support_bytes == out_twu.read_bytes()

    def test_stdout_when_no_output_flag(self, tmp_path, capsys):
        tx_path, ut_path = write_sample_files(tmp_path)
        code = main(
            ["mine", "--input", str(tx_path), "--utility-table", str(ut_path),
             "--precision", "0", "--min-util", "500"]
        )
        assert code == 0
        assert capsys.readouterr().out == SAMPLE_LINES


class TestExitCodes:
    def test_both_threshold_flags_conflict(self, tmp_path):
        code, _ = run_mine(tmp_path, "--min-util", "500", "--min-util-pct", "5")
        assert code == 4

    def test_missing_threshold_flag(self, tmp_path):
        code, _ = run_mine(tmp_path)
        assert code == 4

    def test_parse_error_is_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("a:x\n", encoding="utf-8")
        ut = tmp_path / "u.txt"
        ut.write_text("a\t1\n", encoding="utf-8")
        code = main(
            ["mine", "--input", str(bad), "--utility-table", str(ut), "--min-util", "1"]
        )
        assert code == 2
        assert "bad.txt:1:" in capsys.readouterr().err

    def test_missing_file_is_exit_2(self, tmp_path):
        ut = tmp_path / "u.txt"
        ut.write_text("a\t1\n", encoding="utf-8")
        code = main(
            ["mine", "--input", str(tmp_path / "nope.txt"), "--utility-table", str(ut),
             "--min-util", "1"]
        )
        assert code == 2

    def test_oracle_enumeration_bound_is_exit_5(self, tmp_path):
        tx = tmp_path / "t.txt"
        ut = tmp_path / "u.txt"
        names = [f"i{k}" for k in range(25)]
        tx.write_text("".join(f"{n}:1\n" for n in names), encoding="utf-8")
        ut.write_text("".join(f"{n}\t1\n" for n in names), encoding="utf-8")
        code = main(
            ["oracle", "--input", str(tx), "--utility-table", str(ut),
             "--precision", "0", "--min-util", "1"]
        )
        assert code == 5


class TestReferenceCommands:
    def test_oracle_and_baseline_match_mine(self, tmp_path):
        _, mined = run_mine(tmp_path, "--min-util", "500")
        _, oracled = run_mine(tmp_path, "--min-util", "500", command="oracle", out_name="o.txt")
        _, based = run_mine(tmp_path, "--min-util", "500", command="baseline", out_name="b.txt")
        assert mined.read_bytes() == oracled.read_bytes() == based.read_bytes()


class TestStatsCommand:
    def test_csv_row(self, tmp_path):
        code, out = run_mine(tmp_path, "--min-util", "500", command="stats", out_name="s.csv")
        assert code == 0
        header, row = out.read_text().splitlines()
        assert header.startswith("dataset,threshold,order,")
        fields = row.split(",")
        assert fields[0] == "sample_transactions"
        assert fields[1] == "500"
        assert fields[3] == "12"  # materialized 2+-itemsets on the sample
        assert fields[4] == "3"
        assert float(fields[7]) > 1.0  # reduction ratio


class TestGenCommand:
    def test_deterministic_and_reloadable(self, tmp_path):
        args = ["gen", "--seed", "7", "--items", "40", "--transactions", "100",
                "--avg-len", "5"]
        assert main(args + ["--out-prefix", str(tmp_path / "one")]) == 0
        assert main(args + ["--out-prefix", str(tmp_path / "two")]) == 0
        one_t = (tmp_path / "one_transactions.txt").read_bytes()
        assert one_t == (tmp_path / "two_transactions.txt").read_bytes()
        assert (tmp_path / "one_utilities.txt").read_bytes() == (
            tmp_path / "two_utilities.txt"
        ).read_bytes()
        assert len(one_t.splitlines()) == 100
        # generated files parse back and mine cleanly
        out = tmp_path / "res.txt"
        code = main(
            ["mine", "--input", str(tmp_path / "one_transactions.txt"),
             "--utility-table", str(tmp_path / "one_utilities.txt"),
             "--min-util-pct", "5", "--output", str(out)]
        )
        assert code == 0

    def test_bad_spec_is_exit_2(self, tmp_path):
        code = main(
            ["gen", "--seed", "1", "--items", "3", "--transactions", "5",
             "--avg-len", "9", "--out-prefix", str(tmp_path / "x")]
        )
        assert code == 2
