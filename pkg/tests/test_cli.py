import subprocess
import sys

import pytest

from mcdm.cli import main
from mcdm.repro import fixture_csv_path

SURVEY = "group,item,rating\ng1,q1,4\ng1,q1,5\ng2,q1,3\ng1,q2,2\ng2,q2,5\n"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rank_table(capsys):
    code, out, err = run_cli(
        capsys, "rank", "--input", str(fixture_csv_path()), "--weights", "std_dev",
        "--format", "table",
    )
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "Alternative\tSi-\tSi+\tci\trank"
    assert len(lines) == 10  # 9 alternatives


def test_rank_svg(capsys):
    code, out, _ = run_cli(
        capsys, "rank", "--input", str(fixture_csv_path()), "--format", "svg"
    )
    assert code == 0
    assert out.startswith("<?xml")


def test_rank_manual_all_zero(capsys):
    code, out, err = run_cli(
        capsys, "rank", "--input", str(fixture_csv_path()), "--weights", "manual:0,0",
    )
    assert code == 1
    assert out == ""
    assert err == "error: all weights zero\n"


def test_missing_input(capsys):
    code, _, err = run_cli(capsys, "rank", "--input", "/nonexistent.csv")
    assert code == 1
    assert err.startswith("error: ")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["rank", "--format", "bogus"])
    assert e.value.code == 2


def test_unknown_subcommand_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_weights_json(capsys):
    code, out, _ = run_cli(
        capsys, "weights", "--input", str(fixture_csv_path()), "--weights", "entropy",
        "--format", "json",
    )
    assert code == 0
    assert out.startswith('{"method":"entropy"')


def test_aggregate(capsys, tmp_path):
    survey = tmp_path / "survey.csv"
    survey.write_text(SURVEY)
    code, out, _ = run_cli(capsys, "aggregate", "--input", str(survey))
    assert code == 0
    assert out.splitlines()[0] == ",q1,q2"
    assert out.splitlines()[2].startswith("g1,4.5,")


def test_aggregate_stddev_insufficient(capsys, tmp_path):
    survey = tmp_path / "survey.csv"
    survey.write_text("group,item,rating\ng1,q1,4\n")
    code, _, err = run_cli(capsys, "aggregate", "--input", str(survey),
                           "--statistic", "stddev")
    assert code == 1
    assert err.startswith("error: ")


def test_repro_table(capsys):
    code, out, _ = run_cli(capsys, "repro")
    assert code == 0
    assert "internal consistency" in out
    assert "best config" in out


def _run_process(*argv):
    return subprocess.run(
        [sys.executable, "-m", "mcdm.cli", *argv],
        capture_output=True,
        check=False,
    )


@pytest.mark.parametrize(
    "argv",
    [
        ("rank", "--input", str(fixture_csv_path()), "--weights", "std_dev"),
        ("rank", "--input", str(fixture_csv_path()), "--format", "json"),
        ("sensitivity", "--input", str(fixture_csv_path()), "--weights", "equal",
         "--step", "0.05", "--max-delta", "0.1"),
        ("repro",),
        ("repro", "--format", "json"),
    ],
)
def test_byte_stable_across_runs(argv):
    first = _run_process(*argv)
    second = _run_process(*argv)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout  # non-empty
