import json

import pytest
from loguru import logger as _logger

from addspec import __version__
from addspec.cli import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, run


@pytest.fixture(autouse=True)
def drop_log_sinks():
    yield
    # sinks added by run() write to the captured stream of the finished test
    _logger.remove()


@pytest.fixture
def cli(clean_env, capsys):
    def call(*argv):
        code = run(list(argv) + ["--workers", "1"])
        out, err = capsys.readouterr()
        return code, out, err

    return call


def test_rvalue(cli):
    assert cli("rvalue", "--set", "1,2,4")[:2] == (EXIT_OK, "2\n")


def test_spectrum_text(cli):
    code, out, _ = cli("spectrum", "--s", "3", "--N", "4")
    assert code == EXIT_OK
    assert out == "R(3,4) = {1,2,3}; f=1 g=3; exceptions={}\n"


def test_spectrum_csv(cli):
    code, out, _ = cli("spectrum", "--s", "4", "--N", "6", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines() == ["s,N,f,g,attained,exceptions", "4,6,1,6,1;3;4;5;6,2"]


def test_spectrum_json(cli):
    code, out, _ = cli("spectrum", "--s", "4", "--N", "7", "--format", "json")
    record = json.loads(out)
    assert record["kind"] == "spectrum"
    assert record["tool_version"] == __version__
    assert record["result"]["attained"] == [0, 1, 2, 3, 4, 5, 6]


def test_verify_pass(cli):
    code, out, _ = cli("verify", "--statement", "thm4.7", "--s", "4..6")
    assert code == EXIT_OK
    assert out.startswith("thm4.7 [s=4..6]: pass")


def test_verify_fail(cli):
    code, out, _ = cli("verify", "--statement", "n2s", "--s", "4")
    assert code == EXIT_FAILED
    assert "set={2,3,7,8}" in out


def test_verify_errata_is_success(cli):
    code, out, err = cli("verify", "--statement", "prop5.2", "--s", "3..6")
    assert code == EXIT_OK
    assert "errata" in out
    assert "formula errata" in err


def test_conjecture(cli):
    code, out, _ = cli("conjecture", "--s-max", "5")
    assert code == EXIT_OK
    assert out.startswith("conj6.1")


def test_construct(cli):
    code, out, _ = cli("construct", "--spec", "family52:s=5,a=3,x=3")
    assert code == EXIT_OK
    assert out == (
        "family52:s=5,a=3,x=3 -> {2,4,5,6,8}: predicted r=6 actual r=6 (prop5.2)\n"
    )


def test_construct_outside_validated_range(cli):
    _, out, _ = cli("construct", "--spec", "family52:s=5,a=2,x=2")
    assert "predicted r=8 actual r=6" in out
    assert "outside validated range" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--statement", "thm9.9", "--s", "4"),
        ("spectrum", "--s", "3", "--N", "70"),
        ("spectrum", "--s", "5", "--N", "4"),
        ("rvalue", "--set", "1,2,x"),
        ("rvalue", "--set", "1,2", "--format", "csv"),
        ("verify", "--statement", "thm4.7", "--s", "6..4"),
        ("construct", "--spec", "family52:s=5,a=5,x=4"),
        ("rvalue",),
    ],
)
def test_usage_errors(cli, argv):
    assert cli(*argv)[0] == EXIT_USAGE


def test_no_arguments(clean_env, capsys):
    assert run([]) == EXIT_USAGE
    assert "usage" in capsys.readouterr().err


def test_capacity_flag(cli):
    code, out, _ = cli("spectrum", "--s", "1", "--N", "70", "--capacity", "128")
    assert code == EXIT_OK
    assert out.startswith("R(1,70) = {0}")


def test_budget(cli):
    code, _, err = cli("spectrum", "--s", "8", "--N", "30", "--budget", "1000")
    assert code == EXIT_BUDGET
    assert "1000" in err


def test_bad_config(cli, clean_env):
    (clean_env / "addspec.toml").write_text("workers = [\n")
    code, _, err = cli("rvalue", "--set", "1")
    assert code == EXIT_USAGE
    assert "malformed TOML" in err


def test_out_append_and_show(cli, clean_env):
    first, second = clean_env / "a.jsonl", clean_env / "b.jsonl"
    for members in ("1,2,4", "1,2,3"):
        argv = ("rvalue", "--set", members, "--format", "json", "--out", str(first))
        assert cli(*argv, "--append") == (EXIT_OK, "", "")
    assert len(first.read_text().splitlines()) == 2
    second.write_text(first.read_text().splitlines(keepends=True)[1])

    code, text, _ = cli("show", str(first), str(second))
    assert code == EXIT_OK
    assert text.splitlines() == ["2", "3"]
    _, text, _ = cli("show", str(first), str(second), "--keep-duplicates")
    assert text.splitlines() == ["2", "3", "3"]


def test_overwrite_by_default(cli, clean_env):
    out = str(clean_env / "r.txt")
    cli("rvalue", "--set", "1,2,4", "--out", out)
    cli("rvalue", "--set", "1,2,3", "--out", out)
    assert (clean_env / "r.txt").read_text() == "3\n"
