import logging
from pathlib import Path

import pytest
import yaml

from equidim.cli import log_level
from equidim.const import EX_NEGATIVE, EX_OK, EX_USAGE

from .conftest import CLIInvoker, output_json


def test_compute_eqdim(invoke: CLIInvoker) -> None:
    result = invoke(["compute", "--family", "path:8", "--format", "json"])
    assert result.exit_code == EX_OK, result.output
    payload = output_json(result)
    assert payload["eqdim"] == 5
    assert payload["witness_labels"] == [1, 3, 4, 5, 7]
    assert payload["exact"] is True


@pytest.mark.parametrize("parameter,value", [("dim", 2), ("psi", 3)])
def test_compute_other_parameters(
    invoke: CLIInvoker, parameter: str, value: int
) -> None:
    result = invoke(
        ["compute", "--family", "cycle:6", "--parameter", parameter, "--format", "yaml"]
    )
    assert result.exit_code == EX_OK, result.output
    assert yaml.safe_load(result.output)[parameter] == value


def test_compute_reports_interval_when_budget_runs_out(invoke: CLIInvoker) -> None:
    result = invoke(
        ["compute", "--family", "cycle:13", "--budget", "1", "--format", "json"]
    )
    assert result.exit_code == EX_OK, result.output
    payload = output_json(result)
    assert payload["exact"] is False
    assert "eqdim" not in payload
    assert payload["lower"] <= payload["upper"]


def test_compute_reads_graph6_from_stdin(invoke: CLIInvoker) -> None:
    result = invoke(["compute", "--graph6", "-", "--format", "tsv"], input="C~\n")
    assert result.exit_code == EX_OK, result.output
    header, row = result.output.splitlines()
    assert header.split("\t")[:4] == ["graph", "n", "parameter", "value"]
    assert row.split("\t")[3] == "1"


def test_compute_reads_edge_list(invoke: CLIInvoker, project_dir: Path) -> None:
    Path("p4.txt").write_text("4 3\n0 1\n1 2\n2 3\n")
    result = invoke(["compute", "--edges", "p4.txt", "--format", "json"])
    assert result.exit_code == EX_OK, result.output
    assert output_json(result)["eqdim"] == 2


@pytest.mark.parametrize(
    "args",
    [
        ["compute"],
        ["compute", "--family", "path:4", "--graph6", "-"],
        ["compute", "--family", "tree:4"],
        ["compute", "--family", "path:4", "--workers", "0"],
    ],
)
def test_usage_errors(invoke: CLIInvoker, args: list) -> None:
    assert invoke(args).exit_code == EX_USAGE


def test_disconnected_input_is_a_usage_error(
    invoke: CLIInvoker, project_dir: Path
) -> None:
    Path("two.txt").write_text("0 1\n2 3\n")
    assert invoke(["compute", "--edges", "two.txt"]).exit_code == EX_USAGE


def test_verify_accepts_and_rejects(invoke: CLIInvoker) -> None:
    ok = invoke(["verify", "--family", "path:8", "--set", "1,3,5,6,7"])
    assert ok.exit_code == EX_OK
    bad = invoke(
        ["verify", "--family", "path:8", "--set", "1,3,5,7", "--format", "json"]
    )
    assert bad.exit_code == EX_NEGATIVE
    assert output_json(bad)["failing_pair_labels"] == [2, 6]
    complement = invoke(
        ["verify", "--family", "path:8", "--set", "2,4,8", "--complement"]
    )
    assert complement.exit_code == EX_OK


def test_verify_other_kinds(invoke: CLIInvoker) -> None:
    c5 = ["verify", "--family", "cycle:5"]
    resolving = invoke(c5 + ["--set", "1,2", "--kind", "resolving"])
    assert resolving.exit_code == EX_OK
    doubly = invoke(c5 + ["--set", "1,2", "--kind", "doubly"])
    assert doubly.exit_code == EX_NEGATIVE
    single = invoke(c5 + ["--set", "1", "--kind", "doubly"])
    assert single.exit_code == EX_USAGE


def test_verify_rejects_bad_labels(invoke: CLIInvoker) -> None:
    p4 = ["verify", "--family", "path:4"]
    assert invoke(p4 + ["--set", "0,2"]).exit_code == EX_USAGE
    assert invoke(p4 + ["--set", "a"]).exit_code == EX_USAGE


def test_bounds(invoke: CLIInvoker) -> None:
    result = invoke(["bounds", "--family", "star:6", "--format", "json"])
    assert result.exit_code == EX_OK, result.output
    payload = output_json(result)
    assert payload["eqdim"] == 1
    assert payload["best_lower"] == payload["best_upper"] == 1


def test_family(invoke: CLIInvoker) -> None:
    result = invoke(["family", "path:50"])
    assert result.exit_code == EX_OK, result.output
    assert output_json(result)["eqdim"] == 40
    cycle = output_json(invoke(["family", "cycle:11"]))
    assert cycle["kind"] == "interval"
    assert (cycle["lower"], cycle["upper"]) == (5, 9)


@pytest.mark.parametrize("spec", ["johnson:6,2", "complement:cycle:5", "cycle:x"])
def test_family_without_result(invoke: CLIInvoker, spec: str) -> None:
    assert invoke(["family", spec]).exit_code == EX_USAGE


def test_table(invoke: CLIInvoker) -> None:
    result = invoke(["table", "--n-max", "10", "--search-max", "8"])
    assert result.exit_code == EX_OK, result.output
    lines = result.output.splitlines()
    assert lines[0].split("\t")[:3] == ["n", "r_half", "eqdim_path"]
    assert len(lines) == 9


def test_r_table(invoke: CLIInvoker) -> None:
    result = invoke(["r-table", "--n-max", "10", "--format", "json"])
    assert result.exit_code == EX_OK, result.output
    rows = output_json(result)["rows"]
    assert [row["r"] for row in rows] == [1, 2, 2, 3, 4, 4, 4, 4, 5, 5]


def test_queens(invoke: CLIInvoker) -> None:
    result = invoke(["queens", "--n-max", "6", "--format", "json"])
    assert result.exit_code == EX_OK, result.output
    for row in output_json(result)["rows"]:
        assert row["diag"] == row["eqdim_path"]


def test_doubly(invoke: CLIInvoker) -> None:
    result = invoke(["doubly", "--family", "path:6", "--format", "json"])
    assert result.exit_code == EX_OK, result.output
    payload = output_json(result)
    assert payload["size"] <= payload["bound"]
    explicit = invoke(
        [
            "doubly",
            "--family",
            "path:6",
            "--resolving-set",
            "1",
            "--equalizer-set",
            "1,3,5,6",
        ]
    )
    assert explicit.exit_code == EX_OK, explicit.output


def test_doubly_rejects_invalid_inputs(invoke: CLIInvoker) -> None:
    result = invoke(["doubly", "--family", "path:6", "--resolving-set", "3"])
    assert result.exit_code == EX_USAGE


def test_conjecture_commands(invoke: CLIInvoker) -> None:
    trees = invoke(["conjecture", "trees", "--n-max", "7", "--format", "json"])
    assert trees.exit_code == EX_OK, trees.output
    assert output_json(trees)["status"] == "open"
    extremal = invoke(["conjecture", "extremal", "--n-max", "4", "--format", "json"])
    assert extremal.exit_code == EX_OK, extremal.output
    assert output_json(extremal)["status"] == "holds"
    sigma = invoke(["conjecture", "sigma", "--n-max", "6", "--k-max", "2"])
    assert sigma.exit_code == EX_OK, sigma.output


def test_conjecture_on_graph6_stream(invoke: CLIInvoker) -> None:
    result = invoke(
        ["conjecture", "psi", "--graph6", "-", "--format", "json"], input="Bw\nC~\nCr\n"
    )
    assert result.exit_code == EX_OK, result.output
    payload = output_json(result)
    assert payload["checked"] == 3
    assert payload["counterexamples"] == []


def test_conjecture_enumeration_limit(invoke: CLIInvoker) -> None:
    result = invoke(["conjecture", "extremal", "--n-max", "9"])
    assert result.exit_code == EX_USAGE


def test_init_config_and_settings(invoke: CLIInvoker, project_dir: Path) -> None:
    assert invoke(["init-config"]).exit_code == EX_OK
    path = project_dir / "equidim.toml"
    assert path.exists()
    path.write_text(path.read_text().replace('format = "human"', 'format = "json"'))
    result = invoke(["compute", "--family", "path:5"])
    assert output_json(result)["eqdim"] == 3


def test_broken_settings_file(invoke: CLIInvoker, project_dir: Path) -> None:
    Path("equidim.toml").write_text("[equidim]\nbudget = -1\n")
    assert invoke(["compute", "--family", "path:5"]).exit_code == EX_USAGE


@pytest.mark.parametrize(
    "verbosity,level",
    [
        (2, logging.DEBUG),
        (1, logging.DEBUG),
        (0, logging.INFO),
        (-1, logging.WARNING),
        (-2, logging.CRITICAL),
    ],
)
def test_log_level(verbosity: int, level: int) -> None:
    assert log_level(verbosity) == level
