import json
from pathlib import Path
from typing import Any, Callable, Iterator, List, Optional

import pytest
from click.testing import CliRunner, Result

from equidim import main
from equidim.graph import Graph, build_graph
from equidim.graph.generators import cycle_graph, path_graph


CLIInvoker = Callable[..., Result]


@pytest.fixture
def project_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[Path]:
    monkeypatch.chdir(tmp_path)
    yield tmp_path


@pytest.fixture
def invoke(project_dir: Path) -> CLIInvoker:
    runner = CliRunner()

    def _invoke(args: List[str], input: Optional[str] = None) -> Result:
        # -qq keeps log records off the captured output
        return runner.invoke(
            main, ["-q", "-q", *args], input=input, catch_exceptions=False
        )

    return _invoke


def output_json(result: Result) -> Any:
    return json.loads(result.output)


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner, name="Petersen")


@pytest.fixture
def p8() -> Graph:
    return path_graph(8)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)
