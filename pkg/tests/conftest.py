import json

import pytest

from balloonlink.cli import main


@pytest.fixture
def run_cli():
    """Invoke the CLI in-process and return its exit code."""

    def run(*args: str) -> int:
        return main(list(args))

    return run


@pytest.fixture
def write_scenario(tmp_path):
    """Write a scenario dict to a temp file and return its path."""

    def write(payload: dict, name: str = "scenario.json"):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path

    return write
