import sys
from pathlib import Path

import pytest

from madfc import _backend, stats, transform

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(params=sorted(_backend.available_backends()))
def backend(request, monkeypatch):
    """Run a test once per importable kernel backend."""
    module = _backend.available_backends()[request.param]
    monkeypatch.setattr(transform, "kernels", module)
    monkeypatch.setattr(stats, "kernels", module)
    return request.param


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
