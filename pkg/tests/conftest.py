import os
import sys
from pathlib import Path

import numpy as np
import pytest

from alt_tsc.pipeline import data_dir


def pytest_addoption(parser):
    parser.addoption("--run-long", action="store_true", default=False,
                     help="run presets marked long-running (hours)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-long"):
        return
    skip = pytest.mark.skip(reason="long-running preset; pass --run-long to include")
    for item in items:
        if "long_running" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def data_root() -> Path:
    return data_dir()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def tiny_ts(lines, labels=("a", "b"), length=3, dims=None):
    head = ["@problemName tiny", "@timeStamps false", "@missing false",
            "@equalLength true", f"@seriesLength {length}",
            f"@classLabel true {' '.join(labels)}"]
    if dims is not None:
        head.append(f"@dimensions {dims}")
    return "\n".join(head + ["@data"] + list(lines)) + "\n"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(results, key=lambda t: int(t.split()[-1])):
        terminalreporter.write_line(results[tag])
