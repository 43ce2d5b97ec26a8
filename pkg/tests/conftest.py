from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from superintegral.groups import build_group  # noqa: E402

_CACHE: dict[str, object] = {}


def group(desc: str):
    if desc not in _CACHE:
        _CACHE[desc] = build_group(desc)
    return _CACHE[desc]


@pytest.fixture
def grp():
    return group


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
