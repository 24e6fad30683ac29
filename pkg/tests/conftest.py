"""Shared test fixtures.

The fixture generator under tools/ is the single source of truth for every
constructed example, including the F3 structures that exist only in code,
so tests import it directly instead of duplicating the constructors.
"""

import os
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(ROOT, "tools"))

import gen_fixtures as gf  # noqa: E402

from altext.fields import PrimeField, QQ  # noqa: E402

FIXDIR = os.path.join(ROOT, "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXDIR, name)


def fixture_text(name: str) -> str:
    with open(fixture_path(name), encoding="utf-8") as fh:
        return fh.read()


@pytest.fixture(scope="session")
def f5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def f3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def qq():
    return QQ


@pytest.fixture(scope="session")
def gen():
    return gf


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
