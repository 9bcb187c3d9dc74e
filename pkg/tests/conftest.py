from pathlib import Path

import pytest

from arglog import ground, parse_program

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def load_fixture(name: str):
    """Parse and ground a program fixture file."""
    return ground(parse_program(fixture_path(name).read_text(encoding="utf-8")))


@pytest.fixture
def two_world():
    return load_fixture("two_world.pl")


@pytest.fixture
def odd_loop_lp():
    return load_fixture("odd_loop_lp.pl")


@pytest.fixture
def duplicate_support():
    return load_fixture("duplicate_support.pl")
