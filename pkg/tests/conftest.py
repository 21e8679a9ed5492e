import random

import pytest
from hypothesis import settings

from stratumforge.figures import fixture_text
from stratumforge.flat_core import parse_origami

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(scope="session")
def figure():
    cache = {}

    def load(name):
        if name not in cache:
            cache[name] = parse_origami(fixture_text(f"{name}.origami"))
        return cache[name]
    return load


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
