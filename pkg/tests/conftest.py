from importlib import resources

import pytest
from hypothesis import settings

from ontoqual.inventory import parse_inventory
from ontoqual.lsp import default_model

# The seeded bulk loops in test_acceptance carry the volume; keep generated cases light.
settings.register_profile("suite", max_examples=40, deadline=None)
settings.load_profile("suite")

ACCEPTANCE_LINES = []


def bundled_text(name):
    return resources.files("ontoqual.data").joinpath(name).read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def spo():
    return parse_inventory(bundled_text("spo.json"))


@pytest.fixture(scope="session")
def pco12():
    return parse_inventory(bundled_text("processco-v1.2.json"))


@pytest.fixture(scope="session")
def pco13():
    return parse_inventory(bundled_text("processco-v1.3.json"))


@pytest.fixture(scope="session")
def model():
    return default_model()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
