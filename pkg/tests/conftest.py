"""
Shared test configuration.

Fixtures for the five-party tree, its layouts, seeded generators and a
clean configuration/logging state for every test.
"""

import numpy as np
import pytest

from treegate.core.config import reset_config
from treegate.core.logging_system import LoggingManager
from treegate.globals.enums import Numbering
from treegate.network import allocate_layout, five_party_tree, path_tree, star_tree

TREEGATE_VARIABLES = (
    "TREEGATE_DEBUG",
    "TREEGATE_LOG_LEVEL",
    "TREEGATE_LOG_FILE",
    "TREEGATE_THREADS",
    "TREEGATE_RETIRE",
    "TREEGATE_SEED",
)

FIVE_PARTY_SPEC = """\
# five-party two-level tree
root: T
party: S11 parent: T
party: S12 parent: T
party: S21 parent: S11
party: S22 parent: S11
"""


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Drops TREEGATE_* variables and cached configuration around each test."""
    for name in TREEGATE_VARIABLES:
        monkeypatch.delenv(name, raising=False)
    reset_config()
    LoggingManager.reset()
    yield
    reset_config()
    LoggingManager.reset()


@pytest.fixture
def five_party():
    """The five-party two-level tree."""
    return five_party_tree()


@pytest.fixture
def five_party_layout(five_party):
    """Five-party tree with inputs 1, 3, 7, 9, 13."""
    return allocate_layout(five_party, Numbering.FIVE_PARTY)


@pytest.fixture
def star5():
    """Parallel network on five parties."""
    return star_tree(5)


@pytest.fixture
def path5():
    """Linear network on five parties."""
    return path_tree(5)


@pytest.fixture
def rng():
    """Seeded generator so random states and gates are reproducible."""
    return np.random.default_rng(2024)


@pytest.fixture
def five_party_spec():
    """Tree-spec text of the five-party tree."""
    return FIVE_PARTY_SPEC


@pytest.fixture
def tree_file(tmp_path, five_party_spec):
    """Five-party tree spec written to disk."""
    path = tmp_path / "five_party.tree"
    path.write_text(five_party_spec, encoding="utf-8")
    return path
