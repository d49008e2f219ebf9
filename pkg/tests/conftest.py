"""
Shared fixtures: the small margin graphs used across the suite
"""
import sys
from pathlib import Path

import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config import configure_logging  # noqa: E402
from margins.graph import from_edges  # noqa: E402

configure_logging("WARNING")

A, B, C, D = 0, 1, 2, 3


@pytest.fixture
def strict_cycle():
    """a->b (3), b->c (2), c->a (1)"""
    return from_edges(3, [(A, B, 3), (B, C, 2), (C, A, 1)])


@pytest.fixture
def equal_cycle():
    return from_edges(3, [(A, B, 1), (B, C, 1), (C, A, 1)])


@pytest.fixture
def condorcet_star():
    """a beats everyone by 3; b, c, d form an equal cycle of 1"""
    return from_edges(4, [(A, B, 3), (A, C, 3), (A, D, 3), (B, C, 1), (C, D, 1), (D, B, 1)])


@pytest.fixture
def branching_graph():
    """a->b (3), c->b (2), a->c (1)"""
    return from_edges(3, [(A, B, 3), (C, B, 2), (A, C, 1)])
