"""Shared fixtures: canonical small digraphs and the session-wide
isomorphism-reduced catalog used by the exhaustive sweeps.
"""

import pytest

from nlflow import Digraph
from nlflow.catalog import digraph_catalog


@pytest.fixture(scope="session")
def k3_acyclic() -> Digraph:
    """Complete acyclic digraph on {a, b, c} = {0, 1, 2}; arcs ab, ac, bc."""
    return Digraph(3, ((0, 1), (0, 2), (1, 2)))


@pytest.fixture(scope="session")
def cycle3() -> Digraph:
    """Directed 3-cycle."""
    return Digraph(3, ((0, 1), (1, 2), (2, 0)))


@pytest.fixture(scope="session")
def single_arc() -> Digraph:
    return Digraph(2, ((0, 1),))


@pytest.fixture(scope="session")
def catalog_small():
    """All non-isomorphic digraphs with n <= 3, m <= 6."""
    return digraph_catalog(3, 6)


@pytest.fixture(scope="session")
def catalog_full():
    """All non-isomorphic digraphs with n <= 4, m <= 6 (4388 digraphs)."""
    return digraph_catalog(4, 6)
