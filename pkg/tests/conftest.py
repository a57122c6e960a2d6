from __future__ import annotations

import pytest

from normalcol.graphs import CubicGraph, catalog


@pytest.fixture
def petersen() -> CubicGraph:
    return catalog("petersen")


@pytest.fixture
def k4() -> CubicGraph:
    return catalog("k4")


@pytest.fixture
def q3() -> CubicGraph:
    return catalog("q3")


@pytest.fixture
def k33() -> CubicGraph:
    return catalog("k33")


def bridged_multigraph() -> CubicGraph:
    """Two doubled-edge triangle blocks joined by a bridge."""
    return CubicGraph(
        6, ((0, 1), (0, 1), (0, 2), (1, 2), (2, 5), (3, 4), (3, 4), (3, 5), (4, 5))
    )


def triple_edge() -> CubicGraph:
    return CubicGraph(2, ((0, 1), (0, 1), (0, 1)))


def domino_multigraph() -> CubicGraph:
    return CubicGraph(4, ((0, 1), (0, 1), (0, 2), (1, 3), (2, 3), (2, 3)))


def bridged_simple_10() -> CubicGraph:
    """Two K4-with-one-stub blocks joined by a single edge (10 vertices)."""
    block = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    edges = list(block)
    edges.extend((u + 5, v + 5) for u, v in block)
    edges.append((4, 9))
    return CubicGraph(10, tuple(edges))


@pytest.fixture
def bridged() -> CubicGraph:
    return bridged_multigraph()
