"""Shared fixtures.

The 4-vertex pair below is hand-checked: transpose-plus-identity applied to
the graph's adjacency matrix gives exactly the matrix, the graph is acyclic,
and its out-degree vector (1, 3, 0, 1) is not all even, so the matching
cover is not orientable.  Vertex labels are 0-based everywhere in this
package; material drawn with 1-based labels is stored shifted down by one.
"""

import pytest

from cubecovers import BitMatrix, Digraph

SAMPLE_EDGES = [(0, 3), (1, 0), (1, 2), (1, 3), (3, 2)]

SAMPLE_MATRIX_BITS = [
    [1, 1, 0, 0],
    [0, 1, 0, 0],
    [0, 1, 1, 1],
    [1, 1, 0, 1],
]


@pytest.fixture
def sample_graph() -> Digraph:
    return Digraph.from_edges(4, SAMPLE_EDGES)


@pytest.fixture
def sample_matrix() -> BitMatrix:
    return BitMatrix.from_rows(SAMPLE_MATRIX_BITS)
