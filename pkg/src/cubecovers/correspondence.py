"""The dictionary between digraphs and characteristic matrices.

Small covers over an n-cube, up to Davis-Januszkiewicz equivalence, are
classified by their reduced characteristic matrix: a square GF(2) matrix
all of whose principal minors equal 1.  Those matrices in turn correspond
to labeled acyclic digraphs: send a digraph G to the transpose of its
adjacency matrix plus the identity,

    G  |->  A(G)^t + I   (over GF(2)).

The map is defined for every digraph, and it lands on a matrix with all
unit principal minors exactly when G is acyclic.  Orientability translates
too: the cover is orientable exactly when every column sum of the matrix is
odd, equivalently when every vertex of G has even out-degree.

This module holds the map, its inverse, and the brute-force counters that
anchor the closed formulas in :mod:`cubecovers.counting`.  The counters
stream over the canonical code range and never materialize a graph list, so
a count over ``[0, 2^(n(n-1)))`` can be split into disjoint subranges and
the partial sums added back in any order.
"""

from __future__ import annotations

import concurrent.futures
from collections.abc import Iterator
from typing import NamedTuple

from cubecovers.digraph import DEFAULT_ENUMERATION_CAP, Digraph, EnumerationCapExceeded
from cubecovers.gf2 import BitMatrix


__all__ = [
    "DagCounts",
    "brute_counts",
    "brute_count_dags",
    "brute_count_orientable_dags",
    "brute_count_characteristic_matrices",
    "brute_count_orientable_characteristic_matrices",
    "characteristic_matrix",
    "digraph_from_characteristic",
    "unit_diagonal_matrices",
]

# The matrix-side counters run the subset-minor oracle on 2^(n(n-1))
# candidates; n = 4 (4096 candidates, 15 minors each) is the practical edge.
MATRIX_BRUTEFORCE_CAP = 4


class DagCounts(NamedTuple):
    """Result of one brute-force pass: all acyclic, and acyclic with every
    out-degree even (the orientable ones)."""

    dags: int
    orientable: int


# ----------------------------------------------------------------------
# the correspondence itself
# ----------------------------------------------------------------------


def characteristic_matrix(graph: Digraph) -> BitMatrix:
    """Transpose of the adjacency matrix plus the identity, over GF(2).

    Total on digraphs (no acyclicity requirement): testing the equivalences
    on the full graph space is deliberate.  The adjacency diagonal is zero,
    so adding the identity just sets the diagonal to 1.
    """
    transposed = graph.adjacency_matrix().transpose()
    return BitMatrix(
        graph.n, tuple(mask | (1 << i) for i, mask in enumerate(transposed.rows))
    )


def digraph_from_characteristic(matrix: BitMatrix) -> Digraph:
    """Invert :func:`characteristic_matrix`.

    Requires every diagonal entry to be 1 (subtracting the identity must
    leave a loop-free adjacency matrix).  The result is acyclic exactly when
    the input has all unit principal minors.
    """
    for i, mask in enumerate(matrix.rows):
        if not (mask >> i) & 1:
            raise ValueError(
                f"diagonal entry ({i}, {i}) is 0; not a characteristic matrix"
            )
    stripped = BitMatrix(
        matrix.n, tuple(mask ^ (1 << i) for i, mask in enumerate(matrix.rows))
    )
    return Digraph(matrix.n, stripped.transpose().rows)


# ----------------------------------------------------------------------
# brute-force counting over digraphs
# ----------------------------------------------------------------------


def _row_decode_tables(n: int) -> list[list[int]]:
    # table[u][chunk] = adjacency mask of row u for an (n-1)-bit code chunk,
    # i.e. the chunk with a zero bit spliced in at the diagonal position.
    width = n - 1
    tables = []
    for u in range(n):
        low_mask = (1 << u) - 1
        tables.append(
            [
                (chunk & low_mask) | ((chunk >> u) << (u + 1))
                for chunk in range(1 << width)
            ]
        )
    return tables


def _count_code_range(n: int, start: int, stop: int) -> DagCounts:
    """Count acyclic and acyclic-with-even-out-degrees graphs in a code range.

    Pure function of its arguments, so disjoint ranges can run in separate
    processes and the totals added in any order.
    """
    tables = _row_decode_tables(n)
    width = n - 1
    chunk_mask = (1 << width) - 1 if n else 0
    full = (1 << n) - 1
    shifts = [u * width for u in range(n)]
    vertices = range(n)
    dags = 0
    orientable = 0
    for code in range(start, stop):
        rows = [tables[u][(code >> shifts[u]) & chunk_mask] for u in vertices]
        alive = full
        while alive:
            removable = 0
            scan = alive
            while scan:
                bit = scan & -scan
                if not rows[bit.bit_length() - 1] & alive:
                    removable |= bit
                scan ^= bit
            if not removable:
                break
            alive ^= removable
        if not alive:
            dags += 1
            for mask in rows:
                if mask.bit_count() & 1:
                    break
            else:
                orientable += 1
    return DagCounts(dags, orientable)


def brute_counts(
    n: int,
    start: int = 0,
    stop: int | None = None,
    jobs: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> DagCounts:
    """Brute-force counts over the code range ``[start, stop)``.

    ``stop`` defaults to the full range ``2^(n(n-1))``.  With ``jobs > 1``
    the range is split into equal slices handled by worker processes; the
    result is the same for any job count or partition, because each slice is
    a pure function of its bounds.  Falls back to in-process execution when
    worker processes cannot be spawned.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > cap:
        raise EnumerationCapExceeded(n, cap)
    total = 1 << (n * (n - 1))
    if stop is None:
        stop = total
    if not (0 <= start <= stop <= total):
        raise ValueError(f"bad code range [{start}, {stop}) for n={n}")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")

    span = stop - start
    jobs = min(jobs, span) or 1
    bounds = [start + span * i // jobs for i in range(jobs + 1)]
    slices = [(bounds[i], bounds[i + 1]) for i in range(jobs)]

    if jobs == 1:
        return _count_code_range(n, start, stop)

    try:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(
                pool.map(_count_code_range, [n] * jobs, *zip(*slices))
            )
    except (OSError, concurrent.futures.BrokenExecutor):
        # Sandboxed environments without process support; same totals either way.
        partials = [_count_code_range(n, lo, hi) for lo, hi in slices]

    return DagCounts(
        sum(p.dags for p in partials), sum(p.orientable for p in partials)
    )


def brute_count_dags(n: int, **kwargs) -> int:
    """Number of acyclic digraphs on ``n`` labeled vertices, by enumeration."""
    return brute_counts(n, **kwargs).dags


def brute_count_orientable_dags(n: int, **kwargs) -> int:
    """Number of acyclic digraphs with all out-degrees even, by enumeration."""
    return brute_counts(n, **kwargs).orientable


# ----------------------------------------------------------------------
# brute-force counting over matrices
# ----------------------------------------------------------------------


def unit_diagonal_matrices(n: int) -> Iterator[BitMatrix]:
    """All ``2^(n(n-1))`` GF(2) matrices with every diagonal entry 1.

    A matrix with a zero diagonal entry fails its 1x1 principal minor, so
    restricting to unit diagonals loses nothing when hunting for matrices
    with all unit principal minors.  Off-diagonal bits run through the same
    row-major code order as the digraph enumeration.
    """
    if n < 0:
        raise ValueError("matrix dimension must be nonnegative")
    for code in range(1 << (n * (n - 1))):
        skeleton = Digraph.from_code(n, code)
        yield BitMatrix(
            n, tuple(mask | (1 << i) for i, mask in enumerate(skeleton.rows))
        )


def brute_count_characteristic_matrices(n: int, cap: int = MATRIX_BRUTEFORCE_CAP) -> int:
    """Count GF(2) matrices with all unit principal minors, by the subset oracle.

    Independent of the digraph route on purpose: this counter never looks at
    a graph, so its agreement with :func:`brute_count_dags` checks the
    correspondence itself.
    """
    if n > cap:
        raise EnumerationCapExceeded(n, cap)
    return sum(1 for m in unit_diagonal_matrices(n) if m.has_unit_principal_minors())


def brute_count_orientable_characteristic_matrices(
    n: int, cap: int = MATRIX_BRUTEFORCE_CAP
) -> int:
    """Count matrices with all unit principal minors and all odd column sums."""
    if n > cap:
        raise EnumerationCapExceeded(n, cap)
    return sum(
        1
        for m in unit_diagonal_matrices(n)
        if m.has_odd_column_sums() and m.has_unit_principal_minors()
    )
