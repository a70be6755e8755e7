"""Labeled simple digraphs and their exhaustive enumeration.

A digraph on vertices ``0 .. n-1`` is stored as a tuple of adjacency
bitmasks: bit ``j`` of ``rows[u]`` means there is an edge from ``u`` to
``j``.  Graphs are simple (no loops, set semantics on edges) and immutable.

Every graph has a canonical integer code: the ``n*(n-1)`` off-diagonal
adjacency bits read in row-major order.  Enumeration walks that integer
range in order, which makes streams deterministic, resumable, and trivially
partitionable into disjoint code ranges for parallel counting.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from cubecovers.gf2 import BitMatrix

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "Digraph",
    "EnumerationCapExceeded",
    "enumerate_acyclic",
    "enumerate_digraphs",
    "is_acyclic_dfs",
]

# 2^(n(n-1)) graphs: n=5 is about a million, n=6 about a billion (minutes to
# hours of CPU), n=7 is out of reach.  Callers may raise the cap explicitly.
DEFAULT_ENUMERATION_CAP = 6


class EnumerationCapExceeded(ValueError):
    """Raised when an exhaustive walk over all digraphs would be infeasible."""

    def __init__(self, n: int, cap: int):
        super().__init__(
            f"refusing to enumerate digraphs on {n} vertices "
            f"(2^{n * (n - 1)} graphs); the cap is {cap}, "
            f"raise it explicitly if you really mean it"
        )
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class Digraph:
    """A simple digraph on ``n`` labeled vertices, adjacency as bitmasks."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if not isinstance(self.rows, tuple):
            object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        limit = 1 << self.n
        for u, mask in enumerate(self.rows):
            if not 0 <= mask < limit:
                raise ValueError("adjacency mask out of range for vertex count")
            if (mask >> u) & 1:
                raise ValueError(f"loop at vertex {u}: graphs here are simple")

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Digraph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}: graphs here are simple")
            masks[u] |= 1 << v
        return cls(n, tuple(masks))

    @classmethod
    def from_code(cls, n: int, code: int) -> Digraph:
        """Decode the canonical integer encoding (inverse of :meth:`code`)."""
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        width = n - 1
        if not 0 <= code < (1 << (n * width if n else 0)):
            raise ValueError(f"code {code} out of range for n={n}")
        chunk_mask = (1 << width) - 1 if n else 0
        masks = []
        for u in range(n):
            chunk = (code >> (u * width)) & chunk_mask
            low = chunk & ((1 << u) - 1)
            high = (chunk >> u) << (u + 1)
            masks.append(low | high)
        return cls(n, tuple(masks))

    def code(self) -> int:
        """Canonical encoding: off-diagonal bits, row major, as one integer."""
        width = self.n - 1
        code = 0
        for u, mask in enumerate(self.rows):
            chunk = (mask & ((1 << u) - 1)) | ((mask >> (u + 1)) << u)
            code |= chunk << (u * width)
        return code

    @classmethod
    def from_text(cls, text: str) -> Digraph:
        """Parse the fixture format: first line ``n``, then one ``u v`` per edge."""
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if not lines:
            raise ValueError("empty digraph fixture")
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"malformed edge line {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
        return cls.from_edges(n, edges)

    def to_text(self) -> str:
        """Render the fixture format, edges in lexicographic order."""
        lines = [str(self.n)]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    # ------------------------------------------------------------------
    # structure
    # ------------------------------------------------------------------

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(self.n)
            if (self.rows[u] >> v) & 1
        ]

    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def out_degree(self, v: int) -> int:
        """Number of edges leaving ``v`` (the row sum of the adjacency matrix)."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return self.rows[v].bit_count()

    def in_degree(self, v: int) -> int:
        """Number of edges entering ``v`` (the column sum of the adjacency matrix)."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return sum((mask >> v) & 1 for mask in self.rows)

    def all_out_degrees_even(self) -> bool:
        return all(mask.bit_count() % 2 == 0 for mask in self.rows)

    def adjacency_matrix(self) -> BitMatrix:
        """The vertex adjacency matrix: entry (u, v) is 1 iff the edge u -> v exists."""
        return BitMatrix(self.n, self.rows)

    def is_acyclic(self) -> bool:
        """Whether the graph has no directed cycle.

        Peels vertices whose remaining out-degree is zero, a whole layer per
        round, using only bitmask operations.  The graph is acyclic exactly
        when everything peels away.  :func:`is_acyclic_dfs` is the
        independent implementation used to cross-check this one.
        """
        rows = self.rows
        alive = (1 << self.n) - 1
        while alive:
            removable = 0
            scan = alive
            while scan:
                bit = scan & -scan
                if not rows[bit.bit_length() - 1] & alive:
                    removable |= bit
                scan ^= bit
            if not removable:
                return False
            alive ^= removable
        return True


def is_acyclic_dfs(graph: Digraph) -> bool:
    """Cycle detection by iterative three-color depth-first search.

    Deliberately shares no code with :meth:`Digraph.is_acyclic`; the two are
    compared exhaustively in the tests.
    """
    n = graph.n
    successors = [
        [v for v in range(n) if (graph.rows[u] >> v) & 1] for u in range(n)
    ]
    color = [0] * n  # 0 unvisited, 1 on the current path, 2 finished
    for start in range(n):
        if color[start]:
            continue
        color[start] = 1
        stack = [(start, 0)]
        while stack:
            vertex, i = stack[-1]
            if i < len(successors[vertex]):
                stack[-1] = (vertex, i + 1)
                nxt = successors[vertex][i]
                if color[nxt] == 1:
                    return False
                if color[nxt] == 0:
                    color[nxt] = 1
                    stack.append((nxt, 0))
            else:
                color[vertex] = 2
                stack.pop()
    return True


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > cap:
        raise EnumerationCapExceeded(n, cap)


def enumerate_digraphs(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Digraph]:
    """Yield all ``2^(n(n-1))`` simple digraphs on ``n`` labeled vertices.

    Graphs appear exactly once, in increasing order of their canonical code.
    """
    _check_cap(n, cap)
    for code in range(1 << (n * (n - 1))):
        yield Digraph.from_code(n, code)


def enumerate_acyclic(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Digraph]:
    """Yield the acyclic digraphs on ``n`` labeled vertices, in code order."""
    for graph in enumerate_digraphs(n, cap):
        if graph.is_acyclic():
            yield graph
