"""Square bit matrices over GF(2).

Rows are packed into integer bitmasks (bit ``j`` of ``rows[i]`` is the entry
in row ``i``, column ``j``), so row elimination is a single XOR per row and
the same code path works for any dimension.  Values are immutable: every
operation returns a new matrix or a plain value, which makes them safe to
share between concurrent tasks.

The one domain-specific test here is :meth:`BitMatrix.has_unit_principal_minors`:
a square GF(2) matrix is the reduced characteristic matrix of a small cover
over a cube exactly when every principal minor equals 1.  That method checks
the definition directly (all ``2^n - 1`` index subsets) and is intended as
the slow, trustworthy oracle for small ``n``; large-scale work goes through
the digraph dictionary in :mod:`cubecovers.correspondence`.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass


__all__ = ["BitMatrix"]


@dataclass(frozen=True)
class BitMatrix:
    """An ``n`` by ``n`` matrix over GF(2) with rows stored as bitmasks."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("matrix dimension must be nonnegative")
        if not isinstance(self.rows, tuple):
            object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for mask in self.rows:
            if not 0 <= mask < limit:
                raise ValueError("row mask out of range for dimension")

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> BitMatrix:
        return cls(n, (0,) * n)

    @classmethod
    def from_rows(cls, bits: Iterable[Iterable[int]]) -> BitMatrix:
        """Build a matrix from nested 0/1 entries (row major)."""
        packed = []
        for row in bits:
            mask = 0
            width = 0
            for j, entry in enumerate(row):
                if entry not in (0, 1):
                    raise ValueError(f"entry {entry!r} is not a bit")
                mask |= entry << j
                width += 1
            packed.append((mask, width))
        n = len(packed)
        if any(width != n for _, width in packed):
            raise ValueError("matrix must be square")
        return cls(n, tuple(mask for mask, _ in packed))

    @classmethod
    def from_text(cls, text: str) -> BitMatrix:
        """Parse the fixture format: ``n`` lines of ``n`` characters in {0,1}."""
        lines = [line for line in text.strip().splitlines() if line.strip()]
        return cls.from_rows([[int(ch) for ch in line.strip()] for line in lines])

    def to_text(self) -> str:
        """Render as ``n`` lines of ``n`` characters, bit exact."""
        return "\n".join(
            "".join(str(self.entry(i, j)) for j in range(self.n))
            for i in range(self.n)
        )

    # ------------------------------------------------------------------
    # entry access
    # ------------------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"entry ({i}, {j}) out of range for n={self.n}")
        return (self.rows[i] >> j) & 1

    def to_bits(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple((mask >> j) & 1 for j in range(self.n)) for mask in self.rows
        )

    def transpose(self) -> BitMatrix:
        cols = []
        for j in range(self.n):
            mask = 0
            for i, row in enumerate(self.rows):
                mask |= ((row >> j) & 1) << i
            cols.append(mask)
        return BitMatrix(self.n, tuple(cols))

    # ------------------------------------------------------------------
    # determinants and minors
    # ------------------------------------------------------------------

    def det(self) -> int:
        """Determinant over GF(2) by Gaussian elimination with row pivoting.

        The pivot choice cannot change the result: over GF(2) a determinant
        is 1 exactly when the rows are linearly independent.  The empty
        matrix has determinant 1 (empty product).
        """
        rows = list(self.rows)
        for col in range(self.n):
            pivot = -1
            for i in range(col, self.n):
                if (rows[i] >> col) & 1:
                    pivot = i
                    break
            if pivot < 0:
                return 0
            rows[col], rows[pivot] = rows[pivot], rows[col]
            top = rows[col]
            for i in range(col + 1, self.n):
                if (rows[i] >> col) & 1:
                    rows[i] ^= top
        return 1

    def principal_minor(self, indices: Iterable[int]) -> int:
        """Determinant of the submatrix on the same row and column subset.

        ``indices`` must be a nonempty subset of ``range(n)``; duplicates are
        collapsed (set semantics).
        """
        idx = sorted(set(indices))
        if not idx:
            raise ValueError("principal minor needs a nonempty index subset")
        if idx[0] < 0 or idx[-1] >= self.n:
            raise ValueError(f"indices {idx} out of range for n={self.n}")
        sub = []
        for i in idx:
            mask = 0
            for b, j in enumerate(idx):
                mask |= ((self.rows[i] >> j) & 1) << b
            sub.append(mask)
        return BitMatrix(len(idx), tuple(sub)).det()

    def has_unit_principal_minors(self) -> bool:
        """Whether every principal minor (all nonempty index subsets) is 1.

        Checks the definition directly, so it is exponential in ``n`` and
        meant as an oracle for small matrices.  Subsets are visited in
        increasing bitmask order and the scan stops at the first zero minor,
        so matrices with a zero diagonal entry are rejected quickly by their
        1x1 minors.  The empty matrix passes (empty conjunction).
        """
        for subset in range(1, 1 << self.n):
            idx = [i for i in range(self.n) if (subset >> i) & 1]
            if self.principal_minor(idx) == 0:
                return False
        return True

    # ------------------------------------------------------------------
    # orientability test
    # ------------------------------------------------------------------

    def column_sums(self) -> tuple[int, ...]:
        """Integer (not mod 2) sum of each column."""
        return tuple(mask.bit_count() for mask in self.transpose().rows)

    def has_odd_column_sums(self) -> bool:
        """Whether every column has an odd integer sum.

        Applied to a reduced characteristic matrix this is the
        Nakayama-Nishimura orientability criterion: the identity block of
        the full characteristic matrix contributes columns of sum 1, so only
        the reduced block needs testing.  Sums are taken as integers and the
        parity is read off at the end.
        """
        return all(total % 2 == 1 for total in self.column_sums())

    def __str__(self) -> str:
        return self.to_text()
