"""Exact linear algebra over GF(2) on dense bit-packed matrices.

Rows are stored as Python integers, one per row, with bit ``j`` holding
column ``j``.  XOR is row addition, ``int.bit_count`` is the row weight,
and arbitrary precision means any column count works (padding bits above
``cols`` are kept at zero so equality and popcount stay honest).

All operations are pure: they never mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BitMatrix:
    """Dense matrix over GF(2), one packed integer per row."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        mask = (1 << self.cols) - 1
        for r in self.data:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits set beyond the column count")

    @classmethod
    def from_rows(cls, rows: Iterable, cols: int | None = None) -> "BitMatrix":
        """Build from row specs: '0101' strings or iterables of 0/1.

        ``cols`` is required for a matrix with zero rows and inferred
        otherwise; all rows must agree on length.
        """
        packed: list[int] = []
        for row in rows:
            bits = [int(b) for b in row]
            if any(b not in (0, 1) for b in bits):
                raise ValueError(f"non-binary entry in row {row!r}")
            if cols is None:
                cols = len(bits)
            elif len(bits) != cols:
                raise ValueError(f"ragged row: expected {cols} bits, got {len(bits)}")
            packed.append(sum(b << j for j, b in enumerate(bits)))
        if cols is None:
            raise ValueError("cols required for an empty row list")
        return cls(len(packed), cols, tuple(packed))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return (self.data[i] >> j) & 1

    def row_bits(self, i: int) -> list[int]:
        return [(self.data[i] >> j) & 1 for j in range(self.cols)]

    def to_strings(self) -> list[str]:
        return ["".join(str(b) for b in self.row_bits(i)) for i in range(self.rows)]

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(self.cols, self.rows, tuple(out))

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        if other.cols != self.cols:
            raise ValueError("column count mismatch")
        return BitMatrix(self.rows + other.rows, self.cols, self.data + other.data)


def row_reduce(m: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Reduced row-echelon form over GF(2) with its pivot columns.

    Pivot choice is deterministic: lowest-index nonzero column, first
    available row.  Zero rows sink to the bottom.
    """
    work = list(m.data)
    pivots: list[int] = []
    pivot_row = 0
    for col in range(m.cols):
        bit = 1 << col
        src = next((i for i in range(pivot_row, m.rows) if work[i] & bit), None)
        if src is None:
            continue
        work[pivot_row], work[src] = work[src], work[pivot_row]
        for i in range(m.rows):
            if i != pivot_row and work[i] & bit:
                work[i] ^= work[pivot_row]
        pivots.append(col)
        pivot_row += 1
    return BitMatrix(m.rows, m.cols, tuple(work)), tuple(pivots)


def rank(m: BitMatrix) -> int:
    """GF(2) row rank."""
    return len(row_reduce(m)[1])


def column_submatrix(m: BitMatrix, cols: Sequence[int]) -> BitMatrix:
    """Restrict to the given columns, in the given order."""
    for c in cols:
        if not (0 <= c < m.cols):
            raise IndexError(f"column index {c} out of range for {m.cols} columns")
    out = []
    for r in m.data:
        out.append(sum(((r >> c) & 1) << t for t, c in enumerate(cols)))
    return BitMatrix(m.rows, len(cols), tuple(out))


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of the right kernel {x : m x^T = 0}, one vector per row.

    Row count is cols - rank(m) by rank-nullity.
    """
    rref, pivots = row_reduce(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = 1 << f
        for r, p in enumerate(pivots):
            if (rref.data[r] >> f) & 1:
                vec |= 1 << p
        basis.append(vec)
    return BitMatrix(len(basis), m.cols, tuple(basis))


def reduce_against(rref: BitMatrix, pivots: Sequence[int], word: int) -> int:
    """Reduce a packed word against an rref basis.

    Returns the residual, which is 0 iff the word lies in the row space;
    in general it is the canonical coset representative (pivot bits clear).
    """
    w = word
    for r, p in enumerate(pivots):
        if (w >> p) & 1:
            w ^= rref.data[r]
    return w


def standard_form(g: BitMatrix) -> tuple[BitMatrix, tuple[int, ...], BitMatrix]:
    """Bring a full-row-rank generator to [I_k | A] by a column permutation.

    Returns ``(transform, perm, result)`` where ``transform`` is invertible
    with ``transform @ g = rref(g)``, and ``result`` is the rref with its
    columns reordered by ``perm`` (``result`` column ``t`` = rref column
    ``perm[t]``; pivots first, then the remaining columns ascending).
    """
    k = g.rows
    # Mirror the elimination on an augmented identity to track the transform.
    aug = BitMatrix(k, g.cols + k, tuple(r | (1 << (g.cols + i)) for i, r in enumerate(g.data)))
    work = list(aug.data)
    pivots: list[int] = []
    pivot_row = 0
    for col in range(g.cols):
        bit = 1 << col
        src = next((i for i in range(pivot_row, k) if work[i] & bit), None)
        if src is None:
            continue
        work[pivot_row], work[src] = work[src], work[pivot_row]
        for i in range(k):
            if i != pivot_row and work[i] & bit:
                work[i] ^= work[pivot_row]
        pivots.append(col)
        pivot_row += 1
    if len(pivots) != k:
        raise ValueError(f"generator not full row rank: rank {len(pivots)} < {k} rows")
    col_mask = (1 << g.cols) - 1
    rref_rows = [r & col_mask for r in work]
    transform = BitMatrix(k, k, tuple(r >> g.cols for r in work))
    perm = tuple(pivots) + tuple(c for c in range(g.cols) if c not in set(pivots))
    result = column_submatrix(BitMatrix(k, g.cols, tuple(rref_rows)), perm)
    return transform, perm, result
