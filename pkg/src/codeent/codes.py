"""Binary linear codes: puncture/shorten/dual and the built-in families.

A code is held as a canonical reduced-row-echelon generator matrix, so
structural equality of the dataclass is equality of codes.  Coordinates
are 0-based throughout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import (
    BitMatrix,
    column_submatrix,
    kernel_basis,
    rank,
    reduce_against,
    row_reduce,
)


@dataclass(frozen=True)
class LinearCode:
    """A subspace of F_2^n with its rref generator matrix."""

    length: int
    generator: BitMatrix  # rref, full row rank

    @property
    def dimension(self) -> int:
        return self.generator.rows

    @property
    def rate(self) -> float:
        return self.dimension / self.length if self.length else 0.0

    def codewords(self) -> Iterable[int]:
        """All 2^k codewords as packed integers (Gray-order enumeration)."""
        word = 0
        yield word
        for m in range(1, 1 << self.dimension):
            # Gray code: exactly one generator row toggles per step.
            word ^= self.generator.data[(m & -m).bit_length() - 1]
            yield word


def from_generator(rows: Iterable, length: int | None = None) -> LinearCode:
    """Code spanned by the given rows; dependent rows are dropped."""
    m = BitMatrix.from_rows(rows, cols=length)
    rref, pivots = row_reduce(m)
    return LinearCode(m.cols, BitMatrix(len(pivots), m.cols, rref.data[: len(pivots)]))


def _check_support(c: LinearCode, a: Iterable[int]) -> tuple[int, ...]:
    support = tuple(sorted(set(a)))
    for i in support:
        if not (0 <= i < c.length):
            raise IndexError(f"position {i} out of range for length {c.length}")
    return support


def puncture(c: LinearCode, a: Iterable[int]) -> LinearCode:
    """Image of the code under restriction of coordinates to ``a``."""
    support = _check_support(c, a)
    return from_generator(
        column_submatrix(c.generator, support).to_strings(), length=len(support)
    )


def shorten(c: LinearCode, a: Iterable[int]) -> LinearCode:
    """Codewords vanishing outside ``a``, restricted to ``a``."""
    support = _check_support(c, a)
    outside = [i for i in range(c.length) if i not in set(support)]
    # Row-combination coefficients u with u G restricted outside a = 0.
    coeffs = kernel_basis(column_submatrix(c.generator, outside).transpose())
    rows = []
    for u in coeffs.data:
        word = 0
        for i in range(c.dimension):
            if (u >> i) & 1:
                word ^= c.generator.data[i]
        rows.append(sum(((word >> p) & 1) << t for t, p in enumerate(support)))
    return from_generator(
        BitMatrix(len(rows), len(support), tuple(rows)).to_strings(), length=len(support)
    )


def dual(c: LinearCode) -> LinearCode:
    """The orthogonal code {x : x . c = 0 for all c in C}, dimension n - k."""
    return from_generator(kernel_basis(c.generator).to_strings(), length=c.length)


def contains(c: LinearCode, word: Sequence[int] | int) -> bool:
    """Membership of a word (bit sequence or packed int) in the code."""
    if not isinstance(word, int):
        if len(word) != c.length:
            raise ValueError(f"word length {len(word)} != code length {c.length}")
        word = sum(int(b) << i for i, b in enumerate(word))
    return reduce_against(c.generator, _pivots(c), word) == 0


def _pivots(c: LinearCode) -> tuple[int, ...]:
    # Generator is rref, so pivots are the leading bit of each row.
    return tuple((r & -r).bit_length() - 1 for r in c.generator.data)


def is_subcode(c2: LinearCode, c1: LinearCode) -> bool:
    """True iff every codeword of c2 lies in c1."""
    if c2.length != c1.length:
        raise ValueError(f"length mismatch: {c2.length} != {c1.length}")
    return all(contains(c1, row) for row in c2.generator.data)


@dataclass(frozen=True)
class CosetState:
    """A coset x + C, with x canonicalized so equal cosets compare equal."""

    code: LinearCode
    shift: int

    @classmethod
    def of(cls, code: LinearCode, shift: Sequence[int] | int) -> "CosetState":
        if not isinstance(shift, int):
            if len(shift) != code.length:
                raise ValueError("shift length mismatch")
            shift = sum(int(b) << i for i, b in enumerate(shift))
        return cls(code, reduce_against(code.generator, _pivots(code), shift))


# ---------------------------------------------------------------------------
# Built-in families


def repetition(n: int) -> LinearCode:
    """The [n, 1] repetition code; its state is the n-qubit GHZ state."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return from_generator(["1" * n])


def full(n: int) -> LinearCode:
    """All of F_2^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return from_generator(BitMatrix.identity(n).to_strings())


def zero(n: int) -> LinearCode:
    """The zero code {0...0}; its state is a computational basis state."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return from_generator([], length=n)


def even_weight(n: int) -> LinearCode:
    """The [n, n-1] even-weight (single parity check) code."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = ["".join("1" if j in (i, i + 1) else "0" for j in range(n)) for i in range(n - 1)]
    return from_generator(rows, length=n)


def hamming_7_4() -> LinearCode:
    """The [7, 4] Hamming code."""
    return from_generator(
        [
            "1000110",
            "0100101",
            "0010011",
            "0001111",
        ]
    )


def toric_x_code(L: int) -> LinearCode:
    """Vertex (X-stabilizer) code of the L x L toric code.

    Qubits sit on the 2 L^2 edges of the torus.  Horizontal edge (i, j)
    joins vertices (i, j) and (i, j+1) and gets index i*L + j; vertical
    edge (i, j) joins (i, j) and (i+1, j) and gets index L^2 + i*L + j.
    One generator row per vertex, with 1s on its four incident edges.
    The product of all vertex rows is 0, so the dimension is L^2 - 1.
    Any other edge labeling permutes coordinates and yields an equivalent
    code, so downstream quantities (j, delta, norms) are unaffected.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    rows = []
    for i in range(L):
        for j in range(L):
            word = 0
            word ^= 1 << (i * L + j)  # horizontal edge to the right
            word ^= 1 << (i * L + (j - 1) % L)  # horizontal edge to the left
            word ^= 1 << (L * L + i * L + j)  # vertical edge below
            word ^= 1 << (L * L + ((i - 1) % L) * L + j)  # vertical edge above
            rows.append(word)
    return from_generator(
        BitMatrix(len(rows), 2 * L * L, tuple(rows)).to_strings(), length=2 * L * L
    )


def random_code(n: int, k: int, seed: int) -> LinearCode:
    """A uniformly seeded code of dimension exactly k in F_2^n."""
    if not (0 <= k <= n) or n < 1:
        raise ValueError(f"need 1 <= n and 0 <= k <= n, got n={n} k={k}")
    rng = random.Random(seed)
    while True:
        rows = tuple(rng.getrandbits(n) for _ in range(k))
        m = BitMatrix(k, n, rows)
        if rank(m) == k:
            return from_generator(m.to_strings(), length=n)


FAMILIES = {
    "repetition": repetition,
    "full": full,
    "zero": zero,
    "even_weight": even_weight,
    "hamming_7_4": hamming_7_4,
    "toric": toric_x_code,
    "random": random_code,
}


# ---------------------------------------------------------------------------
# Generator-matrix text format


class GeneratorFormatError(ValueError):
    """Malformed generator-matrix file, with 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_generator_text(text: str) -> LinearCode:
    """Parse the generator-matrix format: '#' comments, one 0/1 row per line."""
    rows: list[str] = []
    width: int | None = None
    width_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for col, ch in enumerate(line, start=1):
            if ch not in "01":
                raise GeneratorFormatError(f"invalid character {ch!r}", lineno, col)
        if width is None:
            width, width_line = len(line), lineno
        elif len(line) != width:
            raise GeneratorFormatError(
                f"row has {len(line)} columns but line {width_line} has {width}",
                lineno,
                len(line) + 1 if len(line) < width else width + 1,
            )
        rows.append(line)
    if width is None:
        raise GeneratorFormatError("no generator rows found", 1)
    return from_generator(rows, length=width)


def format_generator(c: LinearCode, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.extend(c.generator.to_strings())
    if not c.generator.rows:
        # Zero code: keep the length recoverable as a row of a comment.
        lines.append("# zero code of length %d (no generator rows)" % c.length)
        lines.append("0" * c.length)
    return "\n".join(lines) + "\n"


def load_generator_file(path) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_generator_text(fh.read())
