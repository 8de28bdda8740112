"""Exact geometric entanglement of code states.

The headline quantity is j(C): the smallest j such that the coordinates
split into A with full punctured dimension k and B with punctured
dimension k - j.  The injective norm of the code state is then
2^(-(k - j)/2), the geometric entanglement k - j.  The default path
computes j in polynomial time by intersecting the column matroid of the
generator with its dual; exponential brute-force oracles live behind
explicit size guards.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import NamedTuple

from .codes import LinearCode, contains, is_subcode, shorten
from .gf2 import BitMatrix, column_submatrix, rank
from .matroid import DualMatroid, LinearColumnMatroid, matroid_intersection

BRUTE_FORCE_MAX_N = 20


def _column_rank_table(g: BitMatrix) -> list[int]:
    """GF(2) rank of every column subset, indexed by bitmask.

    Incremental: the reduced column basis of mask \\ {lowest element} is
    extended by one column, so the whole table costs O(2^n * k) words.
    """
    n = g.cols
    cols = [sum(((g.data[i] >> j) & 1) << i for i in range(g.rows)) for j in range(n)]
    ranks = [0] * (1 << n)
    bases: list[tuple[int, ...]] = [()] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        prev = mask ^ low
        basis = bases[prev]
        v = cols[low.bit_length() - 1]
        for b in basis:
            v = min(v, v ^ b)
        if v:
            bases[mask] = tuple(sorted(basis + (v,), reverse=True))
            ranks[mask] = ranks[prev] + 1
        else:
            bases[mask] = basis
            ranks[mask] = ranks[prev]
    return ranks


def _guard(c: LinearCode, what: str) -> None:
    if c.length > BRUTE_FORCE_MAX_N:
        raise ValueError(
            f"{what} is exponential and limited to n <= {BRUTE_FORCE_MAX_N}, "
            f"got n = {c.length}"
        )


class JWitness(NamedTuple):
    j: int
    partition: tuple[int, ...]  # A with rank(G_A) = k and rank(G_complement) = k - j
    cover: tuple[int, ...]  # minimizing S of rk1(S) + rk2(~S)


def j_of_code(c: LinearCode) -> JWitness:
    """j(C) via matroid intersection of the column matroid with its dual.

    The max common independent set I has size k - j; its complement A is
    a witness partition (it contains a column basis, and rank(G_I) = |I|).
    Both rank conditions are re-checked at runtime.
    """
    k = c.dimension
    m1 = LinearColumnMatroid(c.generator)
    m2 = DualMatroid(m1)
    result = matroid_intersection(m1, m2)
    j = k - result.size
    common = set(result.common_set)
    partition = tuple(i for i in range(c.length) if i not in common)
    if rank(column_submatrix(c.generator, partition)) != k:
        raise AssertionError("witness partition lost full rank")
    if rank(column_submatrix(c.generator, result.common_set)) != k - j:
        raise AssertionError("witness complement rank is not k - j")
    return JWitness(j, partition, result.cover)


def j_brute_force(c: LinearCode) -> int:
    """Oracle: minimize k - rank(G_B) over all A with rank(G_A) = k."""
    _guard(c, "j_brute_force")
    k = c.dimension
    table = _column_rank_table(c.generator)
    full = (1 << c.length) - 1
    return min(
        k - table[full & ~mask] for mask in range(1 << c.length) if table[mask] == k
    )


def delta_brute_force(c: LinearCode) -> tuple[int, tuple[int, ...]]:
    """Oracle: maximize 2 dim(shortened on A) - |A| over all supports A.

    Ties go to the smallest support, then lexicographically smallest.
    """
    _guard(c, "delta_brute_force")
    k = c.dimension
    table = _column_rank_table(c.generator)
    full = (1 << c.length) - 1
    best_value = None
    best_mask = 0
    for mask in range(1 << c.length):
        value = 2 * (k - table[full & ~mask]) - mask.bit_count()
        if best_value is None or value > best_value:
            best_value, best_mask = value, mask
        elif value == best_value and mask != best_mask:
            if (mask.bit_count(), _mask_tuple(mask)) < (
                best_mask.bit_count(),
                _mask_tuple(best_mask),
            ):
                best_mask = mask
    assert best_value is not None
    return best_value, _mask_tuple(best_mask)


def _mask_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def witness_shortened_code(c: LinearCode) -> tuple[tuple[int, ...], LinearCode]:
    """A shortened code of dimension k0 and length 2 k0 - j.

    The support is the complement of the minimizing cover S: with
    rk1(S) = k - k0, the min-max equality forces |~S| = 2 k0 - j.
    """
    k = c.dimension
    witness = j_of_code(c)
    cover = set(witness.cover)
    support = tuple(i for i in range(c.length) if i not in cover)
    c0 = shorten(c, support)
    k0 = c0.dimension
    if k0 != k - rank(column_submatrix(c.generator, witness.cover)):
        raise AssertionError("shortened dimension disagrees with cover rank")
    if len(support) != 2 * k0 - witness.j:
        raise AssertionError("shortened support is not of length 2 k0 - j")
    return support, c0


@dataclass(frozen=True)
class EntanglementReport:
    """Everything the closed form yields for one code state."""

    k: int
    j: int
    delta: int
    injective_norm: float
    geometric_entanglement: float
    groverian: float
    witness_partition: tuple[int, ...]
    witness_shortened_support: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "j": self.j,
            "delta": self.delta,
            "injective_norm": float(f"{self.injective_norm:.12g}"),
            "geometric_entanglement": float(f"{self.geometric_entanglement:.12g}"),
            "groverian": float(f"{self.groverian:.12g}"),
            "witness_partition": sorted(self.witness_partition),
            "witness_shortened_support": sorted(self.witness_shortened_support),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=False)


def analyze(c: LinearCode, with_oracles: bool = False) -> EntanglementReport:
    """Full report for |C>; optionally cross-check j against both oracles."""
    k = c.dimension
    witness = j_of_code(c)
    j = witness.j
    if with_oracles:
        _guard(c, "analyze with oracles")
        jb = j_brute_force(c)
        db, _ = delta_brute_force(c)
        if not (j == jb == db):
            raise AssertionError(
                f"main equality violated: matroid j={j}, brute j={jb}, delta={db}"
            )
    support, _ = witness_shortened_code(c)
    norm = 2.0 ** (-(k - j) / 2.0)
    return EntanglementReport(
        k=k,
        j=j,
        delta=j,  # equal by the matching-bounds theorem; oracle-checked above
        injective_norm=norm,
        geometric_entanglement=float(k - j),
        groverian=math.sqrt(2.0 * (1.0 - norm)),
        witness_partition=witness.partition,
        witness_shortened_support=support,
    )


def css_basis_report(c1: LinearCode, c2: LinearCode, with_oracles: bool = False) -> EntanglementReport:
    """Common report for every basis state of CSS(C1, C2).

    All basis states are coset states of C2, and coset shifts are local
    unitaries, so the whole basis shares the injective norm of |C2>.
    """
    if c2.length != c1.length:
        raise ValueError(f"length mismatch: C2 has {c2.length}, C1 has {c1.length}")
    if not is_subcode(c2, c1):
        for row, text in zip(c2.generator.data, c2.generator.to_strings()):
            if not contains(c1, row):
                raise ValueError(
                    f"C2 is not a subcode of C1: generator row {text} is not in C1"
                )
        raise ValueError("C2 is not a subcode of C1")
    return analyze(c2, with_oracles=with_oracles)
