"""Rank-oracle matroids and Edmonds' matroid-intersection algorithm.

Subsets of the ground set are bitmasks internally; the public surface
accepts iterables of indices and returns sorted tuples.  Every matroid
memoizes its rank queries per instance and counts cache misses, which
backs the polynomial oracle-call budget asserted in the tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .gf2 import BitMatrix


def _to_mask(s: Iterable[int], ground_size: int) -> int:
    mask = 0
    for i in s:
        if not (0 <= i < ground_size):
            raise IndexError(f"element {i} out of range for ground set of {ground_size}")
        mask |= 1 << i
    return mask


def _to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class RankOracleMatroid:
    """Base: a ground set plus a memoized rank function on subsets."""

    def __init__(self, ground_size: int):
        if ground_size < 0:
            raise ValueError("negative ground set size")
        self.ground_size = ground_size
        self._rank_cache: dict[int, int] = {0: 0}
        self.oracle_calls = 0  # cache misses, i.e. actual rank evaluations

    def rank_mask(self, mask: int) -> int:
        cached = self._rank_cache.get(mask)
        if cached is None:
            self.oracle_calls += 1
            cached = self._rank_cache[mask] = self._rank(mask)
        return cached

    def rank(self, s: Iterable[int]) -> int:
        return self.rank_mask(_to_mask(s, self.ground_size))

    def is_independent(self, s: Iterable[int]) -> bool:
        mask = _to_mask(s, self.ground_size)
        return self.rank_mask(mask) == mask.bit_count()

    def _rank(self, mask: int) -> int:
        raise NotImplementedError


class LinearColumnMatroid(RankOracleMatroid):
    """Column matroid of a BitMatrix over GF(2)."""

    def __init__(self, matrix: BitMatrix):
        super().__init__(matrix.cols)
        self.matrix = matrix
        # Columns packed as ints: bit i of column j = matrix entry (i, j).
        self._columns = tuple(
            sum(((matrix.data[i] >> j) & 1) << i for i in range(matrix.rows))
            for j in range(matrix.cols)
        )

    def _rank(self, mask: int) -> int:
        basis: list[int] = []
        m = mask
        while m:
            low = m & -m
            m ^= low
            v = self._columns[low.bit_length() - 1]
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
                basis.sort(reverse=True)
        return len(basis)


class DualMatroid(RankOracleMatroid):
    """Dual matroid via rk*(S) = rk(X \\ S) + |S| - rk(X)."""

    def __init__(self, primal: RankOracleMatroid):
        super().__init__(primal.ground_size)
        self.primal = primal
        self._full = (1 << primal.ground_size) - 1

    def _rank(self, mask: int) -> int:
        return (
            self.primal.rank_mask(self._full & ~mask)
            + mask.bit_count()
            - self.primal.rank_mask(self._full)
        )


@dataclass(frozen=True)
class IntersectionResult:
    """Max common independent set plus the min-cover certificate."""

    common_set: tuple[int, ...]
    cover: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.common_set)


def _certify(m1: RankOracleMatroid, m2: RankOracleMatroid, common: int, cover: int) -> None:
    full = (1 << m1.ground_size) - 1
    size = common.bit_count()
    value = m1.rank_mask(cover) + m2.rank_mask(full & ~cover)
    if value != size:
        raise AssertionError(
            f"min-max certificate violated: |I|={size} but rk1(S)+rk2(~S)={value}"
        )


def matroid_intersection(
    m1: RankOracleMatroid, m2: RankOracleMatroid
) -> IntersectionResult:
    """Max common independent set by shortest augmenting paths.

    Exchange graph on the current common independent set I: arcs y -> x
    (y in I, x out) when I - y + x stays independent in m1, arcs x -> y
    when it stays independent in m2; sources are the x with I + x
    independent in m1, sinks those independent in m2.  Augment along a
    shortest source-to-sink path (BFS, ascending-index tie-breaks) until
    none exists, then read the min cover off sink-reachability.
    """
    if m1.ground_size != m2.ground_size:
        raise ValueError("matroids must share a ground set")
    n = m1.ground_size
    full = (1 << n) - 1
    current = 0
    while True:
        in_elems = _to_tuple(current)
        out_elems = _to_tuple(full & ~current)
        sources = [x for x in out_elems if m1.rank_mask(current | (1 << x)) == len(in_elems) + 1]
        sinks = {x for x in out_elems if m2.rank_mask(current | (1 << x)) == len(in_elems) + 1}

        adjacency: dict[int, list[int]] = {v: [] for v in range(n)}
        for y in in_elems:
            swapped_base = current ^ (1 << y)
            for x in out_elems:
                swapped = swapped_base | (1 << x)
                if m1.rank_mask(swapped) == len(in_elems):
                    adjacency[y].append(x)
                if m2.rank_mask(swapped) == len(in_elems):
                    adjacency[x].append(y)

        # BFS from all sources at once; ascending order everywhere keeps
        # the chosen path, and hence every certificate, deterministic.
        parent: dict[int, int | None] = {s: None for s in sorted(sources)}
        queue: deque[int] = deque(sorted(sources))
        endpoint = None
        while queue:
            v = queue.popleft()
            if v in sinks:
                endpoint = v
                break
            for w in sorted(adjacency[v]):
                if w not in parent:
                    parent[w] = v
                    queue.append(w)

        if endpoint is None:
            # No augmenting path: U = vertices that can reach a sink is a
            # minimizing cover (rk1(U) = |I & U|, rk2(~U) = |I \ U|).
            reverse: dict[int, list[int]] = {v: [] for v in range(n)}
            for v, ws in adjacency.items():
                for w in ws:
                    reverse[w].append(v)
            reach = set(sinks)
            stack = list(sinks)
            while stack:
                v = stack.pop()
                for w in reverse[v]:
                    if w not in reach:
                        reach.add(w)
                        stack.append(w)
            cover = _to_mask(reach, n)
            _certify(m1, m2, current, cover)
            return IntersectionResult(_to_tuple(current), _to_tuple(cover))

        path_mask = 0
        v: int | None = endpoint
        while v is not None:
            path_mask |= 1 << v
            v = parent[v]
        current ^= path_mask


def brute_force_intersection(
    m1: RankOracleMatroid, m2: RankOracleMatroid
) -> IntersectionResult:
    """Oracle: exhaustive max common independent set and min cover.

    Asserts both sides of the min-max equality agree before returning.
    Guarded to ground sets of at most 20 elements.
    """
    if m1.ground_size != m2.ground_size:
        raise ValueError("matroids must share a ground set")
    n = m1.ground_size
    if n > 20:
        raise ValueError(f"brute force limited to 20 elements, got {n}")
    full = (1 << n) - 1

    best_common = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best_common.bit_count():
            continue
        if m1.rank_mask(mask) == size and m2.rank_mask(mask) == size:
            best_common = mask

    best_cover = 0
    best_value = m1.rank_mask(0) + m2.rank_mask(full)
    for mask in range(1, 1 << n):
        value = m1.rank_mask(mask) + m2.rank_mask(full & ~mask)
        if value < best_value:
            best_cover, best_value = mask, value

    if best_value != best_common.bit_count():
        raise AssertionError(
            f"Edmonds equality failed: max |I| = {best_common.bit_count()}, "
            f"min cover value = {best_value}"
        )
    return IntersectionResult(_to_tuple(best_common), _to_tuple(best_cover))
