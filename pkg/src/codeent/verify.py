"""Self-verification suite: every closed-form claim against its oracle.

Each check returns a CheckResult; the CLI prints one line per check and
fails with a reproducible generator listing when anything disagrees.
All randomness is derived from a single seed via purpose labels, so a
fixed configuration always produces the identical summary.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from . import codes as code_families
from .codes import LinearCode, format_generator, random_code
from .entanglement import (
    analyze,
    delta_brute_force,
    j_brute_force,
    j_of_code,
    witness_shortened_code,
)
from .gf2 import BitMatrix, column_submatrix
from .gf2 import rank as gf2_rank
from .matroid import (
    DualMatroid,
    LinearColumnMatroid,
    RankOracleMatroid,
    brute_force_intersection,
    matroid_intersection,
)
from .statevec import (
    apply_local_unitaries,
    build_coset_state,
    build_state,
    flattening_op_norm,
    injective_norm_numeric,
    overlap_plus_zero,
    suffix_multiplicity_check,
)


@dataclass(frozen=True)
class CheckResult:
    label: str
    passed: bool
    detail: str


def derived_seed(seed: int, purpose: str) -> int:
    """Stable sub-seed for one purpose; independent of hash randomization."""
    h = 1469598103934665603
    for ch in f"{seed}:{purpose}".encode():
        h = ((h ^ ch) * 1099511628211) & 0xFFFFFFFFFFFFFFFF
    return h & 0x7FFFFFFF


def suite_codes(max_n: int) -> list[tuple[str, LinearCode]]:
    """The structured code suite, capped at length max_n."""
    out: list[tuple[str, LinearCode]] = []
    for n in range(2, max_n + 1):
        out.append((f"repetition({n})", code_families.repetition(n)))
        out.append((f"full({n})", code_families.full(n)))
        out.append((f"even_weight({n})", code_families.even_weight(n)))
        out.append((f"zero({n})", code_families.zero(n)))
    if max_n >= 7:
        out.append(("hamming_7_4", code_families.hamming_7_4()))
    if max_n >= 8:
        out.append(("toric(2)", code_families.toric_x_code(2)))
    return out


def random_suite(count: int, max_n: int, seed: int) -> list[tuple[str, LinearCode]]:
    rng = random.Random(derived_seed(seed, "random-codes"))
    out = []
    for idx in range(count):
        n = rng.randint(1, max_n)
        k = rng.randint(0, n)
        out.append((f"random(n={n},k={k},#{idx})", random_code(n, k, rng.getrandbits(30))))
    return out


def _fail_detail(label: str, c: LinearCode, message: str) -> str:
    return f"{label}: {message}\ngenerator for reproduction:\n{format_generator(c)}"


# ---------------------------------------------------------------------------
# Individual checks


def check_main_equality(
    structured_max_n: int = 14,
    random_codes: int = 200,
    random_max_n: int = 14,
    seed: int = 0,
    j_offset: int = 0,
) -> CheckResult:
    """j(C) from matroid intersection == both brute-force oracles."""
    cases = suite_codes(structured_max_n) + random_suite(random_codes, random_max_n, seed)
    for label, c in cases:
        j = j_of_code(c).j + j_offset
        jb = j_brute_force(c)
        db, _ = delta_brute_force(c)
        if not (j == jb == db):
            return CheckResult(
                "main-equality",
                False,
                _fail_detail(label, c, f"matroid j={j}, brute j={jb}, delta={db}"),
            )
    return CheckResult("main-equality", True, f"{len(cases)} codes, j = delta exactly")


def check_witnesses(max_n: int = 12, seed: int = 0, random_codes: int = 30) -> CheckResult:
    """Witness partition ranks and shortened-code length identities."""
    cases = suite_codes(max_n) + random_suite(random_codes, max_n, seed)
    for label, c in cases:
        try:
            # j_of_code and witness_shortened_code assert their own
            # rank/length identities and raise on violation.
            j_of_code(c)
            witness_shortened_code(c)
        except AssertionError as exc:
            return CheckResult("witnesses", False, _fail_detail(label, c, str(exc)))
    return CheckResult("witnesses", True, f"{len(cases)} codes, witnesses certified")


def check_bound_sandwich(max_n: int = 8) -> CheckResult:
    """max overlap lower bound <= closed form <= min info-set op norm."""
    for label, c in suite_codes(max_n):
        if c.length > 8:
            continue
        report = analyze(c)
        state = build_state(c)
        n, k = c.length, c.dimension
        best_overlap = max(
            overlap_plus_zero(c, _mask_bits(mask)) for mask in range(1 << n)
        )
        info_norms = []
        for mask in range(1 << n):
            bits = _mask_bits(mask)
            if len(bits) == k and gf2_rank(column_submatrix(c.generator, bits)) == k:
                info_norms.append(flattening_op_norm(state, bits))
        best_op = min(info_norms)
        formula = report.injective_norm
        if not (best_overlap <= formula + 1e-9 and formula <= best_op + 1e-9):
            return CheckResult(
                "bound-sandwich",
                False,
                _fail_detail(
                    label, c, f"overlap {best_overlap}, formula {formula}, op {best_op}"
                ),
            )
        if abs(best_op - formula) > 1e-9:
            return CheckResult(
                "bound-sandwich",
                False,
                _fail_detail(label, c, f"info-set op norm {best_op} != formula {formula}"),
            )
    return CheckResult("bound-sandwich", True, "bounds match the closed form")


def _mask_bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def check_numeric_agreement(
    max_n: int = 8, restarts: int = 100, seed: int = 0
) -> tuple[CheckResult, list[dict]]:
    """Alternating-optimization estimate vs the closed form, to 1e-6.

    Also returns one row per code for the report renderer.
    """
    rows: list[dict] = []
    failure: CheckResult | None = None
    for label, c in suite_codes(max_n):
        if c.length > 8:
            continue
        report = analyze(c)
        numeric = injective_norm_numeric(
            build_state(c), restarts=restarts, seed=derived_seed(seed, f"numeric:{label}")
        )
        gap = abs(numeric.value - report.injective_norm)
        rows.append(
            {
                "label": label,
                "n": c.length,
                "k": c.dimension,
                "j": report.j,
                "formula_norm": report.injective_norm,
                "numeric_norm": numeric.value,
                "gap": gap,
                "entanglement": report.geometric_entanglement,
            }
        )
        if gap > 1e-6 and failure is None:
            failure = CheckResult(
                "numeric-agreement",
                False,
                _fail_detail(label, c, f"numeric {numeric.value} vs formula {report.injective_norm}"),
            )
    if failure is not None:
        return failure, rows
    return (
        CheckResult("numeric-agreement", True, f"{len(rows)} codes within 1e-6"),
        rows,
    )


def check_suffix_multiplicity(max_n: int = 16) -> CheckResult:
    for label, c in suite_codes(max_n):
        j, uniform = suffix_multiplicity_check(c)
        expected = j_of_code(c).j
        if not uniform or j != expected:
            return CheckResult(
                "suffix-multiplicity",
                False,
                _fail_detail(label, c, f"uniform={uniform}, counted j={j}, expected {expected}"),
            )
    return CheckResult("suffix-multiplicity", True, "prefix counts uniform, j as computed")


def check_edmonds(pairs: int = 100, max_x: int = 14, seed: int = 0) -> CheckResult:
    """matroid_intersection vs exhaustive enumeration on random pairs."""
    rng = random.Random(derived_seed(seed, "edmonds"))
    for idx in range(pairs):
        n = rng.randint(1, max_x)
        k = rng.randint(0, n)
        rows = tuple(rng.getrandbits(n) for _ in range(k))
        matrix = BitMatrix(k, n, rows)
        m1 = LinearColumnMatroid(matrix)
        m2: RankOracleMatroid = DualMatroid(m1)
        fast = matroid_intersection(m1, m2)
        slow = brute_force_intersection(m1, m2)
        cover_value = m1.rank(fast.cover) + m2.rank(
            tuple(i for i in range(n) if i not in set(fast.cover))
        )
        if fast.size != slow.size or cover_value != fast.size:
            return CheckResult(
                "edmonds-minmax",
                False,
                f"pair #{idx} (n={n}, k={k}): fast {fast.size}, brute {slow.size}, "
                f"cover value {cover_value}",
            )
    return CheckResult("edmonds-minmax", True, f"{pairs} random pairs, equality exact")


def check_matroid_axioms(max_x: int = 10, seed: int = 0) -> CheckResult:
    """Rank and independence axioms, exhaustively, on small matroids."""
    rng = random.Random(derived_seed(seed, "axioms"))
    matrices = [
        BitMatrix.identity(4),
        BitMatrix.from_rows(["110", "011"]),
        code_families.hamming_7_4().generator,
    ]
    for _ in range(4):
        n = rng.randint(1, max_x)
        k = rng.randint(0, n)
        matrices.append(BitMatrix(k, n, tuple(rng.getrandbits(n) for _ in range(k))))
    for matrix in matrices:
        primal = LinearColumnMatroid(matrix)
        for m in (primal, DualMatroid(primal)):
            problem = _axioms_violation(m)
            if problem:
                return CheckResult("matroid-axioms", False, f"{matrix.to_strings()}: {problem}")
        problem = _dual_rank_violation(primal)
        if problem:
            return CheckResult("matroid-axioms", False, f"{matrix.to_strings()}: {problem}")
    return CheckResult("matroid-axioms", True, f"{len(matrices)} matroids, axioms exhaustive")


def _rank_array(m: RankOracleMatroid) -> np.ndarray:
    return np.array([m.rank_mask(mask) for mask in range(1 << m.ground_size)])


def _axioms_violation(m: RankOracleMatroid) -> str | None:
    n = m.ground_size
    ranks = _rank_array(m)
    if ranks[0] != 0:
        return "rank of empty set is nonzero"
    masks = np.arange(1 << n)
    # Unit increase: rank(S) <= rank(S + x) <= rank(S) + 1.
    for x in range(n):
        bit = 1 << x
        grown = ranks[masks | bit]
        if np.any(grown < ranks) or np.any(grown > ranks + 1):
            return f"unit-increase axiom fails at element {x}"
    # Submodularity over all pairs, vectorized on the mask lattice.
    union = ranks[np.bitwise_or.outer(masks, masks)]
    inter = ranks[np.bitwise_and.outer(masks, masks)]
    if np.any(union + inter > ranks[:, None] + ranks[None, :]):
        return "submodularity fails"
    # Exchange axiom on the derived independent sets.
    sizes = np.array([mask.bit_count() for mask in range(1 << n)])
    indep = ranks == sizes
    if not indep[0]:
        return "empty set not independent"
    indep_masks = np.flatnonzero(indep)
    for big in indep_masks:
        sub = int(big)
        while True:  # all submasks are independent (downward closure)
            if not indep[sub]:
                return f"downward closure fails inside {int(big):b}"
            if sub == 0:
                break
            sub = (sub - 1) & int(big)
    # growable[S] = bitmask of x outside S with S + x still independent.
    growable = np.zeros(1 << n, dtype=np.int64)
    masks = np.arange(1 << n)
    for x in range(n):
        bit = 1 << x
        ok = indep[masks | bit] & ((masks & bit) == 0)
        growable[ok] |= bit
    big_sizes = sizes[indep_masks]
    for small in indep_masks:
        strictly_bigger = indep_masks[big_sizes > sizes[small]]
        extras = strictly_bigger & ~small
        if np.any((extras & growable[small]) == 0):
            return f"exchange axiom fails for {int(small):b}"
    # All bases share a cardinality (maximal independents all hit rank(X)).
    top = int(sizes[indep].max())
    if top != ranks[(1 << n) - 1]:
        return "basis cardinality differs from rank of the ground set"
    return None


def _dual_rank_violation(primal: LinearColumnMatroid) -> str | None:
    """Dual-rank formula vs the complement-contains-a-basis definition."""
    n = primal.ground_size
    full = (1 << n) - 1
    total = primal.rank_mask(full)
    dual = DualMatroid(primal)
    dual_indep = [
        primal.rank_mask(full & ~mask) == total for mask in range(1 << n)
    ]
    for mask in range(1 << n):
        # Greedy works on matroids: grow inside `mask` by dual-independents.
        current = 0
        for x in _mask_bits(mask):
            if dual_indep[current | (1 << x)]:
                current |= 1 << x
        if current.bit_count() != dual.rank_mask(mask):
            return (
                f"dual rank formula {dual.rank_mask(mask)} != enumerated "
                f"{current.bit_count()} on {mask:b}"
            )
    return None


def check_invariance(max_n: int = 6, restarts: int = 60, seed: int = 0) -> CheckResult:
    """Coset and local-unitary invariance at the optimizer's resolution."""
    rng = np.random.default_rng(derived_seed(seed, "invariance"))
    for label, c in suite_codes(max_n):
        if c.length > max_n:
            continue
        base = injective_norm_numeric(
            build_state(c), restarts=restarts, seed=derived_seed(seed, f"inv:{label}")
        ).value
        for shift in range(1 << (c.length - c.dimension)):
            # Spread shifts over coset representatives via dual-ish words.
            word = shift  # any word works; cosets repeat harmlessly
            coset_value = injective_norm_numeric(
                build_coset_state(word, c),
                restarts=restarts,
                seed=derived_seed(seed, f"inv:{label}:{shift}"),
            ).value
            if abs(coset_value - base) > 2e-5:
                return CheckResult(
                    "invariance",
                    False,
                    _fail_detail(label, c, f"coset {word} norm {coset_value} vs {base}"),
                )
        unitaries = []
        for _ in range(c.length):
            z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            q, _ = np.linalg.qr(z)
            unitaries.append(q)
        rotated = injective_norm_numeric(
            apply_local_unitaries(build_state(c), unitaries),
            restarts=restarts,
            seed=derived_seed(seed, f"inv-lu:{label}"),
        ).value
        if abs(rotated - base) > 2e-5:
            return CheckResult(
                "invariance",
                False,
                _fail_detail(label, c, f"LU-rotated norm {rotated} vs {base}"),
            )
    return CheckResult("invariance", True, "coset and LU norms agree to 2e-5")


# ---------------------------------------------------------------------------
# Driver


def run_suite(
    max_n: int = 8,
    random_codes: int = 50,
    seed: int = 0,
    restarts: int = 60,
    j_offset: int = 0,
) -> tuple[list[CheckResult], list[dict]]:
    """Run every check; returns (results sorted by label, report rows)."""
    results: list[CheckResult] = []
    results.append(check_matroid_axioms(max_x=min(max_n, 10), seed=seed))
    results.append(
        check_main_equality(
            structured_max_n=min(max_n, 14),
            random_codes=random_codes,
            random_max_n=min(max_n, 14),
            seed=seed,
            j_offset=j_offset,
        )
    )
    results.append(check_witnesses(max_n=min(max_n, 12), seed=seed))
    results.append(check_edmonds(pairs=max(10, random_codes // 2), max_x=min(max_n, 14), seed=seed))
    results.append(check_bound_sandwich(max_n=min(max_n, 8)))
    numeric_result, rows = check_numeric_agreement(
        max_n=min(max_n, 8), restarts=restarts, seed=seed
    )
    results.append(numeric_result)
    results.append(check_suffix_multiplicity(max_n=min(max_n, 16)))
    results.append(check_invariance(max_n=min(max_n, 6), restarts=restarts, seed=seed))
    results.sort(key=lambda r: r.label)
    return results, rows
