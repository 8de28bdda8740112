"""Acceptance suite: the headline guarantees, one pass/fail line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines; each test also asserts, so a plain pytest run fails loudly.
"""

import random

import pytest

from codeent.codes import random_code, repetition, toric_x_code
from codeent.entanglement import analyze, delta_brute_force, j_brute_force, j_of_code
from codeent.gf2 import BitMatrix
from codeent.matroid import DualMatroid, LinearColumnMatroid
from codeent.statevec import build_state, injective_norm_numeric
from codeent.verify import (
    _axioms_violation,
    _dual_rank_violation,
    check_bound_sandwich,
    check_edmonds,
    check_invariance,
    check_numeric_agreement,
    check_suffix_multiplicity,
    derived_seed,
    suite_codes,
)

SEED = 0


def report(criterion: str, passed: bool, detail: str) -> None:
    print(f"[{criterion}] {'pass' if passed else 'FAIL'}: {detail}")
    assert passed, f"{criterion}: {detail}"


def test_ac1_main_theorem_equality():
    # Structured suite plus 200 seeded random codes, n <= 14; the matroid
    # computation, the brute-force partition search, and the brute-force
    # shortened-code maximum must agree exactly.
    rng = random.Random(derived_seed(SEED, "acceptance-main"))
    cases = list(suite_codes(14))
    for idx in range(200):
        n = rng.randint(1, 14)
        k = rng.randint(0, n)
        cases.append((f"random#{idx}", random_code(n, k, rng.getrandbits(30))))
    bad = []
    for label, c in cases:
        j = j_of_code(c).j
        if not (j == j_brute_force(c) == delta_brute_force(c)[0]):
            bad.append(label)
    report(
        "AC1 main equality",
        not bad,
        f"{len(cases)} codes, j = brute j = brute delta exactly"
        if not bad
        else f"disagreement on {bad}",
    )


def test_ac2_toric_codes():
    ok = True
    details = []
    for side, expected_e in ((2, 3), (3, 8)):
        c = toric_x_code(side)
        r = analyze(c)
        ok &= r.j == 0 and r.geometric_entanglement == expected_e == c.dimension
        details.append(f"L={side}: j={r.j}, E={r.geometric_entanglement}")
    # Exhaustive delta cross-check only at L=2 (2^8 subsets).
    ok &= delta_brute_force(toric_x_code(2))[0] == 0
    report("AC2 toric", ok, "; ".join(details) + "; L=2 delta brute-forced")


def test_ac3_ghz_repetition():
    ok = True
    worst = 0.0
    for n in range(2, 11):
        r = analyze(repetition(n))
        ok &= r.injective_norm == pytest.approx(2**-0.5, abs=1e-12)
        if n <= 8:
            numeric = injective_norm_numeric(
                build_state(repetition(n)),
                restarts=100,
                seed=derived_seed(SEED, f"ac3:{n}"),
            ).value
            worst = max(worst, abs(numeric - r.injective_norm))
    ok &= worst <= 1e-6
    report("AC3 GHZ", ok, f"n=2..10 formula 2^-1/2; numeric gap <= {worst:.2e}")


def test_ac4_numeric_agreement():
    result, rows = check_numeric_agreement(max_n=8, restarts=100, seed=SEED)
    worst = max(row["gap"] for row in rows)
    report("AC4 numeric", result.passed, f"{len(rows)} suite codes, max gap {worst:.2e}")


def test_ac5_bound_sandwich():
    result = check_bound_sandwich(max_n=8)
    report("AC5 sandwich", result.passed, result.detail)


def test_ac6_suffix_multiplicity():
    result = check_suffix_multiplicity(max_n=16)
    report("AC6 suffix", result.passed, result.detail)


def test_ac7_edmonds_minmax():
    result = check_edmonds(pairs=100, max_x=14, seed=SEED)
    report("AC7 Edmonds", result.passed, result.detail)


def test_ac8_invariance():
    result = check_invariance(max_n=6, restarts=60, seed=SEED)
    report("AC8 invariance", result.passed, result.detail)


def test_ac9_matroid_axioms():
    rng = random.Random(derived_seed(SEED, "acceptance-axioms"))
    matrices = [g.generator for label, g in suite_codes(10) if g.length <= 10]
    for _ in range(10):
        n = rng.randint(1, 10)
        matrices.append(BitMatrix(n, n, tuple(rng.getrandbits(n) for _ in range(n))))
    bad = None
    for matrix in matrices:
        primal = LinearColumnMatroid(matrix)
        for m in (primal, DualMatroid(primal)):
            bad = bad or _axioms_violation(m)
        bad = bad or _dual_rank_violation(primal)
        if bad:
            break
    report(
        "AC9 axioms",
        bad is None,
        f"{len(matrices)} matroids + duals, exhaustive axioms and dual rank"
        if bad is None
        else bad,
    )
