"""Dense states, the alternating optimizer, flattenings, and overlaps."""

import math
import random

import numpy as np
import pytest

from codeent.codes import dual, even_weight, full, random_code, repetition, zero
from codeent.statevec import (
    StateVector,
    apply_local_unitaries,
    build_coset_state,
    build_state,
    flatten,
    flattening_op_norm,
    injective_norm_numeric,
    overlap_plus_zero,
    suffix_multiplicity_check,
    unflatten,
)


def haar_unitary(rng):
    z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


class TestBuildState:
    def test_repetition_2(self):
        s = build_state(repetition(2))
        assert np.allclose(s.amplitudes, [2 ** -0.5, 0, 0, 2 ** -0.5])

    def test_zero_code(self):
        s = build_state(zero(3))
        expected = np.zeros(8)
        expected[0] = 1
        assert np.allclose(s.amplitudes, expected)

    def test_coset_of_repetition(self):
        s = build_coset_state([1, 0, 0], repetition(3))
        # Equal weight on 100 (index 1) and 011 (index 6).
        assert s.amplitudes[0b001] == pytest.approx(2 ** -0.5)
        assert s.amplitudes[0b110] == pytest.approx(2 ** -0.5)
        assert np.count_nonzero(s.amplitudes) == 2

    def test_size_guard(self):
        with pytest.raises(ValueError):
            build_state(zero(21))

    def test_endianness_round_trip(self):
        # Bit i of the packed index is qubit i: flatten on {i} must put
        # qubit i's value on the row index.
        s = build_coset_state([1, 0, 0], zero(3))
        m = flatten(s, [0])
        assert m[1, 0] == 1
        m = flatten(s, [1])
        assert m[0, 1] == 1


class TestNumericNorm:
    def test_product_state_is_exactly_one(self):
        r = injective_norm_numeric(build_state(zero(4)), restarts=3)
        assert r.value == pytest.approx(1.0, abs=1e-9)

    def test_ghz_3(self):
        r = injective_norm_numeric(build_state(repetition(3)), restarts=50)
        assert r.value == pytest.approx(2 ** -0.5, abs=1e-6)

    def test_even_weight_3(self):
        r = injective_norm_numeric(build_state(even_weight(3)), restarts=50)
        assert r.value == pytest.approx(2 ** -0.5, abs=1e-6)

    def test_monotone_trace(self):
        r = injective_norm_numeric(build_state(even_weight(4)), restarts=1, seed=3)
        assert all(b >= a - 1e-12 for a, b in zip(r.trace, r.trace[1:]))

    def test_restart_contract(self):
        with pytest.raises(ValueError):
            injective_norm_numeric(build_state(zero(2)), restarts=0)

    def test_nonnegative_real_restarts_reach_same_value(self):
        for c in (repetition(4), even_weight(4), random_code(5, 3, 17)):
            s = build_state(c)
            complex_val = injective_norm_numeric(s, restarts=50, seed=1).value
            real_val = injective_norm_numeric(
                s, restarts=50, seed=1, real_nonnegative=True
            ).value
            assert real_val == pytest.approx(complex_val, abs=1e-6)


class TestFlatten:
    def test_repetition_2_diagonal(self):
        m = flatten(build_state(repetition(2)), [0])
        assert np.allclose(m, np.diag([2 ** -0.5, 2 ** -0.5]))

    def test_frobenius_norm_preserved(self):
        rng = random.Random(4)
        for _ in range(10):
            n = rng.randint(2, 6)
            c = random_code(n, rng.randint(0, n), rng.getrandbits(20))
            mask = rng.getrandbits(n)
            a = [i for i in range(n) if (mask >> i) & 1]
            m = flatten(build_state(c), a)
            assert np.linalg.norm(m) == pytest.approx(1.0, abs=1e-12)

    def test_unflatten_inverts(self):
        rng = np.random.default_rng(0)
        amps = rng.standard_normal(16) + 1j * rng.standard_normal(16)
        amps /= np.linalg.norm(amps)
        s = StateVector(4, amps)
        for a in ([0], [1, 3], [0, 2, 3], []):
            m = flatten(s, a)
            assert np.allclose(unflatten(m, a, 4).amplitudes, amps)


class TestOpNorm:
    def test_product_state(self):
        assert flattening_op_norm(build_state(zero(3)), [1]) == pytest.approx(1.0)

    def test_ghz_reduced_density(self):
        v = flattening_op_norm(build_state(repetition(3)), [0])
        assert v == pytest.approx(2 ** -0.5, abs=1e-9)

    def test_information_set_flattening_is_exact(self):
        from codeent.entanglement import j_of_code
        from codeent.gf2 import column_submatrix, rank

        rng = random.Random(19)
        for _ in range(10):
            n = rng.randint(2, 7)
            c = random_code(n, rng.randint(1, n), rng.getrandbits(20))
            k = c.dimension
            j = j_of_code(c).j
            best = None
            for mask in range(1 << n):
                bits = [i for i in range(n) if (mask >> i) & 1]
                if len(bits) == k and rank(column_submatrix(c.generator, bits)) == k:
                    v = flattening_op_norm(build_state(c), bits)
                    best = v if best is None else min(best, v)
            assert best == pytest.approx(2 ** (-(k - j) / 2), abs=1e-10)

    def test_upper_bounds_numeric(self):
        rng = random.Random(23)
        for _ in range(8):
            n = rng.randint(2, 6)
            c = random_code(n, rng.randint(0, n), rng.getrandbits(20))
            s = build_state(c)
            numeric = injective_norm_numeric(s, restarts=30).value
            for mask in range(1, (1 << n) - 1):
                a = [i for i in range(n) if (mask >> i) & 1]
                assert numeric <= flattening_op_norm(s, a) + 1e-9


class TestOverlap:
    def test_empty_support(self):
        c = even_weight(3)
        assert overlap_plus_zero(c, []) == pytest.approx(2 ** -1.0)

    def test_full_code_full_support(self):
        assert overlap_plus_zero(full(4), range(4)) == pytest.approx(1.0)

    def test_even_weight_full_support(self):
        assert overlap_plus_zero(even_weight(3), [0, 1, 2]) == pytest.approx(2 ** -0.5)

    def test_lower_bounds_numeric(self):
        rng = random.Random(31)
        for _ in range(6):
            n = rng.randint(2, 6)
            c = random_code(n, rng.randint(0, n), rng.getrandbits(20))
            numeric = injective_norm_numeric(build_state(c), restarts=40).value
            for mask in range(1 << n):
                a = [i for i in range(n) if (mask >> i) & 1]
                assert overlap_plus_zero(c, a) <= numeric + 1e-9


class TestSuffixMultiplicity:
    def test_even_weight(self):
        assert suffix_multiplicity_check(even_weight(3)) == (1, True)

    def test_full(self):
        assert suffix_multiplicity_check(full(5)) == (5, True)

    def test_repetition(self):
        assert suffix_multiplicity_check(repetition(3)) == (0, True)

    def test_uniform_and_bounds_j_on_random_codes(self):
        # The rref information set need not be a minimizing one, so the
        # counted multiplicity can only overshoot j(C), never undershoot.
        from codeent.entanglement import j_of_code

        rng = random.Random(6)
        for _ in range(25):
            n = rng.randint(1, 10)
            c = random_code(n, rng.randint(0, n), rng.getrandbits(20))
            j, uniform = suffix_multiplicity_check(c)
            assert uniform
            assert j >= j_of_code(c).j


class TestLocalUnitaries:
    def test_identity_factors(self):
        s = build_state(even_weight(3))
        out = apply_local_unitaries(s, [np.eye(2)] * 3)
        assert np.allclose(out.amplitudes, s.amplitudes)

    def test_hadamards_map_code_to_dual(self):
        h = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
        for c in (repetition(3), even_weight(4), random_code(5, 2, 3)):
            out = apply_local_unitaries(build_state(c), [h] * c.length)
            expected = build_state(dual(c)).amplitudes
            phase = out.amplitudes[np.argmax(np.abs(expected))]
            assert np.allclose(out.amplitudes, expected * np.sign(phase.real))

    def test_bit_flip_shifts_coset(self):
        x = np.array([[0, 1], [1, 0]])
        c = repetition(3)
        out = apply_local_unitaries(build_state(c), [x, np.eye(2), np.eye(2)])
        expected = build_coset_state([1, 0, 0], c)
        assert np.allclose(out.amplitudes, expected.amplitudes)

    def test_non_unitary_rejected(self):
        with pytest.raises(ValueError):
            apply_local_unitaries(build_state(zero(2)), [np.eye(2), 2 * np.eye(2)])

    def test_numeric_norm_invariant(self):
        rng = np.random.default_rng(11)
        for c in (repetition(4), even_weight(4)):
            s = build_state(c)
            base = injective_norm_numeric(s, restarts=60).value
            rotated = apply_local_unitaries(s, [haar_unitary(rng) for _ in range(c.length)])
            value = injective_norm_numeric(rotated, restarts=60).value
            assert value == pytest.approx(base, abs=2e-5)

    def test_coset_norms_agree(self):
        c = even_weight(4)
        values = []
        for shift in range(2):
            values.append(
                injective_norm_numeric(
                    build_coset_state([shift, 0, 0, 0], c), restarts=40
                ).value
            )
        assert values[0] == pytest.approx(values[1], abs=2e-5)
