"""Dense n-qubit states and the numerical side of the verification.

Index convention, fixed once: bit i of the integer index is the value of
qubit i, so the basis word (x_0, ..., x_{n-1}) lives at sum(x_i << i).
Everything here is a desk-scale verifier, hard-capped at n <= 20.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .codes import LinearCode, shorten
from .gf2 import standard_form

MAX_QUBITS = 20


@dataclass(frozen=True)
class StateVector:
    n: int
    amplitudes: np.ndarray  # complex, length 2^n, unit norm

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.n,):
            raise ValueError("amplitude vector has the wrong length")
        if abs(np.linalg.norm(self.amplitudes) - 1.0) > 1e-12:
            raise ValueError("state is not normalized")

    def tensor(self) -> np.ndarray:
        # Fortran-order reshape makes axis 0 the fastest-varying index,
        # which is bit 0 of the packed index, so axis i = qubit i.
        return self.amplitudes.reshape((2,) * self.n, order="F")


@dataclass(frozen=True)
class ProductState:
    factors: tuple[np.ndarray, ...]  # n unit vectors in C^2

    def __post_init__(self) -> None:
        for f in self.factors:
            if f.shape != (2,) or abs(np.linalg.norm(f) - 1.0) > 1e-9:
                raise ValueError("each factor must be a unit vector in C^2")


def _check_size(n: int) -> None:
    if n > MAX_QUBITS:
        raise ValueError(f"dense states limited to {MAX_QUBITS} qubits, got {n}")


def build_state(c: LinearCode) -> StateVector:
    """|C> = |C|^{-1/2} sum of |y> over codewords y."""
    return build_coset_state(0, c)


def build_coset_state(x, c: LinearCode) -> StateVector:
    """|x + C>: equal weight on every shifted codeword."""
    _check_size(c.length)
    if not isinstance(x, int):
        if len(x) != c.length:
            raise ValueError("shift length mismatch")
        x = sum(int(b) << i for i, b in enumerate(x))
    amps = np.zeros(1 << c.length, dtype=complex)
    weight = 1.0 / math.sqrt(1 << c.dimension)
    for word in c.codewords():
        amps[word ^ x] = weight
    return StateVector(c.length, amps)


@dataclass(frozen=True)
class NumericNormResult:
    value: float
    argmax: ProductState
    converged: bool
    trace: tuple[float, ...]  # per-site objective values of the best restart


def _site_contraction(tensor_conj: np.ndarray, factors: list[np.ndarray], i: int, n: int) -> np.ndarray:
    """Contract conj(T) with every factor except site i; returns a 2-vector."""
    flat = np.moveaxis(tensor_conj, i, n - 1).reshape(-1, 2)
    # Row index of `flat` packs the other sites in C order (highest site
    # fastest); build the matching product of their factors and contract.
    weights = np.array([1.0 + 0j])
    for j in range(n):
        if j != i:
            weights = np.multiply.outer(weights, factors[j]).ravel()
    return weights @ flat


def injective_norm_numeric(
    s: StateVector,
    restarts: int = 100,
    max_iters: int = 500,
    tol: float = 1e-12,
    seed: int = 0,
    real_nonnegative: bool = False,
) -> NumericNormResult:
    """Best rank-1 overlap by alternating per-site maximization.

    Each sweep sets every factor in turn to the normalized partial
    contraction, which is the exact coordinate-wise maximizer, so the
    objective never decreases.  The returned value is a certified lower
    bound on the injective norm; `converged` records whether every
    restart hit its tolerance before `max_iters` sweeps.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    n = s.n
    rng = np.random.default_rng(seed)
    tensor_conj = np.conj(s.tensor())
    best_value = -1.0
    best_factors: list[np.ndarray] = []
    best_trace: tuple[float, ...] = ()
    all_converged = True
    for _ in range(restarts):
        factors = []
        for _ in range(n):
            if real_nonnegative:
                f = np.abs(rng.standard_normal(2)).astype(complex)
            else:
                f = rng.standard_normal(2) + 1j * rng.standard_normal(2)
            factors.append(f / np.linalg.norm(f))
        trace: list[float] = []
        sweep_value = 0.0
        converged = False
        for _ in range(max_iters):
            previous = sweep_value
            for i in range(n):
                c = _site_contraction(tensor_conj, factors, i, n)
                norm = float(np.linalg.norm(c))
                if norm < 1e-300:
                    # Degenerate stationary point: reseed this site.
                    f = rng.standard_normal(2) + 1j * rng.standard_normal(2)
                    factors[i] = f / np.linalg.norm(f)
                    continue
                factors[i] = np.conj(c) / norm
                sweep_value = norm
                trace.append(norm)
            if sweep_value - previous < tol:
                converged = True
                break
        all_converged = all_converged and converged
        if sweep_value > best_value:
            best_value = sweep_value
            best_factors = [f.copy() for f in factors]
            best_trace = tuple(trace)
    return NumericNormResult(
        best_value, ProductState(tuple(best_factors)), all_converged, best_trace
    )


def flatten(s: StateVector, a) -> np.ndarray:
    """Reshape into the 2^|a| x 2^(n-|a|) matrix of the bipartition (a, ~a).

    Row index packs the qubits of `a` in ascending order (first element of
    `a` is the least significant bit), columns likewise for the rest.
    Degenerate a = {} or a = all is allowed and yields a single row/column.
    """
    a = tuple(sorted(set(a)))
    for i in a:
        if not (0 <= i < s.n):
            raise IndexError(f"qubit {i} out of range")
    rest = tuple(i for i in range(s.n) if i not in set(a))
    tensor = s.tensor()
    # Fortran-order ravel makes the first listed axis least significant,
    # matching the integer-index convention.
    permuted = np.transpose(tensor, a + rest) if s.n else tensor
    return permuted.reshape((1 << len(a), 1 << len(rest)), order="F")


def unflatten(m: np.ndarray, a, n: int) -> StateVector:
    """Inverse of `flatten` for the same bipartition."""
    a = tuple(sorted(set(a)))
    rest = tuple(i for i in range(n) if i not in set(a))
    tensor = m.reshape((2,) * n, order="F")
    inverse = np.argsort(a + rest)
    amps = np.transpose(tensor, inverse).reshape(-1, order="F") if n else m.reshape(-1)
    return StateVector(n, amps)


def flattening_op_norm(s: StateVector, a) -> float:
    """Largest singular value of the flattening, by power iteration.

    Runs on the Gram matrix of the smaller side to relative tolerance
    1e-10 on the top eigenvalue.
    """
    m = flatten(s, a)
    if m.shape[0] <= m.shape[1]:
        gram = m @ m.conj().T
    else:
        gram = m.conj().T @ m
    dim = gram.shape[0]
    if dim == 1:
        return math.sqrt(abs(gram[0, 0]))
    rng = np.random.default_rng(7)
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    v /= np.linalg.norm(v)
    eig = 0.0
    for _ in range(100_000):
        w = gram @ v
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return 0.0
        v = w / norm
        new_eig = float(np.real(np.vdot(v, gram @ v)))
        if abs(new_eig - eig) <= 1e-10 * max(new_eig, 1e-300):
            return math.sqrt(new_eig)
        eig = new_eig
    return math.sqrt(eig)


def overlap_plus_zero(c: LinearCode, a) -> float:
    """<+_A 0_B | C> = 2^{-(k - 2 k0 + |A|)/2} with k0 = dim shorten(C, A).

    Computed from dimensions; for n <= 16 the literal inner product on the
    dense state is evaluated too and must agree to 1e-12.
    """
    a = tuple(sorted(set(a)))
    k0 = shorten(c, a).dimension
    value = 2.0 ** (-(c.dimension - 2 * k0 + len(a)) / 2.0)
    if c.length <= 16:
        outside = ~sum(1 << i for i in a)
        literal = 0.0
        scale = 2.0 ** (-len(a) / 2.0)
        amps = build_state(c).amplitudes
        for word in c.codewords():
            if word & outside == 0:
                literal += float(amps[word].real) * scale
        if abs(literal - value) > 1e-9:
            raise AssertionError(
                f"closed-form overlap {value} disagrees with dense inner product {literal}"
            )
    return value


def suffix_multiplicity_check(c: LinearCode) -> tuple[int, bool]:
    """Count prefixes per suffix in the standard-form splitting.

    With the generator as [I_k | A], every realized suffix must be shared
    by exactly |ker A| = 2^j prefixes.  Returns (j, uniformity flag).
    """
    _check_size(c.length)
    k = c.dimension
    if k == 0:
        return 0, True
    _, perm, _ = standard_form(c.generator)
    suffix_positions = perm[k:]
    counts: dict[int, int] = {}
    for word in c.codewords():
        suffix = sum(((word >> p) & 1) << t for t, p in enumerate(suffix_positions))
        counts[suffix] = counts.get(suffix, 0) + 1
    values = set(counts.values())
    uniform = len(values) == 1
    count = next(iter(values))
    j = count.bit_length() - 1
    if 1 << j != count:
        return j, False
    return j, uniform


def apply_local_unitaries(s: StateVector, factors) -> StateVector:
    """Apply one 2x2 unitary per qubit."""
    factors = [np.asarray(u, dtype=complex) for u in factors]
    if len(factors) != s.n:
        raise ValueError(f"expected {s.n} unitaries, got {len(factors)}")
    for u in factors:
        if u.shape != (2, 2) or np.linalg.norm(u @ u.conj().T - np.eye(2)) > 1e-12:
            raise ValueError("factor is not unitary to 1e-12")
    tensor = s.tensor()
    for i, u in enumerate(factors):
        tensor = np.moveaxis(np.tensordot(u, tensor, axes=([1], [i])), 0, i)
    return StateVector(s.n, tensor.reshape(-1, order="F"))
