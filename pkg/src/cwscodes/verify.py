"""Error-detection verification for CWS codes.

Two independent routes: :func:`check_detection` works on classical
bit-vectors only, :func:`kl_oracle` builds the code states and evaluates
the Knill-Laflamme matrices ``<c_i|E|c_j>`` numerically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from cwscodes.graph import CwsCode, translate_error
from cwscodes.pauli import PauliOperator, enumerate_errors, parity

__all__ = [
    "MAX_STATEVECTOR_QUBITS",
    "DetectionReport",
    "Distance",
    "FailureKind",
    "KLCheckResult",
    "apply_pauli",
    "build_statevector",
    "check_detection",
    "distance",
    "graph_state",
    "kl_oracle",
    "stabilizer_state",
]

MAX_STATEVECTOR_QUBITS = 12
ORACLE_TOL = 1e-9


class FailureKind(str, enum.Enum):
    CONFUSION = "codeword-confusion"
    UNDETECTED_DIAGONAL = "undetected-diagonal"


@dataclass
class DetectionReport:
    passed: bool
    failing_error: PauliOperator | None = None
    failure_kind: FailureKind | None = None
    degenerate_errors: list[PauliOperator] = field(default_factory=list)
    max_weight: int = 0

    @property
    def degenerate(self) -> bool:
        return bool(self.degenerate_errors)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "max_weight": self.max_weight,
            "failing_error": None if self.failing_error is None else str(self.failing_error),
            "failure_kind": None if self.failure_kind is None else self.failure_kind.value,
            "degenerate_errors": [str(e) for e in self.degenerate_errors],
        }


def _difference_set(codewords) -> set[int]:
    return {a ^ b for i, a in enumerate(codewords) for b in codewords[i + 1:]}


def check_detection(code: CwsCode, max_weight: int, min_weight: int = 1) -> DetectionReport:
    """Check detection of every Pauli error of weight ``min_weight..max_weight``.

    An error ``E`` with effective word ``e`` and X-part ``u`` is detected when
    ``e`` is not the difference of two codewords, and either ``e != 0`` or
    ``c . u`` has the same parity for every codeword (``E`` then acts as the
    same sign on all basis states). With the zero codeword present this is
    "every codeword commutes with ``E``". The first failure in enumeration
    order is reported.
    """
    if not 1 <= max_weight <= code.n:
        raise ValueError(f"max_weight must lie in [1, {code.n}]")
    diffs = _difference_set(code.codewords)
    ref = code.codewords[0]
    report = DetectionReport(passed=True, max_weight=max_weight)
    for err in enumerate_errors(code.n, max_weight, min_weight):
        e = translate_error(code.graph, err)
        if e in diffs:
            report.passed = False
            report.failing_error = err
            report.failure_kind = FailureKind.CONFUSION
            return report
        if e == 0:
            sign = parity(ref & err.u)
            if any(parity(c & err.u) != sign for c in code.codewords):
                report.passed = False
                report.failing_error = err
                report.failure_kind = FailureKind.UNDETECTED_DIAGONAL
                return report
            report.degenerate_errors.append(err)
    return report


class Distance(NamedTuple):
    """Minimum distance, or a lower bound when ``exact`` is false."""

    value: int
    exact: bool

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">= {self.value}"


def distance(code: CwsCode, cap: int | None = None) -> Distance:
    """Smallest failing error weight, searching weights ``1..cap``.

    Returns ``Distance(cap + 1, exact=False)`` if nothing up to ``cap`` fails.
    """
    cap = code.n if cap is None else cap
    if not 1 <= cap <= code.n:
        raise ValueError(f"cap must lie in [1, {code.n}]")
    for w in range(1, cap + 1):
        if not check_detection(code, w, min_weight=w).passed:
            return Distance(w, True)
    return Distance(cap + 1, False)


# -- statevector oracle ------------------------------------------------------


def _require_small(n: int) -> None:
    if n > MAX_STATEVECTOR_QUBITS:
        raise MemoryError(f"statevector oracle limited to {MAX_STATEVECTOR_QUBITS} qubits, got {n}")


def _popcount_parity(values: np.ndarray) -> np.ndarray:
    return (np.bitwise_count(values) & 1).astype(np.int64)


def apply_pauli(op: PauliOperator, states: np.ndarray) -> np.ndarray:
    """Apply ``i^p X^u Z^v`` to state vector(s) along the last axis.

    Basis index bit ``q`` is the value of qubit ``q``.
    """
    states = np.asarray(states, dtype=complex)
    dim = states.shape[-1]
    idx = np.arange(dim, dtype=np.int64)
    signs = 1 - 2 * _popcount_parity(idx & op.v)
    out = np.empty_like(states)
    out[..., idx ^ op.u] = states * signs
    return out * (1j**op.p)


def graph_state(g) -> np.ndarray:
    """``prod CZ H^n |0>``: amplitude ``(-1)^{#edges inside x} / sqrt(2^n)``."""
    _require_small(g.n)
    idx = np.arange(1 << g.n, dtype=np.int64)
    edge_count = np.zeros(idx.shape, dtype=np.int64)
    for i, j in g.edges:
        edge_count += ((idx >> i) & 1) & ((idx >> j) & 1)
    return (1 - 2 * (edge_count & 1)) / np.sqrt(float(1 << g.n)) + 0j


def build_statevector(code: CwsCode) -> np.ndarray:
    """Basis states ``Z^{c_l}|S>`` as a ``(K, 2**n)`` array."""
    _require_small(code.n)
    base = graph_state(code.graph)
    idx = np.arange(1 << code.n, dtype=np.int64)
    rows = []
    for c in code.codewords:
        rows.append(base * (1 - 2 * _popcount_parity(idx & c)))
    return np.array(rows, dtype=complex)


def stabilizer_state(gens, seed: int = 0) -> np.ndarray:
    """Unique joint +1 eigenvector of ``n`` stabilizer generators, via projectors."""
    gens = list(gens)
    n = gens[0].n
    _require_small(n)
    rng = np.random.default_rng(seed)
    psi = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    for g in gens:
        psi = 0.5 * (psi + apply_pauli(g, psi))
    norm = np.linalg.norm(psi)
    if norm < 1e-6:
        raise ValueError("projected state vanished; generators do not define a state")
    return psi / norm


@dataclass
class KLCheckResult:
    max_violation: float
    c_E: dict[str, complex] = field(default_factory=dict)
    worst_error: PauliOperator | None = None

    def passed(self, tol: float = ORACLE_TOL) -> bool:
        return self.max_violation < tol


def kl_oracle(code: CwsCode, max_weight: int, states: np.ndarray | None = None) -> KLCheckResult:
    """Largest deviation of ``<c_i|E|c_j>`` from ``c_E delta_ij`` over all errors.

    ``c_E`` is the mean of the diagonal.
    """
    _require_small(code.n)
    basis = build_statevector(code) if states is None else np.asarray(states, dtype=complex)
    conj = basis.conj()
    K = basis.shape[0]
    eye = np.eye(K)
    if np.max(np.abs(conj @ basis.T - eye)) > ORACLE_TOL:
        raise ValueError("code basis states are not orthonormal")
    result = KLCheckResult(0.0)
    for err in enumerate_errors(code.n, max_weight):
        mat = conj @ apply_pauli(err, basis).T
        c_e = np.trace(mat) / K
        dev = float(np.max(np.abs(mat - c_e * eye)))
        result.c_E[str(err)] = complex(c_e)
        if dev > result.max_violation:
            result.max_violation = dev
            result.worst_error = err
    return result
