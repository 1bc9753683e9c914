"""Graph states, standard form reduction and the Z-error translation map.

In standard form a CWS code is a graph ``g`` plus a list of classical
codewords ``c``; the stabilizer is generated by ``X_l Z^{r_l}`` (``r_l`` the
l-th adjacency row) and the basis states are ``Z^c |g>``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from cwscodes.pauli import (
    PauliOperator,
    bits_to_str,
    enumerate_errors,
    is_valid_stabilizer,
    multiply,
    str_to_bits,
)

__all__ = [
    "CwsCode",
    "Graph",
    "LocalCliffordCircuit",
    "StandardFormCode",
    "graph_stabilizer",
    "to_standard_form",
    "translate_error",
    "translate_error_set",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[l]`` is the packed neighbourhood of ``l``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise ValueError("need one adjacency row per vertex")
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {i} has bits beyond n={self.n}")
            if (row >> i) & 1:
                raise ValueError(f"self-loop on vertex {i}")
            for j in range(self.n):
                if ((row >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        rows = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            if i == j:
                raise ValueError(f"self-loop on vertex {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def from_adjacency(cls, adj) -> Graph:
        adj = np.asarray(adj, dtype=np.uint8)
        n = adj.shape[0]
        rows = tuple(int(sum(int(b) << j for j, b in enumerate(adj[i]))) for i in range(n))
        return cls(n, rows)

    @classmethod
    def from_row_strings(cls, rows: Sequence[str]) -> Graph:
        return cls(len(rows), tuple(str_to_bits(r) for r in rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        return [
            (i, j) for i in range(self.n) for j in range(i + 1, self.n) if (self.rows[i] >> j) & 1
        ]

    @property
    def adjacency(self) -> np.ndarray:
        return np.array(
            [[(row >> j) & 1 for j in range(self.n)] for row in self.rows], dtype=np.uint8
        )

    def neighbors(self, vertex: int) -> list[int]:
        return [j for j in range(self.n) if (self.rows[vertex] >> j) & 1]

    def row_strings(self) -> list[str]:
        return [bits_to_str(r, self.n) for r in self.rows]


@dataclass(frozen=True)
class CwsCode:
    """A CWS code in standard form: graph state plus classical codewords.

    Codewords are packed ints, bit ``q`` on qubit ``q``; the word operator of
    codeword ``c`` is ``Z^c``.
    """

    graph: Graph
    codewords: tuple[int, ...]
    claimed_distance: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "codewords", tuple(int(c) for c in self.codewords))
        if not self.codewords:
            raise ValueError("a code needs at least one codeword")
        if len(set(self.codewords)) != len(self.codewords):
            raise ValueError("codewords must be distinct")
        for c in self.codewords:
            if c < 0 or c >> self.n:
                raise ValueError(f"codeword {c} longer than n={self.n}")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def K(self) -> int:
        return len(self.codewords)

    @classmethod
    def from_strings(
        cls, graph: Graph, codewords: Iterable[str], claimed_distance: int | None = None
    ) -> CwsCode:
        words = [str_to_bits(c) for c in codewords]
        for text in codewords:
            if len(text) != graph.n:
                raise ValueError(f"codeword {text!r} has length {len(text)}, expected {graph.n}")
        return cls(graph, tuple(words), claimed_distance)

    def codeword_strings(self) -> list[str]:
        return [bits_to_str(c, self.n) for c in self.codewords]

    def translated(self, shift: int) -> CwsCode:
        return CwsCode(self.graph, tuple(c ^ shift for c in self.codewords), self.claimed_distance)

    def canonical(self) -> CwsCode:
        """Translate so the first codeword becomes the all-zero word."""
        return self.translated(self.codewords[0])

    def word_operators(self) -> list[PauliOperator]:
        return [PauliOperator.z_type(self.n, c) for c in self.codewords]


StandardFormCode = CwsCode


def graph_stabilizer(g: Graph) -> list[PauliOperator]:
    """Generators ``X_l Z^{r_l}`` with phase +1."""
    return [PauliOperator(g.n, 1 << l, g.rows[l]) for l in range(g.n)]


def translate_error(g: Graph, e: PauliOperator) -> int:
    """Effective Z-error ``v xor (sum of rows r_l over the X-support of e)``."""
    if e.n != g.n:
        raise ValueError(f"dimension mismatch: error on {e.n} qubits, graph on {g.n}")
    out = e.v
    u = e.u
    while u:
        low = u & -u
        out ^= g.rows[low.bit_length() - 1]
        u ^= low
    return out


def translate_error_set(g: Graph, max_weight: int) -> list[tuple[PauliOperator, int, int]]:
    """``(error, Cl_S(error), X-part of error)`` for every error up to ``max_weight``."""
    return [(e, translate_error(g, e), e.u) for e in enumerate_errors(g.n, max_weight)]


# Single-qubit Clifford conjugation tables: gate -> (image of X, image of Z),
# each image as (x bit, z bit, phase exponent) in the i^p X^x Z^z convention.
_CONJ = {
    "H": ((0, 1, 0), (1, 0, 0)),
    "S": ((1, 1, 1), (0, 1, 0)),
    "SDG": ((1, 1, 3), (0, 1, 0)),
    "X": ((1, 0, 0), (0, 1, 2)),
    "Z": ((1, 0, 2), (0, 1, 0)),
    "Y": ((1, 0, 2), (0, 1, 2)),
}

_MATRICES = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "SDG": np.array([[1, 0], [0, -1j]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
}


def _conjugate_one(op: PauliOperator, gate: str, q: int) -> PauliOperator:
    x, z = (op.u >> q) & 1, (op.v >> q) & 1
    if not (x or z):
        return op
    img_x, img_z = _CONJ[gate]
    # image of X^x Z^z = (image X)^x (image Z)^z as a one-qubit product
    a = PauliOperator(1)
    if x:
        a = multiply(a, PauliOperator(1, img_x[0], img_x[1], img_x[2]))
    if z:
        a = multiply(a, PauliOperator(1, img_z[0], img_z[1], img_z[2]))
    mask = ~(1 << q)
    return PauliOperator(
        op.n, (op.u & mask) | (a.u << q), (op.v & mask) | (a.v << q), op.p + a.p
    )


@dataclass(frozen=True)
class LocalCliffordCircuit:
    """Ordered single-qubit Clifford gates ``(label, qubit)``.

    Labels: ``H``, ``S`` (phase gate diag(1, i)), ``SDG``, ``X``, ``Y``, ``Z``.
    """

    n: int
    gates: tuple[tuple[str, int], ...] = field(default=())

    def __post_init__(self) -> None:
        for label, q in self.gates:
            if label not in _CONJ:
                raise ValueError(f"unknown local Clifford gate {label!r}")
            if not 0 <= q < self.n:
                raise ValueError(f"qubit {q} out of range")

    def conjugate(self, op: PauliOperator) -> PauliOperator:
        """``U op U^dagger`` for the circuit unitary ``U``."""
        for label, q in self.gates:
            op = _conjugate_one(op, label, q)
        return op

    def per_qubit(self) -> list[list[str]]:
        out: list[list[str]] = [[] for _ in range(self.n)]
        for label, q in self.gates:
            out[q].append(label)
        return out

    def apply(self, state: np.ndarray) -> np.ndarray:
        """Apply the circuit to a state vector (bit ``q`` of the index is qubit ``q``)."""
        psi = np.asarray(state, dtype=complex).reshape((2,) * self.n)
        for label, q in self.gates:
            axis = self.n - 1 - q
            psi = np.moveaxis(np.tensordot(_MATRICES[label], psi, axes=([1], [axis])), 0, axis)
        return psi.reshape(-1)

    def __len__(self) -> int:
        return len(self.gates)


def _eliminate(rows: list[PauliOperator], key) -> list[int]:
    """In-place Gauss-Jordan on ``key(row)``; returns pivot columns of the leading rows.

    Pivots are taken in increasing qubit order; rows are multiplied as Paulis so
    phases stay exact.
    """
    n = rows[0].n if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(n):
        hit = next((i for i in range(r, len(rows)) if (key(rows[i]) >> col) & 1), None)
        if hit is None:
            continue
        rows[r], rows[hit] = rows[hit], rows[r]
        for i in range(len(rows)):
            if i != r and (key(rows[i]) >> col) & 1:
                rows[i] = multiply(rows[i], rows[r])
        pivots.append(col)
        r += 1
    return pivots


def to_standard_form(
    stab: Sequence[PauliOperator], word_ops: Sequence[PauliOperator]
) -> tuple[CwsCode, LocalCliffordCircuit]:
    """Reduce a CWS code to graph-state stabilizer plus Z-type codewords.

    Returns the code and the local Clifford circuit ``U`` such that ``U S U^dag``
    is generated by the graph generators with + signs. Each word operator maps
    to ``U w U^dag``; its effective Z word is translated so the first word
    operator becomes the identity (a further ``Z^{c_1}`` relates the spaces).
    """
    stab = list(stab)
    if not stab:
        raise ValueError("empty stabilizer")
    n = stab[0].n
    if len(stab) != n or not is_valid_stabilizer(stab):
        raise ValueError("invalid stabilizer: need n independent commuting Hermitian generators")
    if not word_ops:
        raise ValueError("need at least one word operator")
    if any(w.n != n for w in word_ops):
        raise ValueError("word operator dimension mismatch")
    seen = {(w.u, w.v) for w in word_ops}
    if len(seen) != len(word_ops):
        raise ValueError("word operators must be distinct up to phase")

    gates: list[tuple[str, int]] = []
    rows = list(stab)

    def apply_gate(label: str, q: int) -> None:
        gates.append((label, q))
        for i, r in enumerate(rows):
            rows[i] = _conjugate_one(r, label, q)

    # Rows beyond the X rank are Z-only; Hadamard on their Z pivots fills the X block.
    rank = len(_eliminate(rows, lambda r: r.u))
    z_rows = rows[rank:]
    for q in _eliminate(z_rows, lambda r: r.v):
        apply_gate("H", q)

    pivots = _eliminate(rows, lambda r: r.u)
    if pivots != list(range(n)):
        raise AssertionError("X block not invertible after Hadamards")  # pragma: no cover
    for l in range(n):
        if (rows[l].v >> l) & 1:
            apply_gate("S", l)
    for l in range(n):
        if rows[l].p == 2:
            apply_gate("Z", l)

    graph = Graph(n, tuple(r.v for r in rows))
    if any(r.p != 0 or r.u != 1 << l for l, r in enumerate(rows)):
        raise AssertionError("reduction did not reach graph form")  # pragma: no cover
    circuit = LocalCliffordCircuit(n, tuple(gates))

    words = [translate_error(graph, circuit.conjugate(w)) for w in word_ops]
    shift = words[0]
    codewords = tuple(c ^ shift for c in words)
    if len(set(codewords)) != len(codewords):
        raise ValueError("word operators produce the same code vector up to phase")
    return CwsCode(graph, codewords), circuit
