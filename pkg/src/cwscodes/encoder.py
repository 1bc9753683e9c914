"""Encoding circuits: classical encoder followed by graph-state preparation.

Input register convention: index ``i`` is written in binary on qubits
``0 .. ceil(log2 K) - 1`` (bit ``j`` of ``i`` on qubit ``j``), all other
qubits start in ``|0>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from cwscodes.bridge import _is_linear
from cwscodes.graph import CwsCode, Graph
from cwscodes.pauli import bits_to_str, str_to_bits
from cwscodes.verify import MAX_STATEVECTOR_QUBITS

__all__ = [
    "Circuit",
    "Gate",
    "classical_encoder",
    "cws_encoder",
    "graph_circuit",
    "input_qubits",
    "simulate",
]

_ONE_QUBIT = ("H", "X", "Z")
_TWO_QUBIT = ("CZ", "CX")


@dataclass(frozen=True)
class Gate:
    name: str
    qubits: tuple[int, ...] = ()
    table: tuple[int, ...] | None = None

    def to_dict(self, n: int) -> dict:
        if self.name == "LOOKUP":
            return {"g": "LOOKUP", "table": {str(i): bits_to_str(c, n) for i, c in enumerate(self.table)}}
        if self.name in _ONE_QUBIT:
            return {"g": self.name, "q": self.qubits[0]}
        return {"g": self.name, "q": list(self.qubits)}

    @classmethod
    def from_dict(cls, data: dict) -> Gate:
        name = data["g"]
        if name == "LOOKUP":
            table = data["table"]
            return cls(name, (), tuple(str_to_bits(table[str(i)]) for i in range(len(table))))
        q = data["q"]
        return cls(name, (q,) if isinstance(q, int) else tuple(q))


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[Gate, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            if gate.name == "LOOKUP":
                if gate.table is None or len(set(gate.table)) != len(gate.table):
                    raise ValueError("LOOKUP table must be injective")
                if any(c < 0 or c >> self.n for c in gate.table) or len(gate.table) > 1 << self.n:
                    raise ValueError("LOOKUP entry out of range")
                continue
            arity = 1 if gate.name in _ONE_QUBIT else 2 if gate.name in _TWO_QUBIT else None
            if arity is None:
                raise ValueError(f"unknown gate {gate.name!r}")
            if len(gate.qubits) != arity or any(not 0 <= q < self.n for q in gate.qubits):
                raise ValueError(f"bad qubits for {gate.name}: {gate.qubits}")
            if arity == 2 and gate.qubits[0] == gate.qubits[1]:
                raise ValueError(f"{gate.name} needs two distinct qubits")

    def __add__(self, other: Circuit) -> Circuit:
        if other.n != self.n:
            raise ValueError("circuit widths differ")
        return Circuit(self.n, self.gates + other.gates)

    def count(self, name: str) -> int:
        return sum(g.name == name for g in self.gates)

    def to_dict(self, input_width: int | None = None) -> dict:
        out = {"n": self.n}
        if input_width is not None:
            out["input_qubits"] = list(range(input_width))
        out["gates"] = [g.to_dict(self.n) for g in self.gates]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> Circuit:
        return cls(int(data["n"]), tuple(Gate.from_dict(g) for g in data["gates"]))


def input_qubits(K: int) -> int:
    return max(0, math.ceil(math.log2(K))) if K > 1 else 0


def graph_circuit(g: Graph) -> Circuit:
    gates = [Gate("H", (q,)) for q in range(g.n)]
    gates += [Gate("CZ", (i, j)) for i, j in g.edges]
    return Circuit(g.n, tuple(gates))


def _index_linear(codewords) -> bool:
    """True when ``c_{i xor j} = c_i xor c_j`` for every index pair."""
    K = len(codewords)
    if K & (K - 1) or codewords[0] != 0:
        return False
    k = K.bit_length() - 1
    for i in range(K):
        acc = 0
        for j in range(k):
            if (i >> j) & 1:
                acc ^= codewords[1 << j]
        if acc != codewords[i]:
            return False
    return True


def _cx_network(basis: list[int], n: int) -> list[Gate]:
    """CX gates mapping ``e_j`` to ``basis[j]`` (columns are qubits).

    Built by column-reducing the generator matrix to ``[I | 0]`` and reversing.
    """
    rows = list(basis)
    reduction: list[tuple[int, int]] = []

    def cx(c: int, t: int) -> None:
        # column t += column c on every row
        reduction.append((c, t))
        for i, r in enumerate(rows):
            if (r >> c) & 1:
                rows[i] = r ^ (1 << t)

    for j in range(len(rows)):
        if not (rows[j] >> j) & 1:
            q = next(q for q in range(j + 1, n) if (rows[j] >> q) & 1)
            cx(q, j)
        for q in range(n):
            if q != j and (rows[j] >> q) & 1:
                cx(j, q)
    return [Gate("CX", (c, t)) for c, t in reversed(reduction)]


def classical_encoder(codewords, n: int | None = None) -> Circuit:
    """Circuit mapping ``|i>`` to ``|c_i>``.

    Index-linear codeword lists (``c_0 = 0`` and ``c_{i^j} = c_i ^ c_j``) become a
    CX network; everything else uses a single LOOKUP permutation gate.
    """
    codewords = [int(c) for c in codewords]
    if n is None:
        n = max(max(c.bit_length() for c in codewords), input_qubits(len(codewords)), 1)
    if len(set(codewords)) != len(codewords):
        raise ValueError("duplicate codewords")
    if len(codewords) > 1 << n:
        raise ValueError("more codewords than basis states")
    if codewords == [0]:
        return Circuit(n)
    if _index_linear(codewords):
        k = len(codewords).bit_length() - 1
        return Circuit(n, tuple(_cx_network([codewords[1 << j] for j in range(k)], n)))
    return Circuit(n, (Gate("LOOKUP", (), tuple(codewords)),))


def cws_encoder(code: CwsCode) -> Circuit:
    """``graph_circuit(g) * classical_encoder(c)``: maps ``|i>`` to ``Z^{c_i}|S>``."""
    return classical_encoder(code.codewords, code.n) + graph_circuit(code.graph)


def _lookup_permutation(table: tuple[int, ...], n: int) -> np.ndarray:
    """Full basis permutation extending ``i -> table[i]``; leftover inputs fill
    leftover outputs in increasing order."""
    dim = 1 << n
    perm = np.full(dim, -1, dtype=np.int64)
    perm[: len(table)] = table
    free_out = np.setdiff1d(np.arange(dim), np.asarray(table, dtype=np.int64))
    perm[len(table):] = free_out
    return perm


def simulate(c: Circuit, input_index: int = 0) -> np.ndarray:
    """Run ``c`` on the computational basis state ``|input_index>``."""
    n = c.n
    if n > MAX_STATEVECTOR_QUBITS:
        raise MemoryError(f"simulation limited to {MAX_STATEVECTOR_QUBITS} qubits")
    dim = 1 << n
    if not 0 <= input_index < dim:
        raise ValueError("input index out of range")
    psi = np.zeros(dim, dtype=complex)
    psi[input_index] = 1.0
    idx = np.arange(dim, dtype=np.int64)
    for gate in c.gates:
        if gate.name == "LOOKUP":
            out = np.empty_like(psi)
            out[_lookup_permutation(gate.table, n)] = psi
            psi = out
            continue
        if gate.name == "H":
            mask = 1 << gate.qubits[0]
            bit = (idx & mask) != 0
            partner = psi[idx ^ mask]
            psi = np.where(bit, partner - psi, psi + partner) / np.sqrt(2)
        elif gate.name == "X":
            psi = psi[idx ^ (1 << gate.qubits[0])]
        elif gate.name == "Z":
            psi = np.where(idx & (1 << gate.qubits[0]), -psi, psi)
        elif gate.name == "CZ":
            a, b = gate.qubits
            both = (idx >> a) & (idx >> b) & 1
            psi = np.where(both, -psi, psi)
        elif gate.name == "CX":
            ctrl, tgt = gate.qubits
            src = np.where((idx >> ctrl) & 1, idx ^ (1 << tgt), idx)
            psi = psi[src]
    return psi
