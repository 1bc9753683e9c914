"""Conversions between stabilizer codes and CWS codes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from cwscodes.graph import CwsCode, graph_stabilizer
from cwscodes.pauli import PauliOperator, commutes, is_valid_stabilizer, multiply

__all__ = [
    "StabilizerPresentation",
    "extract_stabilizer_presentation",
    "is_stabilizer_code",
    "stabilizer_to_cws",
]


@dataclass(frozen=True)
class StabilizerPresentation:
    """An ``[n, k]`` stabilizer code with explicit logical operators."""

    n: int
    k: int
    generators: tuple[PauliOperator, ...]
    logical_x: tuple[PauliOperator, ...]
    logical_z: tuple[PauliOperator, ...]

    def __post_init__(self) -> None:
        for name in ("generators", "logical_x", "logical_z"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        self.validate()

    @classmethod
    def from_strings(cls, generators, logical_x=(), logical_z=()) -> StabilizerPresentation:
        gens = [PauliOperator.from_str(s) for s in generators]
        lx = [PauliOperator.from_str(s) for s in logical_x]
        lz = [PauliOperator.from_str(s) for s in logical_z]
        n = (gens or lx or lz)[0].n
        return cls(n, len(lx), tuple(gens), tuple(lx), tuple(lz))

    def validate(self) -> None:
        ops = self.generators + self.logical_x + self.logical_z
        if any(op.n != self.n for op in ops):
            raise ValueError("operator length does not match n")
        if len(self.generators) != self.n - self.k:
            raise ValueError(f"need {self.n - self.k} generators, got {len(self.generators)}")
        if len(self.logical_x) != self.k or len(self.logical_z) != self.k:
            raise ValueError(f"need {self.k} logical X and Z operators")
        if not is_valid_stabilizer(self.generators):
            raise ValueError("generators are not an abelian, -I free, independent set")
        for g, op in itertools.product(self.generators, self.logical_x + self.logical_z):
            if not commutes(g, op):
                raise ValueError(f"logical {op} does not commute with generator {g}")
        for i, j in itertools.product(range(self.k), repeat=2):
            anti = not commutes(self.logical_x[i], self.logical_z[j])
            if anti != (i == j):
                raise ValueError(f"logical X{i} / Z{j} commutation is wrong")
            if i < j and not (
                commutes(self.logical_x[i], self.logical_x[j])
                and commutes(self.logical_z[i], self.logical_z[j])
            ):
                raise ValueError("logical operators of different qubits must commute")
        if not is_valid_stabilizer(self.generators + self.logical_z):
            raise ValueError("logical Z operators extend the stabilizer to an invalid group")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "generators": [str(g) for g in self.generators],
            "logical_x": [str(g) for g in self.logical_x],
            "logical_z": [str(g) for g in self.logical_z],
        }


def stabilizer_to_cws(p: StabilizerPresentation) -> tuple[list[PauliOperator], list[PauliOperator]]:
    """Word stabilizer ``<S_1..S_{n-k}, Zbar_1..Zbar_k>`` and word operators
    ``Xbar^v`` for every k-bit ``v`` (bit ``j`` of the index selects ``Xbar_j``)."""
    stab = list(p.generators) + list(p.logical_z)
    words = []
    for v in range(1 << p.k):
        w = PauliOperator.identity(p.n)
        for j in range(p.k):
            if (v >> j) & 1:
                w = multiply(w, p.logical_x[j])
        words.append(w)
    return stab, words


def _is_linear(codewords) -> bool:
    words = set(codewords)
    if 0 not in words:
        return False
    return all(a ^ b in words for a in words for b in words)


def is_stabilizer_code(code: CwsCode) -> tuple[bool, int | None]:
    """Standard-form word operators ``Z^c`` always commute, so the code is a
    stabilizer code exactly when the codewords form a GF(2) subspace."""
    if not _is_linear(code.codewords):
        return False, None
    return True, code.K.bit_length() - 1


def _rref(vectors) -> tuple[list[int], list[int]]:
    """Reduced row echelon basis of packed vectors, pivots at lowest set bits in
    increasing qubit order."""
    rows = [v for v in vectors if v]
    basis: list[int] = []
    pivots: list[int] = []
    n = max((v.bit_length() for v in rows), default=0)
    for col in range(n):
        hit = next((i for i, r in enumerate(rows) if (r >> col) & 1), None)
        if hit is None:
            continue
        piv = rows.pop(hit)
        rows = [r ^ piv if (r >> col) & 1 else r for r in rows]
        basis = [b ^ piv if (b >> col) & 1 else b for b in basis]
        basis.append(piv)
        pivots.append(col)
        rows = [r for r in rows if r]
    return basis, pivots


def _group_element(gens: list[PauliOperator], a: int) -> PauliOperator:
    out = PauliOperator.identity(gens[0].n)
    for l, g in enumerate(gens):
        if (a >> l) & 1:
            out = multiply(out, g)
    return out


def extract_stabilizer_presentation(code: CwsCode) -> StabilizerPresentation:
    """Stabilizer ``T = {s in S : s commutes with all Z^c}`` with ``Xbar = Z^{b_j}``
    for the reduced echelon basis ``b_j`` of the codewords and ``Zbar_j`` the
    graph generator at the pivot of ``b_j``.
    """
    ok, k = is_stabilizer_code(code)
    if not ok:
        raise ValueError("codeword set is not a linear space; not a stabilizer code")
    n = code.n
    gens = graph_stabilizer(code.graph)
    basis, pivots = _rref(code.codewords)
    # element of S with X-part a commutes with Z^c iff a . c = 0
    t_gens = []
    for f in range(n):
        if f in pivots:
            continue
        a = 1 << f
        for b, p in zip(basis, pivots):
            if (b >> f) & 1:
                a |= 1 << p
        t_gens.append(_group_element(gens, a))
    logical_x = [PauliOperator.z_type(n, b) for b in basis]
    logical_z = [gens[p] for p in pivots]
    return StabilizerPresentation(n, k, tuple(t_gens), tuple(logical_x), tuple(logical_z))
