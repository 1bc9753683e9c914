"""Pauli group arithmetic in the binary symplectic representation.

An n-qubit Pauli is stored as ``i**p * X**u * Z**v`` where ``u`` and ``v`` are
bit-vectors packed into Python ints (bit ``q`` belongs to qubit ``q``) and the
X block sits to the left of the Z block. With this ordering the phase of a
product only needs one inner product, see :meth:`PauliOperator.__mul__`.

Text form: ``"ZXZII"`` with the leftmost character on qubit 0, optionally
prefixed by ``+``, ``-``, ``+i``/``i`` or ``-i``. Letters denote the Hermitian
single-qubit matrices, so ``Y`` is parsed as ``i * X * Z``.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from math import comb

__all__ = [
    "PauliOperator",
    "bits_to_str",
    "commutes",
    "enumerate_errors",
    "error_count",
    "gf2_rank",
    "is_valid_stabilizer",
    "multiply",
    "parity",
    "str_to_bits",
    "weight",
]

_PREFIXES = (("+i", 1), ("-i", 3), ("i", 1), ("+", 0), ("-", 2))
_PHASE_TEXT = {0: "", 1: "+i", 2: "-", 3: "-i"}


def parity(x: int) -> int:
    return x.bit_count() & 1


def str_to_bits(text: str) -> int:
    """Parse ``"01011"`` (leftmost char = qubit 0) into a packed int."""
    value = 0
    for q, ch in enumerate(text):
        if ch == "1":
            value |= 1 << q
        elif ch != "0":
            raise ValueError(f"invalid bit character {ch!r} in {text!r}")
    return value


def bits_to_str(x: int, n: int) -> str:
    return "".join("1" if (x >> q) & 1 else "0" for q in range(n))


@dataclass(frozen=True)
class PauliOperator:
    """Immutable n-qubit Pauli ``i**p X**u Z**v``."""

    n: int
    u: int = 0
    v: int = 0
    p: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("qubit count must be positive")
        if self.u >> self.n or self.v >> self.n or self.u < 0 or self.v < 0:
            raise ValueError("bit-vector longer than the qubit count")
        object.__setattr__(self, "p", self.p % 4)

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n)

    @classmethod
    def from_str(cls, text: str) -> PauliOperator:
        text = text.strip()
        phase = 0
        for prefix, value in _PREFIXES:
            if text.startswith(prefix):
                phase = value
                text = text[len(prefix):]
                break
        if not text:
            raise ValueError("empty Pauli string")
        u = v = 0
        for q, ch in enumerate(text.upper()):
            if ch in "XY":
                u |= 1 << q
            if ch in "ZY":
                v |= 1 << q
            if ch == "Y":
                phase += 1
            elif ch not in "IXZ":
                raise ValueError(f"invalid Pauli letter {ch!r}")
        return cls(len(text), u, v, phase)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> PauliOperator:
        text = ["I"] * n
        text[qubit] = letter
        return cls.from_str("".join(text))

    @classmethod
    def x_type(cls, n: int, u: int) -> PauliOperator:
        return cls(n, u, 0)

    @classmethod
    def z_type(cls, n: int, v: int) -> PauliOperator:
        return cls(n, 0, v)

    def __str__(self) -> str:
        letters = []
        ys = 0
        for q in range(self.n):
            x, z = (self.u >> q) & 1, (self.v >> q) & 1
            if x and z:
                letters.append("Y")
                ys += 1
            else:
                letters.append("X" if x else "Z" if z else "I")
        return _PHASE_TEXT[(self.p - ys) % 4] + "".join(letters)

    def __repr__(self) -> str:
        return f"PauliOperator({str(self)!r})"

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return multiply(self, other)

    @property
    def weight(self) -> int:
        return (self.u | self.v).bit_count()

    @property
    def is_hermitian(self) -> bool:
        return (self.p + parity(self.u & self.v)) % 2 == 0

    def unsigned(self) -> PauliOperator:
        """Same symplectic vector with phase exponent 0."""
        return PauliOperator(self.n, self.u, self.v)

    def same_up_to_phase(self, other: PauliOperator) -> bool:
        return self.n == other.n and self.u == other.u and self.v == other.v

    def letter(self, qubit: int) -> str:
        x, z = (self.u >> qubit) & 1, (self.v >> qubit) & 1
        return "IZXY"[2 * x + z]


def _check_dims(a: PauliOperator, b: PauliOperator) -> None:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n} qubits")


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Group product ``a * b``.

    Moving ``X**b.u`` left past ``Z**a.v`` costs ``(-1)**(a.v . b.u)``.
    """
    _check_dims(a, b)
    return PauliOperator(a.n, a.u ^ b.u, a.v ^ b.v, a.p + b.p + 2 * parity(a.v & b.u))


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    _check_dims(a, b)
    return parity(a.u & b.v) == parity(a.v & b.u)


def weight(a: PauliOperator) -> int:
    return a.weight


def enumerate_errors(n: int, max_weight: int, min_weight: int = 1) -> Iterator[PauliOperator]:
    """Yield every Pauli with weight in ``[min_weight, max_weight]``, phase 0.

    Order: by weight, then supports in lexicographic order, then letters with
    Z < X < Y on each position (the first support qubit varies slowest).
    """
    if not 1 <= max_weight <= n:
        raise ValueError(f"max_weight must lie in [1, {n}], got {max_weight}")
    # (u bit, v bit) for Z, X, Y
    letters = ((0, 1), (1, 0), (1, 1))
    for w in range(max(min_weight, 1), max_weight + 1):
        for support in itertools.combinations(range(n), w):
            for choice in itertools.product(letters, repeat=w):
                u = v = 0
                for q, (x, z) in zip(support, choice):
                    u |= x << q
                    v |= z << q
                yield PauliOperator(n, u, v)


def error_count(n: int, max_weight: int) -> int:
    return sum(3**w * comb(n, w) for w in range(1, max_weight + 1))


def gf2_rank(vectors: Sequence[int]) -> int:
    """Rank over GF(2) of packed bit-vectors."""
    basis: dict[int, int] = {}
    for vec in vectors:
        while vec:
            top = vec.bit_length() - 1
            if top not in basis:
                basis[top] = vec
                break
            vec ^= basis[top]
    return len(basis)


def is_valid_stabilizer(gens: Sequence[PauliOperator]) -> bool:
    """True iff ``gens`` generate an abelian group without ``-I``.

    Requires pairwise commutation, GF(2) independence and Hermitian
    generators; for such a set no product of generators equals ``-I`` or
    ``+-iI``.
    """
    gens = list(gens)
    if not gens:
        return True
    n = gens[0].n
    if any(g.n != n for g in gens):
        return False
    for a, b in itertools.combinations(gens, 2):
        if not commutes(a, b):
            return False
    if not all(g.is_hermitian for g in gens):
        return False
    return gf2_rank([g.u | (g.v << n) for g in gens]) == len(gens)
