import numpy as np
import pytest

from cwscodes.graph import Graph, LocalCliffordCircuit

SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli_matrix(op):
    """Dense matrix of i^p X^u Z^v; qubit q is bit q of the basis index."""
    out = np.array([[1.0 + 0j]])
    for q in reversed(range(op.n)):
        m = np.eye(2, dtype=complex)
        if (op.u >> q) & 1:
            m = m @ SINGLE["X"]
        if (op.v >> q) & 1:
            m = m @ SINGLE["Z"]
        out = np.kron(out, m)
    return (1j**op.p) * out


def overlap(a, b):
    return abs(np.vdot(a, b))


def random_graph(rng, n, p=0.5):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_local_clifford(rng, n, length=None):
    labels = ["H", "S", "SDG", "X", "Y", "Z"]
    length = 3 * n if length is None else length
    gates = tuple((labels[rng.integers(len(labels))], int(rng.integers(n))) for _ in range(length))
    return LocalCliffordCircuit(n, gates)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[tuple[int, str], str] = {}


def record_criterion(number, ok, detail, part=""):
    line = f"criterion {number}{part}: {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE_LINES[number, part] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
