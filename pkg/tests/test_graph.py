import numpy as np
import pytest

from cwscodes.graph import (
    CwsCode,
    Graph,
    LocalCliffordCircuit,
    graph_stabilizer,
    to_standard_form,
    translate_error,
    translate_error_set,
)
from cwscodes.pauli import PauliOperator, bits_to_str, multiply, str_to_bits
from cwscodes.search import family
from cwscodes.verify import apply_pauli, graph_state, stabilizer_state
from conftest import overlap, pauli_matrix, random_graph, random_local_clifford

P = PauliOperator.from_str

# ring-5 effective errors as printed for Z, X, Y on qubits 1..5
RING5_TABLE = {
    "Z": "10000 01000 00100 00010 00001".split(),
    "X": "01001 10100 01010 00101 10010".split(),
    "Y": "11001 11100 01110 00111 10011".split(),
}

DOUBLE_RING_GENERATORS = [
    "XZIIZZIIII", "ZXZIIIZIII", "IZXZIIIZII", "IIZXZIIIZI", "ZIIZXIIIIZ",
    "ZIIIIXZIIZ", "IZIIIZXZII", "IIZIIIZXZI", "IIIZIIIZXZ", "IIIIZZIIZX",
]


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b00))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    g = Graph.from_adjacency([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    assert g.edges == [(0, 1), (1, 2)]
    assert Graph.from_row_strings(g.row_strings()) == g
    assert g.neighbors(1) == [0, 2]


def test_ring5_generators():
    gens = [str(s) for s in graph_stabilizer(family("ring", 5))]
    assert gens[1] == "ZXZII"
    shifts = ["ZXZII"[-s:] + "ZXZII"[:-s] for s in range(5)]
    assert sorted(gens) == sorted(shifts)


def test_empty_graph_generators():
    assert [str(s) for s in graph_stabilizer(Graph.empty(3))] == ["XII", "IXI", "IIX"]


def test_double_ring_generators():
    assert [str(s) for s in graph_stabilizer(family("double_ring", 10))] == DOUBLE_RING_GENERATORS


def test_ring5_classical_error_table():
    g = family("ring", 5)
    for letter, expected in RING5_TABLE.items():
        got = [bits_to_str(translate_error(g, PauliOperator.single(5, q, letter)), 5) for q in range(5)]
        assert got == expected


def test_translate_examples():
    g = family("ring", 5)
    assert bits_to_str(translate_error(g, P("IZIII")), 5) == "01000"
    assert bits_to_str(translate_error(g, P("XIIII")), 5) == "01001"
    assert bits_to_str(translate_error(g, P("IIYII")), 5) == "01110"
    assert translate_error(g, P("-iIIYII")) == translate_error(g, P("IIYII"))
    with pytest.raises(ValueError):
        translate_error(g, P("XX"))


def test_translate_error_set_ring5():
    entries = translate_error_set(family("ring", 5), 1)
    vectors = {bits_to_str(e, 5) for _, e, _ in entries}
    assert len(entries) == 15
    assert vectors == {v for row in RING5_TABLE.values() for v in row}
    assert all(u == err.u for err, _, u in entries)


def test_translate_error_set_empty_graph_z_errors():
    g = Graph.empty(4)
    for err, e, _ in translate_error_set(g, 2):
        if err.u == 0:
            assert e == err.v


def test_translate_error_set_ring9_pairs_xor():
    g = family("ring", 9)
    entries = translate_error_set(g, 2)
    assert len(entries) == 351
    single = {(err.u, err.v): e for err, e, _ in entries if err.weight == 1}
    for err, e, _ in entries:
        if err.weight == 2:
            q = min(b for b in range(9) if ((err.u | err.v) >> b) & 1)
            mask = 1 << q
            first = single[(err.u & mask, err.v & mask)]
            second = single[(err.u & ~mask, err.v & ~mask)]
            assert e == first ^ second


def test_translation_linearity_and_kernel(rng):
    for _ in range(200):
        n = int(rng.integers(2, 9))
        g = random_graph(rng, n)
        a = PauliOperator(n, int(rng.integers(1 << n)), int(rng.integers(1 << n)))
        b = PauliOperator(n, int(rng.integers(1 << n)), int(rng.integers(1 << n)))
        assert translate_error(g, multiply(a, b)) == translate_error(g, a) ^ translate_error(g, b)
        z_only = PauliOperator(n, 0, a.v)
        if translate_error(g, z_only) == 0:
            assert z_only.v == 0


def test_error_acts_as_z_pattern_on_graph_state(rng):
    """E|S> = +-Z^{Cl(E)}|S>, amplitudes checked against dense matrices."""
    for _ in range(30):
        n = int(rng.integers(2, 8))
        g = random_graph(rng, n)
        psi = graph_state(g)
        err = PauliOperator(n, int(rng.integers(1 << n)), int(rng.integers(1 << n)))
        lhs = pauli_matrix(err) @ psi
        rhs = pauli_matrix(PauliOperator.z_type(n, translate_error(g, err))) @ psi
        assert min(np.max(np.abs(lhs - rhs)), np.max(np.abs(lhs + rhs))) < 1e-9


def test_graph_state_is_stabilized(rng):
    for _ in range(10):
        g = random_graph(rng, int(rng.integers(1, 9)))
        psi = graph_state(g)
        for s in graph_stabilizer(g):
            np.testing.assert_allclose(pauli_matrix(s) @ psi, psi, atol=1e-12)


@pytest.mark.parametrize("gate", ["H", "S", "SDG", "X", "Y", "Z"])
@pytest.mark.parametrize("letter", ["X", "Y", "Z", "-iY"])
def test_clifford_conjugation_matches_matrices(gate, letter):
    circ = LocalCliffordCircuit(2, ((gate, 1),))
    op = P("-iIY") if letter == "-iY" else P("I" + letter)
    unitary = np.column_stack([circ.apply(np.eye(4)[:, j]) for j in range(4)])
    expected = unitary @ pauli_matrix(op) @ unitary.conj().T
    np.testing.assert_allclose(pauli_matrix(circ.conjugate(op)), expected, atol=1e-12)


def test_standard_form_fixed_point():
    g = family("ring", 5)
    words = [PauliOperator.z_type(5, str_to_bits(c)) for c in ["00000", "11010", "01101"]]
    code, circuit = to_standard_form(graph_stabilizer(g), words)
    assert len(circuit) == 0
    assert code.graph == g
    assert code.codeword_strings() == ["00000", "11010", "01101"]


def _check_standard_form(stab, words, code, circuit):
    n = code.n
    graph_gens = graph_stabilizer(code.graph)
    # conjugated generators are exact products of graph generators (signs included)
    for s in stab:
        t = circuit.conjugate(s)
        prod = PauliOperator.identity(n)
        for l in range(n):
            if (t.u >> l) & 1:
                prod = multiply(prod, graph_gens[l])
        assert prod == t
    # codespace check on statevectors
    if n <= 8:
        psi_in = stabilizer_state(stab)
        target = graph_state(code.graph)
        assert abs(overlap(circuit.apply(psi_in), target) - 1) < 1e-9
        shift = translate_error(code.graph, circuit.conjugate(words[0]))
        for w, c in zip(words, code.codewords):
            mapped = circuit.apply(apply_pauli(w, psi_in))
            expected = apply_pauli(PauliOperator.z_type(n, c ^ shift), target)
            assert abs(overlap(mapped, expected) - 1) < 1e-9


def test_standard_form_ghz():
    stab = [P("XXX"), P("ZZI"), P("IZZ")]
    words = [P("III"), P("ZII")]
    code, circuit = to_standard_form(stab, words)
    assert len(code.graph.edges) >= 2
    _check_standard_form(stab, words, code, circuit)


def test_standard_form_ssw_is_star():
    n = 5
    stab = [P("XZZZZ"), P("ZXIII"), P("ZIXII"), P("ZIIXI"), P("ZIIIX")]
    code, circuit = to_standard_form(stab, [P("IIIII"), P("XIIII")])
    assert code.graph == family("star", n)
    assert code.codeword_strings() == ["00000", "01111"]


def test_standard_form_z_only_rows_and_signs():
    stab = [P("-ZZ"), P("XX")]
    words = [P("II"), P("ZI")]
    code, circuit = to_standard_form(stab, words)
    assert any(label == "H" for label, _ in circuit.gates)
    _check_standard_form(stab, words, code, circuit)


def test_standard_form_errors():
    with pytest.raises(ValueError):
        to_standard_form([P("X"), P("Z")], [P("I")])
    with pytest.raises(ValueError):
        to_standard_form([P("XI")], [P("II")])
    with pytest.raises(ValueError):
        to_standard_form([P("XI"), P("IX")], [P("ZI"), P("-ZI")])
    # Z1 and X1 Z1 differ by a stabilizer element, giving the same code vector
    with pytest.raises(ValueError):
        to_standard_form([P("XI"), P("IX")], [P("ZI"), P("-iYI")])


def test_standard_form_random(rng):
    for _ in range(40):
        n = int(rng.integers(1, 7))
        g = random_graph(rng, n)
        local = random_local_clifford(rng, n)
        stab = [local.conjugate(s) for s in graph_stabilizer(g)]
        K = int(rng.integers(1, min(6, 1 << n) + 1))
        picks = rng.choice(1 << n, size=K, replace=False)
        words = [local.conjugate(PauliOperator.z_type(n, int(c))) for c in picks]
        code, circuit = to_standard_form(stab, words)
        assert code.codewords[0] == 0
        _check_standard_form(stab, words, code, circuit)


def test_cws_code_canonical():
    g = family("ring", 5)
    code = CwsCode.from_strings(g, ["11111", "00000"])
    assert code.canonical().codeword_strings() == ["00000", "11111"]
    with pytest.raises(ValueError):
        CwsCode.from_strings(g, ["00000", "00000"])
    with pytest.raises(ValueError):
        CwsCode.from_strings(g, ["0000"])
