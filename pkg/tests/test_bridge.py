import numpy as np
import pytest

from cwscodes.bridge import (
    StabilizerPresentation,
    extract_stabilizer_presentation,
    is_stabilizer_code,
    stabilizer_to_cws,
)
from cwscodes.graph import CwsCode, Graph, to_standard_form
from cwscodes.io import load_builtin_code
from cwscodes.pauli import PauliOperator
from cwscodes.search import family
from cwscodes.verify import apply_pauli, build_statevector, distance, stabilizer_state
from conftest import pauli_matrix, random_graph

FIVE_QUBIT = StabilizerPresentation.from_strings(
    ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"], ["XXXXX"], ["ZZZZZ"]
)


def projector(gens, n):
    proj = np.eye(1 << n, dtype=complex)
    for g in gens:
        proj = proj @ (np.eye(1 << n) + pauli_matrix(g)) / 2
    return proj


def test_presentation_validation():
    with pytest.raises(ValueError):
        StabilizerPresentation.from_strings(["XZZXI", "IXZZX", "XIXZZ"], ["XXXXX"], ["ZZZZZ"])
    with pytest.raises(ValueError):
        StabilizerPresentation.from_strings(["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"], ["XXXXX"], ["XXXXX"])
    with pytest.raises(ValueError):
        StabilizerPresentation.from_strings(["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"], ["ZIIII"], ["ZZZZZ"])


def test_five_qubit_code_to_cws():
    stab, words = stabilizer_to_cws(FIVE_QUBIT)
    assert len(stab) == 5 and len(words) == 2
    code, _ = to_standard_form(stab, words)
    assert code.K == 2
    assert distance(code, 3) == (3, True)
    assert is_stabilizer_code(code) == (True, 1)


def test_cws_basis_is_logical_basis():
    stab, words = stabilizer_to_cws(FIVE_QUBIT)
    psi = stabilizer_state(stab)
    for v, w in enumerate(words):
        state = apply_pauli(w, psi)
        for g in FIVE_QUBIT.generators:
            np.testing.assert_allclose(apply_pauli(g, state), state, atol=1e-9)
        zbar = apply_pauli(FIVE_QUBIT.logical_z[0], state)
        np.testing.assert_allclose(zbar, (-1) ** v * state, atol=1e-9)


def test_stabilizer_state_k0():
    p = StabilizerPresentation.from_strings(["XX", "ZZ"])
    stab, words = stabilizer_to_cws(p)
    assert words == [PauliOperator.identity(2)]
    code, _ = to_standard_form(stab, words)
    assert code.K == 1


def test_trivial_one_qubit_code():
    p = StabilizerPresentation.from_strings([], ["X"], ["Z"])
    code, _ = to_standard_form(*stabilizer_to_cws(p))
    assert code.n == 1 and code.codeword_strings() == ["0", "1"]
    assert distance(code, 1) == (1, True)


def test_is_stabilizer_code_examples():
    assert is_stabilizer_code(load_builtin_code("5-2-3")) == (True, 1)
    assert is_stabilizer_code(load_builtin_code("5-6-2")) == (False, None)
    assert is_stabilizer_code(load_builtin_code("9-12-3")) == (False, None)
    g = family("ring", 5)
    assert is_stabilizer_code(CwsCode.from_strings(g, ["11111", "00000", "10000", "01111"]))[0]
    assert not is_stabilizer_code(CwsCode.from_strings(g, ["11111", "10000"]))[0]


def test_extract_ring5():
    code = load_builtin_code("5-2-3")
    pres = extract_stabilizer_presentation(code)
    assert (pres.n, pres.k, len(pres.generators)) == (5, 1, 4)
    states = build_statevector(code)
    code_proj = states.T @ states.conj()
    np.testing.assert_allclose(projector(pres.generators, 5), code_proj, atol=1e-9)


def test_extract_k0_is_graph_stabilizer():
    g = family("ring", 4)
    pres = extract_stabilizer_presentation(CwsCode(g, (0,)))
    assert pres.k == 0 and len(pres.generators) == 4
    np.testing.assert_allclose(projector(pres.generators, 4), projector(pres.generators, 4) @ projector(pres.generators, 4))


def test_extract_empty_graph_null_space():
    g = Graph.empty(4)
    code = CwsCode.from_strings(g, ["0000", "1100", "0011", "1111"])
    pres = extract_stabilizer_presentation(code)
    assert pres.k == 2
    for t in pres.generators:
        assert t.v == 0
        assert all((t.u & c).bit_count() % 2 == 0 for c in code.codewords)
    with pytest.raises(ValueError):
        extract_stabilizer_presentation(load_builtin_code("5-6-2"))


def test_round_trip_random(rng):
    for _ in range(25):
        n = int(rng.integers(2, 8))
        g = random_graph(rng, n)
        k = int(rng.integers(0, n + 1))
        basis = [int(x) for x in rng.integers(1, 1 << n, size=k)]
        span = {0}
        for b in basis:
            span |= {s ^ b for s in span}
        code = CwsCode(g, tuple(sorted(span)))
        ok, k_code = is_stabilizer_code(code)
        assert ok
        pres = extract_stabilizer_presentation(code)
        again, _ = to_standard_form(*stabilizer_to_cws(pres))
        assert is_stabilizer_code(again) == (True, k_code)
        states = build_statevector(code)
        for t in pres.generators:
            np.testing.assert_allclose(apply_pauli(t, states), states, atol=1e-9)
