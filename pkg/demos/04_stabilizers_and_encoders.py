"""
From stabilizer codes to circuits
=================================

Any stabilizer code is a CWS code whose codewords form a linear space, and
the conversion works both ways. Encoders are a classical circuit followed by
the graph state preparation.
"""

import numpy as np

from cwscodes.bridge import (
    StabilizerPresentation,
    extract_stabilizer_presentation,
    is_stabilizer_code,
    stabilizer_to_cws,
)
from cwscodes.encoder import cws_encoder, simulate
from cwscodes.graph import to_standard_form
from cwscodes.io import load_builtin_code
from cwscodes.verify import build_statevector, distance

five = StabilizerPresentation.from_strings(
    ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"], logical_x=["XXXXX"], logical_z=["ZZZZZ"]
)
stab, words = stabilizer_to_cws(five)
code, local = to_standard_form(stab, words)
print("graph edges:", code.graph.edges)
print("codewords:", code.codeword_strings(), "local gates:", len(local))
print("distance:", distance(code), "stabilizer code:", is_stabilizer_code(code))

# Going back recovers generators for the same codespace.
again = extract_stabilizer_presentation(code)
print("generators:", [str(g) for g in again.generators])
print("logical X:", [str(x) for x in again.logical_x], "logical Z:", [str(z) for z in again.logical_z])

# Encoders. Linear codeword lists need only CNOTs; the twelve codewords of
# the nine-qubit code need a lookup permutation.
for name in ("5-2-3", "9-12-3"):
    code = load_builtin_code(name)
    enc = cws_encoder(code)
    states = build_statevector(code)
    worst = max(1 - abs(np.vdot(states[i], simulate(enc, i))) ** 2 for i in range(code.K))
    print(f"{name}: {enc.count('H')} H, {enc.count('CZ')} CZ, {enc.count('CX')} CX, "
          f"{enc.count('LOOKUP')} LOOKUP, worst infidelity {worst:.1e}")
