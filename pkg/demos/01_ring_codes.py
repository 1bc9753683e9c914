"""
Codes on the five-vertex ring
=============================

A graph state plus a handful of classical codewords is all it takes to
describe a CWS code. This walk-through stays on the ring of five qubits.
"""

import numpy as np

from cwscodes import CwsCode, PauliOperator, graph_stabilizer, translate_error
from cwscodes.pauli import bits_to_str
from cwscodes.io import load_builtin_code
from cwscodes.search import family
from cwscodes.verify import check_detection, distance, kl_oracle

ring = family("ring", 5)
print("generators:", [str(s) for s in graph_stabilizer(ring)])

# Every Pauli error acts on the graph state like a pure Z error.
# Print the effective Z pattern for each single-qubit error.
for letter in "ZXY":
    row = [bits_to_str(translate_error(ring, PauliOperator.single(5, q, letter)), 5) for q in range(5)]
    print(letter, " ".join(row))

# Two codewords, all zeros and all ones, give the five-qubit code.
five = CwsCode(ring, (0, 0b11111))
print("((5,2)) distance:", distance(five))

# The six-word code detects every single-qubit error but not all pairs.
six = load_builtin_code("5-6-2")
report = check_detection(six, 2)
print("((5,6)) weight-2 check:", report.passed, report.failing_error, report.failure_kind.value)
print("((5,6)) distance:", distance(six))

# Same answer from dense state vectors and the Knill-Laflamme matrices.
kl = kl_oracle(six, 1)
print("largest KL violation at weight 1: %.1e" % kl.max_violation)
print("largest KL violation at weight 2: %.1e" % kl_oracle(six, 2).max_violation)
print("c_E for ZIIII:", np.round(kl.c_E["ZIIII"], 12))
