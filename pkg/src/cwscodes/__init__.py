"""Codeword stabilized quantum codes: construction, verification, search and encoding."""

from cwscodes.graph import (
    CwsCode,
    Graph,
    LocalCliffordCircuit,
    graph_stabilizer,
    to_standard_form,
    translate_error,
    translate_error_set,
)
from cwscodes.pauli import PauliOperator, commutes, enumerate_errors, is_valid_stabilizer, multiply, weight
from cwscodes.verify import (
    DetectionReport,
    Distance,
    KLCheckResult,
    build_statevector,
    check_detection,
    distance,
    kl_oracle,
)

__version__ = "0.1.0"
