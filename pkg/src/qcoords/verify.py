"""Oracle cross-checks reported by the CLI `verify` command and the service."""
from __future__ import annotations

import math

from .core import StateVector, fidelity, partial_trace
from .gsd3 import assemble3, concurrences3, gsd_decompose
from .oracles import pure2_concurrence_oracle, three_tangle, wootters_mixed_concurrence
from .schmidt2 import assemble2, complex_concurrence2, schmidt_decompose

# residual name -> largest value still considered a pass
TOLERANCES = {
    "roundtrip_infidelity": 1e-9,
    "concurrence_vs_oracle": 1e-10,
    "c12_vs_wootters": 1e-8,
    "c13_vs_wootters": 1e-8,
    "c23_vs_wootters": 1e-8,
    "c123_vs_tangle": 1e-8,
    "bloch_norm_error": 1e-10,
}


def residuals(state: StateVector) -> dict[str, float]:
    """Cross-check the decomposition of one state against the oracles."""
    if state.num_qubits == 1:
        rho = partial_trace(state, (1,)).entries
        purity = float(abs((rho @ rho).trace().real))
        return {"bloch_norm_error": abs(1.0 - math.sqrt(max(0.0, 2.0 * purity - 1.0)))}
    if state.num_qubits == 2:
        coords = schmidt_decompose(state)
        return {
            "roundtrip_infidelity": max(0.0, 1.0 - fidelity(assemble2(coords), state)),
            "concurrence_vs_oracle": abs(
                abs(complex_concurrence2(coords)) - pure2_concurrence_oracle(state)
            ),
        }
    coords = gsd_decompose(state)
    c12, c13, c23, c123 = concurrences3(coords)
    return {
        "roundtrip_infidelity": max(0.0, 1.0 - fidelity(assemble3(coords), state)),
        "c12_vs_wootters": abs(c12 - wootters_mixed_concurrence(partial_trace(state, (1, 2)))),
        "c13_vs_wootters": abs(c13 - wootters_mixed_concurrence(partial_trace(state, (1, 3)))),
        "c23_vs_wootters": abs(c23 - wootters_mixed_concurrence(partial_trace(state, (2, 3)))),
        "c123_vs_tangle": abs(c123 - math.sqrt(three_tangle(state))),
    }


def residuals_pass(values: dict[str, float]) -> bool:
    return all(v <= TOLERANCES.get(k, 1e-9) for k, v in values.items())
