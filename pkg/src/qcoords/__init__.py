"""Canonical coordinates for 2- and 3-qubit pure states.

Separates local degrees of freedom (Bloch frames) from entanglement degrees
of freedom (complex concurrences), with forward assembly, inverse
reconstruction, figure rendering, and gate-by-gate dynamics.
"""

from .core import (
    BlochPoint,
    DensityMatrix,
    StateVector,
    apply_unitary,
    bloch_vector,
    fidelity,
    make_state,
    partial_trace,
)
from .coords import (
    CoordinateSet,
    build_coordinate_set,
    from_json,
    invert_coordinate_set,
    to_json,
)
from .dynamics import TrajectoryPoint, continuity_select, trajectory
from .figures import RenderOptions, render_figure
from .gates import Gate, apply_gate, gate_matrix, parse_gate_list
from .gsd3 import (
    CanonicalGSD,
    ComplexConcurrenceSet,
    ThreeQubitCoordinates,
    assemble3,
    complex_concurrences3,
    concurrences3,
    gsd_canonical,
    gsd_decompose,
    invert_candidates,
    invert_coordinates,
    to_alpha_form,
)
from .ketparse import NAMED_STATES, format_amplitudes, parse_state_spec
from .oracles import pure2_concurrence_oracle, three_tangle, wootters_mixed_concurrence
from .schmidt2 import (
    TwoQubitCoordinates,
    assemble2,
    canonicalize_maximal,
    complex_concurrence2,
    schmidt_decompose,
)
from .su2 import EulerAngles, LocalFrame, frame_unitary, zyz_decompose

__version__ = "0.1.0"

__all__ = [
    "BlochPoint", "CanonicalGSD", "ComplexConcurrenceSet", "CoordinateSet",
    "DensityMatrix", "EulerAngles", "Gate", "LocalFrame", "NAMED_STATES",
    "RenderOptions", "StateVector", "ThreeQubitCoordinates", "TrajectoryPoint",
    "TwoQubitCoordinates", "apply_gate", "apply_unitary", "assemble2",
    "assemble3", "bloch_vector", "build_coordinate_set", "canonicalize_maximal",
    "complex_concurrence2", "complex_concurrences3", "concurrences3",
    "continuity_select", "fidelity", "format_amplitudes", "from_json",
    "frame_unitary", "gate_matrix", "gsd_canonical", "gsd_decompose",
    "invert_candidates", "invert_coordinate_set", "invert_coordinates",
    "make_state", "parse_gate_list", "parse_state_spec",
    "partial_trace", "pure2_concurrence_oracle", "render_figure",
    "schmidt_decompose", "three_tangle", "to_alpha_form", "to_json",
    "trajectory", "wootters_mixed_concurrence", "zyz_decompose",
]
