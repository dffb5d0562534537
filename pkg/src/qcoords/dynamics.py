"""Gate trajectories with gauge continuity across ambiguous decompositions.

Each gate is split into fractional powers of its generator; at every substep
the coordinates are chosen among gauge-equivalent candidates to minimize a
product metric against the previous point.  Near two-qubit maximal
entanglement (where the decomposition is not unique) the previous frames are
transported forward in closed form as an extra candidate; for three qubits
both determinant-pencil roots are offered.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coords import (
    CoordinateSet,
    build_coordinate_set,
    coordinate_set_from_three,
    coordinate_set_from_two,
)
from .core import StateVector, fidelity
from .errors import EmptyCandidates
from .gates import Gate, apply_gate, fractional_power, gate_matrix
from .core import apply_unitary
from .gsd3 import assemble3, gsd_decompose_all
from .schmidt2 import refit_with_frames
from .su2 import circular_distance, frame_geodesic
from .tolerances import EPS_TRAJ_DEGENERATE, EPS_TRAJ_DEGENERATE_EXIT


@dataclass(frozen=True)
class TrajectoryPoint:
    step_index: int
    state: StateVector
    coords: CoordinateSet


def coordinate_distance(a: CoordinateSet, b: CoordinateSet) -> float:
    """Sum of frame geodesics plus circular distances of the alpha phases."""
    if a.num_qubits != b.num_qubits:
        raise EmptyCandidates("coordinate sets of different systems are not comparable")
    d = sum(frame_geodesic(fa, fb) for fa, fb in zip(a.frames, b.frames))
    if a.two_q is not None and b.two_q is not None:
        d += circular_distance(a.two_q.alpha, b.two_q.alpha)
    elif a.three_q is not None and b.three_q is not None:
        d += sum(circular_distance(x, y) for x, y in zip(a.three_q.alpha, b.three_q.alpha))
    return d


def continuity_select(prev: CoordinateSet, candidates: list[CoordinateSet]) -> CoordinateSet:
    """Candidate closest to prev; ties fall back to the static canonical order.

    Candidates are expected in canonical-preference order (the canonical
    representative first), which makes the tie-break deterministic.
    """
    if not candidates:
        raise EmptyCandidates("no candidate coordinates supplied")
    best = candidates[0]
    best_d = coordinate_distance(prev, best)
    for cand in candidates[1:]:
        d = coordinate_distance(prev, cand)
        if d < best_d - 1e-12:
            best = cand
            best_d = d
    return best


def gauge_candidates(
    state: StateVector,
    prev: CoordinateSet | None,
    gauge_active: bool,
    canonical: CoordinateSet | None = None,
) -> list[CoordinateSet]:
    """Canonical coordinates plus any valid gauge alternates."""
    if canonical is None:
        canonical = build_coordinate_set(state)
    cands = [canonical]
    if state.num_qubits == 2 and prev is not None and gauge_active:
        refit = refit_with_frames(state, prev.frames[0], prev.frames[1])
        if refit is not None:
            cands.append(
                coordinate_set_from_two(state, refit, extra_notes=("continuity_gauge",))
            )
    elif state.num_qubits == 3:
        alternates = gsd_decompose_all(state)[1:]
        for alt in alternates:
            if fidelity(assemble3(alt), state) >= 1.0 - 1e-9:
                cands.append(
                    coordinate_set_from_three(state, alt, extra_notes=("continuity_gauge",))
                )
    return cands


def _schmidt_gap(cs: CoordinateSet) -> float | None:
    if cs.two_q is None:
        return None
    return abs(cs.two_q.lambda0 - cs.two_q.lambda1)


def trajectory(
    initial: StateVector,
    gates: list[Gate],
    steps_per_gate: int = 1,
    prev_coordinates: CoordinateSet | None = None,
) -> list[TrajectoryPoint]:
    """Evolve a state through a gate list, keeping coordinates continuous.

    Returns 1 + steps_per_gate * len(gates) points; the first one describes
    the initial state (continuity-selected against prev_coordinates when a
    caller carries state across calls).
    """
    if steps_per_gate < 1:
        raise ValueError("steps_per_gate must be >= 1")

    gauge_active = False
    prev = prev_coordinates
    points: list[TrajectoryPoint] = []

    def emit(idx: int, st: StateVector) -> CoordinateSet:
        nonlocal gauge_active, prev
        canonical = build_coordinate_set(st)
        gap = _schmidt_gap(canonical)
        if gap is not None:
            if not gauge_active and gap < EPS_TRAJ_DEGENERATE:
                gauge_active = True
            elif gauge_active and gap > EPS_TRAJ_DEGENERATE_EXIT:
                gauge_active = False
        cands = gauge_candidates(st, prev, gauge_active, canonical=canonical)
        coords = continuity_select(prev, cands) if prev is not None else cands[0]
        points.append(TrajectoryPoint(step_index=idx, state=st, coords=coords))
        prev = coords
        return coords

    emit(0, initial)
    idx = 1
    state = initial
    for gate in gates:
        if steps_per_gate == 1:
            state = apply_gate(state, gate)
            emit(idx, state)
            idx += 1
            continue
        seg_start = state
        u = gate_matrix(gate)
        for k in range(1, steps_per_gate + 1):
            uk = fractional_power(u, k / steps_per_gate)
            state = apply_unitary(seg_start, gate.targets, uk)
            emit(idx, state)
            idx += 1
    return points


def always_canonical(points: list[TrajectoryPoint]) -> list[CoordinateSet]:
    """Static canonical coordinates of every point, ignoring continuity."""
    return [build_coordinate_set(p.state) for p in points]
