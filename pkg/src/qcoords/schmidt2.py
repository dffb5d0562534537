"""Phase-separated Schmidt decomposition of two-qubit pure states.

A state is written as (U1 x U2)(lambda0 |00> + e^{i alpha} lambda1 |11>)
with U_j = Rz(phi_j) Ry(theta_j), so the frames carry the local Bloch
orientation and alpha carries the two-body interference phase.  The modulus
of the complex concurrence 2 e^{i alpha} lambda0 lambda1 is the ordinary
concurrence.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from .core import StateVector, fidelity, make_state
from .errors import DimensionMismatch, NotMaximal
from .su2 import (
    LocalFrame,
    bloch_angles_of_ket,
    frame_unitary,
    rz,
    ry,
    to_special_unitary,
    wrap_angle,
    zyz_decompose,
)
from .tolerances import EPS_DEGENERATE, EPS_NORM, EPS_ZERO


@dataclass(frozen=True)
class TwoQubitCoordinates:
    """Canonical coordinate tuple (lambdas, alpha, two local frames)."""

    lambda0: float
    lambda1: float
    alpha: float
    frame1: LocalFrame
    frame2: LocalFrame
    maximal_gauge_fixed: bool = False

    def __post_init__(self):
        if not 0.0 <= self.lambda1 <= self.lambda0 + 1e-12:
            raise ValueError(f"need 0 <= lambda1 <= lambda0, got {self.lambda1}, {self.lambda0}")
        if abs(self.lambda0**2 + self.lambda1**2 - 1.0) > EPS_NORM:
            raise ValueError("Schmidt coefficients are not normalized")
        if self.lambda1 == 0.0 and self.alpha != 0.0:
            raise ValueError("alpha must be 0 for product coordinates")
        if (
            self.maximal_gauge_fixed
            and abs(self.lambda0 - self.lambda1) < EPS_DEGENERATE
            and (self.frame2.phi != 0.0 or self.frame2.theta != 0.0)
        ):
            raise ValueError("gauge-fixed maximal coordinates must have frame2 = (0,0)")


def _normalize_column_phases(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Rotate each column so its largest-modulus entry is real positive.

    Returns the adjusted matrix and the phases that were divided out.
    """
    out = m.copy()
    phases = np.ones(m.shape[1], dtype=complex)
    for k in range(m.shape[1]):
        col = out[:, k]
        j = int(np.argmax(np.abs(col)))
        if abs(col[j]) > 1e-14:
            ph = col[j] / abs(col[j])
            out[:, k] = col / ph
            phases[k] = ph
    return out, phases


def schmidt_decompose(state: StateVector) -> TwoQubitCoordinates:
    """Canonical coordinates of a normalized two-qubit state.

    The amplitude matrix M[i][j] = <ij|psi> is SVD-factored; both singular
    bases are column-phase normalized and projected to SU(2), their ZYZ
    trailing z-angles and global phases are folded into a single relative
    phase between the Schmidt terms, and the |00> coefficient is made real
    positive by discarding a global phase.  At maximal entanglement the
    section 2.3-style gauge fix (frame2 = (0,0)) is applied automatically.
    """
    if state.num_qubits != 2:
        raise DimensionMismatch("schmidt_decompose expects a 2-qubit state")
    m = state.amplitudes.reshape(2, 2)
    u, s, vh = np.linalg.svd(m)
    a, b = u, vh.T  # m = a @ diag(s) @ b.T

    lam0, lam1 = float(s[0]), float(s[1])
    if lam1 < EPS_ZERO:
        # Product state: frames from the local preparation directions.
        a_norm, _ = _normalize_column_phases(a)
        b_norm, _ = _normalize_column_phases(b)
        return TwoQubitCoordinates(
            lambda0=1.0,
            lambda1=0.0,
            alpha=0.0,
            frame1=bloch_angles_of_ket(a_norm[:, 0]),
            frame2=bloch_angles_of_ket(b_norm[:, 0]),
        )

    a_norm, pa = _normalize_column_phases(a)
    b_norm, pb = _normalize_column_phases(b)
    core = s.astype(complex) * pa * pb  # coefficients of |00>, |11>

    a_su, da = to_special_unitary(a_norm)
    b_su, db = to_special_unitary(b_norm)
    core = core * cmath.exp(1j * (da + db))

    za = zyz_decompose(a_su)
    zb = zyz_decompose(b_su)
    sigma = za.phi_prime + zb.phi_prime
    # Trailing Rz factors put -sigma/2 on |00> and +sigma/2 on |11>; the
    # zyz global phases multiply both.
    alpha = wrap_angle(cmath.phase(core[1]) - cmath.phase(core[0]) + sigma)

    coords = TwoQubitCoordinates(
        lambda0=lam0,
        lambda1=lam1,
        alpha=alpha,
        frame1=LocalFrame(za.phi, za.theta),
        frame2=LocalFrame(zb.phi, zb.theta),
    )
    if abs(lam0 - lam1) < EPS_DEGENERATE:
        coords = canonicalize_maximal(coords)
    return coords


def complex_concurrence2(coords: TwoQubitCoordinates) -> complex:
    """2 e^{i alpha} lambda0 lambda1; the modulus is the concurrence."""
    return 2.0 * cmath.exp(1j * coords.alpha) * coords.lambda0 * coords.lambda1


def assemble2(coords: TwoQubitCoordinates) -> StateVector:
    """Forward evaluation (U1 x U2)(lambda0 |00> + e^{i alpha} lambda1 |11>)."""
    core = np.zeros(4, dtype=complex)
    core[0] = coords.lambda0
    core[3] = coords.lambda1 * cmath.exp(1j * coords.alpha)
    u = np.kron(frame_unitary(coords.frame1), frame_unitary(coords.frame2))
    return make_state(u @ core, 2)


def canonicalize_maximal(coords: TwoQubitCoordinates) -> TwoQubitCoordinates:
    """Gauge-fix maximally entangled coordinates to frame2 = (0,0).

    Uses the ricochet identity: a frame (phi, theta) on one qubit of a
    maximally entangled pair with phase alpha equals frame (alpha, -theta)
    on the other qubit with phase phi.
    """
    if abs(coords.lambda0 - coords.lambda1) >= EPS_DEGENERATE:
        raise NotMaximal("state is not maximally entangled within 1e-9")
    f2 = coords.frame2
    if f2.phi == 0.0 and f2.theta == 0.0:
        return replace(coords, maximal_gauge_fixed=True)
    # (I x Rz(p2) Ry(t2)) |Phi_a> ~ (Rz(a) Ry(-t2) x I) |Phi_p2>
    w = frame_unitary(coords.frame1) @ rz(coords.alpha) @ ry(-f2.theta)
    zw = zyz_decompose(w)
    return TwoQubitCoordinates(
        lambda0=coords.lambda0,
        lambda1=coords.lambda1,
        alpha=wrap_angle(f2.phi + zw.phi_prime),
        frame1=LocalFrame(zw.phi, zw.theta),
        frame2=LocalFrame(0.0, 0.0),
        maximal_gauge_fixed=True,
    )


def refit_with_frames(
    state: StateVector,
    frame1: LocalFrame,
    frame2: LocalFrame,
    min_fidelity: float = 1.0 - 1e-9,
) -> TwoQubitCoordinates | None:
    """Re-express a near-maximal state using the given frames, if possible.

    Strips the frames off the state, reads the |00> and |11> coefficients,
    and clamps the Schmidt pair to exactly equal weights.  Returns None
    when the result does not reproduce the state to min_fidelity; this is
    the closed-form transport used to keep trajectories continuous.
    """
    if state.num_qubits != 2:
        raise DimensionMismatch("refit_with_frames expects a 2-qubit state")
    u = np.kron(frame_unitary(frame1), frame_unitary(frame2))
    d = u.conj().T @ state.amplitudes
    c0, c1 = d[0], d[3]
    if abs(c0) < EPS_ZERO or abs(c1) < EPS_ZERO:
        return None
    inv_norm = 1.0 / math.sqrt(2.0)
    coords = TwoQubitCoordinates(
        lambda0=inv_norm,
        lambda1=inv_norm,
        alpha=wrap_angle(cmath.phase(c1) - cmath.phase(c0)),
        frame1=frame1,
        frame2=frame2,
    )
    if fidelity(assemble2(coords), state) < min_fidelity:
        return None
    return coords
