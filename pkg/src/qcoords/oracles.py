"""Formula-level entanglement oracles used to cross-check the decompositions.

Deliberately share nothing with schmidt2/gsd3 beyond the core types, so a
bug in the pipeline cannot validate itself.
"""
from __future__ import annotations

import numpy as np

from .core import DensityMatrix, StateVector
from .errors import DimensionMismatch, NotDensityMatrix
from .tolerances import EPS_EIG, EPS_NORM

_YY = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)


def pure2_concurrence_oracle(state: StateVector) -> float:
    """Pure-state concurrence 2 |t00 t11 - t01 t10|."""
    if state.num_qubits != 2:
        raise DimensionMismatch("concurrence oracle expects a 2-qubit state")
    t = state.amplitudes
    return float(min(1.0, 2.0 * abs(t[0] * t[3] - t[1] * t[2])))


def wootters_mixed_concurrence(rho: DensityMatrix) -> float:
    """Spin-flip concurrence max(0, sqrt(e1)-sqrt(e2)-sqrt(e3)-sqrt(e4)).

    The eigenvalues of rho * rho_tilde are obtained through the Hermitian
    similarity sqrt(rho) rho_tilde sqrt(rho), which keeps the solver on a
    real spectrum.
    """
    if rho.dim != 4:
        raise DimensionMismatch("Wootters concurrence expects a 4x4 density matrix")
    m = rho.entries
    if np.max(np.abs(m - m.conj().T)) > 1e-10:
        raise NotDensityMatrix("matrix is not Hermitian")
    if abs(np.trace(m).real - 1.0) > 1e-8:
        raise NotDensityMatrix("trace is not 1")
    evals, vecs = np.linalg.eigh(m)
    if evals.min() < -EPS_EIG:
        raise NotDensityMatrix("matrix has a negative eigenvalue")
    # Work in the eigenbasis of rho so the null space contributes exact
    # zeros; taking sqrt of eigenvalue noise would otherwise cost ~1e-8.
    p = np.clip(evals, 0.0, None)
    p[p < 1e-14] = 0.0
    sp = np.sqrt(p)
    rho_tilde = _YY @ m.conj() @ _YY
    b = vecs.conj().T @ rho_tilde @ vecs
    herm = np.outer(sp, sp) * b  # diag(sp) b diag(sp) = sqrt(rho) rho_tilde sqrt(rho) in this basis
    herm = (herm + herm.conj().T) / 2.0
    e = np.sqrt(np.clip(np.linalg.eigvalsh(herm), 0.0, None))
    e = np.sort(e)[::-1]
    return float(max(0.0, e[0] - e[1] - e[2] - e[3]))


def three_tangle(state: StateVector) -> float:
    """3-tangle tau = 4 |d1 - 2 d2 + 4 d3| from the Cayley hyperdeterminant."""
    if state.num_qubits != 3:
        raise DimensionMismatch("three_tangle expects a 3-qubit state")
    t = state.amplitudes
    t000, t001, t010, t011, t100, t101, t110, t111 = t
    d1 = (
        t000**2 * t111**2
        + t001**2 * t110**2
        + t010**2 * t101**2
        + t100**2 * t011**2
    )
    d2 = (
        t000 * t111 * t011 * t100
        + t000 * t111 * t101 * t010
        + t000 * t111 * t110 * t001
        + t011 * t100 * t101 * t010
        + t011 * t100 * t110 * t001
        + t101 * t010 * t110 * t001
    )
    d3 = t000 * t110 * t101 * t011 + t111 * t001 * t010 * t100
    tau = 4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3)
    return float(min(1.0 + EPS_NORM, tau))
