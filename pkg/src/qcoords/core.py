"""State vectors, reduced density matrices, and Bloch geometry for 1-3 qubits.

Indexing is big-endian: qubit 1 is the most significant bit, so for three
qubits the amplitude of |q1 q2 q3> sits at index 4*q1 + 2*q2 + q3.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadSubsystem, DimensionMismatch, NotDensityMatrix, ZeroVector
from .su2 import require_unitary
from .tolerances import EPS_EIG, EPS_NORM

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized pure state of 1-3 qubits."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes.setflags(write=False)

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape([2] * self.num_qubits)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    dim: int
    entries: np.ndarray

    def __post_init__(self):
        self.entries.setflags(write=False)


@dataclass(frozen=True)
class BlochPoint:
    x: float
    y: float
    z: float

    def norm(self) -> float:
        return float(np.sqrt(self.x**2 + self.y**2 + self.z**2))


def make_state(amplitudes, num_qubits: int) -> StateVector:
    """Normalize raw amplitudes into a StateVector.

    Raises ZeroVector when every amplitude is below 1e-14 in modulus and
    DimensionMismatch when the length is not 2**num_qubits.
    """
    a = np.asarray(amplitudes, dtype=complex).reshape(-1)
    if num_qubits not in (1, 2, 3):
        raise DimensionMismatch(f"num_qubits must be 1, 2, or 3, got {num_qubits}")
    if a.shape[0] != 2**num_qubits:
        raise DimensionMismatch(
            f"expected {2**num_qubits} amplitudes for {num_qubits} qubits, got {a.shape[0]}"
        )
    if not np.isfinite(a).all():
        raise ValueError("amplitudes must be finite")
    if np.max(np.abs(a)) < 1e-14:
        raise ZeroVector("all amplitudes are numerically zero")
    return StateVector(num_qubits=num_qubits, amplitudes=a / np.linalg.norm(a))


def make_density(entries, check: bool = True) -> DensityMatrix:
    m = np.asarray(entries, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch("density matrix must be square")
    if check:
        if np.max(np.abs(m - m.conj().T)) > EPS_NORM:
            raise NotDensityMatrix("matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > 1e-10 or abs(np.trace(m).imag) > EPS_NORM:
            raise NotDensityMatrix("trace is not 1")
        if np.min(np.linalg.eigvalsh((m + m.conj().T) / 2.0)) < -EPS_EIG:
            raise NotDensityMatrix("matrix has a negative eigenvalue")
    return DensityMatrix(dim=m.shape[0], entries=m)


def _validate_subsystem(indices, num_qubits: int) -> tuple[int, ...]:
    idx = tuple(indices)
    if len(idx) == 0:
        raise BadSubsystem("subsystem selection is empty")
    if len(set(idx)) != len(idx):
        raise BadSubsystem(f"repeated qubit index in {idx}")
    for q in idx:
        if not 1 <= q <= num_qubits:
            raise BadSubsystem(f"qubit index {q} out of range 1..{num_qubits}")
    return idx


def partial_trace(state: StateVector, keep) -> DensityMatrix:
    """Reduced density matrix of the kept qubits, in their big-endian order."""
    kept = tuple(sorted(_validate_subsystem(keep, state.num_qubits)))
    n = state.num_qubits
    psi = state.tensor()
    keep_axes = [q - 1 for q in kept]
    drop_axes = [ax for ax in range(n) if ax not in keep_axes]
    a = np.transpose(psi, keep_axes + drop_axes).reshape(
        2 ** len(keep_axes), 2 ** len(drop_axes)
    )
    return make_density(a @ a.conj().T, check=False)


def bloch_vector(rho: DensityMatrix) -> BlochPoint:
    """(Tr rho X, Tr rho Y, Tr rho Z) of a single-qubit density matrix."""
    if rho.dim != 2:
        raise DimensionMismatch(f"bloch_vector needs a 2x2 matrix, got dim {rho.dim}")
    m = rho.entries
    return BlochPoint(
        x=float(np.trace(m @ PAULI_X).real),
        y=float(np.trace(m @ PAULI_Y).real),
        z=float(np.trace(m @ PAULI_Z).real),
    )


def apply_unitary(state: StateVector, targets, u: np.ndarray) -> StateVector:
    """Apply a unitary to the listed qubits (in the given order)."""
    idx = _validate_subsystem(targets, state.num_qubits)
    u = require_unitary(u)
    k = len(idx)
    if u.shape != (2**k, 2**k):
        raise DimensionMismatch(
            f"unitary of shape {u.shape} does not act on {k} qubit(s)"
        )
    n = state.num_qubits
    psi = state.tensor()
    axes = [q - 1 for q in idx]
    rest = [ax for ax in range(n) if ax not in axes]
    work = np.transpose(psi, axes + rest).reshape(2**k, -1)
    work = u @ work
    out = np.transpose(
        work.reshape([2] * n), np.argsort(axes + rest)
    ).reshape(-1)
    return StateVector(num_qubits=n, amplitudes=out)


def fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|, insensitive to global phase."""
    if a.num_qubits != b.num_qubits:
        raise DimensionMismatch("states have different qubit counts")
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)))
