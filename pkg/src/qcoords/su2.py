"""SU(2) rotation machinery: Rz/Ry factors, local frames, ZYZ Euler angles.

Conventions: Rz(phi) = exp(-i Z phi/2), Ry(theta) = exp(-i Y theta/2), and a
local frame (phi, theta) stands for the unitary Rz(phi) Ry(theta).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NotUnitary
from .tolerances import EPS_MATCH, EPS_POLE

TWO_PI = 2.0 * math.pi


def wrap_angle(a: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    a = math.fmod(a, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI:  # fmod can land exactly on 2*pi after the add
        a -= TWO_PI
    return a


def circular_distance(a: float, b: float) -> float:
    """Shortest angular distance between two angles, in [0, pi]."""
    d = abs(wrap_angle(a) - wrap_angle(b))
    return min(d, TWO_PI - d)


@dataclass(frozen=True)
class LocalFrame:
    """Longitude/latitude pair (phi, theta) of a residual local rotation."""

    phi: float
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "phi", wrap_angle(self.phi))
        if not -1e-12 <= self.theta <= math.pi + 1e-12:
            raise ValueError(f"theta out of [0, pi]: {self.theta}")
        object.__setattr__(self, "theta", min(max(self.theta, 0.0), math.pi))

    def as_tuple(self) -> tuple[float, float]:
        return (self.phi, self.theta)


@dataclass(frozen=True)
class EulerAngles:
    """ZYZ angles with global phase: e^{i g} Rz(phi) Ry(theta) Rz(phi_prime)."""

    phi: float
    theta: float
    phi_prime: float
    global_phase: float


def rz(phi: float) -> np.ndarray:
    return np.array(
        [[cmath.exp(-0.5j * phi), 0.0], [0.0, cmath.exp(0.5j * phi)]],
        dtype=complex,
    )


def ry(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array([[c, -s], [s, c]], dtype=complex)


def frame_unitary(frame: LocalFrame) -> np.ndarray:
    """Rz(phi) Ry(theta) in the half-angle convention; always det = 1."""
    return rz(frame.phi) @ ry(frame.theta)


def is_unitary(u: np.ndarray, tol: float = EPS_MATCH) -> bool:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= tol)


def require_unitary(u: np.ndarray, tol: float = EPS_MATCH) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if not is_unitary(u, tol):
        raise NotUnitary("matrix is not unitary within tolerance")
    return u


def to_special_unitary(u: np.ndarray) -> tuple[np.ndarray, float]:
    """Project a U(2) matrix onto SU(2); return (s, delta) with u = e^{i delta} s.

    The sqrt-det branch is fixed so the (0,0) entry of s has argument in
    (-pi/2, pi/2], falling back to the (1,0) entry when (0,0) vanishes.
    """
    u = np.asarray(u, dtype=complex)
    root = np.sqrt(np.linalg.det(u))
    pivot = u[0, 0] if abs(u[0, 0]) > 1e-14 else u[1, 0]
    # Two branches +/- root; pick the one putting the pivot's argument in
    # (-pi/2, pi/2].
    arg = cmath.phase(pivot / root)
    if not (-math.pi / 2.0 < arg <= math.pi / 2.0):
        root = -root
    s = u / root
    return s, wrap_angle(cmath.phase(root))


def zyz_decompose(u: np.ndarray) -> EulerAngles:
    """ZYZ Euler decomposition of a single-qubit unitary.

    At theta in {0, pi} the split between the two z-rotations is degenerate;
    the convention here folds everything into phi and sets phi_prime = 0.
    """
    u = require_unitary(u)
    if u.shape != (2, 2):
        raise NotUnitary("expected a 2x2 matrix")
    s, _ = to_special_unitary(u)

    c = abs(s[0, 0])
    sn = abs(s[1, 0])
    theta = 2.0 * math.atan2(sn, c)
    if sn <= EPS_POLE:
        phi = wrap_angle(2.0 * cmath.phase(s[1, 1]))
        phi_prime = 0.0
        theta = 0.0
    elif c <= EPS_POLE:
        phi = wrap_angle(2.0 * cmath.phase(s[1, 0]))
        phi_prime = 0.0
        theta = math.pi
    else:
        a11 = cmath.phase(s[1, 1])
        a10 = cmath.phase(s[1, 0])
        phi = wrap_angle(a11 + a10)
        phi_prime = wrap_angle(a11 - a10)

    rebuilt = rz(phi) @ ry(theta) @ rz(phi_prime)
    # u = e^{i g} rebuilt; the trace of rebuilt^H u is 2 e^{i g}.
    g = wrap_angle(cmath.phase(np.trace(rebuilt.conj().T @ u)))
    return EulerAngles(phi=phi, theta=theta, phi_prime=phi_prime, global_phase=g)


def reconstruct_zyz(angles: EulerAngles) -> np.ndarray:
    return cmath.exp(1j * angles.global_phase) * (
        rz(angles.phi) @ ry(angles.theta) @ rz(angles.phi_prime)
    )


def bloch_angles_of_ket(a: np.ndarray) -> LocalFrame:
    """Frame whose unitary sends |0> to the given single-qubit ket.

    The longitude is arg(a1) - arg(a0); at the poles it is set to 0.
    """
    a = np.asarray(a, dtype=complex)
    theta = 2.0 * math.atan2(abs(a[1]), abs(a[0]))
    if abs(a[0]) <= EPS_POLE or abs(a[1]) <= EPS_POLE:
        return LocalFrame(0.0, round(theta / math.pi) * math.pi)
    phi = wrap_angle(cmath.phase(a[1]) - cmath.phase(a[0]))
    return LocalFrame(phi, theta)


def preparation_unitary(a: np.ndarray, from_one: bool = False) -> np.ndarray:
    """Determinant-1 unitary mapping |0> (or |1>) to the given ket."""
    a = np.asarray(a, dtype=complex)
    a = a / np.linalg.norm(a)
    if from_one:
        return np.array([[np.conj(a[1]), a[0]], [-np.conj(a[0]), a[1]]], dtype=complex)
    return np.array([[a[0], -np.conj(a[1])], [a[1], np.conj(a[0])]], dtype=complex)


def frame_geodesic(f: LocalFrame, g: LocalFrame) -> float:
    """Central angle between the Bloch directions of two frames.

    Haversine form: exact zeros for identical frames and no precision loss
    at small separations, unlike the plain acos of the dot product.
    """
    st = math.sin(0.5 * (f.theta - g.theta))
    sp = math.sin(0.5 * (f.phi - g.phi))
    h = st * st + math.sin(f.theta) * math.sin(g.theta) * sp * sp
    return 2.0 * math.asin(min(1.0, math.sqrt(max(h, 0.0))))
