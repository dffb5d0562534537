import math

import numpy as np
import pytest

from conftest import haar_unitary
from qcoords.errors import NotUnitary
from qcoords.su2 import (
    LocalFrame,
    frame_geodesic,
    frame_unitary,
    reconstruct_zyz,
    ry,
    rz,
    zyz_decompose,
)

SQ2 = 1.0 / math.sqrt(2.0)


def test_frame_unitary_identity():
    assert np.allclose(frame_unitary(LocalFrame(0, 0)), np.eye(2))


def test_frame_unitary_ry_half_pi():
    u = frame_unitary(LocalFrame(0, math.pi / 2))
    assert np.allclose(u, np.array([[SQ2, -SQ2], [SQ2, SQ2]]), atol=1e-12)


def test_frame_unitary_product_case():
    # Rz(pi) Ry(pi/2) checked against the direct matrix product
    u = frame_unitary(LocalFrame(math.pi, math.pi / 2))
    want = rz(math.pi) @ ry(math.pi / 2)
    assert np.max(np.abs(u - want)) < 1e-15
    assert abs(np.linalg.det(u) - 1.0) < 1e-12
    assert np.max(np.abs(u.conj().T @ u - np.eye(2))) < 1e-12


def test_frame_unitary_always_special(rng):
    for _ in range(50):
        f = LocalFrame(rng.uniform(0, 2 * math.pi), rng.uniform(0, math.pi))
        assert abs(np.linalg.det(frame_unitary(f)) - 1.0) <= 1e-12


def test_zyz_identity():
    z = zyz_decompose(np.eye(2, dtype=complex))
    assert (z.phi, z.theta, z.phi_prime, z.global_phase) == (0.0, 0.0, 0.0, 0.0)


def test_zyz_hadamard():
    # H = e^{i pi/2} Ry(pi/2) Rz(pi); derived by multiplying back
    h = np.array([[SQ2, SQ2], [SQ2, -SQ2]], dtype=complex)
    z = zyz_decompose(h)
    assert abs(z.phi - 0.0) < 1e-12
    assert abs(z.theta - math.pi / 2) < 1e-12
    assert abs(z.phi_prime - math.pi) < 1e-12
    assert abs(z.global_phase - math.pi / 2) < 1e-12
    assert np.max(np.abs(reconstruct_zyz(z) - h)) < 1e-12


def test_zyz_frame_round_trip():
    u = rz(0.3) @ ry(0.7)
    z = zyz_decompose(u)
    assert abs(z.phi - 0.3) < 1e-12
    assert abs(z.theta - 0.7) < 1e-12
    assert abs(z.phi_prime) < 1e-12
    assert abs(z.global_phase) < 1e-12


def test_zyz_reconstruction_random(rng):
    for _ in range(200):
        u = haar_unitary(rng)
        z = zyz_decompose(u)
        assert np.max(np.abs(reconstruct_zyz(z) - u)) <= 1e-10
        assert 0 <= z.phi < 2 * math.pi
        assert 0 <= z.theta <= math.pi
        assert 0 <= z.phi_prime < 2 * math.pi


def test_zyz_angle_round_trip_away_from_poles(rng):
    for _ in range(100):
        phi = rng.uniform(0, 2 * math.pi)
        theta = rng.uniform(0.05, math.pi - 0.05)
        prime = rng.uniform(0, 2 * math.pi)
        z = zyz_decompose(rz(phi) @ ry(theta) @ rz(prime))
        assert abs(z.phi - phi) < 1e-10
        assert abs(z.theta - theta) < 1e-10
        assert abs(z.phi_prime - prime) < 1e-10


def test_zyz_gimbal_poles():
    z0 = zyz_decompose(rz(1.1) @ rz(0.4))
    assert z0.theta == 0.0 and z0.phi_prime == 0.0
    assert abs(z0.phi - 1.5) < 1e-12
    zpi = zyz_decompose(rz(0.9) @ ry(math.pi) @ rz(0.2))
    assert zpi.theta == math.pi and zpi.phi_prime == 0.0
    assert np.max(np.abs(reconstruct_zyz(zpi) - rz(0.9) @ ry(math.pi) @ rz(0.2))) <= 1e-10


def test_zyz_rejects_nonunitary():
    with pytest.raises(NotUnitary):
        zyz_decompose(np.array([[1.0, 0.1], [0.0, 1.0]], dtype=complex))


def test_frame_geodesic():
    a = LocalFrame(0.3, 1.0)
    assert frame_geodesic(a, a) == 0.0
    north = LocalFrame(0.0, 0.0)
    south = LocalFrame(2.2, math.pi)
    assert abs(frame_geodesic(north, south) - math.pi) < 1e-12
    # longitude is immaterial at the poles
    assert frame_geodesic(LocalFrame(1.0, 0.0), LocalFrame(2.5, 0.0)) < 1e-12
