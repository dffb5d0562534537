import numpy as np
import pytest

from conftest import haar_state, haar_unitary
from qcoords.core import (
    apply_unitary,
    bloch_vector,
    fidelity,
    make_state,
    make_density,
    partial_trace,
)
from qcoords.errors import BadSubsystem, DimensionMismatch, NotUnitary, ZeroVector


def test_make_state_basis():
    s = make_state([1, 0, 0, 0], 2)
    assert np.allclose(s.amplitudes, [1, 0, 0, 0])


def test_make_state_normalizes_bell_numerator():
    s = make_state([1, 0, 0, 1], 2)
    assert np.allclose(s.amplitudes, [1 / np.sqrt(2), 0, 0, 1 / np.sqrt(2)])


def test_make_state_zero_vector():
    with pytest.raises(ZeroVector):
        make_state([0, 0, 0, 0], 2)


def test_make_state_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        make_state([1, 0, 0], 2)
    with pytest.raises(DimensionMismatch):
        make_state([1, 0], 4)


def test_partial_trace_ghz_single_qubit():
    ghz = make_state([1, 0, 0, 0, 0, 0, 0, 1], 3)
    rho = partial_trace(ghz, (1,))
    assert np.allclose(rho.entries, np.diag([0.5, 0.5]), atol=1e-12)


def test_partial_trace_product_factor():
    plus0 = make_state([1, 0, 1, 0], 2)
    rho = partial_trace(plus0, (1,))
    assert np.allclose(rho.entries, np.full((2, 2), 0.5), atol=1e-12)


def _brute_force_partial_trace(psi, keep, n):
    # direct double index sum, written independently of the fast path
    kept = sorted(keep)
    dropped = [q for q in range(1, n + 1) if q not in kept]
    dim = 2 ** len(kept)
    rho = np.zeros((dim, dim), dtype=complex)

    def full_index(kept_bits, drop_bits):
        idx = 0
        for q in range(1, n + 1):
            if q in kept:
                b = kept_bits[kept.index(q)]
            else:
                b = drop_bits[dropped.index(q)]
            idx = 2 * idx + b
        return idx

    for i in range(dim):
        ib = [int(x) for x in np.binary_repr(i, len(kept))]
        for j in range(dim):
            jb = [int(x) for x in np.binary_repr(j, len(kept))]
            for d in range(2 ** len(dropped)):
                db = [int(x) for x in np.binary_repr(d, max(len(dropped), 1))][-len(dropped):] if dropped else []
                rho[i, j] += psi[full_index(ib, db)] * np.conj(psi[full_index(jb, db)])
    return rho


def test_partial_trace_matches_brute_force(rng):
    for _ in range(25):
        psi = haar_state(rng, 3)
        got = partial_trace(psi, (2, 3)).entries
        want = _brute_force_partial_trace(psi.amplitudes, (2, 3), 3)
        assert np.max(np.abs(got - want)) <= 1e-12


def test_partial_trace_bad_subsystem():
    s = make_state([1, 0, 0, 0], 2)
    with pytest.raises(BadSubsystem):
        partial_trace(s, ())
    with pytest.raises(BadSubsystem):
        partial_trace(s, (3,))
    with pytest.raises(BadSubsystem):
        partial_trace(s, (1, 1))


def test_bloch_vector_maximally_mixed():
    b = bloch_vector(make_density(np.diag([0.5, 0.5])))
    assert abs(b.x) < 1e-12 and abs(b.y) < 1e-12 and abs(b.z) < 1e-12


def test_bloch_vector_plus_state():
    b = bloch_vector(make_density(np.full((2, 2), 0.5)))
    assert np.allclose((b.x, b.y, b.z), (1, 0, 0), atol=1e-12)


def test_bloch_vector_diagonal():
    b = bloch_vector(make_density(np.diag([0.8, 0.2])))
    assert np.allclose((b.x, b.y, b.z), (0, 0, 0.6), atol=1e-12)


def test_bloch_vector_dimension():
    with pytest.raises(DimensionMismatch):
        bloch_vector(make_density(np.eye(4) / 4))


def test_apply_x_gate():
    s = make_state([1, 0, 0, 0], 2)
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    out = apply_unitary(s, (1,), x)
    assert np.allclose(out.amplitudes, [0, 0, 1, 0])


def test_apply_cnot():
    s = make_state([1, 0, 1, 0], 2)
    cnot = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
    out = apply_unitary(s, (1, 2), cnot)
    assert np.allclose(out.amplitudes, np.array([1, 0, 0, 1]) / np.sqrt(2))


def test_apply_unitary_preserves_norm(rng):
    for _ in range(50):
        psi = haar_state(rng, 3)
        out = apply_unitary(psi, (2,), haar_unitary(rng))
        assert abs(np.linalg.norm(out.amplitudes) - 1.0) <= 1e-12


def test_apply_unitary_rejects_nonunitary():
    s = make_state([1, 0], 1)
    with pytest.raises(NotUnitary):
        apply_unitary(s, (1,), np.array([[1, 1], [0, 1]], dtype=complex))


def test_fidelity_basics(rng):
    psi = haar_state(rng, 2)
    assert abs(fidelity(psi, psi) - 1.0) < 1e-12
    a = make_state([1, 0, 0, 0], 2)
    b = make_state([0, 0, 0, 1], 2)
    assert fidelity(a, b) == 0.0
    shifted = make_state(psi.amplitudes * np.exp(0.83j), 2)
    assert abs(fidelity(psi, shifted) - 1.0) < 1e-12


def test_fidelity_dimension():
    with pytest.raises(DimensionMismatch):
        fidelity(make_state([1, 0], 1), make_state([1, 0, 0, 0], 2))


def test_schmidt_symmetry_of_reduced_spectra(rng):
    for _ in range(30):
        psi = haar_state(rng, 2)
        e1 = np.linalg.eigvalsh(partial_trace(psi, (1,)).entries)
        e2 = np.linalg.eigvalsh(partial_trace(psi, (2,)).entries)
        assert np.max(np.abs(np.sort(e1) - np.sort(e2))) <= 1e-10


def test_pure_bloch_iff_product(rng):
    for _ in range(30):
        psi = haar_state(rng, 2)
        r = bloch_vector(partial_trace(psi, (1,))).norm()
        rank = np.linalg.matrix_rank(psi.amplitudes.reshape(2, 2), tol=1e-9)
        assert (abs(r - 1.0) <= 1e-10) == (rank == 1)
    prod = make_state(np.kron([0.6, 0.8j], [1 / np.sqrt(2), 1j / np.sqrt(2)]), 2)
    assert abs(bloch_vector(partial_trace(prod, (1,))).norm() - 1.0) <= 1e-10
