import math

import numpy as np
import pytest

from conftest import haar_state, haar_unitary
from qcoords.core import apply_unitary, make_density, make_state, partial_trace
from qcoords.errors import DimensionMismatch, NotDensityMatrix
from qcoords.oracles import (
    pure2_concurrence_oracle,
    three_tangle,
    wootters_mixed_concurrence,
)


def test_pure2_bell():
    bell = make_state([1, 0, 0, 1], 2)
    assert abs(pure2_concurrence_oracle(bell) - 1.0) < 1e-12


def test_pure2_product():
    assert pure2_concurrence_oracle(make_state([1, 0, 1, 0], 2)) < 1e-12


def test_pure2_two_thirds():
    psi = make_state([1, 1, 0, 1], 2)
    assert abs(pure2_concurrence_oracle(psi) - 2 / 3) < 1e-12


def test_pure2_rejects_wrong_size():
    with pytest.raises(DimensionMismatch):
        pure2_concurrence_oracle(make_state([1, 0], 1))


def test_wootters_bell_pair():
    bell = make_state([1, 0, 0, 1], 2)
    rho = make_density(np.outer(bell.amplitudes, bell.amplitudes.conj()))
    assert abs(wootters_mixed_concurrence(rho) - 1.0) < 1e-10


def test_wootters_maximally_mixed():
    assert wootters_mixed_concurrence(make_density(np.eye(4) / 4)) == 0.0


def test_wootters_fig2c_pair():
    v = np.zeros(8, dtype=complex)
    v[0] = v[5] = v[6] = 1.0
    rho23 = partial_trace(make_state(v, 3), (2, 3))
    assert abs(wootters_mixed_concurrence(rho23) - 2 / 3) <= 1e-8


def test_wootters_rejects_bad_input():
    with pytest.raises(DimensionMismatch):
        wootters_mixed_concurrence(make_density(np.eye(2) / 2))
    bad = make_density(np.diag([0.5, 0.5, 0.25, -0.25]).astype(complex), check=False)
    with pytest.raises(NotDensityMatrix):
        wootters_mixed_concurrence(bad)


def test_wootters_agrees_with_pure_oracle(rng):
    for _ in range(60):
        psi = haar_state(rng, 2)
        rho = make_density(np.outer(psi.amplitudes, psi.amplitudes.conj()))
        assert abs(wootters_mixed_concurrence(rho) - pure2_concurrence_oracle(psi)) <= 1e-10


def test_three_tangle_ghz_w():
    ghz = make_state([1, 0, 0, 0, 0, 0, 0, 1], 3)
    assert abs(three_tangle(ghz) - 1.0) <= 1e-12
    w = make_state([0, 1, 1, 0, 1, 0, 0, 0], 3)
    assert three_tangle(w) <= 1e-12


def test_three_tangle_lu_invariance_of_ghz_core(rng):
    core = np.zeros(8, dtype=complex)
    core[0] = core[7] = 1 / math.sqrt(2)
    psi = make_state(core, 3)
    for _ in range(20):
        rotated = psi
        for q in (1, 2, 3):
            rotated = apply_unitary(rotated, (q,), haar_unitary(rng))
        assert abs(three_tangle(rotated) - 1.0) <= 1e-8


def test_oracles_lu_invariant(rng):
    for _ in range(40):
        psi = haar_state(rng, 3)
        t0 = three_tangle(psi)
        rotated = psi
        for q in (1, 2, 3):
            rotated = apply_unitary(rotated, (q,), haar_unitary(rng))
        assert abs(three_tangle(rotated) - t0) <= 1e-8
    for _ in range(40):
        psi = haar_state(rng, 2)
        c0 = pure2_concurrence_oracle(psi)
        rotated = apply_unitary(apply_unitary(psi, (1,), haar_unitary(rng)), (2,), haar_unitary(rng))
        assert abs(pure2_concurrence_oracle(rotated) - c0) <= 1e-8


def test_tangle_bounded_by_linear_entropy(rng):
    for _ in range(60):
        psi = haar_state(rng, 3)
        det1 = np.linalg.det(partial_trace(psi, (1,)).entries).real
        assert three_tangle(psi) <= 4 * det1 + 1e-8
