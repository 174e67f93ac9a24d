import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohsteer.matcore import I2, tensor
from cohsteer.states import (
    KET_H,
    KET_V,
    apply_dephasing,
    apply_white_noise,
    bell_like,
    bloch_decompose,
    check_density_matrix,
    fidelity,
    maximally_mixed,
    noisy_bell_like,
    projector,
    purity,
    random_density_matrix,
    random_two_qubit_state,
)

from conftest import angles_deg, seeds


def test_bell_like_examples():
    assert np.allclose(bell_like(0), projector(np.kron(KET_H, KET_H)))
    phi = bell_like(45, degrees=True)
    assert np.allclose(phi[[0, 0, 3, 3], [0, 3, 0, 3]], 0.5)
    b = bell_like(30, degrees=True)
    assert np.allclose(np.diag(b).real, [0.75, 0, 0, 0.25])
    assert b[0, 3].real == pytest.approx(np.sqrt(3) / 4)
    assert np.allclose(bell_like(np.pi / 6), b)


@given(angles_deg)
def test_bell_like_is_pure_state(theta):
    rho = check_density_matrix(bell_like(theta, degrees=True))
    assert purity(rho) == pytest.approx(1.0)


def test_bloch_examples():
    d = bloch_decompose(bell_like(45, degrees=True))
    assert np.allclose(d.r, 0) and np.allclose(d.s, 0)
    assert np.allclose(d.T, np.diag([1, -1, 1]))
    d = bloch_decompose(bell_like(0))
    assert np.allclose(d.r, [0, 0, 1]) and np.allclose(d.s, [0, 0, 1])
    assert np.allclose(d.T, np.diag([0, 0, 1]))
    d = bloch_decompose(maximally_mixed(4))
    assert np.allclose(d.r, 0) and np.allclose(d.T, 0)


@given(seeds)
def test_bloch_round_trip(seed):
    rho = random_two_qubit_state(seed)
    assert np.allclose(bloch_decompose(rho).to_matrix(), rho, atol=1e-12)


def test_fidelity_examples():
    rho = random_two_qubit_state(5)
    assert fidelity(rho, rho) == pytest.approx(1.0, abs=1e-9)
    assert fidelity(projector(KET_H), projector(KET_V)) == pytest.approx(0.0, abs=1e-12)
    assert fidelity(I2 / 2, projector(KET_H)) == pytest.approx(1 / np.sqrt(2))
    with pytest.raises(ValueError):
        fidelity(I2 / 2, maximally_mixed(4))


@given(seeds, seeds)
def test_fidelity_symmetric_and_bounded(a, b):
    r, s = random_two_qubit_state(a), random_two_qubit_state(b)
    f = fidelity(r, s)
    assert 0.0 <= f <= 1.0
    assert f == pytest.approx(fidelity(s, r), abs=1e-8)


def test_fidelity_pure_matches_overlap(rng):
    for _ in range(20):
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        v /= np.linalg.norm(v)
        rho = random_two_qubit_state(rng)
        assert fidelity(projector(v), rho) == pytest.approx(np.sqrt(np.vdot(v, rho @ v).real), abs=1e-9)


def test_purity_examples():
    assert purity(bell_like(0.3)) == pytest.approx(1.0)
    assert purity(maximally_mixed(4)) == pytest.approx(0.25)
    v = 0.9
    assert purity(apply_white_noise(bell_like(45, degrees=True), v)) == pytest.approx(v * v * 0.75 + 0.25)


def test_white_noise_examples():
    rho = random_two_qubit_state(1)
    assert np.allclose(apply_white_noise(rho, 1.0), rho)
    assert np.allclose(apply_white_noise(rho, 0.0), np.eye(4) / 4)
    phi = bell_like(45, degrees=True)
    # Werner state overlap with its own pure component: sqrt(v + (1 - v)/4)
    assert fidelity(apply_white_noise(phi, 0.99), phi) == pytest.approx(np.sqrt(0.99 + 0.01 / 4), abs=1e-9)
    with pytest.raises(ValueError):
        apply_white_noise(rho, 1.5)


def test_dephasing():
    phi = bell_like(45, degrees=True)
    half = apply_dephasing(phi, 0.5)
    assert abs(half[0, 3]) == pytest.approx(0.0)
    assert np.allclose(np.diag(half), np.diag(phi))
    assert np.allclose(apply_dephasing(phi, 0.0), phi)
    assert np.allclose(apply_dephasing(phi, 0.5, side="A"), half)
    assert np.allclose(apply_dephasing(projector(KET_H), 0.3), projector(KET_H))
    with pytest.raises(ValueError):
        apply_dephasing(phi, 0.1, side="C")


@given(angles_deg, st.floats(0, 1), st.floats(0, 1))
def test_noisy_family_is_physical(theta, v, p):
    check_density_matrix(noisy_bell_like(theta, v, p, degrees=True), tol=1e-12)


def test_random_state_rank_and_determinism():
    assert purity(random_two_qubit_state(7, rank=1)) == pytest.approx(1.0)
    assert np.array_equal(random_two_qubit_state(11), random_two_qubit_state(11))
    assert not np.array_equal(random_two_qubit_state(11), random_two_qubit_state(12))
    for rank in range(1, 5):
        w = np.linalg.eigvalsh(random_two_qubit_state(rank, rank=rank))
        assert np.sum(w > 1e-12) == rank
    with pytest.raises(ValueError):
        random_two_qubit_state(0, rank=5)


def test_random_state_mean_purity():
    # Hilbert-Schmidt ensemble with d = k = 4: E[Tr rho^2] = (d + k)/(d k + 1) = 8/17.
    rng = np.random.default_rng(99)
    mean = np.mean([purity(random_two_qubit_state(rng)) for _ in range(10_000)])
    assert mean == pytest.approx(8 / 17, abs=0.02)


def test_check_density_matrix_rejects():
    with pytest.raises(ValueError):
        check_density_matrix(2 * maximally_mixed(4))
    with pytest.raises(ValueError):
        check_density_matrix(np.diag([1.2, -0.2]))
    with pytest.raises(ValueError):
        check_density_matrix(np.array([[0.5, 1], [0, 0.5]]))


def test_product_of_random_qubits_is_physical():
    rng = np.random.default_rng(0)
    check_density_matrix(tensor(random_density_matrix(rng, dim=2), random_density_matrix(rng, dim=2)))
