import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohsteer.matcore import (
    I2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    NonPhysicalError,
    commutator,
    hermitian_eig,
    matrix_sqrt,
    partial_trace,
    psd_eig,
    tensor,
    von_neumann_entropy,
)
from cohsteer.states import KET_A, KET_D, KET_H, KET_V, bell_like, projector, random_density_matrix

from conftest import seeds


def random_hermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2


def same_ray(u, v, tol=1e-10):
    return abs(abs(np.vdot(u, v)) - 1) < tol


def test_tensor_examples():
    assert np.allclose(tensor(I2, I2), np.eye(4))
    assert np.allclose(tensor(SIGMA_Z, SIGMA_Z), np.diag([1, -1, -1, 1]))


def test_tensor_rejects_large_products():
    with pytest.raises(ValueError):
        tensor(np.eye(4), I2)


def test_partial_trace_examples():
    phi = bell_like(np.pi / 4)
    assert np.allclose(partial_trace(phi, "B"), I2 / 2)
    hh = projector(np.kron(KET_H, KET_H))
    assert np.allclose(partial_trace(hh, "B"), projector(KET_H))
    c, s = np.cos(np.pi / 6), np.sin(np.pi / 6)
    assert np.allclose(partial_trace(bell_like(30, degrees=True), "B"), np.diag([c * c, s * s]), atol=1e-15)


def test_partial_trace_of_product_state():
    rng = np.random.default_rng(3)
    a, b = random_density_matrix(rng, dim=2), random_density_matrix(rng, dim=2)
    rho = tensor(a, b)
    assert np.allclose(partial_trace(rho, "A"), a)
    assert np.allclose(partial_trace(rho, "B"), b)
    with pytest.raises(ValueError):
        partial_trace(rho, "C")
    with pytest.raises(ValueError):
        partial_trace(a)


def test_eig_pauli_examples():
    e = hermitian_eig(SIGMA_Z)
    assert np.allclose(e.eigenvalues, [-1, 1])
    assert same_ray(e.eigenvectors[:, 0], KET_V) and same_ray(e.eigenvectors[:, 1], KET_H)
    e = hermitian_eig(SIGMA_X)
    assert np.allclose(e.eigenvalues, [-1, 1])
    assert same_ray(e.eigenvectors[:, 0], KET_A) and same_ray(e.eigenvectors[:, 1], KET_D)
    assert np.allclose(hermitian_eig(bell_like(45, degrees=True)).eigenvalues, [0, 0, 0, 1], atol=1e-14)


def test_eig_matches_numpy_on_1000_random_matrices():
    rng = np.random.default_rng(2024)
    for k in range(1000):
        h = random_hermitian(rng, 2 if k % 2 else 4)
        e = hermitian_eig(h)
        assert np.allclose(e.eigenvalues, np.linalg.eigvalsh(h), atol=1e-12)
        assert np.allclose(e.reconstruct(), h, atol=1e-12)
        v = e.eigenvectors
        assert np.allclose(v.conj().T @ v, np.eye(len(h)), atol=1e-12)


def test_eig_degenerate_and_diagonal():
    e = hermitian_eig(np.eye(4))
    assert np.allclose(e.eigenvalues, 1)
    d = np.diag([3.0, -1.0, 2.0, 0.5]).astype(complex)
    assert np.allclose(hermitian_eig(d).eigenvalues, [-1, 0.5, 2, 3])


def test_eig_rejects_non_hermitian_and_bad_shapes():
    with pytest.raises(ValueError):
        hermitian_eig(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        hermitian_eig(np.eye(3))


@given(seeds, st.sampled_from([2, 4]), st.floats(1e-6, 1e6))
def test_eig_reconstruction_any_scale(seed, n, scale):
    h = scale * random_hermitian(np.random.default_rng(seed), n)
    e = hermitian_eig(h)
    assert np.all(np.diff(e.eigenvalues) >= 0)
    assert np.allclose(e.reconstruct(), h, atol=1e-11 * scale)


def test_psd_clamp_and_error():
    e = psd_eig(np.diag([1 + 5e-10, -5e-10]).astype(complex))
    assert e.eigenvalues.min() == 0.0
    with pytest.raises(NonPhysicalError):
        psd_eig(np.diag([1.1, -0.1]).astype(complex))


def test_matrix_sqrt_examples():
    assert np.allclose(matrix_sqrt(I2 / 2), I2 / np.sqrt(2))
    p = projector(KET_D)
    assert np.allclose(matrix_sqrt(p), p, atol=1e-12)
    assert np.allclose(matrix_sqrt(np.diag([0.25, 0.75])), np.diag([0.5, np.sqrt(0.75)]))


@given(seeds, st.integers(1, 4))
def test_matrix_sqrt_squares_back(seed, rank):
    rho = random_density_matrix(seed, rank=rank)
    r = matrix_sqrt(rho)
    assert np.allclose(r @ r, rho, atol=1e-10)
    assert hermitian_eig(r).eigenvalues.min() >= -1e-12


def test_entropy_examples():
    assert von_neumann_entropy(I2 / 2) == pytest.approx(1.0)
    assert von_neumann_entropy(projector(KET_D)) == pytest.approx(0.0, abs=1e-12)
    assert von_neumann_entropy(np.diag([0.9698, 0.0302])) == pytest.approx(0.1954, abs=5e-5)


@given(seeds)
def test_entropy_bounds(seed):
    rho = random_density_matrix(seed)
    assert 0.0 <= von_neumann_entropy(rho) <= 2.0 + 1e-12


def test_commutator_examples():
    assert np.allclose(commutator(SIGMA_Z, SIGMA_Z), 0)
    assert np.allclose(commutator(SIGMA_X, SIGMA_Y), 2j * SIGMA_Z)
    assert np.allclose(commutator(matrix_sqrt(I2 / 2), SIGMA_X), 0)
    with pytest.raises(ValueError):
        commutator(I2, np.eye(4))
