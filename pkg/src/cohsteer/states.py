"""Test states: the Bell-like family, Bloch decomposition, fidelity and noise.

Basis convention: |H> = (1, 0), |V> = (0, 1); two-qubit operators are
ordered Alice (x) Bob.  Angles are radians unless ``degrees=True``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matcore import (
    HERMITIAN_TOL,
    I2,
    PAULIS,
    PSD_TOL,
    SIGMA_Z,
    as_matrix,
    hermitian_eig,
    matrix_sqrt,
    sqrt_eigenvalues,
    tensor,
)

KET_H = np.array([1, 0], dtype=complex)
KET_V = np.array([0, 1], dtype=complex)
KET_D = np.array([1, 1], dtype=complex) / np.sqrt(2)
KET_A = np.array([1, -1], dtype=complex) / np.sqrt(2)
KET_R = np.array([1, 1j], dtype=complex) / np.sqrt(2)
KET_L = np.array([1, -1j], dtype=complex) / np.sqrt(2)


def projector(ket) -> np.ndarray:
    """Return |psi><psi| for a (not necessarily normalised) ket."""
    psi = np.asarray(ket, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def check_density_matrix(rho, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate ``rho`` as a density matrix and return it as a complex array."""
    m = as_matrix(rho)
    if np.max(np.abs(m - m.conj().T)) > tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(m) - 1.0) > tol:
        raise ValueError(f"density matrix trace {np.trace(m).real:.12g} != 1")
    if hermitian_eig(m).eigenvalues[0] < -PSD_TOL:
        raise ValueError("density matrix has a negative eigenvalue")
    return m


def maximally_mixed(dim: int = 2) -> np.ndarray:
    return np.eye(dim, dtype=complex) / dim


def bell_like(theta: float, degrees: bool = False) -> np.ndarray:
    """Projector onto cos(theta)|HH> + sin(theta)|VV>."""
    if degrees:
        theta = np.deg2rad(theta)
    psi = np.zeros(4, dtype=complex)
    psi[0] = np.cos(theta)
    psi[3] = np.sin(theta)
    return np.outer(psi, psi.conj())


@dataclass(frozen=True)
class BlochDecomposition:
    """Local Bloch vectors ``r`` (Alice), ``s`` (Bob) and correlation matrix ``T``."""

    r: np.ndarray
    s: np.ndarray
    T: np.ndarray

    def to_matrix(self) -> np.ndarray:
        rho = tensor(I2, I2)
        for i, sig in enumerate(PAULIS):
            rho = rho + self.r[i] * tensor(sig, I2) + self.s[i] * tensor(I2, sig)
            for j, sig_j in enumerate(PAULIS):
                rho = rho + self.T[i, j] * tensor(sig, sig_j)
        return rho / 4.0


def bloch_decompose(rho) -> BlochDecomposition:
    m = as_matrix(rho)
    if m.shape[0] != 4:
        raise ValueError("bloch_decompose needs a two-qubit state")
    r = np.array([np.trace(m @ tensor(s, I2)).real for s in PAULIS])
    s = np.array([np.trace(m @ tensor(I2, s)).real for s in PAULIS])
    T = np.array([[np.trace(m @ tensor(a, b)).real for b in PAULIS] for a in PAULIS])
    return BlochDecomposition(r=r, s=s, T=T)


def fidelity(rho, rho0) -> float:
    """Uhlmann fidelity Tr sqrt(sqrt(rho) rho0 sqrt(rho)), not squared."""
    a = as_matrix(rho)
    b = as_matrix(rho0)
    if a.shape != b.shape:
        raise ValueError("fidelity: states have different dimensions")
    sa = matrix_sqrt(a)
    inner = sa @ b @ sa
    inner = 0.5 * (inner + inner.conj().T)
    w = np.clip(hermitian_eig(inner).eigenvalues, 0.0, None)
    return float(np.clip(np.sum(sqrt_eigenvalues(w)), 0.0, 1.0))


def purity(rho) -> float:
    m = as_matrix(rho)
    return float(np.real(np.trace(m @ m)))


def apply_white_noise(rho, visibility: float) -> np.ndarray:
    """Mix with the maximally mixed state: v rho + (1 - v) I/d."""
    if not 0.0 <= visibility <= 1.0:
        raise ValueError("visibility must lie in [0, 1]")
    m = as_matrix(rho)
    return visibility * m + (1.0 - visibility) * maximally_mixed(m.shape[0])


def apply_dephasing(rho, p: float, side: str = "B") -> np.ndarray:
    """z-dephasing on one qubit: (1 - p) rho + p Z rho Z."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("dephasing probability must lie in [0, 1]")
    m = as_matrix(rho)
    if m.shape[0] == 2:
        z = SIGMA_Z
    elif side == "B":
        z = tensor(I2, SIGMA_Z)
    elif side == "A":
        z = tensor(SIGMA_Z, I2)
    else:
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    return (1.0 - p) * m + p * (z @ m @ z)


def noisy_bell_like(theta: float, visibility: float = 1.0, dephasing: float = 0.0,
                    degrees: bool = False) -> np.ndarray:
    rho = apply_white_noise(bell_like(theta, degrees=degrees), visibility)
    return apply_dephasing(rho, dephasing, side="B")


def random_density_matrix(seed, rank: int | None = None, dim: int = 4) -> np.ndarray:
    """Sample G G^dagger / Tr(G G^dagger) with G a dim x rank complex Gaussian matrix.

    ``rank`` defaults to ``dim`` (full rank).

    ``seed`` is anything :func:`numpy.random.default_rng` accepts, including
    an existing ``Generator`` (which is then advanced).
    """
    rank = dim if rank is None else rank
    if not 1 <= rank <= dim:
        raise ValueError(f"rank must be in 1..{dim}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_two_qubit_state(seed, rank: int = 4) -> np.ndarray:
    return random_density_matrix(seed, rank=rank, dim=4)

