"""Linear-inversion state tomography from Pauli-basis counts, made physical by water-filling."""

from __future__ import annotations

import numpy as np

from ..matcore import I2, PAULIS, hermitian_eig, tensor


class InsufficientCountsError(ValueError):
    """A measurement basis recorded no events, so its expectation value is undefined."""


_SIGNS = np.array([1.0, -1.0])


def project_to_physical(h) -> np.ndarray:
    """Closest unit-trace PSD matrix in Frobenius norm.

    Eigenvalues are sorted in decreasing order; starting from the smallest,
    any eigenvalue that would stay negative after receiving its share of the
    accumulated deficit is set to zero, and the deficit is finally spread
    evenly over the surviving eigenvalues.
    """
    m = np.asarray(h, dtype=complex)
    m = 0.5 * (m + m.conj().T)
    tr = np.trace(m).real
    if tr <= 0:
        raise ValueError("cannot normalise an operator with non-positive trace")
    eig = hermitian_eig(m / tr)
    lam = eig.eigenvalues[::-1].copy()
    vecs = eig.eigenvectors[:, ::-1]

    n = len(lam)
    deficit = 0.0
    i = n
    while i > 0 and lam[i - 1] + deficit / i < 0:
        deficit += lam[i - 1]
        lam[i - 1] = 0.0
        i -= 1
    lam[:i] += deficit / i
    return (vecs * lam) @ vecs.conj().T


def tomo_1q(counts) -> np.ndarray:
    """Qubit state from counts ``[axis, outcome]`` in the x, y, z bases.

    Outcome 0 is the +1 eigenvector of each Pauli operator.
    """
    c = np.asarray(counts, dtype=float)
    if c.shape != (3, 2):
        raise ValueError(f"expected counts of shape (3, 2), got {c.shape}")
    totals = c.sum(axis=1)
    if np.any(totals <= 0):
        raise InsufficientCountsError("a single-qubit tomography basis has zero total counts")
    r = (c[:, 0] - c[:, 1]) / totals
    rho = 0.5 * (I2 + sum(ri * s for ri, s in zip(r, PAULIS)))
    return project_to_physical(rho)


def pauli_expectations_2q(counts):
    """Local vectors and correlation matrix from counts ``[i, j, a, b]``.

    Local expectations pool all settings that share the measured axis.
    """
    c = np.asarray(counts, dtype=float)
    if c.shape != (3, 3, 2, 2):
        raise ValueError(f"expected counts of shape (3, 3, 2, 2), got {c.shape}")
    totals = c.sum(axis=(2, 3))
    if np.any(totals <= 0):
        raise InsufficientCountsError("a two-qubit tomography setting has zero total counts")
    sab = np.outer(_SIGNS, _SIGNS)
    T = np.einsum("ijab,ab->ij", c, sab) / totals
    r = np.einsum("ijab,a->i", c, _SIGNS) / totals.sum(axis=1)
    s = np.einsum("ijab,b->j", c, _SIGNS) / totals.sum(axis=0)
    return r, s, T


def tomo_2q(counts) -> np.ndarray:
    """Two-qubit state from the 36 projector-pair counts ``[i, j, a, b]``."""
    r, s, T = pauli_expectations_2q(counts)
    rho = tensor(I2, I2)
    for i, si in enumerate(PAULIS):
        rho = rho + r[i] * tensor(si, I2) + s[i] * tensor(I2, si)
        for j, sj in enumerate(PAULIS):
            rho = rho + T[i, j] * tensor(si, sj)
    return project_to_physical(rho / 4.0)
