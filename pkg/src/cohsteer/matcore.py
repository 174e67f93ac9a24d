"""Dense complex linear algebra for qubit (2x2) and two-qubit (4x4) operators.

Everything here works on plain ``numpy`` arrays of dtype ``complex128``.
Only dimensions 2 and 4 are supported; anything else is rejected early so
that shape bugs surface at the boundary instead of deep inside a sweep.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SUPPORTED_DIMS = (2, 4)
HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-9
SQRT_FLOOR = 1e-14

JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class NonPhysicalError(ValueError):
    """Raised when an operator that should be PSD has a clearly negative eigenvalue."""


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a square complex matrix of a supported dimension."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] not in SUPPORTED_DIMS:
        raise ValueError(f"unsupported dimension {m.shape[0]}; expected one of {SUPPORTED_DIMS}")
    return m


def tensor(a, b) -> np.ndarray:
    """Kronecker product ``a (x) b`` with the first factor as the high-order index."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    for m in (a, b):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected square factors, got shape {m.shape}")
    if a.shape[0] * b.shape[0] > max(SUPPORTED_DIMS):
        raise ValueError(
            f"tensor product dimension {a.shape[0] * b.shape[0]} exceeds {max(SUPPORTED_DIMS)}"
        )
    return np.kron(a, b)


def partial_trace(rho, keep: str = "B") -> np.ndarray:
    """Reduce a two-qubit operator to the subsystem named by ``keep`` ("A" or "B")."""
    m = as_matrix(rho)
    if m.shape[0] != 4:
        raise ValueError("partial_trace needs a two-qubit (4x4) operator")
    r = m.reshape(2, 2, 2, 2)
    if keep == "B":
        return np.einsum("ijik->jk", r)
    if keep == "A":
        return np.einsum("ijkj->ik", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def commutator(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def is_hermitian(h, tol: float = HERMITIAN_TOL) -> bool:
    h = np.asarray(h)
    return bool(np.max(np.abs(h - h.conj().T)) <= tol)


@dataclass(frozen=True)
class HermitianEigen:
    """Eigenvalues in ascending order and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self, values=None) -> np.ndarray:
        """Return ``V diag(values) V^dagger`` (defaults to the stored eigenvalues)."""
        w = self.eigenvalues if values is None else np.asarray(values)
        v = self.eigenvectors
        return (v * w) @ v.conj().T


def _off_norm(a: np.ndarray) -> float:
    off = a[~np.eye(a.shape[0], dtype=bool)]
    return float(np.sqrt(np.sum(off.real ** 2 + off.imag ** 2)))


def hermitian_eig(h, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> HermitianEigen:
    """Diagonalise a Hermitian matrix with cyclic complex Jacobi rotations.

    Each (p, q) rotation first removes the phase of the off-diagonal element
    and then applies the real symmetric Jacobi rotation, so the combined
    2x2 unitary is ``[[c, s], [-s e^{-i phi}, c e^{-i phi}]]``.
    Iteration stops once the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||h||_F)``.
    """
    a = as_matrix(h).copy()
    if not is_hermitian(a):
        raise ValueError("hermitian_eig: input is not Hermitian to 1e-10")
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    negligible = 1e-3 * threshold / n

    for _ in range(max_sweeps):
        if _off_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= negligible:
                    a[p, q] = a[q, p] = 0.0
                    continue
                phase = np.conj(apq) / mag
                theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                if theta == 0.0:
                    t = 1.0
                elif abs(theta) > 1e100:
                    t = 0.5 / theta
                else:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = np.array([[c, s], [-s * phase, c * phase]], dtype=complex)
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ rot
    else:
        if _off_norm(a) > threshold:
            raise RuntimeError(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")

    w = a.diagonal().real
    order = np.argsort(w, kind="stable")
    return HermitianEigen(eigenvalues=w[order].copy(), eigenvectors=v[:, order].copy())


def psd_eig(rho) -> HermitianEigen:
    """Eigendecomposition with round-off negatives clamped to zero.

    Eigenvalues in ``[-1e-9, 0)`` become 0; anything more negative raises
    :class:`NonPhysicalError`.
    """
    eig = hermitian_eig(rho)
    if eig.eigenvalues[0] < -PSD_TOL:
        raise NonPhysicalError(f"eigenvalue {eig.eigenvalues[0]:.3e} below -{PSD_TOL:g}")
    return HermitianEigen(np.clip(eig.eigenvalues, 0.0, None), eig.eigenvectors)


def sqrt_eigenvalues(w) -> np.ndarray:
    """Square roots of PSD eigenvalues with round-off-sized ones set to zero.

    A pure state comes out of the solver with a ~1e-17 eigenvalue whose root
    (~3e-9) would otherwise leak into anything built from sqrt(rho).
    """
    w = np.asarray(w, dtype=float)
    floor = SQRT_FLOOR * max(1.0, float(np.max(np.abs(w))))
    return np.sqrt(np.where(w > floor, w, 0.0))


def matrix_sqrt(rho) -> np.ndarray:
    """Principal square root of a positive semidefinite matrix."""
    eig = psd_eig(rho)
    return eig.reconstruct(sqrt_eigenvalues(eig.eigenvalues))


def entropy_from_eigenvalues(w) -> float:
    w = np.asarray(w, dtype=float)
    w = w[w > 0.0]
    h = -float(np.sum(w * np.log2(w)))
    return h if h > 0.0 else 0.0


def von_neumann_entropy(rho) -> float:
    """Von Neumann entropy in bits, with ``0 log 0 = 0``."""
    eig = hermitian_eig(rho)
    return entropy_from_eigenvalues(np.clip(eig.eigenvalues, 0.0, None))
