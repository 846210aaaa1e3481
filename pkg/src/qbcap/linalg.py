"""Dense complex linear algebra for small composite systems.

Everything here works on plain complex ndarrays; the dimensions in this
package never exceed 8, so no sparsity or blocking is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericError
from .tolerances import RECONSTRUCTION_TOL, validation_tol

SIGMA_1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (SIGMA_1, SIGMA_2, SIGMA_3)
IDENTITY_2 = np.eye(2, dtype=complex)

for _m in (*PAULIS, IDENTITY_2):
    _m.setflags(write=False)


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation of m from its conjugate transpose."""
    return float(np.max(np.abs(m - m.conj().T)))


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two square matrices."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    for m in (a, b):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"kron expects square matrices, got shape {m.shape}")
    return np.kron(a, b)


def partial_trace_b(m: np.ndarray, dim_a: int, dim_b: int) -> np.ndarray:
    """Trace out the second tensor factor of an operator on a dim_a*dim_b space."""
    m = np.asarray(m, dtype=complex)
    if dim_a < 1 or dim_b < 1:
        raise ValueError(f"subsystem dimensions must be positive, got {dim_a}, {dim_b}")
    dim = dim_a * dim_b
    if m.shape != (dim, dim):
        raise ValueError(f"matrix shape {m.shape} incompatible with a {dim_a}x{dim_b} split")
    return m.reshape(dim_a, dim_b, dim_a, dim_b).trace(axis1=1, axis2=3)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted ascending, with matching orthonormal eigenvectors as columns."""

    values: np.ndarray
    vectors: np.ndarray


def eigh(m: np.ndarray, tol: float | None = None) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    m : np.ndarray
        Square matrix, Hermitian within ``tol``.
    tol : float, optional
        Hermiticity gate; defaults to the active validation tolerance.

    Returns
    -------
    Spectrum
        Ascending eigenvalues and eigenvector columns satisfying the
        reconstruction bound ``max|m - V diag(w) V^dagger| <= 1e-11``.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"eigh expects a square matrix, got shape {m.shape}")
    if tol is None:
        tol = validation_tol()
    defect = hermiticity_defect(m)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian: max |m - m^dagger| = {defect:.3e}")
    try:
        values, vectors = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigendecomposition did not converge: {exc}") from exc
    recon = (vectors * values) @ vectors.conj().T
    err = float(np.max(np.abs(m - recon)))
    if err > RECONSTRUCTION_TOL:
        raise NumericError(f"eigendecomposition reconstruction error {err:.3e} exceeds 1e-11")
    values.setflags(write=False)
    vectors.setflags(write=False)
    return Spectrum(values=values, vectors=vectors)


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary from the QR factorization of a complex Ginibre matrix.

    The R-diagonal phases are absorbed into the columns of Q, which removes
    the phase ambiguity of the factorization and makes the result exactly
    Haar-distributed.
    """
    if dim < 1:
        raise ValueError(f"dim must be at least 1, got {dim}")
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
