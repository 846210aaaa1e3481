"""Hamiltonians and the spectrum-pairing energy functionals.

Capacity is the spread between the largest and smallest average energies
reachable by unitaries; both extremes are rearrangement sums over the sorted
state spectrum and sorted energy levels, so no optimization is ever run.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericError
from .linalg import IDENTITY_2, SIGMA_3, eigh, kron
from .states import DensityMatrix
from .tolerances import NEGLIGIBLE


class Hamiltonian:
    """Hermitian observable with eigenenergies sorted ascending."""

    def __init__(self, matrix: np.ndarray, tol: float | None = None):
        spectrum = eigh(np.asarray(matrix, dtype=complex), tol=tol)
        m = np.array(matrix, dtype=complex)
        m.setflags(write=False)
        self.matrix = m
        self.energies = spectrum.values
        self.basis = spectrum.vectors

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self) -> str:
        return f"Hamiltonian(dim={self.dim})"


@dataclass(frozen=True)
class QubitPairEnergies:
    """Level splittings of the two non-interacting qubits, eps_a >= eps_b >= 0."""

    eps_a: float
    eps_b: float

    def __post_init__(self):
        if not self.eps_a >= self.eps_b >= 0.0:
            raise ValueError(f"require eps_a >= eps_b >= 0, got eps_a={self.eps_a}, eps_b={self.eps_b}")


def qubit_pair_hamiltonian(energies: QubitPairEnergies) -> Hamiltonian:
    """Non-interacting pair eps_a s3 x I + eps_b I x s3.

    Its spectrum, ascending, is (-eps_a - eps_b, -eps_a + eps_b,
    eps_a - eps_b, eps_a + eps_b).
    """
    matrix = energies.eps_a * kron(SIGMA_3, IDENTITY_2) + energies.eps_b * kron(IDENTITY_2, SIGMA_3)
    return Hamiltonian(matrix)


def subsystem_a_hamiltonian(energies: QubitPairEnergies) -> Hamiltonian:
    """Hamiltonian eps_a s3 of the first qubit alone."""
    return Hamiltonian(energies.eps_a * SIGMA_3)


def _checked_pair(rho: DensityMatrix, h: Hamiltonian) -> tuple[np.ndarray, np.ndarray]:
    if rho.dim != h.dim:
        raise ValueError(f"state dimension {rho.dim} does not match Hamiltonian dimension {h.dim}")
    return rho.spectrum, h.energies


def _clamp_nonnegative(value: float, what: str) -> float:
    if value < -NEGLIGIBLE:
        raise NumericError(f"{what} = {value:.3e} is negative beyond round-off")
    return max(value, 0.0)


def capacity(rho: DensityMatrix, h: Hamiltonian) -> float:
    """Largest minus smallest unitary-reachable average energy.

    With both eigenvalue lists ascending this is sum_i eps_i (lam_i -
    lam_{d-1-i}), equivalently the sum over mirrored index pairs i < d-1-i of
    (eps_{d-1-i} - eps_i)(lam_{d-1-i} - lam_i). Each pair multiplies two
    nonnegative gaps, so the value is nonnegative and insensitive to how ties
    inside degenerate eigenvalues are ordered.
    """
    lam, eps = _checked_pair(rho, h)
    return _clamp_nonnegative(float(np.dot(eps, lam - lam[::-1])), "capacity")


def ergotropy(rho: DensityMatrix, h: Hamiltonian) -> float:
    """Average energy minus the passive floor reachable by unitaries.

    The passive energy pairs the largest populations with the lowest levels.
    """
    lam, eps = _checked_pair(rho, h)
    energy = float(np.trace(rho.matrix @ h.matrix).real)
    passive = float(np.dot(lam[::-1], eps))
    return _clamp_nonnegative(energy - passive, "ergotropy")


def extremal_energies(rho: DensityMatrix, h: Hamiltonian) -> tuple[float, float]:
    """Smallest and largest average energies over all unitary orbits of the state.

    The minimum pairs populations descending with levels ascending; the
    maximum pairs both ascending.
    """
    lam, eps = _checked_pair(rho, h)
    lowest = float(np.dot(lam, eps[::-1]))
    highest = float(np.dot(lam, eps))
    return lowest, highest
