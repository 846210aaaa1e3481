"""Rank-1 projective measurements on the second qubit and the induced final states.

A measurement splits the state into normalized outcome branches. Two mixing
rules turn the branches back into a single final state: the unweighted
average, and a convex combination with caller-chosen weights. The capacity
change of the whole pair and of the first qubit alone are reported side by
side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .battery import QubitPairEnergies, capacity, qubit_pair_hamiltonian, subsystem_a_hamiltonian
from .errors import NumericError, UndefinedAverageError
from .linalg import hermiticity_defect
from .states import DensityMatrix
from .tolerances import NEGLIGIBLE, RECONSTRUCTION_TOL, validation_tol

# Branches below this probability are flagged instead of normalized.
ZERO_PROBABILITY = NEGLIGIBLE


class MeasurementBasis:
    """Complete set of rank-1 orthogonal projectors on the measured subsystem."""

    def __init__(self, projectors: Sequence[np.ndarray], description: str = "custom"):
        mats = tuple(np.array(p, dtype=complex) for p in projectors)
        if not mats:
            raise ValueError("a measurement basis needs at least one projector")
        dim = mats[0].shape[0]
        total = np.zeros((dim, dim), dtype=complex)
        for k, p in enumerate(mats):
            if p.shape != (dim, dim):
                raise ValueError(f"projector {k} has shape {p.shape}, expected ({dim}, {dim})")
            if hermiticity_defect(p) > RECONSTRUCTION_TOL:
                raise ValueError(f"projector {k} is not Hermitian")
            if np.max(np.abs(p @ p - p)) > RECONSTRUCTION_TOL:
                raise ValueError(f"projector {k} is not idempotent")
            if abs(p.trace() - 1.0) > RECONSTRUCTION_TOL:
                raise ValueError(f"projector {k} has rank != 1")
            total += p
            p.setflags(write=False)
        if np.max(np.abs(total - np.eye(dim))) > RECONSTRUCTION_TOL:
            raise ValueError("projectors do not sum to the identity")
        self.projectors = mats
        self.dim_b = dim
        self.description = description

    @classmethod
    def computational(cls, dim_b: int = 2) -> "MeasurementBasis":
        """Projectors onto the standard basis vectors |k><k|."""
        eye = np.eye(dim_b, dtype=complex)
        projs = [np.outer(eye[:, k], eye[:, k].conj()) for k in range(dim_b)]
        return cls(projs, description="computational")

    @classmethod
    def rotated(cls, theta: float, phi: float) -> "MeasurementBasis":
        """Qubit basis along the Bloch direction (theta, phi); theta = 0 is computational."""
        c = np.cos(theta / 2.0)
        s = np.sin(theta / 2.0)
        v = np.array(
            [[c, -s * np.exp(-1j * phi)], [s * np.exp(1j * phi), c]],
            dtype=complex,
        )
        projs = [np.outer(v[:, k], v[:, k].conj()) for k in range(2)]
        return cls(projs, description=f"rotated(theta={theta:.12g}, phi={phi:.12g})")

    def __repr__(self) -> str:
        return f"MeasurementBasis({self.description}, dim_b={self.dim_b})"


@dataclass(frozen=True)
class Branch:
    """One measurement outcome; ``state`` is None when the probability vanishes."""

    probability: float
    state: DensityMatrix | None


@dataclass(frozen=True)
class MeasurementEnsemble:
    """Outcome branches of a projective measurement, in basis order."""

    branches: tuple[Branch, ...]
    basis: MeasurementBasis

    @property
    def probabilities(self) -> tuple[float, ...]:
        return tuple(b.probability for b in self.branches)


def measure_b(rho: DensityMatrix, basis: MeasurementBasis) -> MeasurementEnsemble:
    """Measure the second subsystem, returning normalized branches and probabilities.

    The probability-weighted branch sum equals the dephasing of the input in
    the measured basis, and the probabilities close to 1; branches below the
    1e-12 probability floor are flagged rather than normalized.
    """
    if rho.dim_b != basis.dim_b:
        raise ValueError(f"state has dim_b={rho.dim_b} but basis acts on dimension {basis.dim_b}")
    eye_a = np.eye(rho.dim_a, dtype=complex)
    branches = []
    total = 0.0
    for proj in basis.projectors:
        op = np.kron(eye_a, proj)
        unnormalized = op @ rho.matrix @ op
        p = float(np.trace(unnormalized).real)
        total += p
        if p < ZERO_PROBABILITY:
            branches.append(Branch(probability=p, state=None))
        else:
            branches.append(Branch(probability=p, state=DensityMatrix(unnormalized / p, rho.dim_a, rho.dim_b)))
    if abs(total - 1.0) > validation_tol():
        raise NumericError(f"outcome probabilities sum to {total:.12g}, expected 1")
    return MeasurementEnsemble(branches=tuple(branches), basis=basis)


@dataclass(frozen=True)
class MixingWeights:
    """Convex weights over measurement branches: nonnegative, summing to 1 within 1e-12."""

    mu: tuple[float, ...]

    def __post_init__(self):
        for k, w in enumerate(self.mu):
            if w < -NEGLIGIBLE:
                raise ValueError(f"weight mu_{k} = {w:.12g} is negative")
        total = sum(self.mu)
        if abs(total - 1.0) > NEGLIGIBLE:
            raise ValueError(f"weights sum to {total:.12g}, expected 1 within 1e-12")


def _as_weights(weights: "MixingWeights | Sequence[float]") -> MixingWeights:
    if isinstance(weights, MixingWeights):
        return weights
    return MixingWeights(mu=tuple(float(w) for w in weights))


def final_state_uniform(ensemble: MeasurementEnsemble) -> DensityMatrix:
    """Unweighted average of the normalized outcome branches.

    Every branch enters with weight 1/n regardless of its probability, so a
    vanishing-probability branch leaves the average undefined.
    """
    matrices = []
    for k, branch in enumerate(ensemble.branches):
        if branch.state is None:
            raise UndefinedAverageError(
                f"branch {k} has probability {branch.probability:.3e}; the unweighted average is undefined"
            )
        matrices.append(branch.state.matrix)
    averaged = sum(matrices) / len(matrices)
    template = ensemble.branches[0].state
    return DensityMatrix(averaged, template.dim_a, template.dim_b)


def final_state_weighted(
    ensemble: MeasurementEnsemble, weights: "MixingWeights | Sequence[float]"
) -> DensityMatrix:
    """Convex combination sum_k mu_k rho_k of the normalized branches.

    Flagged zero-probability branches must carry zero weight. Choosing
    mu_k equal to the outcome probabilities reproduces the dephased state.
    """
    w = _as_weights(weights)
    if len(w.mu) != len(ensemble.branches):
        raise ValueError(f"{len(w.mu)} weights for {len(ensemble.branches)} branches")
    dim_a = dim_b = None
    accumulated = None
    for k, (mu_k, branch) in enumerate(zip(w.mu, ensemble.branches)):
        if branch.state is None:
            if mu_k > NEGLIGIBLE:
                raise ValueError(
                    f"weight mu_{k} = {mu_k:.12g} assigned to a branch with probability {branch.probability:.3e}"
                )
            continue
        if accumulated is None:
            dim_a, dim_b = branch.state.dim_a, branch.state.dim_b
            accumulated = np.zeros_like(branch.state.matrix)
        accumulated = accumulated + mu_k * branch.state.matrix
    if accumulated is None:
        raise ValueError("all branches are flagged; nothing to mix")
    return DensityMatrix(accumulated, dim_a, dim_b)


@dataclass(frozen=True)
class CapacityGainReport:
    """Whole-pair and first-qubit capacities before and after measure-and-mix.

    ``big_f`` is the whole-pair capacity change, ``small_f`` the change for
    the first qubit alone.
    """

    c_before_total: float
    c_after_total: float
    c_before_a: float
    c_after_a: float
    big_f: float
    small_f: float
    scheme: str
    weights: tuple[float, ...] | None = None

    def to_json(self) -> dict:
        data = {
            "c_before_total": self.c_before_total,
            "c_after_total": self.c_after_total,
            "c_before_a": self.c_before_a,
            "c_after_a": self.c_after_a,
            "big_f": self.big_f,
            "small_f": self.small_f,
            "scheme": self.scheme,
        }
        if self.weights is not None:
            data["weights"] = list(self.weights)
        return data


def capacity_gain(
    rho: DensityMatrix,
    energies: QubitPairEnergies,
    basis: MeasurementBasis | None = None,
    scheme: str = "uniform",
    weights: "MixingWeights | Sequence[float] | None" = None,
) -> CapacityGainReport:
    """Measure the second qubit, mix the branches, and compare capacities.

    Parameters
    ----------
    rho : DensityMatrix
        Two-qubit input state.
    energies : QubitPairEnergies
        Level splittings defining the pair and single-qubit Hamiltonians.
    basis : MeasurementBasis, optional
        Defaults to the computational basis on the second qubit.
    scheme : str
        "uniform" for the unweighted branch average, "weighted" for a convex
        combination with ``weights``.
    weights : MixingWeights or sequence of float, optional
        Required exactly when scheme is "weighted".
    """
    if (rho.dim_a, rho.dim_b) != (2, 2):
        raise ValueError(f"expected a 2x2 bipartite state, got {rho.dim_a}x{rho.dim_b}")
    if basis is None:
        basis = MeasurementBasis.computational()
    h_pair = qubit_pair_hamiltonian(energies)
    h_a = subsystem_a_hamiltonian(energies)
    c_before_total = capacity(rho, h_pair)
    c_before_a = capacity(rho.reduced_a(), h_a)
    ensemble = measure_b(rho, basis)
    if scheme == "uniform":
        if weights is not None:
            raise ValueError("the uniform scheme takes no weights")
        final = final_state_uniform(ensemble)
        weight_tuple = None
    elif scheme == "weighted":
        if weights is None:
            raise ValueError("the weighted scheme requires weights")
        w = _as_weights(weights)
        final = final_state_weighted(ensemble, w)
        weight_tuple = w.mu
    else:
        raise ValueError(f"unknown scheme {scheme!r}; expected 'uniform' or 'weighted'")
    c_after_total = capacity(final, h_pair)
    c_after_a = capacity(final.reduced_a(), h_a)
    return CapacityGainReport(
        c_before_total=c_before_total,
        c_after_total=c_after_total,
        c_before_a=c_before_a,
        c_after_a=c_after_a,
        big_f=c_after_total - c_before_total,
        small_f=c_after_a - c_before_a,
        scheme=scheme,
        weights=weight_tuple,
    )
