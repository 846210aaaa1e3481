"""Parameter sweeps over the state families, plus the two bundled presets.

Each grid point builds a state, runs the measure-and-mix protocol, and
records the capacities before and after together with the input spectrum and
an entanglement verdict. Output is CSV (12 significant digits, deterministic
bytes) or JSON.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import IO

import numpy as np

from .battery import QubitPairEnergies
from .errors import InvalidStateError
from .measurement import MeasurementBasis, capacity_gain
from .states import DensityMatrix, XStateParams, bell_diagonal, example2, is_entangled, werner, x_state

FAMILY_PARAMS = {
    "werner": ("a",),
    "example2": ("x",),
    "bell_diagonal": ("c1", "c2", "c3"),
    "x_state": ("coherence_scale",),
}


@dataclass(frozen=True)
class SweepSpec:
    """One-parameter grid over a state family with fixed protocol settings.

    ``param`` names the swept quantity: ``a`` for werner, ``x`` for example2,
    one of ``c1``/``c2``/``c3`` for bell_diagonal (the others come from
    ``bell_diag``), or ``coherence_scale`` for x_state (a factor in [0, 1]
    applied to both coherences of ``x_params``).
    """

    family: str
    param: str
    start: float
    stop: float
    count: int
    energies: QubitPairEnergies
    scheme: str = "uniform"
    weights: tuple[float, ...] | None = None
    basis_angles: tuple[float, float] | None = None
    bell_diag: tuple[float, float, float] | None = None
    x_params: XStateParams | None = None

    def __post_init__(self):
        if self.family not in FAMILY_PARAMS:
            raise ValueError(f"unknown family {self.family!r}; expected one of {sorted(FAMILY_PARAMS)}")
        if self.param not in FAMILY_PARAMS[self.family]:
            raise ValueError(
                f"family {self.family!r} sweeps one of {FAMILY_PARAMS[self.family]}, got {self.param!r}"
            )
        if self.count < 2:
            raise ValueError(f"grid needs at least 2 points, got {self.count}")
        if self.family == "bell_diagonal" and self.bell_diag is None:
            raise ValueError("bell_diagonal sweeps need a base (c1, c2, c3) triple")
        if self.family == "x_state" and self.x_params is None:
            raise ValueError("x_state sweeps need base x-state parameters")
        if self.scheme == "weighted" and self.weights is None:
            raise ValueError("the weighted scheme requires weights")
        if self.scheme == "uniform" and self.weights is not None:
            raise ValueError("the uniform scheme takes no weights")

    def grid(self) -> np.ndarray:
        """Evenly spaced parameter values, endpoints included."""
        return np.linspace(self.start, self.stop, self.count)

    def basis(self) -> MeasurementBasis:
        if self.basis_angles is None:
            return MeasurementBasis.computational()
        return MeasurementBasis.rotated(*self.basis_angles)

    def state_at(self, value: float) -> DensityMatrix:
        """State of the family at one grid point; constructors validate the domain."""
        if self.family == "werner":
            return werner(value)
        if self.family == "example2":
            return example2(value)
        if self.family == "bell_diagonal":
            triple = list(self.bell_diag)
            triple[FAMILY_PARAMS["bell_diagonal"].index(self.param)] = value
            return bell_diagonal(*triple)
        base = self.x_params
        if not 0.0 <= value <= 1.0:
            raise InvalidStateError(f"coherence_scale must lie in [0, 1], got {value:.12g}")
        scaled = XStateParams(
            rho11=base.rho11,
            rho22=base.rho22,
            rho33=base.rho33,
            rho44=base.rho44,
            rho14=base.rho14 * value,
            rho23=base.rho23 * value,
        )
        return x_state(scaled)


@dataclass(frozen=True)
class SweepRow:
    """Protocol results at one grid point."""

    param_value: float
    spectrum: tuple[float, float, float, float]
    c_before_total: float
    c_after_total: float
    c_before_a: float
    c_after_a: float
    big_f: float
    small_f: float
    entangled: bool


def figure_preset(name: str) -> SweepSpec:
    """Bundled parameter studies.

    ``fig2``: the example2 family over x in [0, 0.5] (101 points), uniform
    mixing, splittings (0.5, 0.3); the first-qubit gain stays positive up to
    the x = 1/2 endpoint where it vanishes.

    ``fig3``: the same family over x in [0, 0.056] (101 points), weighted
    mixing with mu = (0.1, 0.9), splittings (0.5, 0.3); the whole-pair gain is
    positive on this window.
    """
    energies = QubitPairEnergies(eps_a=0.5, eps_b=0.3)
    if name == "fig2":
        return SweepSpec(
            family="example2",
            param="x",
            start=0.0,
            stop=0.5,
            count=101,
            energies=energies,
            scheme="uniform",
        )
    if name == "fig3":
        return SweepSpec(
            family="example2",
            param="x",
            start=0.0,
            stop=0.056,
            count=101,
            energies=energies,
            scheme="weighted",
            weights=(0.1, 0.9),
        )
    raise ValueError(f"unknown figure preset {name!r}; expected 'fig2' or 'fig3'")


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate the protocol on every grid point, in grid order."""
    basis = spec.basis()
    rows = []
    for value in spec.grid():
        rho = spec.state_at(float(value))
        report = capacity_gain(rho, spec.energies, basis=basis, scheme=spec.scheme, weights=spec.weights)
        rows.append(
            SweepRow(
                param_value=float(value),
                spectrum=tuple(float(v) for v in rho.spectrum),
                c_before_total=report.c_before_total,
                c_after_total=report.c_after_total,
                c_before_a=report.c_before_a,
                c_after_a=report.c_after_a,
                big_f=report.big_f,
                small_f=report.small_f,
                entangled=is_entangled(rho),
            )
        )
    return rows


def format_number(x: float) -> str:
    """12 significant digits, locale independent, no negative zero."""
    if x == 0.0:
        x = 0.0
    return f"{x:.12g}"


def csv_columns(spec: SweepSpec) -> list[str]:
    return [
        spec.param,
        "lambda0",
        "lambda1",
        "lambda2",
        "lambda3",
        "c_before_total",
        "c_after_total",
        "c_before_a",
        "c_after_a",
        "big_f",
        "small_f",
        "entangled",
    ]


def write_csv(rows: list[SweepRow], spec: SweepSpec, stream: IO[str]) -> None:
    """Emit rows in grid order; repeated calls produce identical bytes."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(csv_columns(spec))
    for row in rows:
        writer.writerow(
            [
                format_number(row.param_value),
                *(format_number(v) for v in row.spectrum),
                format_number(row.c_before_total),
                format_number(row.c_after_total),
                format_number(row.c_before_a),
                format_number(row.c_after_a),
                format_number(row.big_f),
                format_number(row.small_f),
                "true" if row.entangled else "false",
            ]
        )


def rows_to_json(rows: list[SweepRow], spec: SweepSpec) -> dict:
    """JSON form of a finished sweep: the spec echo plus one object per row."""
    meta = {
        "family": spec.family,
        "param": spec.param,
        "eps_a": spec.energies.eps_a,
        "eps_b": spec.energies.eps_b,
        "scheme": spec.scheme,
    }
    if spec.weights is not None:
        meta["weights"] = list(spec.weights)
    if spec.basis_angles is not None:
        meta["basis"] = {"theta": spec.basis_angles[0], "phi": spec.basis_angles[1]}
    else:
        meta["basis"] = "computational"
    return {
        **meta,
        "rows": [
            {
                spec.param: row.param_value,
                "spectrum": list(row.spectrum),
                "c_before_total": row.c_before_total,
                "c_after_total": row.c_after_total,
                "c_before_a": row.c_before_a,
                "c_after_a": row.c_after_a,
                "big_f": row.big_f,
                "small_f": row.small_f,
                "entangled": row.entangled,
            }
            for row in rows
        ],
    }
