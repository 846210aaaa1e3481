"""Command-line interface: capacity, measure, and sweep subcommands.

Exit codes: 0 success, 2 invalid state or sweep specification, 64 usage
error, 74 I/O failure. The QBCAP_TOL environment variable overrides the
state-validation tolerance (default 1e-10).
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys

from .battery import QubitPairEnergies, capacity, qubit_pair_hamiltonian, subsystem_a_hamiltonian
from .errors import NumericError
from .measurement import MeasurementBasis, capacity_gain
from .states import DensityMatrix, XStateParams, bell_diagonal, example2, is_entangled, werner, x_state
from .sweep import SweepSpec, figure_preset, format_number, rows_to_json, run_sweep, write_csv
from .tolerances import set_validation_tol

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_USAGE = 64
EXIT_IO = 74


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage failures exit with code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_state_flags(sub: argparse.ArgumentParser, required: bool) -> None:
    group = sub.add_mutually_exclusive_group(required=required)
    group.add_argument("--werner", type=float, metavar="A", help="werner state with singlet fraction A in [0, 1]")
    group.add_argument(
        "--bell-diag",
        type=float,
        nargs=3,
        metavar=("C1", "C2", "C3"),
        help="correlation-diagonal state with the given triple",
    )
    group.add_argument("--x-state", metavar="FILE", help="JSON file with X-state populations and coherences")
    group.add_argument("--example2", type=float, metavar="X", help="three-level mixture with parameter X in [0, 1/2]")
    group.add_argument("--state", metavar="FILE", help="JSON file with an explicit density matrix")


def _add_energy_flags(sub: argparse.ArgumentParser, required: bool) -> None:
    sub.add_argument("--eps-a", type=float, metavar="E", required=required, help="level splitting of the first qubit")
    sub.add_argument("--eps-b", type=float, metavar="E", required=required, help="level splitting of the second qubit")


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    sub.add_argument("--format", choices=("csv", "json"), help="machine-readable output format")
    sub.add_argument("--seed", type=int, default=0, metavar="N", help="seed for randomized extensions; accepted for reproducibility")


def build_parser() -> _Parser:
    parser = _Parser(prog="qbcap", description="Battery capacity of two-qubit states under local projective measurements.")
    subs = parser.add_subparsers(dest="command", required=True)

    cap = subs.add_parser("capacity", help="capacities and spectrum of a state")
    _add_state_flags(cap, required=True)
    _add_energy_flags(cap, required=True)
    _add_common_flags(cap)
    cap.set_defaults(func=cmd_capacity)

    mea = subs.add_parser("measure", help="measure the second qubit, mix branches, compare capacities")
    _add_state_flags(mea, required=True)
    _add_energy_flags(mea, required=True)
    mea.add_argument(
        "--scheme",
        nargs="+",
        default=["uniform"],
        metavar="S",
        help="'uniform' or 'weighted MU0 MU1 ...'",
    )
    mea.add_argument(
        "--basis",
        nargs="+",
        default=["computational"],
        metavar="B",
        help="'computational' or 'rotated THETA PHI'",
    )
    _add_common_flags(mea)
    mea.set_defaults(func=cmd_measure)

    swe = subs.add_parser("sweep", help="run the protocol over a parameter grid")
    swe.add_argument("--figure", choices=("fig2", "fig3"), help="bundled preset study")
    swe.add_argument("--spec", metavar="FILE", help="JSON sweep specification")
    swe.add_argument("--family", choices=("werner", "bell_diagonal", "x_state", "example2"))
    swe.add_argument("--param", metavar="NAME", help="swept parameter name")
    swe.add_argument("--start", type=float)
    swe.add_argument("--stop", type=float)
    swe.add_argument("--count", type=int)
    _add_energy_flags(swe, required=False)
    swe.add_argument("--scheme", nargs="+", default=["uniform"], metavar="S", help="'uniform' or 'weighted MU0 MU1 ...'")
    swe.add_argument("--basis", nargs="+", default=["computational"], metavar="B", help="'computational' or 'rotated THETA PHI'")
    swe.add_argument("--bell-diag", type=float, nargs=3, metavar=("C1", "C2", "C3"), help="base triple for bell_diagonal sweeps")
    swe.add_argument("--x-state", metavar="FILE", help="base state for x_state sweeps")
    _add_common_flags(swe)
    swe.set_defaults(func=cmd_sweep)

    return parser


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _state_from_args(args) -> DensityMatrix:
    if args.werner is not None:
        return werner(args.werner)
    if args.bell_diag is not None:
        return bell_diagonal(*args.bell_diag)
    if args.x_state is not None:
        return x_state(XStateParams.from_json(_read_json(args.x_state)))
    if args.example2 is not None:
        return example2(args.example2)
    rho = DensityMatrix.from_json(_read_json(args.state))
    if (rho.dim_a, rho.dim_b) != (2, 2):
        raise ValueError(f"expected a 2x2 bipartite state, got {rho.dim_a}x{rho.dim_b}")
    return rho


def _parse_scheme(tokens: list[str], parser: _Parser) -> tuple[str, tuple[float, ...] | None]:
    kind = tokens[0]
    if kind == "uniform":
        if len(tokens) > 1:
            parser.error("the uniform scheme takes no weights")
        return "uniform", None
    if kind == "weighted":
        if len(tokens) < 2:
            parser.error("the weighted scheme needs at least one weight")
        try:
            return "weighted", tuple(float(t) for t in tokens[1:])
        except ValueError:
            parser.error(f"weights must be numbers, got {tokens[1:]}")
    parser.error(f"unknown scheme {kind!r}; expected 'uniform' or 'weighted'")


def _parse_basis(tokens: list[str], parser: _Parser) -> tuple[float, float] | None:
    kind = tokens[0]
    if kind == "computational":
        if len(tokens) > 1:
            parser.error("the computational basis takes no angles")
        return None
    if kind == "rotated":
        if len(tokens) != 3:
            parser.error("the rotated basis needs THETA and PHI")
        try:
            return float(tokens[1]), float(tokens[2])
        except ValueError:
            parser.error(f"basis angles must be numbers, got {tokens[1:]}")
    parser.error(f"unknown basis {kind!r}; expected 'computational' or 'rotated'")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_capacity(args, parser: _Parser) -> int:
    rho = _state_from_args(args)
    energies = QubitPairEnergies(eps_a=args.eps_a, eps_b=args.eps_b)
    c_total = capacity(rho, qubit_pair_hamiltonian(energies))
    c_a = capacity(rho.reduced_a(), subsystem_a_hamiltonian(energies))
    spectrum = [float(v) for v in rho.spectrum]
    entangled = is_entangled(rho)
    if args.format == "json":
        text = json.dumps(
            {"c_total": c_total, "c_subsystem_a": c_a, "spectrum": spectrum, "entangled": entangled},
            indent=2,
        ) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        buf.write("c_total,c_subsystem_a,lambda0,lambda1,lambda2,lambda3,entangled\n")
        cells = [format_number(c_total), format_number(c_a), *(format_number(v) for v in spectrum)]
        buf.write(",".join(cells) + ("," + ("true" if entangled else "false")) + "\n")
        text = buf.getvalue()
    else:
        lines = [
            f"c_total: {format_number(c_total)}",
            f"c_subsystem_a: {format_number(c_a)}",
            "spectrum: " + " ".join(format_number(v) for v in spectrum),
            f"entangled: {'true' if entangled else 'false'}",
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_measure(args, parser: _Parser) -> int:
    rho = _state_from_args(args)
    energies = QubitPairEnergies(eps_a=args.eps_a, eps_b=args.eps_b)
    scheme, weights = _parse_scheme(args.scheme, parser)
    angles = _parse_basis(args.basis, parser)
    basis = MeasurementBasis.computational() if angles is None else MeasurementBasis.rotated(*angles)
    report = capacity_gain(rho, energies, basis=basis, scheme=scheme, weights=weights)
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=2) + "\n"
    elif args.format == "csv":
        header = "c_before_total,c_after_total,c_before_a,c_after_a,big_f,small_f,scheme,weights\n"
        cells = [
            format_number(report.c_before_total),
            format_number(report.c_after_total),
            format_number(report.c_before_a),
            format_number(report.c_after_a),
            format_number(report.big_f),
            format_number(report.small_f),
            report.scheme,
            ";".join(format_number(w) for w in report.weights) if report.weights else "",
        ]
        text = header + ",".join(cells) + "\n"
    else:
        scheme_line = report.scheme
        if report.weights is not None:
            scheme_line += " " + " ".join(format_number(w) for w in report.weights)
        lines = [
            f"scheme: {scheme_line}",
            f"c_before_total: {format_number(report.c_before_total)}",
            f"c_after_total: {format_number(report.c_after_total)}",
            f"c_before_a: {format_number(report.c_before_a)}",
            f"c_after_a: {format_number(report.c_after_a)}",
            f"big_f: {format_number(report.big_f)}",
            f"small_f: {format_number(report.small_f)}",
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _spec_from_json(data: dict) -> SweepSpec:
    try:
        family = data["family"]
        param = data["param"]
        start = float(data["start"])
        stop = float(data["stop"])
        count = int(data["count"])
        eps_a = float(data["eps_a"])
        eps_b = float(data["eps_b"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed sweep specification: {exc}") from exc
    scheme = data.get("scheme", "uniform")
    weights = tuple(float(w) for w in data["weights"]) if "weights" in data else None
    basis = data.get("basis", "computational")
    if basis == "computational":
        basis_angles = None
    elif isinstance(basis, dict) and {"theta", "phi"} <= set(basis):
        basis_angles = (float(basis["theta"]), float(basis["phi"]))
    else:
        raise ValueError(f"malformed basis entry: {basis!r}")
    bell_diag = tuple(float(c) for c in data["bell_diag"]) if "bell_diag" in data else None
    x_params = XStateParams.from_json(data["x_state"]) if "x_state" in data else None
    return SweepSpec(
        family=family,
        param=param,
        start=start,
        stop=stop,
        count=count,
        energies=QubitPairEnergies(eps_a=eps_a, eps_b=eps_b),
        scheme=scheme,
        weights=weights,
        basis_angles=basis_angles,
        bell_diag=bell_diag,
        x_params=x_params,
    )


def _sweep_spec_from_args(args, parser: _Parser) -> SweepSpec:
    grid_flags = (args.family, args.param, args.start, args.stop, args.count)
    if args.figure is not None:
        if args.spec is not None or any(f is not None for f in grid_flags):
            parser.error("--figure cannot be combined with --spec or grid flags")
        return figure_preset(args.figure)
    if args.spec is not None:
        if any(f is not None for f in grid_flags):
            parser.error("--spec cannot be combined with grid flags")
        return _spec_from_json(_read_json(args.spec))
    if any(f is None for f in grid_flags):
        parser.error("a sweep needs --figure, --spec, or all of --family/--param/--start/--stop/--count")
    if args.eps_a is None or args.eps_b is None:
        parser.error("custom sweeps need --eps-a and --eps-b")
    scheme, weights = _parse_scheme(args.scheme, parser)
    basis_angles = _parse_basis(args.basis, parser)
    x_params = XStateParams.from_json(_read_json(args.x_state)) if args.x_state is not None else None
    return SweepSpec(
        family=args.family,
        param=args.param,
        start=args.start,
        stop=args.stop,
        count=args.count,
        energies=QubitPairEnergies(eps_a=args.eps_a, eps_b=args.eps_b),
        scheme=scheme,
        weights=weights,
        basis_angles=basis_angles,
        bell_diag=tuple(args.bell_diag) if args.bell_diag is not None else None,
        x_params=x_params,
    )


def cmd_sweep(args, parser: _Parser) -> int:
    spec = _sweep_spec_from_args(args, parser)
    rows = run_sweep(spec)
    if args.format == "json":
        text = json.dumps(rows_to_json(rows, spec), indent=2) + "\n"
    else:
        buf = io.StringIO()
        write_csv(rows, spec, buf)
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    raw_tol = os.environ.get("QBCAP_TOL")
    if raw_tol:
        try:
            set_validation_tol(float(raw_tol))
        except ValueError as exc:
            print(f"qbcap: error: invalid QBCAP_TOL: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args, parser)
    except (ValueError, NumericError) as exc:
        print(f"qbcap: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"qbcap: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
