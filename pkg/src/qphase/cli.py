"""Command-line front end.

::

    qphase basis-check --N 3,5,7
    qphase map --N 3 --operator U
    qphase wigner --N 3 --state u0 --format csv
    qphase limit-cartesian --dims 21,51,101 --sigma 1 --delta 1
    qphase limit-angular --dims 21,51,101 --coeffs 0,0.7071067811865476,0.7071067811865476
    qphase pegg-barnett --N 5 --theta-ref 1.2566370614359172
    qphase verify-all --N 3,5,7 --seed 0

Output goes to ``--output`` (written atomically) or standard output.
Exit status: 0 on success, 1 when a verification check fails, 2 on invalid
input.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import serialize
from .basis import build_all
from .continuum import (
    AngularScaling,
    CartesianScaling,
    angular_convergence,
    build_m_theta,
    build_pq,
    cartesian_convergence,
    gaussian_state,
    pegg_barnett_map,
)
from .errors import InputError, PhaseSpaceError
from .mapping import map_operator
from .schwinger import Dimension, as_dimension, build_u, build_v, finite_fourier
from .verify import basis_checks, run_checks
from .wigner import wigner_fast, wigner_pure

log = logging.getLogger("qphase")

COMMANDS = (
    "basis-check",
    "map",
    "wigner",
    "limit-cartesian",
    "limit-angular",
    "pegg-barnett",
    "verify-all",
)
STATE_NORM_TOL = 1e-6


@dataclass
class RunConfig:
    command: str
    N: list[int] = field(default_factory=lambda: [3])
    delta: float = 1.0
    sigma: float = 1.0
    theta_ref: float = 0.0
    state: str = "u0"
    operator: str = "U"
    coeffs: list[complex] = field(default_factory=lambda: [0, 2 ** -0.5, 2 ** -0.5])
    method: str = "fast"
    seed: int = 0
    output: str | None = None
    format: str = "csv"

    def validate(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.format not in ("csv", "json"):
            raise InputError(f"unknown format {self.format!r}")
        for N in self.N:
            as_dimension(N)


_PRESET = re.compile(r"^([uv])(-?\d+)$")


def load_state(source: str, dim, sigma: float = 1.0, delta: float = 1.0) -> np.ndarray:
    """Resolve a state source to a normalized amplitude vector.

    ``source`` is a preset (``u<k>``, ``v<k>``, ``gaussian``) or the path of a
    JSON list of ``[re, im]`` pairs. File states within ``1e-6`` of unit
    norm are renormalized; others are rejected.
    """
    d = as_dimension(dim)
    match = _PRESET.match(source)
    if match:
        kind, k = match.group(1), int(match.group(2))
        if kind == "u":
            psi = np.zeros(d.N, dtype=complex)
            psi[k % d.N] = 1.0
            return psi
        return finite_fourier(d)[k % d.N].conj().copy()
    if source == "gaussian":
        return gaussian_state(CartesianScaling(d, delta), sigma)

    path = Path(source)
    if not path.is_file():
        raise InputError(f"unknown state preset or missing file: {source!r}")
    try:
        raw = json.loads(path.read_text())
        psi = np.array([complex(float(re_), float(im_)) for re_, im_ in raw])
    except (ValueError, TypeError) as exc:
        raise InputError(f"{source}: expected a JSON list of [re, im] pairs ({exc})") from None
    if psi.shape != (d.N,):
        raise InputError(f"{source}: expected {d.N} amplitudes, got {psi.size}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > STATE_NORM_TOL:
        raise InputError(f"{source}: state norm {norm!r} deviates from 1 by more than {STATE_NORM_TOL}")
    return psi / norm


def _operator(name: str, d: Dimension, delta: float) -> np.ndarray:
    if name == "U":
        return build_u(d)
    if name == "V":
        return build_v(d)
    if name in ("I", "identity"):
        return np.eye(d.N, dtype=complex)
    if name in ("P", "Q"):
        P, Q = build_pq(CartesianScaling(d, delta))
        return P if name == "P" else Q
    if name in ("M", "number", "Theta", "phase"):
        M, Theta = build_m_theta(AngularScaling(d))
        return M if name in ("M", "number") else Theta
    path = Path(name)
    if not path.is_file():
        raise InputError(f"unknown operator {name!r}")
    try:
        raw = json.loads(path.read_text())
        op = np.array([[complex(float(a), float(b)) for a, b in row] for row in raw])
    except (ValueError, TypeError) as exc:
        raise InputError(f"{name}: expected an N x N JSON array of [re, im] pairs ({exc})") from None
    if op.shape != (d.N, d.N):
        raise InputError(f"{name}: operator has shape {op.shape}, expected {(d.N, d.N)}")
    return op


def _single_n(config: RunConfig) -> Dimension:
    if len(config.N) != 1:
        raise InputError(f"{config.command} takes a single --N")
    return as_dimension(config.N[0])


def _emit(config: RunConfig, text: str) -> None:
    if config.output:
        serialize.atomic_write(config.output, text)
    else:
        sys.stdout.write(text)


def run(config: RunConfig) -> int:
    """Execute one command; returns the process exit status."""
    config.validate()
    csv = config.format == "csv"
    cmd = config.command

    if cmd in ("basis-check", "verify-all"):
        checks = []
        for N in config.N:
            if cmd == "basis-check":
                checks += basis_checks(build_all(N))
            else:
                checks += run_checks(N, seed=config.seed)
        seed = config.seed if cmd == "verify-all" else None
        text = serialize.checks_to_csv(checks, seed) if csv else serialize.checks_to_json(checks, seed)
        _emit(config, text)
        failed = [c for c in checks if not c.passed]
        for c in checks:
            log.info("N=%d %-24s %.3e <= %.0e  %s", c.N, c.name, c.value, c.tolerance,
                     "ok" if c.passed else "FAIL")
        if failed:
            for c in failed:
                print(f"check failed: N={c.N} {c.name} {c.value:.3e} > {c.tolerance:.0e}", file=sys.stderr)
            return 1
        print(f"{len(checks)} checks passed", file=sys.stderr)
        return 0

    if cmd == "map":
        d = _single_n(config)
        grid = map_operator(_operator(config.operator, d, config.delta), build_all(d))
        _emit(config, serialize.grid_to_csv(grid) if csv else serialize.grid_to_json(grid))
        return 0

    if cmd == "wigner":
        d = _single_n(config)
        psi = load_state(config.state, d, config.sigma, config.delta)
        grid = wigner_fast(psi) if config.method == "fast" else wigner_pure(psi)
        _emit(config, serialize.grid_to_csv(grid) if csv else serialize.grid_to_json(grid))
        return 0

    if cmd in ("limit-cartesian", "limit-angular"):
        if cmd == "limit-cartesian":
            report = cartesian_convergence(config.sigma, config.N, config.delta)
        else:
            report = angular_convergence(config.coeffs, config.N)
        _emit(config, serialize.report_to_csv(report) if csv else serialize.report_to_json(report))
        return 0

    if cmd == "pegg-barnett":
        d = _single_n(config)
        number, phase = pegg_barnett_map(config.theta_ref, d)
        grids = {"number": number, "phase": phase}
        text = serialize.grids_to_csv(grids) if csv else serialize.grids_to_json(grids, theta_ref=config.theta_ref)
        _emit(config, text)
        return 0

    raise InputError(f"unhandled command {cmd!r}")  # pragma: no cover


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _complex_list(text: str) -> list[complex]:
    try:
        return [complex(x.strip().replace(" ", "")) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qphase", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    p = add("basis-check", "trace, Hermiticity, orthogonality and completeness of the basis")
    p.add_argument("--N", type=_int_list, required=True, help="odd dimension(s), comma separated")

    p = add("map", "phase-space representative of an operator")
    p.add_argument("--N", type=_int_list, required=True)
    p.add_argument("--operator", default="U",
                   help="U, V, identity, P, Q, number, phase, or a JSON file of [re, im] pairs")
    p.add_argument("--delta", type=float, default=1.0)

    p = add("wigner", "discrete Wigner function of a pure state")
    p.add_argument("--N", type=_int_list, required=True)
    p.add_argument("--state", default="u0", help="u<k>, v<k>, gaussian, or a JSON file of [re, im] pairs")
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--delta", type=float, default=1.0)
    p.add_argument("--method", choices=("fast", "direct"), default="fast")

    p = add("limit-cartesian", "convergence to the continuum Wigner function of a Gaussian")
    p.add_argument("--dims", dest="N", type=_int_list, required=True)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--delta", type=float, default=1.0)

    p = add("limit-angular", "convergence to the angular Wigner function")
    p.add_argument("--dims", dest="N", type=_int_list, required=True)
    p.add_argument("--coeffs", type=_complex_list, default=[0, 2 ** -0.5, 2 ** -0.5],
                   help="amplitudes c_{-M}..c_M, comma separated (complex allowed, e.g. 0.5+0.5j)")

    p = add("pegg-barnett", "number and phase operator representatives")
    p.add_argument("--N", type=_int_list, required=True)
    p.add_argument("--theta-ref", type=float, default=0.0)

    p = add("verify-all", "run every numerical self-check")
    p.add_argument("--N", type=_int_list, required=True)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    options = {k: v for k, v in vars(args).items() if k != "verbose" and v is not None}
    if "theta_ref" in options:
        options["theta_ref"] = float(options["theta_ref"])
    config = RunConfig(**options)
    try:
        return run(config)
    except PhaseSpaceError as exc:
        print(f"qphase {config.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
