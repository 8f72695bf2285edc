"""Command-line interface.

Subcommands
-----------
model     build a geometry, write its dynamical matrix and geometry JSON
estimate  run the hybrid routine for one eigenpair of a geometry
sweep     repeated maximum-eigenvalue estimates over the geometry ladder
assess    run the suitability/alternative/feasibility gate for a device

Results go to standard output or to ``--output``; log messages and errors
go to standard error.  Errors are reported as a single line
``nisq-modal: error[<code>]: <message>`` with exit status 2 for usage
errors and 1 otherwise.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Union

from .analytics.estimator import eigendecompose, evaluate_plan, prepare_estimation
from .analytics.sweep import sweep, write_sweep
from .assessment.gate import profile_from_system, run_gate
from .assessment.registry import get_device
from .config import DEFAULTS
from .exceptions import NisqModalError, UsageError
from .logging_config import get_logger, setup_root_logger
from .models.dynamical_matrix import assemble_dynamical_matrix, pad_to_qubit_dimension
from .models.oscillators import geometry_from_selector, standard_ladder
from .quantum.measurement import NoiseModel
from .types import ProblemProfile
from .utils.io_matrix import (
    write_circuit_json,
    write_decomposition_json,
    write_geometry_json,
    write_json,
    write_matrix_text,
)

logger = get_logger(__name__)

PROG = "nisq-modal"


@dataclass
class RunConfig:
    """Resolved settings of one CLI invocation."""

    command: str
    geometry: Optional[str] = None
    geometries: List[str] = field(default_factory=list)
    noise: Union[float, str] = DEFAULTS.gate_fidelity  # or "reference"
    two_qubit_noise: Optional[float] = None
    shots: Optional[int] = DEFAULTS.shots  # None means analytic
    repetitions: int = DEFAULTS.chain_repetitions
    blade_repetitions: int = DEFAULTS.blade_repetitions
    full_ladder: bool = False
    k: Optional[int] = None
    seed: int = DEFAULTS.seed
    jobs: int = 1
    output: Optional[str] = None
    format: str = "csv"
    circuit: Optional[str] = None
    decomposition: Optional[str] = None
    device: Optional[str] = None
    steps: int = DEFAULTS.assess_steps
    size: Optional[int] = None
    qubits: Optional[int] = None
    gates: Optional[int] = None
    parallel: bool = False
    non_hermitian: bool = False
    fidelity_floor: float = DEFAULTS.fidelity_floor
    log_level: str = "WARNING"


class _Parser(argparse.ArgumentParser):
    """Argument parser that raises `UsageError` instead of exiting."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


REFERENCE_NOISE = "reference"
FORMATS = ("csv", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _integer(value: Any, what: str) -> int:
    # JSON booleans and floats are rejected rather than truncated
    if isinstance(value, (bool, float)):
        raise UsageError(f"expected {what}, got {value!r}")
    try:
        return int(value)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"expected {what}, got {value!r}") from exc


def parse_shots(value: Any) -> Optional[int]:
    """Parse ``analytic`` or a positive shot count."""
    if value is None or (isinstance(value, str) and value.strip().lower() == "analytic"):
        return None
    shots = _integer(value, "a positive shot count or 'analytic'")
    if shots < 1:
        raise UsageError(f"shots must be a positive integer or 'analytic', got {value!r}")
    return shots


def _fidelity(value: Any) -> float:
    if isinstance(value, bool):
        raise UsageError(f"fidelity must be a number, got {value!r}")
    try:
        f = float(value)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"fidelity must be a number, got {value!r}") from exc
    if not 0.0 < f <= 1.0:
        raise UsageError(f"fidelity must lie in (0, 1], got {value}")
    return f


def _noise(value: Any) -> Union[float, str]:
    """Parse a gate fidelity or ``reference`` for the reference device figures."""
    if isinstance(value, str) and value.strip().lower() == REFERENCE_NOISE:
        return REFERENCE_NOISE
    return _fidelity(value)


def _floor(value: Any) -> float:
    f = _fidelity(value)
    if f == 1.0:
        raise UsageError("fidelity floor must lie in (0, 1), got 1")
    return f


def _positive_int(value: Any) -> int:
    n = _integer(value, "a positive integer")
    if n < 1:
        raise UsageError(f"expected a positive integer, got {value!r}")
    return n


def _non_negative_int(value: Any) -> int:
    n = _integer(value, "a non-negative integer")
    if n < 0:
        raise UsageError(f"expected a non-negative integer, got {value!r}")
    return n


def _text(value: Any) -> str:
    if not isinstance(value, str) or not value:
        raise UsageError(f"expected a non-empty string, got {value!r}")
    return value


def _switch(value: Any) -> bool:
    if not isinstance(value, bool):
        raise UsageError(f"expected true or false, got {value!r}")
    return value


def _selectors(value: Any) -> List[str]:
    if not isinstance(value, list) or not all(isinstance(s, str) and s for s in value):
        raise UsageError(f"expected a list of geometry selectors, got {value!r}")
    return list(value)


def _choice(options: Sequence[str]) -> Callable[[Any], str]:
    def convert(value: Any) -> str:
        if value not in options:
            raise UsageError(f"expected one of {', '.join(options)}, got {value!r}")
        return value

    return convert


# converters applied to --config file values; flags go through the same ones
CONFIG_CONVERTERS: Dict[str, Callable[[Any], Any]] = {
    "geometry": _text,
    "geometries": _selectors,
    "noise": _noise,
    "two_qubit_noise": _fidelity,
    "shots": parse_shots,
    "repetitions": _positive_int,
    "blade_repetitions": _positive_int,
    "full_ladder": _switch,
    "k": _non_negative_int,
    "seed": _non_negative_int,
    "jobs": _positive_int,
    "output": _text,
    "format": _choice(FORMATS),
    "circuit": _text,
    "decomposition": _text,
    "device": _text,
    "steps": _positive_int,
    "size": _positive_int,
    "qubits": _positive_int,
    "gates": _non_negative_int,
    "parallel": _switch,
    "non_hermitian": _switch,
    "fidelity_floor": _floor,
    "log_level": _choice(LOG_LEVELS),
}


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with all subcommands.

    Options that may also come from ``--config`` default to None here so
    that explicitly given flags can be told apart from defaults.
    """
    common = _Parser(add_help=False)
    common.add_argument("--config", help="JSON file with RunConfig fields; flags override it")
    common.add_argument(
        "--seed",
        type=_non_negative_int,
        help=f"base seed (default: ${DEFAULTS.seed_env_var} or {DEFAULTS.seed})",
    )
    common.add_argument("--output", help="output path (default: standard output)")
    common.add_argument("--format", choices=FORMATS, help="output format (default: csv)")
    common.add_argument("--log-level", choices=LOG_LEVELS, help="default WARNING")

    noise = _Parser(add_help=False)
    noise.add_argument(
        "--noise",
        type=_noise,
        help=f"gate fidelity f in (0, 1]; 1 is noiseless, 'reference' uses the reference device figures "
        f"(default {DEFAULTS.gate_fidelity})",
    )
    noise.add_argument("--two-qubit-noise", type=_fidelity, help="separate CNOT fidelity (default: --noise)")
    noise.add_argument("--shots", help=f"shots per Pauli term or 'analytic' (default {DEFAULTS.shots})")

    parser = _Parser(prog=PROG, description="Hybrid eigenvalue estimation for oscillator models.")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    model = commands.add_parser("model", parents=[common], help="write the dynamical matrix of a geometry")
    model.add_argument("geometry", help="chain:N[:fixed_fixed|fixed_free] or blade:a|b|c[:h]")

    estimate = commands.add_parser("estimate", parents=[common, noise], help="estimate one eigenvalue")
    estimate.add_argument("geometry", help="chain:N[:fixed_fixed|fixed_free] or blade:a|b|c[:h]")
    estimate.add_argument("--k", type=_non_negative_int, help="eigenpair index, ascending (default: maximum)")
    estimate.add_argument("--circuit", help="also write the encoding circuit JSON here")
    estimate.add_argument("--decomposition", help="also write the Pauli decomposition JSON here")

    sweep_cmd = commands.add_parser("sweep", parents=[common, noise], help="sweep the geometry ladder")
    sweep_cmd.add_argument("geometries", nargs="*", help="geometry selectors (default: standard ladder)")
    sweep_cmd.add_argument(
        "--repetitions", type=_positive_int, help=f"repetitions per chain (default {DEFAULTS.chain_repetitions})"
    )
    sweep_cmd.add_argument(
        "--blade-repetitions",
        type=_positive_int,
        help=f"repetitions per blade (default {DEFAULTS.blade_repetitions})",
    )
    sweep_cmd.add_argument(
        "--full-ladder", action="store_true", default=None, help="blades at every height from 10 to 60 mm"
    )
    sweep_cmd.add_argument("--jobs", type=_positive_int, help="worker processes (default: available CPUs)")

    assess = commands.add_parser("assess", parents=[common], help="assess a problem against a device")
    assess.add_argument("--device", help="device name from the registry")
    assess.add_argument("--from-geometry", dest="geometry", help="derive the profile from a geometry")
    assess.add_argument("--size", type=_positive_int, help="system size N (without --from-geometry)")
    assess.add_argument("--qubits", type=_positive_int, help="required qubits (without --from-geometry)")
    assess.add_argument("--gates", type=_non_negative_int, help="encoding gate count (without --from-geometry)")
    assess.add_argument("--steps", type=_positive_int, help=f"simulation steps (default {DEFAULTS.assess_steps})")
    assess.add_argument("--parallel", action="store_true", default=None, help="workload is embarrassingly parallel")
    assess.add_argument("--non-hermitian", action="store_true", default=None, help="matrix is not hermitian")
    assess.add_argument("--fidelity-floor", type=_floor, help=f"default {DEFAULTS.fidelity_floor}")
    return parser


def _load_config_file(path: str) -> Dict[str, Any]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config file {path} must hold a JSON object")
    known = {f.name for f in fields(RunConfig)} - {"command"}
    unknown = sorted(set(data) - known)
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(unknown)}")

    values: Dict[str, Any] = {}
    for name, value in data.items():
        if value is None:
            continue  # null keeps the default
        try:
            values[name] = CONFIG_CONVERTERS[name](value)
        except UsageError as exc:
            raise UsageError(f"config key {name!r} in {path}: {exc}") from exc
    return values


def _resolve_seed(flag: Optional[int], from_file: Optional[int]) -> int:
    if flag is not None:
        return flag
    if from_file is not None:
        return from_file
    env = os.environ.get(DEFAULTS.seed_env_var)
    if env is not None and env.strip():
        return _non_negative_int(env.strip())
    return DEFAULTS.seed


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge defaults, the ``--config`` file and explicit flags."""
    values: Dict[str, Any] = _load_config_file(args.config) if args.config else {}
    seed_from_file = values.pop("seed", None)
    for name, value in vars(args).items():
        if name in ("config", "command", "seed") or value is None or value == []:
            continue
        values[name] = value
    if "shots" in values:
        values["shots"] = parse_shots(values["shots"])
    if args.command == "sweep" and "jobs" not in values:
        values["jobs"] = os.cpu_count() or 1
    cfg = RunConfig(command=args.command, seed=_resolve_seed(args.seed, seed_from_file), **values)
    if cfg.noise == REFERENCE_NOISE and cfg.two_qubit_noise is not None:
        raise UsageError("--two-qubit-noise cannot be combined with --noise reference")
    return cfg


def _noise_model(cfg: RunConfig) -> NoiseModel:
    if cfg.noise == REFERENCE_NOISE:
        return NoiseModel.reference_hardware()
    if cfg.two_qubit_noise is None:
        return NoiseModel.from_fidelity(cfg.noise)
    return NoiseModel(gate_fidelity=cfg.noise, two_qubit_fidelity=cfg.two_qubit_noise)


def _slug(label: str) -> str:
    return label.replace(":", "_").replace(".", "p")


def cmd_model(cfg: RunConfig, out: TextIO) -> int:
    """Write the matrix text and geometry JSON; print a spectrum summary."""
    system = geometry_from_selector(cfg.geometry)
    dynamical = assemble_dynamical_matrix(system)
    _, n_qubits = pad_to_qubit_dimension(dynamical)
    target = Path(cfg.output or ".")
    target.mkdir(parents=True, exist_ok=True)
    matrix_path = write_matrix_text(dynamical.values, target / f"{_slug(system.label)}.txt")
    geometry_path = write_geometry_json(system, target / f"{_slug(system.label)}.json")

    eigenvalues = [lam for lam, _ in eigendecompose(dynamical.values)]
    print(f"geometry: {system.label}", file=out)
    print(f"N: {system.n_osc}", file=out)
    print(f"n_qubits: {n_qubits}", file=out)
    print(f"lambda_min: {eigenvalues[0]:.12g}", file=out)
    print(f"lambda_max: {eigenvalues[-1]:.12g}", file=out)
    print("eigenvalues: " + " ".join(f"{lam:.12g}" for lam in eigenvalues), file=out)
    print(f"matrix: {matrix_path}", file=out)
    print(f"geometry_json: {geometry_path}", file=out)
    return 0


def cmd_estimate(cfg: RunConfig, out: TextIO) -> int:
    """Estimate one eigenvalue and print it (text or JSON)."""
    system = geometry_from_selector(cfg.geometry)
    padded, _ = pad_to_qubit_dimension(assemble_dynamical_matrix(system))
    plan = prepare_estimation(padded, k=cfg.k, sampling=cfg.shots is not None)
    estimate = evaluate_plan(plan, noise=_noise_model(cfg), shots=cfg.shots, seed=cfg.seed)
    if cfg.circuit:
        write_circuit_json(plan.circuit, cfg.circuit)
    if cfg.decomposition:
        write_decomposition_json(plan.decomposition, cfg.decomposition)

    record = {"geometry": system.label, "f": cfg.noise, "seed": cfg.seed, **estimate.to_dict()}
    if cfg.output:
        write_json(record, cfg.output)
    if cfg.format == "json":
        print(json.dumps(record, indent=2), file=out)
        return 0
    rel = "undefined" if estimate.rel_error is None else f"{estimate.rel_error:.12g}"
    print(f"geometry: {system.label}", file=out)
    print(f"k: {estimate.k}", file=out)
    print(f"lambda_exact: {estimate.lambda_exact:.12g}", file=out)
    print(f"lambda_est: {estimate.lambda_est:.12g}", file=out)
    print(f"omega_est: {estimate.omega_est:.12g}" + (" (clamped)" if estimate.clamped else ""), file=out)
    print(f"lambda_mixed: {estimate.lambda_mixed:.12g}", file=out)
    print(f"rel_error: {rel}", file=out)
    print(f"gate_count: {estimate.gate_count}", file=out)
    print(f"terms: {estimate.total_terms}", file=out)
    return 0


def cmd_sweep(cfg: RunConfig, out: TextIO) -> int:
    """Run the sweep and write the table."""
    geometries = cfg.geometries
    if not geometries:
        heights = DEFAULTS.full_blade_heights if cfg.full_ladder else None
        geometries = standard_ladder(heights=heights)
    table = sweep(
        geometries,
        noise=_noise_model(cfg),
        shots=cfg.shots,
        repetitions=cfg.repetitions,
        blade_repetitions=cfg.blade_repetitions,
        seed=cfg.seed,
        jobs=cfg.jobs,
    )
    if cfg.output:
        write_sweep(table, cfg.output, cfg.format)
    elif cfg.format == "json":
        print(table.to_json(orient="records", indent=2, double_precision=12), file=out)
    else:
        out.write(table.to_csv(index=False, float_format="%.12g"))
    return 0


def _profile(cfg: RunConfig) -> ProblemProfile:
    if cfg.geometry:
        profile = profile_from_system(geometry_from_selector(cfg.geometry), cfg.steps, parallel=cfg.parallel)
        if cfg.non_hermitian:
            profile = ProblemProfile(**{**profile.to_dict(), "matrix_hermitian": False})
        return profile
    missing = [name for name in ("size", "qubits", "gates") if getattr(cfg, name) is None]
    if missing:
        raise UsageError(f"assess needs --from-geometry or all of --size, --qubits and --gates (missing {missing})")
    return ProblemProfile(
        system_size=cfg.size,
        n_steps=cfg.steps,
        matrix_hermitian=not cfg.non_hermitian,
        required_qubits=cfg.qubits,
        encoding_gate_count=cfg.gates,
        parallel=cfg.parallel,
    )


def cmd_assess(cfg: RunConfig, out: TextIO) -> int:
    """Print a verdict and write the JSON report."""
    if not cfg.device:
        raise UsageError("assess needs --device")
    device = get_device(cfg.device)
    profile = _profile(cfg)
    report = run_gate(profile, device, fidelity_floor=cfg.fidelity_floor)
    record = {"profile": profile.to_dict(), **report.to_dict()}
    if cfg.output:
        write_json(record, cfg.output)
    if cfg.format == "json":
        print(json.dumps(record, indent=2), file=out)
        return 0

    def verdict(value: Optional[bool]) -> str:
        return "not evaluated" if value is None else ("yes" if value else "no")

    print(f"device: {device.name} ({device.qubits} qubits)", file=out)
    for title, stage in (
        ("suitable", report.suitability),
        ("classical alternative preferred", report.classical_alternative),
        ("feasible", report.feasibility),
    ):
        print(f"{title}: {verdict(stage.passed)}", file=out)
        for reason in stage.reasons:
            print(f"  - {reason}", file=out)
    if report.gate_budget is not None:
        print(f"gate budget: {report.gate_budget}", file=out)
    return 0


COMMANDS = {
    "model": cmd_model,
    "estimate": cmd_estimate,
    "sweep": cmd_sweep,
    "assess": cmd_assess,
}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Run the CLI and return the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = resolve_config(args)
        setup_root_logger(cfg.log_level)
        return COMMANDS[cfg.command](cfg, out)
    except NisqModalError as exc:
        print(f"{PROG}: error[{exc.code}]: {exc}", file=err)
        return 2 if isinstance(exc, UsageError) else 1
    except OSError as exc:
        print(f"{PROG}: error[io]: {exc}", file=err)
        return 1


if __name__ == "__main__":
    sys.exit(main())
