"""Repeated maximum-eigenvalue estimates over a list of geometries.

The sweep splits every geometry's repetitions into chunks and evaluates
them in a `multiprocessing.Pool`.  Each repetition uses the seed
``seed + stride * rep`` so the table does not depend on the number of
workers; the chunks are reduced in submission order.
"""

from functools import lru_cache
from multiprocessing import Pool
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ..config import DEFAULTS
from ..exceptions import ArgumentError
from ..logging_config import get_logger
from ..models.dynamical_matrix import assemble_dynamical_matrix, pad_to_qubit_dimension
from ..models.oscillators import geometry_from_selector
from ..quantum.measurement import NoiseModel
from ..types import SweepRow
from .estimator import EstimationPlan, evaluate_plan, prepare_estimation

logger = get_logger(__name__)

SWEEP_COLUMNS = [
    "geometry",
    "n_osc",
    "n_qubits",
    "gate_count",
    "f",
    "shots",
    "lambda_exact",
    "lambda_mixed",
    "lambda_est_mean",
    "rel_err_mean",
    "rel_err_std",
]

# repetitions handed to a worker at once
CHUNK_SIZE = 50

Task = Tuple[int, str, int, int, NoiseModel, Optional[int], int]


@lru_cache(maxsize=32)
def _plan_for(selector: str, sampling: bool) -> Tuple[int, EstimationPlan]:
    system = geometry_from_selector(selector)
    padded, _ = pad_to_qubit_dimension(assemble_dynamical_matrix(system))
    return system.n_osc, prepare_estimation(padded, sampling=sampling)


def _run_chunk(task: Task) -> Tuple[int, int, List[Tuple[float, float]]]:
    position, selector, start, stop, noise, shots, seed = task
    _, plan = _plan_for(selector, shots is not None)
    results = []
    for rep in range(start, stop):
        estimate = evaluate_plan(plan, noise=noise, shots=shots, seed=seed + DEFAULTS.repetition_seed_stride * rep)
        rel = np.nan if estimate.rel_error is None else estimate.rel_error
        results.append((estimate.lambda_est, rel))
    return position, start, results


def _repetitions_for(selector: str, repetitions: int, blade_repetitions: Optional[int]) -> int:
    if blade_repetitions is not None and selector.strip().lower().startswith("blade"):
        return blade_repetitions
    return repetitions


def sweep(
    geometries: Sequence[str],
    noise: Optional[NoiseModel] = None,
    shots: Optional[int] = DEFAULTS.shots,
    repetitions: int = DEFAULTS.chain_repetitions,
    blade_repetitions: Optional[int] = None,
    seed: int = DEFAULTS.seed,
    jobs: int = 1,
) -> pd.DataFrame:
    """Estimate the maximum eigenvalue of every geometry repeatedly.

    Parameters
    ----------
    geometries: sequence of str
        Geometry selectors such as ``"chain:8"`` or ``"blade:a:10"``.
    noise: NoiseModel, optional
        Defaults to global depolarizing noise with the default fidelity.
    shots: int, optional
        Shots per Pauli term; None for analytic expectations.
    repetitions: int, optional
        Repetitions per geometry.
    blade_repetitions: int, optional
        Repetitions for blade geometries; falls back to `repetitions`.
    seed: int, optional
        Base seed; repetition ``r`` uses ``seed + 10007 * r``.
    jobs: int, optional
        Worker processes; 1 runs everything in the calling process.

    Returns
    -------
    pandas.DataFrame
        One row per geometry with the columns of `SWEEP_COLUMNS`, ordered by
        geometry family (in order of first appearance) and gate count.
    """
    if noise is None:
        noise = NoiseModel()
    if repetitions < 1 or (blade_repetitions is not None and blade_repetitions < 1):
        raise ArgumentError("repetitions must be at least 1")
    if shots is not None and shots < 1:
        raise ArgumentError(f"shots must be at least 1, got {shots}")
    if jobs < 1:
        raise ArgumentError(f"jobs must be at least 1, got {jobs}")
    if seed < 0:
        raise ArgumentError(f"seed must be non-negative, got {seed}")

    tasks: List[Task] = []
    for position, selector in enumerate(geometries):
        # build once up front so bad selectors fail before any work starts
        _plan_for(selector, shots is not None)
        total = _repetitions_for(selector, repetitions, blade_repetitions)
        for start in range(0, total, CHUNK_SIZE):
            tasks.append((position, selector, start, min(start + CHUNK_SIZE, total), noise, shots, seed))

    logger.info(f"Sweeping {len(geometries)} geometries in {len(tasks)} chunks with {jobs} worker(s)")
    if jobs == 1:
        chunks = [_run_chunk(task) for task in tasks]
    else:
        with Pool(processes=jobs) as pool:
            chunks = pool.map(_run_chunk, tasks)

    collected: List[List[Tuple[float, float]]] = [[] for _ in geometries]
    for position, _, results in sorted(chunks, key=lambda c: (c[0], c[1])):
        collected[position].extend(results)

    rows = []
    for selector, results in zip(geometries, collected):
        n_osc, plan = _plan_for(selector, shots is not None)
        lambdas = np.array([r[0] for r in results])
        rels = np.array([r[1] for r in results])
        if np.isnan(rels).any():
            logger.warning(f"Relative error undefined for {selector}")
        rows.append(
            SweepRow(
                geometry=plan.label,
                n_osc=n_osc,
                n_qubits=plan.n_qubits,
                gate_count=plan.gate_count,
                f=noise.gate_fidelity,
                shots="analytic" if shots is None else str(shots),
                lambda_exact=plan.lambda_exact,
                lambda_mixed=plan.lambda_mixed,
                lambda_est_mean=float(lambdas.mean()),
                rel_err_mean=float(rels.mean()),
                rel_err_std=float(rels.std(ddof=1)) if len(rels) > 1 else 0.0,
            )
        )

    table = pd.DataFrame([row.__dict__ for row in rows], columns=SWEEP_COLUMNS)
    families = table["geometry"].str.split(":").str[0]
    family_rank = {family: i for i, family in enumerate(dict.fromkeys(families))}
    table["_family"] = families.map(family_rank)
    table = table.sort_values(["_family", "gate_count"], kind="stable").drop(columns="_family")
    logger.info(f"Sweep produced {len(table)} rows")
    return table.reset_index(drop=True)


def write_sweep(table: pd.DataFrame, path: Union[str, Path], fmt: str = "csv") -> Path:
    """Write a sweep table as CSV or as a JSON list of records."""
    path = Path(path)
    if fmt == "csv":
        table.to_csv(path, index=False, float_format="%.12g")
    elif fmt == "json":
        path.write_text(table.to_json(orient="records", indent=2, double_precision=12) + "\n", encoding="utf-8")
    else:
        raise ArgumentError(f"unknown output format {fmt!r}; use csv or json")
    logger.info(f"Wrote sweep table to {path}")
    return path


if __name__ == "__main__":
    print(sweep(["chain:2", "chain:4"], shots=None, repetitions=1).to_string())
