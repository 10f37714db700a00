"""Experiment orchestration: repeated seeded fit/evaluate runs.

A run draws a hold-out split, fits the model's coefficients on the
training rows with the tagged optimizer, and scores the best vector on
the held-out rows. Runs with the same run index share their split seed
across optimizers, so the per-model significance test compares the two
optimizers on matched splits.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from .core import MVOParams, OptimizerConfig, PSOParams, RunResult, derive_seed
from .data import Dataset, load_bundled, holdout_split
from .models import MODEL_NAMES, RegressionModel, get_model
from .mvo import mvo_minimize
from .objective import testing_objective, training_objective
from .pso import pso_minimize
from .stats import SummaryStats, TestDecision, summarize, wilcoxon_signed_rank

__all__ = [
    "OPTIMIZERS",
    "ExperimentSpec",
    "OptimizerRuns",
    "ExperimentReport",
    "run_single",
    "run_experiment",
]

log = logging.getLogger(__name__)

OPTIMIZERS = {"mvo": mvo_minimize, "pso": pso_minimize}


@dataclass(frozen=True)
class ExperimentSpec:
    """Full benchmark description; defaults reproduce the standard protocol."""

    models: tuple[str, ...] = MODEL_NAMES
    optimizers: tuple[str, ...] = ("mvo", "pso")
    runs: int = 31
    master_seed: int = 42
    train_fraction: float = 0.8
    population_size: int = 30
    max_iterations: int = 100
    mvo_params: MVOParams = MVOParams()
    pso_params: PSOParams = PSOParams()
    alpha: float = 0.05

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if not 0.0 < self.train_fraction < 1.0:
            raise ValueError("train_fraction must be in (0, 1)")
        unknown = [m for m in self.models if m.lower() not in MODEL_NAMES]
        if unknown:
            raise ValueError(f"unknown model name(s): {', '.join(unknown)}")
        bad = [o for o in self.optimizers if o not in OPTIMIZERS]
        if bad:
            raise ValueError(f"unknown optimizer tag(s): {', '.join(bad)}")


@dataclass(frozen=True, eq=False)
class OptimizerRuns:
    """Aggregate for one (model, optimizer) cell."""

    train: SummaryStats
    test: SummaryStats
    runs: tuple[RunResult, ...]


@dataclass(frozen=True, eq=False)
class ExperimentReport:
    spec: ExperimentSpec
    results: dict[str, dict[str, OptimizerRuns]]
    comparisons: dict[str, TestDecision]


def _params_for(optimizer: str, spec: ExperimentSpec | None):
    if spec is None:
        return MVOParams() if optimizer == "mvo" else PSOParams()
    return spec.mvo_params if optimizer == "mvo" else spec.pso_params


def run_single(
    model: RegressionModel | str,
    optimizer: str,
    seed: int,
    train_fraction: float = 0.8,
    *,
    population_size: int = 30,
    max_iterations: int = 100,
    params: MVOParams | PSOParams | None = None,
    dataset: Dataset | None = None,
    bounds: Mapping[str, Sequence[Sequence[float]]] | None = None,
) -> RunResult:
    """One seeded split/fit/evaluate cycle.

    The hold-out split is drawn from `seed` alone; the optimizer stream
    is seeded by (seed, optimizer), so different optimizers at the same
    seed see the same split but independent search randomness.
    """
    if optimizer not in OPTIMIZERS:
        raise ValueError(f"unknown optimizer {optimizer!r}; expected one of {sorted(OPTIMIZERS)}")
    if isinstance(model, str):
        model = get_model(model, bounds)
    if dataset is None:
        dataset = load_bundled(model.name)
    split = holdout_split(dataset, train_fraction, seed)
    train_obj = training_objective(model, dataset, split)
    test_obj = testing_objective(model, dataset, split)
    config = OptimizerConfig(
        population_size=population_size,
        max_iterations=max_iterations,
        seed=derive_seed(seed, optimizer),
        params=params,
    )
    result = OPTIMIZERS[optimizer](train_obj, config)
    return replace(result, seed=seed, test_mse=test_obj.mse(result.best_beta))


def run_experiment(
    spec: ExperimentSpec,
    bounds: Mapping[str, Sequence[Sequence[float]]] | None = None,
) -> ExperimentReport:
    """Execute runs x models x optimizers and aggregate the comparison.

    Seeds derive from (master_seed, model, run_index); the significance
    test pairs PSO and MVO test errors by run index.
    """
    results: dict[str, dict[str, OptimizerRuns]] = {}
    comparisons: dict[str, TestDecision] = {}
    for name in spec.models:
        model = get_model(name, bounds)
        dataset = load_bundled(model.name)
        per_opt: dict[str, OptimizerRuns] = {}
        for optimizer in spec.optimizers:
            runs = []
            for run_index in range(spec.runs):
                seed = derive_seed(spec.master_seed, model.name, run_index)
                runs.append(run_single(
                    model, optimizer, seed, spec.train_fraction,
                    population_size=spec.population_size,
                    max_iterations=spec.max_iterations,
                    params=_params_for(optimizer, spec),
                    dataset=dataset,
                ))
            per_opt[optimizer] = OptimizerRuns(
                train=summarize([r.train_mse for r in runs]),
                test=summarize([r.test_mse for r in runs]),
                runs=tuple(runs),
            )
            log.info("%s/%s: %d runs, mean train MSE %.4g, mean test MSE %.4g",
                     model.name, optimizer, spec.runs,
                     per_opt[optimizer].train.mean, per_opt[optimizer].test.mean)
        results[model.name] = per_opt
        if "mvo" in per_opt and "pso" in per_opt:
            comparisons[model.name] = wilcoxon_signed_rank(
                [r.test_mse for r in per_opt["pso"].runs],
                [r.test_mse for r in per_opt["mvo"].runs],
                alpha=spec.alpha,
            )
    return ExperimentReport(spec=spec, results=results, comparisons=comparisons)
