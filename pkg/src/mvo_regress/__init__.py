"""Nonlinear regression coefficient search with MVO and a PSO baseline."""

from .core import MVOParams, OptimizerConfig, PSOParams, RunResult
from .data import Dataset, Split, holdout_split, load_bundled, load_csv
from .harness import ExperimentReport, ExperimentSpec, run_experiment, run_single
from .models import RegressionModel, MODEL_NAMES, evaluate_model, get_model, list_models
from .mvo import mvo_minimize
from .objective import Objective, testing_objective, training_objective
from .pso import pso_minimize
from .stats import SummaryStats, TestDecision, summarize, wilcoxon_signed_rank

__all__ = [
    "Dataset",
    "ExperimentReport",
    "ExperimentSpec",
    "MODEL_NAMES",
    "MVOParams",
    "Objective",
    "OptimizerConfig",
    "PSOParams",
    "RegressionModel",
    "RunResult",
    "Split",
    "SummaryStats",
    "TestDecision",
    "evaluate_model",
    "get_model",
    "holdout_split",
    "list_models",
    "load_bundled",
    "load_csv",
    "mvo_minimize",
    "pso_minimize",
    "run_experiment",
    "run_single",
    "summarize",
    "testing_objective",
    "training_objective",
    "wilcoxon_signed_rank",
]

__version__ = "0.1.0"
