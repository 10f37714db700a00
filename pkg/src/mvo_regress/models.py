"""Registry of the ten benchmark nonlinear regression models.

Each model is a closed-form function f(x, beta) with a fixed coefficient
count, predictor arity, and a default bound-constrained search box for
the coefficients. Formulas follow the NIST StRD nonlinear regression
reference problems. Evaluation is total: hostile coefficient vectors
(overflowing exponentials, vanishing denominators) produce non-finite
sentinel values instead of raising.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Mapping, Sequence

import numpy as np

__all__ = [
    "RegressionModel",
    "MODEL_NAMES",
    "evaluate_model",
    "get_model",
    "list_models",
    "load_bounds_file",
]


@dataclass(frozen=True, eq=False)
class RegressionModel:
    """A named closed-form regression function y ~ f(x, beta).

    Attributes:
        name: lowercase registry identifier.
        arity: number of predictor variables k.
        num_coefficients: coefficient count m.
        bounds: (m, 2) array of [lower, upper] search intervals.
        predict: vectorized evaluator; beta with shape (..., m) and a
            predictor matrix X with shape (N, k) broadcast to (..., N).
    """

    name: str
    arity: int
    num_coefficients: int
    bounds: np.ndarray
    predict: Callable[[np.ndarray, np.ndarray], np.ndarray]

    @property
    def lower(self) -> np.ndarray:
        return self.bounds[:, 0]

    @property
    def upper(self) -> np.ndarray:
        return self.bounds[:, 1]


def _f_misra1a(b, x):
    (x1,) = x
    return b[0] * (1.0 - np.exp(-b[1] * x1))


def _f_gauss1(b, x):
    # Sum of an exponential background and two Gaussian peaks.
    (x1,) = x
    return (b[0] * np.exp(-b[1] * x1)
            + b[2] * np.exp(-((x1 - b[3]) ** 2) / b[4] ** 2)
            + b[5] * np.exp(-((x1 - b[6]) ** 2) / b[7] ** 2))


def _f_danwood(b, x):
    (x1,) = x
    return b[0] * x1 ** b[1]


def _f_nelson(b, x):
    # Predicts the response directly as exp of the degradation term.
    x1, x2 = x
    return np.exp(b[0] - b[1] * x1 * np.exp(-b[2] * x2))


def _f_lanczos2(b, x):
    (x1,) = x
    return (b[0] * np.exp(-b[1] * x1)
            + b[2] * np.exp(-b[3] * x1)
            + b[4] * np.exp(-b[5] * x1))


def _f_roszman1(b, x):
    (x1,) = x
    return b[0] - b[1] * x1 - np.arctan(b[2] / (x1 - b[3])) / np.pi


def _f_enso(b, x):
    (x1,) = x
    tau = 2.0 * np.pi * x1
    return (b[0]
            + b[1] * np.cos(tau / 12.0) + b[2] * np.sin(tau / 12.0)
            + b[4] * np.cos(tau / b[3]) + b[5] * np.sin(tau / b[3])
            + b[7] * np.cos(tau / b[6]) + b[8] * np.sin(tau / b[6]))


def _f_mgh09(b, x):
    (x1,) = x
    return b[0] * (x1 ** 2 + x1 * b[1]) / (x1 ** 2 + x1 * b[2] + b[3])


def _f_thurber(b, x):
    (x1,) = x
    num = b[0] + b[1] * x1 + b[2] * x1 ** 2 + b[3] * x1 ** 3
    den = 1.0 + b[4] * x1 + b[5] * x1 ** 2 + b[6] * x1 ** 3
    return num / den


def _f_rat42(b, x):
    (x1,) = x
    return b[0] / (1.0 + np.exp(b[1] - b[2] * x1))


# name -> (formula, arity, num_coefficients)
_FORMULAS = {
    "misra1a": (_f_misra1a, 1, 2),
    "gauss1": (_f_gauss1, 1, 8),
    "danwood": (_f_danwood, 1, 2),
    "nelson": (_f_nelson, 2, 3),
    "lanczos2": (_f_lanczos2, 1, 6),
    "roszman1": (_f_roszman1, 1, 4),
    "enso": (_f_enso, 1, 9),
    "mgh09": (_f_mgh09, 1, 4),
    "thurber": (_f_thurber, 1, 7),
    "rat42": (_f_rat42, 1, 3),
}

MODEL_NAMES = tuple(_FORMULAS)


def _make_predict(formula, arity: int, m: int):
    def predict(beta, X):
        beta = np.asarray(beta, dtype=float)
        if beta.shape[-1] != m:
            raise ValueError(f"expected {m} coefficients, got {beta.shape[-1]}")
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X[:, None]
        if X.shape[1] != arity:
            raise ValueError(f"expected {arity} predictor column(s), got {X.shape[1]}")
        comps = tuple(beta[..., j, None] for j in range(m))
        cols = tuple(X[:, i] for i in range(arity))
        with np.errstate(all="ignore"):
            out = formula(comps, cols)
        return out

    return predict


def load_bounds_file(path: str | Path) -> dict[str, list[list[float]]]:
    """Load a bounds config: JSON mapping model name -> m pairs [lb, ub]."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    return {k.lower(): v for k, v in raw.items() if not k.startswith("_")}


def _default_bounds() -> dict[str, list[list[float]]]:
    ref = resources.files("mvo_regress.datasets").joinpath("bounds.json")
    raw = json.loads(ref.read_text(encoding="utf-8"))
    return {k.lower(): v for k, v in raw.items() if not k.startswith("_")}


_BOUNDS_CACHE: dict[str, list[list[float]]] | None = None


def _bounds_for(name: str, overrides: Mapping[str, Sequence[Sequence[float]]] | None) -> np.ndarray:
    global _BOUNDS_CACHE
    if overrides is not None and name in overrides:
        table = overrides[name]
    else:
        if _BOUNDS_CACHE is None:
            _BOUNDS_CACHE = _default_bounds()
        table = _BOUNDS_CACHE[name]
    bounds = np.array(table, dtype=float)
    m = _FORMULAS[name][2]
    if bounds.shape != (m, 2):
        raise ValueError(f"bounds for {name!r} must have shape ({m}, 2), got {bounds.shape}")
    if not np.all(bounds[:, 0] < bounds[:, 1]):
        raise ValueError(f"bounds for {name!r} must satisfy lb < ub in every row")
    bounds.flags.writeable = False
    return bounds


def get_model(name: str, bounds: Mapping[str, Sequence[Sequence[float]]] | None = None) -> RegressionModel:
    """Look up a registered model by name (case-insensitive).

    Args:
        name: one of the ten registered identifiers.
        bounds: optional mapping of model name to [lb, ub] pairs, as
            produced by load_bounds_file; falls back to bundled defaults.

    Raises:
        LookupError: unknown name; the message lists the valid names.
    """
    key = name.strip().lower()
    if key not in _FORMULAS:
        raise LookupError(
            f"unknown model {name!r}; valid names: {', '.join(MODEL_NAMES)}")
    formula, arity, m = _FORMULAS[key]
    return RegressionModel(
        name=key,
        arity=arity,
        num_coefficients=m,
        bounds=_bounds_for(key, bounds),
        predict=_make_predict(formula, arity, m),
    )


def list_models(bounds: Mapping[str, Sequence[Sequence[float]]] | None = None) -> list[RegressionModel]:
    return [get_model(n, bounds) for n in MODEL_NAMES]


def evaluate_model(model: RegressionModel, beta, x) -> float:
    """Evaluate f(x, beta) at a single predictor sample.

    Total on numeric inputs: overflow or a zero denominator yields a
    non-finite float, never an exception.
    """
    beta = np.asarray(beta, dtype=float)
    if beta.shape != (model.num_coefficients,):
        raise ValueError(
            f"beta must have length {model.num_coefficients}, got shape {beta.shape}")
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if x_arr.shape != (model.arity,):
        raise ValueError(f"x must have length {model.arity}, got shape {x_arr.shape}")
    return float(model.predict(beta, x_arr[None, :])[0])
