"""Mean squared error objective binding a model to a data view."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import Dataset, Split
from .models import RegressionModel

__all__ = ["Objective", "training_objective", "testing_objective"]


@dataclass(frozen=True, eq=False)
class Objective:
    """Minimizable MSE of model predictions against a fixed data view.

    Out-of-bounds coefficient vectors are evaluated as-is; enforcing the
    search box is the optimizer's job. Non-finite predictions map the
    whole MSE to +inf, the worst-fitness sentinel.
    """

    model: RegressionModel
    X: np.ndarray
    y: np.ndarray

    @property
    def dimension(self) -> int:
        return self.model.num_coefficients

    @property
    def bounds(self) -> np.ndarray:
        return self.model.bounds

    def mse_batch(self, betas) -> np.ndarray:
        """MSE for a batch of coefficient vectors, shape (..., m) -> (...)."""
        betas = np.asarray(betas, dtype=float)
        pred = self.model.predict(betas, self.X)
        with np.errstate(all="ignore"):
            resid = pred - self.y
            out = np.mean(resid * resid, axis=-1)
        return np.where(np.isfinite(out), out, np.inf)

    def mse(self, beta) -> float:
        """MSE of a single coefficient vector."""
        beta = np.asarray(beta, dtype=float)
        if beta.shape != (self.dimension,):
            raise ValueError(
                f"beta must have length {self.dimension}, got shape {beta.shape}")
        return float(self.mse_batch(beta))


def _view(ds: Dataset, indices: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    X = ds.X[indices].copy()
    y = ds.y[indices].copy()
    X.flags.writeable = False
    y.flags.writeable = False
    return X, y


def training_objective(model: RegressionModel, ds: Dataset, split: Split) -> Objective:
    X, y = _view(ds, split.train_indices)
    return Objective(model=model, X=X, y=y)


def testing_objective(model: RegressionModel, ds: Dataset, split: Split) -> Objective:
    X, y = _view(ds, split.test_indices)
    return Objective(model=model, X=X, y=y)
