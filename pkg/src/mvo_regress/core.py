"""Shared machinery for the population-based minimizers.

Randomness comes from numpy's PCG64 generator. Seeds for runs are
derived by hashing the identifying parts (master seed, model name, run
index, algorithm tag) with SHA-256, so streams are reproducible across
platforms and independent between runs.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "MVOParams",
    "PSOParams",
    "OptimizerConfig",
    "RunResult",
    "clamp_to_bounds",
    "init_population",
    "derive_seed",
    "make_rng",
]


@dataclass(frozen=True)
class MVOParams:
    """Wormhole existence probability range and exploitation accuracy."""

    wep_min: float = 0.2
    wep_max: float = 1.0
    p: float = 6.0

    def __post_init__(self):
        if not self.wep_min < self.wep_max:
            raise ValueError("wep_min must be < wep_max")
        if self.p <= 0:
            raise ValueError("p must be positive")


@dataclass(frozen=True)
class PSOParams:
    """Linearly decreasing inertia range and acceleration coefficients."""

    w_max: float = 0.9
    w_min: float = 0.4
    c1: float = 2.05
    c2: float = 2.05

    def __post_init__(self):
        if not self.w_min <= self.w_max:
            raise ValueError("w_min must be <= w_max")


@dataclass(frozen=True)
class OptimizerConfig:
    population_size: int = 30
    max_iterations: int = 100
    seed: int = 0
    params: MVOParams | PSOParams | None = None

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass(frozen=True, eq=False)
class RunResult:
    """Outcome of one optimizer run.

    trace[l] is the best objective value seen after iteration l+1; it is
    non-increasing and its last entry equals train_mse.
    """

    best_beta: np.ndarray
    train_mse: float
    trace: np.ndarray
    seed: int
    test_mse: float = float("nan")


def clamp_to_bounds(beta, bounds) -> np.ndarray:
    """Project each component onto its [lb, ub] interval."""
    bounds = np.asarray(bounds, dtype=float)
    return np.clip(np.asarray(beta, dtype=float), bounds[..., 0], bounds[..., 1])


def init_population(n: int, bounds, rng: np.random.Generator) -> np.ndarray:
    """Uniform population of n points inside the box, shape (n, m)."""
    if n < 2:
        raise ValueError("population size must be >= 2")
    bounds = np.asarray(bounds, dtype=float)
    lb, ub = bounds[:, 0], bounds[:, 1]
    return lb + rng.random((n, bounds.shape[0])) * (ub - lb)


def derive_seed(*parts) -> int:
    """Stable 64-bit seed from a tuple of identifying parts."""
    text = ":".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))
