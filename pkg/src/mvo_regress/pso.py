"""Global-best particle swarm baseline with linearly decreasing inertia.

Canonical gbest PSO: every particle is pulled toward its personal best
and the single swarm-wide best. Random acceleration coefficients are
drawn per dimension per update. Velocities start at zero and are clamped
to +/- the box width per dimension; positions are clamped to the box.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import OptimizerConfig, PSOParams, RunResult, init_population, make_rng

__all__ = ["SwarmState", "inertia", "pso_minimize"]


@dataclass(frozen=True, eq=False)
class SwarmState:
    positions: np.ndarray
    velocities: np.ndarray
    personal_best_pos: np.ndarray
    personal_best_val: np.ndarray
    global_best_pos: np.ndarray
    global_best_val: float
    iteration: int


def inertia(l: int, max_iterations: int, w_max: float, w_min: float) -> float:
    """Inertia weight, linear from w_max down to w_min."""
    return w_max - l * (w_max - w_min) / max_iterations


def pso_minimize(objective, config: OptimizerConfig) -> RunResult:
    """Run gbest PSO against an objective exposing mse_batch and bounds.

    The trace records the global best after each evaluation sweep and is
    monotone by construction of the gbest record.
    """
    params = config.params if isinstance(config.params, PSOParams) else PSOParams()
    rng = make_rng(config.seed)
    n = config.population_size
    L = config.max_iterations
    bounds = np.asarray(objective.bounds, dtype=float)
    lb, ub = bounds[:, 0], bounds[:, 1]
    v_max = ub - lb

    pos = init_population(n, bounds, rng)
    vel = np.zeros_like(pos)
    pbest_pos = pos.copy()
    pbest_val = np.full(n, np.inf)
    gbest_pos = pos[0].copy()
    gbest_val = np.inf
    trace = np.empty(L, dtype=float)

    for l in range(1, L + 1):
        f = objective.mse_batch(pos)
        improved = f < pbest_val
        pbest_val = np.where(improved, f, pbest_val)
        pbest_pos = np.where(improved[:, None], pos, pbest_pos)
        i_best = int(np.argmin(pbest_val))
        if pbest_val[i_best] < gbest_val:
            gbest_val = float(pbest_val[i_best])
            gbest_pos = pbest_pos[i_best].copy()
        trace[l - 1] = gbest_val

        w = inertia(l, L, params.w_max, params.w_min)
        r_p = rng.random((n, pos.shape[1]))
        r_g = rng.random((n, pos.shape[1]))
        vel = (w * vel
               + params.c1 * r_p * (pbest_pos - pos)
               + params.c2 * r_g * (gbest_pos - pos))
        vel = np.clip(vel, -v_max, v_max)
        pos = np.clip(pos + vel, lb, ub)

    return RunResult(best_beta=gbest_pos, train_mse=float(trace[-1]),
                     trace=trace, seed=config.seed)
