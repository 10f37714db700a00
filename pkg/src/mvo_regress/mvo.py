"""Multi-Verse Optimizer for bound-constrained minimization.

Implements the algorithm of Mirjalili, Mirjalili & Hatamlou (2016):
candidate solutions ("universes") exchange coordinates through
white/black-hole tunnels chosen by a roulette wheel over normalized
objective values (exploration), and teleport coordinates near the best
universe through wormholes (exploitation). The wormhole existence
probability (WEP) grows linearly over iterations while the traveling
distance rate (TDR) decays polynomially.

Conventions the original paper leaves open, fixed here:

* Normalized inflation rate: |f_i| divided by the Euclidean norm of the
  objective vector, computed after sorting ascending (best first).
* Roulette donor weights: (max - f_i) + eps over the sorted objective
  values, so better universes are more likely coordinate donors.
* Exchange draws r1 per coordinate; the current best universe is exempt
  from the exchange phase; the best-so-far solution is tracked outside
  the population (elitism), which makes the convergence trace monotone.
* Non-finite objective values order strictly worse than any finite
  value, with ties broken by universe index.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .core import MVOParams, OptimizerConfig, RunResult, init_population, make_rng

__all__ = [
    "UniverseState",
    "tdr",
    "wep",
    "roulette_select",
    "exchange_phase",
    "wormhole_phase",
    "mvo_minimize",
]


@dataclass(frozen=True, eq=False)
class UniverseState:
    """Population snapshot between phases, sorted best-first."""

    positions: np.ndarray
    inflation_rates: np.ndarray
    best_universe: np.ndarray
    best_inflation: float
    iteration: int


def tdr(l: int, max_iterations: int, p: float) -> float:
    """Traveling distance rate: 1 - (l^(1/p)) / (L^(1/p)), in [0, 1]."""
    return 1.0 - (l ** (1.0 / p)) / (max_iterations ** (1.0 / p))


def wep(l: int, max_iterations: int, wep_min: float, wep_max: float) -> float:
    """Wormhole existence probability, linear from wep_min up to wep_max."""
    return wep_min + l * (wep_max - wep_min) / max_iterations


def _finite_filled(rates: np.ndarray) -> np.ndarray:
    """Replace sentinel (non-finite) entries with the worst finite value."""
    rates = np.asarray(rates, dtype=float)
    finite = np.isfinite(rates)
    if finite.all():
        return rates
    if not finite.any():
        return np.zeros_like(rates)
    return np.where(finite, rates, rates[finite].max())


def _selection_weights(rates: np.ndarray) -> np.ndarray:
    vals = _finite_filled(rates)
    return (vals.max() - vals) + np.finfo(float).eps


def _roulette_draw(cdf: np.ndarray, u: np.ndarray | float) -> np.ndarray:
    idx = np.searchsorted(cdf, u * cdf[-1], side="right")
    return np.minimum(idx, cdf.size - 1)


def roulette_select(normalized_rates, rng: np.random.Generator) -> int:
    """Pick a donor index, favoring lower (better) rates.

    Weights are (max - rate) + eps; equal rates degrade to a uniform
    draw. Deterministic given the generator state.
    """
    w = _selection_weights(np.asarray(normalized_rates, dtype=float))
    cdf = np.cumsum(w)
    return int(_roulette_draw(cdf, rng.random()))


def normalized_inflation(rates) -> np.ndarray:
    """|rate| over the Euclidean norm of the (sentinel-filled) rate vector."""
    vals = np.abs(_finite_filled(rates))
    nrm = float(np.sqrt(np.sum(vals * vals)))
    if nrm == 0.0:
        return np.zeros_like(vals)
    return vals / nrm


def exchange_phase(state: UniverseState, rng: np.random.Generator) -> UniverseState:
    """White/black-hole coordinate exchange over a sorted population.

    Per universe i and coordinate j, when r1 < NI(i) the coordinate is
    replaced by the same coordinate of a roulette-selected donor, read
    from the pre-phase population. Row 0 (the sorted best) is exempt.
    """
    src = state.positions
    n, d = src.shape
    ni = normalized_inflation(state.inflation_rates)
    cdf = np.cumsum(_selection_weights(state.inflation_rates))
    r1 = rng.random((n, d))
    donors = _roulette_draw(cdf, rng.random((n, d)))
    mask = r1 < ni[:, None]
    mask[0, :] = False
    new_positions = np.where(mask, src[donors, np.arange(d)], src)
    return replace(state, positions=new_positions)


def wormhole_phase(state: UniverseState, wep_value: float, tdr_value: float,
                   bounds, rng: np.random.Generator) -> UniverseState:
    """Teleport coordinates near the best universe with probability WEP.

    Selected coordinates become best_j +/- TDR * ((ub_j - lb_j) * r4 + lb_j);
    the sign flips on r3 >= 0.5. The result is clamped to the box.
    """
    pos = state.positions
    n, d = pos.shape
    bounds = np.asarray(bounds, dtype=float)
    lb, ub = bounds[:, 0], bounds[:, 1]
    r2 = rng.random((n, d))
    r3 = rng.random((n, d))
    r4 = rng.random((n, d))
    offset = tdr_value * ((ub - lb) * r4 + lb)
    target = np.where(r3 < 0.5, state.best_universe + offset,
                      state.best_universe - offset)
    new_positions = np.where(r2 < wep_value, target, pos)
    new_positions = np.clip(new_positions, lb, ub)
    return replace(state, positions=new_positions)


def mvo_minimize(objective, config: OptimizerConfig) -> RunResult:
    """Run MVO against an objective exposing mse_batch and bounds.

    Each iteration evaluates the population, updates the elitist record,
    sorts by objective value, then applies the exchange and wormhole
    phases with the scheduled WEP and TDR. The returned trace has one
    best-so-far entry per iteration and is non-increasing.
    """
    params = config.params if isinstance(config.params, MVOParams) else MVOParams()
    rng = make_rng(config.seed)
    n = config.population_size
    L = config.max_iterations
    bounds = np.asarray(objective.bounds, dtype=float)

    positions = init_population(n, bounds, rng)
    best_beta: np.ndarray | None = None
    best_val = np.inf
    trace = np.empty(L, dtype=float)

    for l in range(1, L + 1):
        rates = objective.mse_batch(positions)
        i_best = int(np.argmin(rates))
        if rates[i_best] < best_val:
            best_val = float(rates[i_best])
            best_beta = positions[i_best].copy()
        trace[l - 1] = best_val

        order = np.argsort(rates, kind="stable")
        state = UniverseState(
            positions=positions[order],
            inflation_rates=rates[order],
            best_universe=positions[i_best] if best_beta is None else best_beta,
            best_inflation=best_val,
            iteration=l,
        )
        state = exchange_phase(state, rng)
        state = wormhole_phase(
            state,
            wep(l, L, params.wep_min, params.wep_max),
            tdr(l, L, params.p),
            bounds,
            rng,
        )
        positions = state.positions

    if best_beta is None:
        best_beta = positions[0].copy()
    return RunResult(best_beta=best_beta, train_mse=float(trace[-1]),
                     trace=trace, seed=config.seed)
