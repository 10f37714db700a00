"""Run statistics and the paired Wilcoxon signed-rank test.

The test follows Wilcoxon's original prescription: zero differences are
discarded, tied absolute differences share average ranks, and the
decision is two-sided. For n <= 25 retained pairs the p-value is exact,
computed from the full null distribution of the positive-rank sum (every
one of the 2^n sign assignments equally likely); for larger n a normal
approximation with tie correction and continuity correction is used.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["SummaryStats", "TestDecision", "summarize", "wilcoxon_signed_rank"]

EXACT_LIMIT = 25


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    std: float
    n: int


@dataclass(frozen=True)
class TestDecision:
    """Two-sided significance outcome.

    h = 1 when significant with the first sample ranking higher (worse,
    for losses) than the second, h = -1 for the reverse, h = 0 when not
    significant.
    """

    p_value: float
    h: int
    alpha: float = 0.05


def summarize(values) -> SummaryStats:
    """Arithmetic mean and sample (n-1) standard deviation; std 0 for n=1."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("summarize expects a non-empty 1-D sample")
    n = arr.size
    std = float(np.std(arr, ddof=1)) if n > 1 else 0.0
    return SummaryStats(mean=float(np.mean(arr)), std=std, n=n)


def _average_ranks(values: np.ndarray) -> np.ndarray:
    """Average ranks (1-based) with ties sharing the mean rank."""
    order = np.argsort(values, kind="stable")
    ranks = np.empty(values.size, dtype=float)
    sorted_vals = values[order]
    i = 0
    while i < values.size:
        j = i
        while j + 1 < values.size and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i:j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def _exact_two_sided_p(ranks: np.ndarray, w_plus: float) -> float:
    """Exact p over all 2^n sign assignments of the observed ranks.

    Ranks are multiples of 1/2, so doubling them gives integers and the
    distribution of 2*W+ is a subset-sum count. The two-sided p adds
    both tails at least as extreme as the observed statistic (reflected
    about the mean n(n+1)/2 of the doubled statistic).
    """
    n = ranks.size
    r2 = np.rint(2.0 * ranks).astype(np.int64)
    total = int(r2.sum())
    counts = np.zeros(total + 1, dtype=np.int64)
    counts[0] = 1
    for r in r2:
        shifted = np.zeros_like(counts)
        shifted[r:] = counts[:counts.size - r]
        counts = counts + shifted
    w2 = int(round(2.0 * w_plus))
    t_lo = min(w2, total - w2)
    t_hi = max(w2, total - w2)
    tail = int(counts[:t_lo + 1].sum() + counts[t_hi:].sum())
    return min(1.0, tail / (1 << n))


def _approx_two_sided_p(ranks: np.ndarray, w_plus: float) -> float:
    """Normal approximation with tie correction and continuity correction."""
    n = ranks.size
    mean = n * (n + 1) / 4.0
    _, tie_counts = np.unique(ranks, return_counts=True)
    tie_term = float(np.sum(tie_counts.astype(float) ** 3 - tie_counts))
    var = n * (n + 1) * (2 * n + 1) / 24.0 - tie_term / 48.0
    if var <= 0.0:
        return 1.0
    diff = w_plus - mean
    correction = 0.5 * math.copysign(1.0, diff) if diff != 0.0 else 0.0
    z = (diff - correction) / math.sqrt(var)
    return min(1.0, math.erfc(abs(z) / math.sqrt(2.0)))


def wilcoxon_signed_rank(a, b, alpha: float = 0.05, method: str = "auto") -> TestDecision:
    """Two-sided paired signed-rank test on a_i - b_i.

    Args:
        a, b: equal-length paired samples. For loss comparisons pass the
            baseline first: h = 1 then means the second sample is
            significantly better (lower).
        alpha: significance level for the h decision.
        method: "auto" (exact for n <= 25 retained pairs), "exact", or
            "approx".

    Returns:
        TestDecision with p_value, h in {-1, 0, 1}, and alpha.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("samples must be 1-D and of equal length")
    if method not in ("auto", "exact", "approx"):
        raise ValueError(f"unknown method {method!r}")
    d = a - b
    d = d[d != 0.0]
    n = d.size
    if n == 0:
        return TestDecision(p_value=1.0, h=0, alpha=alpha)
    ranks = _average_ranks(np.abs(d))
    w_plus = float(ranks[d > 0].sum())
    w_minus = float(ranks[d < 0].sum())
    if method == "exact" or (method == "auto" and n <= EXACT_LIMIT):
        p = _exact_two_sided_p(ranks, w_plus)
    else:
        p = _approx_two_sided_p(ranks, w_plus)
    if p < alpha and w_plus != w_minus:
        h = 1 if w_plus > w_minus else -1
    else:
        h = 0
    return TestDecision(p_value=p, h=h, alpha=alpha)
