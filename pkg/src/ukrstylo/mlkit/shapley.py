"""Shapley attribution by permutation sampling, with an exact enumerator.

The value function of a feature coalition S is the model output on the
explained row with features in S taken from the row and the rest drawn
from every background row (averaged).  Walking a random feature
permutation and averaging over the full background at each step makes
each permutation's contributions telescope, so the efficiency identity
holds by construction and the per-feature variance stays low.

``exact_shapley`` enumerates all 2^d coalitions and exists purely as an
oracle for testing the sampler (d <= ~15).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Callable

import numpy as np

ModelFn = Callable[[np.ndarray], np.ndarray]   # rows -> scalar output per row


@dataclass(frozen=True)
class ShapleyEstimate:
    values: np.ndarray        # per-feature attribution
    std_errors: np.ndarray    # estimator standard error per feature
    baseline: float           # mean model output over the background
    prediction: float         # model output on the explained row


def sampled_shapley(model: ModelFn, background: np.ndarray, row: np.ndarray,
                    n_permutations: int, seed: int = 0) -> ShapleyEstimate:
    background = np.asarray(background, dtype=np.float64)
    row = np.asarray(row, dtype=np.float64)
    if background.ndim != 2 or background.size == 0:
        raise ValueError("background must be a non-empty 2-D array")
    d = background.shape[1]
    if n_permutations < 1:
        raise ValueError("n_permutations must be >= 1")
    rng = np.random.default_rng([seed, 4])
    sums = np.zeros(d)
    sumsq = np.zeros(d)
    baseline = float(np.mean(model(background)))
    for _p in range(n_permutations):
        order = rng.permutation(d)
        z = background.copy()
        prev = baseline
        for j in order:
            z[:, j] = row[j]
            cur = float(np.mean(model(z)))
            delta = cur - prev
            sums[j] += delta
            sumsq[j] += delta * delta
            prev = cur
    values = sums / n_permutations
    var = np.maximum(sumsq / n_permutations - values ** 2, 0.0)
    std_errors = np.sqrt(var / n_permutations)
    prediction = float(np.mean(model(row[None, :])))
    return ShapleyEstimate(values, std_errors, baseline, prediction)


def exact_shapley(model: ModelFn, background: np.ndarray,
                  row: np.ndarray) -> np.ndarray:
    """Exact Shapley values by full coalition enumeration (test oracle)."""
    background = np.asarray(background, dtype=np.float64)
    row = np.asarray(row, dtype=np.float64)
    d = background.shape[1]

    def value(coalition: tuple[int, ...]) -> float:
        z = background.copy()
        for j in coalition:
            z[:, j] = row[j]
        return float(np.mean(model(z)))

    cache = {(): value(())}
    features = range(d)
    for r in range(1, d + 1):
        for S in combinations(features, r):
            cache[S] = value(S)
    phi = np.zeros(d)
    for j in features:
        others = [f for f in features if f != j]
        for r in range(0, d):
            weight = factorial(r) * factorial(d - r - 1) / factorial(d)
            for S in combinations(others, r):
                with_j = tuple(sorted(S + (j,)))
                phi[j] += weight * (cache[with_j] - cache[S])
    return phi
