"""Label-stratified train/validation/test splitting.

The protocol is 80/20 train/test, then 15% of the training portion held
out for validation.  Per-class index pools are shuffled with a seeded
generator, so the split depends only on (labels, seed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TRAIN_FRACTION = 0.80
TEST_FRACTION = 0.20
VALIDATION_OF_TRAIN = 0.15


@dataclass(frozen=True)
class SplitSpec:
    seed: int = 0
    train_fraction: float = TRAIN_FRACTION
    validation_of_train: float = VALIDATION_OF_TRAIN


def stratified_split(labels: np.ndarray, spec: SplitSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(train_idx, validation_idx, test_idx), disjoint and label-stratified.

    Within each class the shuffled pool is cut test-first, then the
    validation share is taken from the remaining training part.  Rounding
    keeps at least one training example per class.
    """
    labels = np.asarray(labels, dtype=np.int64)
    rng = np.random.default_rng([spec.seed, 0])
    train, val, test = [], [], []
    for cls in np.unique(labels):
        pool = np.nonzero(labels == cls)[0]
        if len(pool) < 2:
            raise ValueError(f"class {cls} has fewer than 2 examples")
        pool = pool[rng.permutation(len(pool))]
        n_test = int(round(len(pool) * (1.0 - spec.train_fraction)))
        n_test = min(max(n_test, 1), len(pool) - 1)
        rest = pool[n_test:]
        n_val = int(round(len(rest) * spec.validation_of_train))
        n_val = min(n_val, len(rest) - 1)
        test.append(pool[:n_test])
        val.append(rest[:n_val])
        train.append(rest[n_val:])
    return (np.sort(np.concatenate(train)),
            np.sort(np.concatenate(val)),
            np.sort(np.concatenate(test)))
