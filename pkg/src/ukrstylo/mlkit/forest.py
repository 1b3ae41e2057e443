"""Bagged CART forest with validation-selected ensemble size.

Every tree draws its bootstrap sample and feature subsets from its own
seeded substream, so the fitted forest is identical no matter how many
worker threads train it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .tree import DecisionTree


class RandomForest:
    def __init__(self, n_classes: int, n_trees: int = 200,
                 min_samples_leaf: int = 1, seed: int = 0, n_jobs: int = 1):
        self.n_classes = n_classes
        self.n_trees = n_trees
        self.min_samples_leaf = min_samples_leaf
        self.seed = seed
        self.n_jobs = n_jobs
        self.trees: list[DecisionTree] = []
        self.n_used = n_trees

    def _fit_one(self, X, y, idx: int) -> DecisionTree:
        rng = np.random.default_rng([self.seed, 1, idx])
        sample = rng.integers(0, len(y), size=len(y))
        max_features = max(1, int(np.sqrt(X.shape[1])))
        tree = DecisionTree(self.n_classes, max_features=max_features,
                            min_samples_leaf=self.min_samples_leaf, rng=rng)
        return tree.fit(X[sample], y[sample])

    def fit(self, X: np.ndarray, y: np.ndarray,
            X_val: np.ndarray | None = None,
            y_val: np.ndarray | None = None) -> "RandomForest":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        if self.n_jobs > 1:
            with ThreadPoolExecutor(max_workers=self.n_jobs) as pool:
                self.trees = list(pool.map(lambda i: self._fit_one(X, y, i),
                                           range(self.n_trees)))
        else:
            self.trees = [self._fit_one(X, y, i) for i in range(self.n_trees)]
        self.n_used = self.n_trees
        if X_val is not None and len(X_val):
            self.n_used = self._select_size(X_val, np.asarray(y_val))
        return self

    def _select_size(self, X_val, y_val) -> int:
        """Smallest checkpointed prefix of trees with the best validation accuracy."""
        acc_by_size = {}
        running = np.zeros((len(X_val), self.n_classes))
        for i, tree in enumerate(self.trees, start=1):
            running += tree.predict_proba(X_val)
            if i % 10 == 0 or i == self.n_trees:
                pred = np.argmax(running, axis=1)
                acc_by_size[i] = float(np.mean(pred == y_val))
        best = max(acc_by_size.values())
        return min(size for size, acc in acc_by_size.items() if acc == best)

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        total = np.zeros((len(X), self.n_classes))
        for tree in self.trees[: self.n_used]:
            total += tree.predict_proba(X)
        return total / self.n_used

    def predict(self, X: np.ndarray) -> np.ndarray:
        return np.argmax(self.predict_proba(X), axis=1)
