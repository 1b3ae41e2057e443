"""CART decision trees (Gini impurity) with sample weights.

Implemented directly on numpy so the whole training stack has no model
dependencies.  Split search is vectorized per feature: class counts are
accumulated over the sorted column and every boundary between distinct
values is scored in one pass.
"""

from __future__ import annotations

import numpy as np


class _Node:
    __slots__ = ("feature", "threshold", "left", "right", "proba")

    def __init__(self, proba):
        self.feature = -1
        self.threshold = 0.0
        self.left = None
        self.right = None
        self.proba = proba


def _weighted_counts(y: np.ndarray, w: np.ndarray, n_classes: int) -> np.ndarray:
    return np.bincount(y, weights=w, minlength=n_classes)


def _gini(counts: np.ndarray) -> float:
    total = counts.sum()
    if total <= 0:
        return 0.0
    p = counts / total
    return 1.0 - float(p @ p)


def _best_split_for_feature(x, y, w, n_classes):
    """(impurity, threshold) of the best boundary, or None if constant."""
    order = np.argsort(x, kind="stable")
    xs, ys, ws = x[order], y[order], w[order]
    boundaries = np.nonzero(xs[1:] != xs[:-1])[0]       # split after position b
    if boundaries.size == 0:
        return None
    onehot = np.zeros((xs.size, n_classes))
    onehot[np.arange(xs.size), ys] = ws
    prefix = np.cumsum(onehot, axis=0)                  # class mass up to i incl.
    total = prefix[-1]
    left = prefix[boundaries]
    right = total - left
    nl = left.sum(axis=1)
    nr = right.sum(axis=1)
    n = nl + nr
    gl = 1.0 - (left ** 2).sum(axis=1) / np.maximum(nl ** 2, 1e-300)
    gr = 1.0 - (right ** 2).sum(axis=1) / np.maximum(nr ** 2, 1e-300)
    impurity = (nl * gl + nr * gr) / n
    k = int(np.argmin(impurity))
    b = boundaries[k]
    threshold = 0.5 * (xs[b] + xs[b + 1])
    return float(impurity[k]), float(threshold)


class DecisionTree:
    """CART classifier; ``max_features`` enables random-subspace splits."""

    def __init__(self, n_classes: int, max_depth: int | None = None,
                 min_samples_leaf: int = 1, max_features: int | None = None,
                 rng: np.random.Generator | None = None):
        self.n_classes = n_classes
        self.max_depth = max_depth
        self.min_samples_leaf = min_samples_leaf
        self.max_features = max_features
        self.rng = rng
        self.root: _Node | None = None

    def fit(self, X: np.ndarray, y: np.ndarray,
            sample_weight: np.ndarray | None = None) -> "DecisionTree":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        w = (np.ones(len(y)) if sample_weight is None
             else np.asarray(sample_weight, dtype=np.float64))
        self.root = self._build(X, y, w, depth=0)
        return self

    def _leaf(self, y, w):
        counts = _weighted_counts(y, w, self.n_classes)
        total = counts.sum()
        proba = counts / total if total > 0 else np.full(self.n_classes,
                                                         1.0 / self.n_classes)
        return _Node(proba)

    def _build(self, X, y, w, depth):
        node = self._leaf(y, w)
        if (len(y) < 2 * self.min_samples_leaf
                or (self.max_depth is not None and depth >= self.max_depth)
                or np.all(y == y[0])):
            return node
        d = X.shape[1]
        if self.max_features is not None and self.max_features < d:
            features = self.rng.choice(d, size=self.max_features, replace=False)
        else:
            features = np.arange(d)
        parent = _gini(_weighted_counts(y, w, self.n_classes))
        best = None
        for f in features:
            found = _best_split_for_feature(X[:, f], y, w, self.n_classes)
            if found is None:
                continue
            impurity, threshold = found
            if best is None or impurity < best[0] - 1e-15:
                best = (impurity, int(f), threshold)
        if best is None or best[0] >= parent - 1e-12:
            return node
        _, f, threshold = best
        mask = X[:, f] <= threshold
        if (mask.sum() < self.min_samples_leaf
                or (~mask).sum() < self.min_samples_leaf):
            return node
        node.feature = f
        node.threshold = threshold
        node.left = self._build(X[mask], y[mask], w[mask], depth + 1)
        node.right = self._build(X[~mask], y[~mask], w[~mask], depth + 1)
        return node

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        out = np.empty((len(X), self.n_classes))
        for i, row in enumerate(X):
            node = self.root
            while node.left is not None:
                node = node.left if row[node.feature] <= node.threshold else node.right
            out[i] = node.proba
        return out

    def predict(self, X: np.ndarray) -> np.ndarray:
        return np.argmax(self.predict_proba(X), axis=1)
