"""Multiclass adaptive boosting (SAMME) over depth-1 CART stumps."""

from __future__ import annotations

import numpy as np

from .tree import DecisionTree


class AdaBoost:
    def __init__(self, n_classes: int, n_rounds: int = 100, seed: int = 0):
        self.n_classes = n_classes
        self.n_rounds = n_rounds
        self.seed = seed
        self.stumps: list[DecisionTree] = []
        self.alphas: list[float] = []

    def fit(self, X: np.ndarray, y: np.ndarray) -> "AdaBoost":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        n, k = len(y), self.n_classes
        w = np.full(n, 1.0 / n)
        self.stumps, self.alphas = [], []
        for _round in range(self.n_rounds):
            stump = DecisionTree(k, max_depth=1).fit(X, y, sample_weight=w)
            pred = stump.predict(X)
            miss = pred != y
            err = float(w[miss].sum())
            if err <= 0.0:
                # perfect stump: give it a large but finite vote and stop
                self.stumps.append(stump)
                self.alphas.append(np.log(1e12) + np.log(k - 1.0))
                break
            if err >= 1.0 - 1.0 / k:
                break  # no better than chance, boosting cannot continue
            alpha = np.log((1.0 - err) / err) + np.log(k - 1.0)
            self.stumps.append(stump)
            self.alphas.append(alpha)
            w = w * np.exp(alpha * miss)
            w = w / w.sum()
        if not self.stumps:
            # degenerate data: fall back to a single prior stump
            self.stumps = [DecisionTree(k, max_depth=1).fit(X, y)]
            self.alphas = [1.0]
        return self

    def decision_scores(self, X: np.ndarray) -> np.ndarray:
        scores = np.zeros((len(X), self.n_classes))
        for stump, alpha in zip(self.stumps, self.alphas):
            pred = stump.predict(X)
            scores[np.arange(len(X)), pred] += alpha
        return scores

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        scores = self.decision_scores(X)
        totals = scores.sum(axis=1, keepdims=True)
        flat = np.full_like(scores, 1.0 / self.n_classes)
        with np.errstate(invalid="ignore", divide="ignore"):
            proba = np.where(totals > 0, scores / np.where(totals > 0, totals, 1.0), flat)
        return proba

    def predict(self, X: np.ndarray) -> np.ndarray:
        return np.argmax(self.decision_scores(X), axis=1)
