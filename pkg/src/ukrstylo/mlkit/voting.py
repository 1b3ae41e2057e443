"""Soft-voting ensemble of forest, boosted stumps, and logistic regression.

The two tree models consume raw features (they are invariant to monotone
per-feature transforms); logistic regression sees per-feature z-scores
computed from the training split only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .boosting import AdaBoost
from .forest import RandomForest
from .logistic import LogisticRegression


@dataclass
class Hyperparams:
    n_trees: int = 200
    boost_rounds: int = 100
    learning_rate: float = 0.1
    l2: float = 1e-3
    patience: int = 10
    n_jobs: int = 1


@dataclass
class Standardizer:
    mean: np.ndarray = field(default_factory=lambda: np.zeros(0))
    std: np.ndarray = field(default_factory=lambda: np.ones(0))

    def fit(self, X: np.ndarray) -> "Standardizer":
        self.mean = X.mean(axis=0)
        std = X.std(axis=0)
        self.std = np.where(std > 0, std, 1.0)
        return self

    def transform(self, X: np.ndarray) -> np.ndarray:
        return (np.asarray(X, dtype=np.float64) - self.mean) / self.std


class VotingModel:
    def __init__(self, n_classes: int, seed: int = 0,
                 hyperparams: Hyperparams | None = None):
        hp = hyperparams or Hyperparams()
        self.n_classes = n_classes
        self.seed = seed
        self.hyperparams = hp
        self.scaler = Standardizer()
        self.forest = RandomForest(n_classes, n_trees=hp.n_trees, seed=seed,
                                   n_jobs=hp.n_jobs)
        self.boost = AdaBoost(n_classes, n_rounds=hp.boost_rounds, seed=seed)
        self.logreg = LogisticRegression(n_classes, learning_rate=hp.learning_rate,
                                         l2=hp.l2, patience=hp.patience)

    def fit(self, X: np.ndarray, y: np.ndarray,
            X_val: np.ndarray | None = None,
            y_val: np.ndarray | None = None) -> "VotingModel":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        if len(np.unique(y)) < 2:
            raise ValueError("training split holds a single class")
        self.scaler.fit(X)
        self.forest.fit(X, y, X_val, y_val)
        self.boost.fit(X, y)
        Xs = self.scaler.transform(X)
        Xvs = self.scaler.transform(X_val) if X_val is not None and len(X_val) else None
        self.logreg.fit(Xs, y, Xvs, y_val)
        return self

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        proba = (self.forest.predict_proba(X)
                 + self.boost.predict_proba(X)
                 + self.logreg.predict_proba(self.scaler.transform(X))) / 3.0
        return proba

    def predict(self, X: np.ndarray) -> np.ndarray:
        return np.argmax(self.predict_proba(X), axis=1)
