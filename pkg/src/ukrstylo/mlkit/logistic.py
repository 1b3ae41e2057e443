"""Multinomial logistic regression, gradient descent with early stopping.

Expects standardized inputs; trained full-batch with L2 on the weights
(bias excluded), stopping when validation loss fails to improve for
``patience`` consecutive epochs.
"""

from __future__ import annotations

import numpy as np


def _softmax(z: np.ndarray) -> np.ndarray:
    z = z - z.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


def _with_bias(X: np.ndarray) -> np.ndarray:
    return np.hstack([X, np.ones((len(X), 1))])


class LogisticRegression:
    def __init__(self, n_classes: int, learning_rate: float = 0.1,
                 l2: float = 1e-3, max_epochs: int = 500, patience: int = 10):
        self.n_classes = n_classes
        self.learning_rate = learning_rate
        self.l2 = l2
        self.max_epochs = max_epochs
        self.patience = patience
        self.W: np.ndarray | None = None   # (d + 1, K), last row is bias

    def _loss(self, Xb, Y) -> float:
        proba = _softmax(Xb @ self.W)
        nll = -np.mean(np.log(np.clip((proba * Y).sum(axis=1), 1e-300, None)))
        return float(nll + 0.5 * self.l2 * np.sum(self.W[:-1] ** 2))

    def fit(self, X: np.ndarray, y: np.ndarray,
            X_val: np.ndarray | None = None,
            y_val: np.ndarray | None = None) -> "LogisticRegression":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        Xb = _with_bias(X)
        n, d1 = Xb.shape
        Y = np.zeros((n, self.n_classes))
        Y[np.arange(n), y] = 1.0
        self.W = np.zeros((d1, self.n_classes))
        use_val = X_val is not None and len(X_val) > 0
        if use_val:
            Xvb = _with_bias(np.asarray(X_val, dtype=np.float64))
            Yv = np.zeros((len(Xvb), self.n_classes))
            Yv[np.arange(len(Xvb)), np.asarray(y_val, dtype=np.int64)] = 1.0
        best_loss, best_W, since_best = np.inf, self.W.copy(), 0
        for _epoch in range(self.max_epochs):
            proba = _softmax(Xb @ self.W)
            grad = Xb.T @ (proba - Y) / n
            grad[:-1] += self.l2 * self.W[:-1]
            self.W = self.W - self.learning_rate * grad
            loss = (self._loss(Xvb, Yv) if use_val else self._loss(Xb, Y))
            if loss < best_loss - 1e-9:
                best_loss, best_W, since_best = loss, self.W.copy(), 0
            else:
                since_best += 1
                if since_best >= self.patience:
                    break
        self.W = best_W
        return self

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        return _softmax(_with_bias(np.asarray(X, dtype=np.float64)) @ self.W)

    def predict(self, X: np.ndarray) -> np.ndarray:
        return np.argmax(self.predict_proba(X), axis=1)
