"""Evaluation scores: macro-averaged F1 and the confusion matrix."""

from __future__ import annotations

import numpy as np


def confusion_matrix(gold: np.ndarray, predictions: np.ndarray,
                     n_classes: int) -> np.ndarray:
    gold = np.asarray(gold, dtype=np.int64)
    predictions = np.asarray(predictions, dtype=np.int64)
    if gold.shape != predictions.shape:
        raise ValueError("gold and predictions differ in length")
    cm = np.zeros((n_classes, n_classes), dtype=np.int64)
    np.add.at(cm, (gold, predictions), 1)
    return cm


def macro_f1(gold: np.ndarray, predictions: np.ndarray,
             n_classes: int | None = None) -> float:
    """Unweighted mean of per-class F1 over the whole class universe.

    A class with no true and no predicted examples contributes F1 = 0,
    which keeps the score honest when a classifier drops a known class.
    """
    gold = np.asarray(gold, dtype=np.int64)
    predictions = np.asarray(predictions, dtype=np.int64)
    if n_classes is None:
        n_classes = int(max(gold.max(), predictions.max())) + 1
    cm = confusion_matrix(gold, predictions, n_classes)
    tp = np.diag(cm).astype(np.float64)
    fp = cm.sum(axis=0) - tp
    fn = cm.sum(axis=1) - tp
    denom = 2 * tp + fp + fn
    f1 = np.where(denom > 0, 2 * tp / np.where(denom > 0, denom, 1.0), 0.0)
    return float(f1.mean())
