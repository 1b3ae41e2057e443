"""Desk-scale experiment loop: split, train the voting ensemble, score,
and attribute predictions back to individual metrics."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..engine import FeatureMatrix, decode_doc_id, read_matrix_csv
from .scores import confusion_matrix, macro_f1
from .shapley import sampled_shapley
from .split import SplitSpec, stratified_split
from .voting import Hyperparams, VotingModel


@dataclass
class LabeledDataset:
    matrix: FeatureMatrix
    labels: np.ndarray            # class index per document row
    class_names: list[str]

    def __post_init__(self) -> None:
        self.labels = np.asarray(self.labels, dtype=np.int64)
        if len(self.labels) != len(self.matrix.doc_ids):
            raise ValueError("label count does not match document count")
        if len(self.class_names) < 2:
            raise ValueError("need at least 2 classes")
        counts = np.bincount(self.labels, minlength=len(self.class_names))
        if np.any(counts < 2):
            short = [self.class_names[i] for i in np.nonzero(counts < 2)[0]]
            raise ValueError(f"classes with fewer than 2 examples: {short}")

    @property
    def n_classes(self) -> int:
        return len(self.class_names)


def read_labels_csv(path: str | Path) -> dict[str, str]:
    """``doc_id,label`` rows keyed by decoded document id."""
    out: dict[str, str] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:2]] != ["doc_id", "label"]:
            raise ValueError(f"{path}: expected 'doc_id,label' header")
        for rec in reader:
            if not rec:
                continue
            out[decode_doc_id(rec[0])] = rec[1]
    return out


def load_dataset(features_csv: str | Path, labels_csv: str | Path) -> LabeledDataset:
    matrix = read_matrix_csv(features_csv)
    by_doc = read_labels_csv(labels_csv)
    missing = [d for d in matrix.doc_ids if d not in by_doc]
    if missing:
        raise ValueError(f"labels missing for documents: {missing[:5]}")
    class_names = sorted(set(by_doc[d] for d in matrix.doc_ids))
    index = {name: i for i, name in enumerate(class_names)}
    labels = np.array([index[by_doc[d]] for d in matrix.doc_ids])
    return LabeledDataset(matrix, labels, class_names)


@dataclass
class ExperimentResult:
    model: VotingModel
    split_sizes: dict[str, int]
    test_idx: np.ndarray
    predictions: np.ndarray
    macro_f1: float
    confusion: np.ndarray


def run_experiment(dataset: LabeledDataset, seed: int = 0,
                   hyperparams: Hyperparams | None = None) -> ExperimentResult:
    X = dataset.matrix.values
    y = dataset.labels
    train, val, test = stratified_split(y, SplitSpec(seed=seed))
    model = VotingModel(dataset.n_classes, seed=seed, hyperparams=hyperparams)
    model.fit(X[train], y[train], X[val] if len(val) else None,
              y[val] if len(val) else None)
    predictions = model.predict(X[test])
    return ExperimentResult(
        model=model,
        split_sizes={"train": len(train), "validation": len(val),
                     "test": len(test)},
        test_idx=test,
        predictions=predictions,
        macro_f1=macro_f1(y[test], predictions, dataset.n_classes),
        confusion=confusion_matrix(y[test], predictions, dataset.n_classes),
    )


def class_means(dataset: LabeledDataset, class_id: int) -> np.ndarray:
    """Arithmetic mean of every metric over the class's documents."""
    if not 0 <= class_id < dataset.n_classes:
        raise ValueError(f"unknown class {class_id}")
    rows = dataset.matrix.values[dataset.labels == class_id]
    return rows.mean(axis=0)


@dataclass
class AttributionReport:
    class_names: list[str]
    metric_ids: list[str]
    shapley: np.ndarray          # (classes, metrics) mean contribution
    means: np.ndarray            # (classes, metrics) mean raw metric value

    def top_contributors(self, class_id: int, k: int = 10,
                         positive: bool = True) -> list[tuple[str, float]]:
        row = self.shapley[class_id]
        order = np.argsort(-row if positive else row)
        picked = [(self.metric_ids[i], float(row[i])) for i in order[:k]]
        return [(m, v) for m, v in picked if (v > 0) == positive or v == 0]

    def to_tsv(self, descriptions: dict[str, str] | None = None) -> str:
        lines = ["class\tmetric_id\tshapley_mean\tclass_mean\tdescription"]
        for c, name in enumerate(self.class_names):
            order = np.argsort(-np.abs(self.shapley[c]))
            for i in order:
                desc = (descriptions or {}).get(self.metric_ids[i], "")
                lines.append(f"{name}\t{self.metric_ids[i]}\t"
                             f"{self.shapley[c, i]:.6g}\t"
                             f"{self.means[c, i]:.6g}\t{desc}")
        return "\n".join(lines) + "\n"


def attribution_report(model: VotingModel, dataset: LabeledDataset,
                       n_permutations: int = 50, seed: int = 0,
                       max_rows_per_class: int = 10,
                       max_background: int = 50) -> AttributionReport:
    """Mean Shapley contribution to each class probability, per metric.

    Explained rows are the first ``max_rows_per_class`` documents of each
    class in corpus order; the background is a seeded subsample of the
    whole matrix.
    """
    X = dataset.matrix.values
    rng = np.random.default_rng([seed, 5])
    if len(X) > max_background:
        background = X[np.sort(rng.choice(len(X), max_background, replace=False))]
    else:
        background = X
    k, d = dataset.n_classes, X.shape[1]
    shapley = np.zeros((k, d))
    means = np.zeros((k, d))
    for c in range(k):
        rows = np.nonzero(dataset.labels == c)[0][:max_rows_per_class]
        means[c] = class_means(dataset, c)
        model_fn = lambda Z, c=c: model.predict_proba(Z)[:, c]
        per_row = [sampled_shapley(model_fn, background, X[r],
                                   n_permutations, seed=seed + 31 * int(r)).values
                   for r in rows]
        shapley[c] = np.mean(per_row, axis=0)
    return AttributionReport(dataset.class_names, dataset.matrix.metric_ids,
                             shapley, means)
