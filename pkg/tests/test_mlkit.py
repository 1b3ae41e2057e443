"""Splitting, scoring, and model-stack tests for the classification harness."""

import numpy as np
import pytest

from ukrstylo.engine import FeatureMatrix
from ukrstylo.mlkit import (AdaBoost, DecisionTree, Hyperparams,
                            LabeledDataset, LogisticRegression, RandomForest,
                            SplitSpec, VotingModel, class_means,
                            confusion_matrix, macro_f1, run_experiment,
                            stratified_split)


def _blobs(seed=0, n=120, d=6, k=3, spread=2.0, noise=0.5):
    rng = np.random.default_rng(seed)
    centers = rng.normal(0, spread, size=(k, d))
    y = np.repeat(np.arange(k), n // k)
    X = centers[y] + rng.normal(0, noise, size=(n, d))
    return X, y


# --------------------------------------------------------------------- split

def test_split_sizes_follow_protocol():
    labels = np.repeat([0, 1], 50)
    train, val, test = stratified_split(labels, SplitSpec(seed=3))
    assert (len(train), len(val), len(test)) == (68, 12, 20)
    all_idx = np.concatenate([train, val, test])
    assert len(np.unique(all_idx)) == 100  # disjoint and exhaustive


def test_split_deterministic_and_stratified():
    rng = np.random.default_rng(11)
    for trial in range(20):
        labels = rng.integers(0, 3, size=60)
        while np.min(np.bincount(labels, minlength=3)) < 5:
            labels = rng.integers(0, 3, size=60)
        a = stratified_split(labels, SplitSpec(seed=trial))
        b = stratified_split(labels, SplitSpec(seed=trial))
        for x, y in zip(a, b):
            assert np.array_equal(x, y)
        _train, _val, test = a
        for cls in range(3):
            total = np.sum(labels == cls)
            got = np.sum(labels[test] == cls)
            assert abs(got - total * 0.2) <= 1.0  # proportion within 1 example


def test_split_rejects_tiny_class():
    with pytest.raises(ValueError):
        stratified_split(np.array([0, 0, 0, 1]), SplitSpec())


# -------------------------------------------------------------------- scores

def test_macro_f1_hand_cases():
    # perfect predictions
    assert macro_f1([0, 1, 2, 0], [0, 1, 2, 0]) == 1.0
    # TP=1, FP=1, FN=1 for each of 2 classes -> per-class F1 = 0.5
    gold = [0, 0, 1, 1]
    pred = [0, 1, 0, 1]
    assert abs(macro_f1(gold, pred) - 0.5) < 1e-12
    # all-one-class predictions on balanced 2-class gold:
    # class0 F1 = 2/3, class1 F1 = 0 -> macro 1/3
    gold = [0, 0, 1, 1]
    pred = [0, 0, 0, 0]
    assert abs(macro_f1(gold, pred) - 1.0 / 3.0) < 1e-12


def test_macro_f1_relabel_invariant():
    rng = np.random.default_rng(5)
    gold = rng.integers(0, 3, size=50)
    pred = rng.integers(0, 3, size=50)
    perm = np.array([2, 0, 1])
    assert abs(macro_f1(gold, pred, 3)
               - macro_f1(perm[gold], perm[pred], 3)) < 1e-12


def test_macro_f1_length_mismatch():
    with pytest.raises(ValueError):
        macro_f1([0, 1], [0])


def test_confusion_matrix_counts():
    cm = confusion_matrix([0, 0, 1, 1, 1], [0, 1, 1, 1, 0], 2)
    assert cm.tolist() == [[1, 1], [1, 2]]


# -------------------------------------------------------------------- models

def test_decision_tree_memorizes_separable_data():
    X, y = _blobs(seed=1, noise=0.2)
    tree = DecisionTree(n_classes=3).fit(X, y)
    assert np.mean(tree.predict(X) == y) == 1.0
    proba = tree.predict_proba(X)
    assert np.allclose(proba.sum(axis=1), 1.0)


def test_tree_respects_sample_weights():
    # two identical points with conflicting labels: weights decide the leaf
    X = np.zeros((2, 1))
    y = np.array([0, 1])
    t = DecisionTree(n_classes=2).fit(X, y, sample_weight=np.array([0.9, 0.1]))
    assert t.predict(X)[0] == 0
    t = DecisionTree(n_classes=2).fit(X, y, sample_weight=np.array([0.1, 0.9]))
    assert t.predict(X)[0] == 1


def test_forest_and_boost_fit_blobs():
    X, y = _blobs(seed=2, n=150)
    hold = np.arange(len(y)) % 5 == 0          # stratified 1-in-5 holdout
    X, Xt, y, yt = X[~hold], X[hold], y[~hold], y[hold]
    forest = RandomForest(3, n_trees=40, seed=0).fit(X, y)
    assert np.mean(forest.predict(Xt) == yt) > 0.9
    boost = AdaBoost(3, n_rounds=60).fit(X, y)
    assert np.mean(boost.predict(Xt) == yt) > 0.8
    for proba in (forest.predict_proba(Xt), boost.predict_proba(Xt)):
        assert np.allclose(proba.sum(axis=1), 1.0)


def test_logistic_regression_converges_on_standardized_blobs():
    X, y = _blobs(seed=3, noise=0.3)
    mu, sd = X.mean(axis=0), X.std(axis=0)
    Xs = (X - mu) / sd
    lr = LogisticRegression(3).fit(Xs, y)
    assert np.mean(lr.predict(Xs) == y) > 0.97
    assert np.allclose(lr.predict_proba(Xs).sum(axis=1), 1.0)


def test_voting_soft_probabilities_sum_to_one():
    X, y = _blobs(seed=4)
    model = VotingModel(3, seed=0,
                        hyperparams=Hyperparams(n_trees=20, boost_rounds=20)).fit(X, y)
    proba = model.predict_proba(X[:10])
    assert np.allclose(proba.sum(axis=1), 1.0)


def test_trees_invariant_to_feature_standardization():
    X, y = _blobs(seed=6)
    Xt, _ = _blobs(seed=66)
    mu, sd = X.mean(axis=0), X.std(axis=0)
    f1 = RandomForest(3, n_trees=15, seed=7).fit(X, y)
    f2 = RandomForest(3, n_trees=15, seed=7).fit((X - mu) / sd, y)
    assert np.array_equal(f1.predict(Xt), f2.predict((Xt - mu) / sd))
    b1 = AdaBoost(3, n_rounds=25).fit(X, y)
    b2 = AdaBoost(3, n_rounds=25).fit((X - mu) / sd, y)
    assert np.array_equal(b1.predict(Xt), b2.predict((Xt - mu) / sd))


def test_voting_rejects_single_class_train():
    X = np.random.default_rng(0).normal(size=(10, 3))
    with pytest.raises(ValueError):
        VotingModel(2).fit(X, np.zeros(10, dtype=int))


# ------------------------------------------------------------------- harness

def _dataset(seed=0, n=90, d=8, k=3):
    X, y = _blobs(seed=seed, n=n, d=d, k=k, spread=2.5, noise=0.6)
    fm = FeatureMatrix([f"d{i}" for i in range(n)],
                       [f"m{j}" for j in range(d)], X)
    return LabeledDataset(fm, y, [f"c{j}" for j in range(k)])


def test_run_experiment_end_to_end():
    ds = _dataset()
    res = run_experiment(ds, seed=1,
                         hyperparams=Hyperparams(n_trees=30, boost_rounds=30))
    # per class of 30: 6 test, then round(24 * 0.15) = 4 validation
    assert res.split_sizes == {"train": 60, "validation": 12, "test": 18}
    assert res.macro_f1 > 0.9
    assert res.confusion.sum() == 18


def test_run_experiment_deterministic_across_jobs():
    ds = _dataset(seed=8)
    a = run_experiment(ds, seed=2,
                       hyperparams=Hyperparams(n_trees=24, boost_rounds=20, n_jobs=1))
    b = run_experiment(ds, seed=2,
                       hyperparams=Hyperparams(n_trees=24, boost_rounds=20, n_jobs=3))
    assert np.array_equal(a.predictions, b.predictions)
    assert a.macro_f1 == b.macro_f1


def test_class_means():
    values = np.array([[0.02, 1.0], [0.04, 3.0], [0.5, 0.5], [0.7, 0.7]])
    fm = FeatureMatrix(["a", "b", "c", "d"], ["SY_PARATAXIS", "x"], values)
    ds = LabeledDataset(fm, np.array([0, 0, 1, 1]), ["k0", "k1"])
    assert np.allclose(class_means(ds, 0), [0.03, 2.0])
    with pytest.raises(ValueError):
        class_means(ds, 5)


def test_labeled_dataset_validation():
    fm = FeatureMatrix(["a", "b", "c"], ["m"], np.zeros((3, 1)))
    with pytest.raises(ValueError):
        LabeledDataset(fm, np.array([0, 0]), ["x", "y"])       # count mismatch
    with pytest.raises(ValueError):
        LabeledDataset(fm, np.array([0, 0, 1]), ["x", "y"])    # class y has 1 doc
