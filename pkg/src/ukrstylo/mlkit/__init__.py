"""Classification and attribution harness over stylometric feature vectors."""

from .boosting import AdaBoost
from .forest import RandomForest
from .harness import (AttributionReport, ExperimentResult, LabeledDataset,
                      attribution_report, class_means, load_dataset,
                      read_labels_csv, run_experiment)
from .logistic import LogisticRegression
from .scores import confusion_matrix, macro_f1
from .shapley import ShapleyEstimate, exact_shapley, sampled_shapley
from .split import SplitSpec, stratified_split
from .tree import DecisionTree
from .voting import Hyperparams, Standardizer, VotingModel

__all__ = [
    "AdaBoost", "RandomForest", "LogisticRegression", "DecisionTree",
    "Hyperparams", "Standardizer", "VotingModel",
    "SplitSpec", "stratified_split", "confusion_matrix", "macro_f1",
    "ShapleyEstimate", "exact_shapley", "sampled_shapley",
    "AttributionReport", "ExperimentResult", "LabeledDataset",
    "attribution_report", "class_means", "load_dataset", "read_labels_csv",
    "run_experiment",
]
