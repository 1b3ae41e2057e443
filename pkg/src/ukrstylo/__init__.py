"""Stylometric feature extraction for dependency-annotated Ukrainian text."""

from .conllu import (Document, Sentence, Token, parse_conllu, parse_path,
                     serialize, token_count, validate)
from .engine import (AnnDoc, FeatureMatrix, MatchTrace, compute_matrix,
                     evaluate_metric, explain_matches, matrix_to_csv,
                     read_matrix_csv, write_matrix_csv)
from .morpho import DerivedMorph, Lexicons
from .registry import MetricRegistry, MetricSpec, builtin_registry

__version__ = "0.1.0"

__all__ = [
    "Document", "Sentence", "Token", "parse_conllu", "parse_path",
    "serialize", "token_count", "validate",
    "AnnDoc", "FeatureMatrix", "MatchTrace", "compute_matrix",
    "evaluate_metric", "explain_matches", "matrix_to_csv",
    "read_matrix_csv", "write_matrix_csv",
    "DerivedMorph", "Lexicons", "MetricRegistry", "MetricSpec",
    "builtin_registry",
]
