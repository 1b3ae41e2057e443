"""Raw Ukrainian text to CoNLL-U: a file-exchange bridge around UD pipelines."""

from .backends import (AnnotationError, AnnSentence, AnnToken,
                       DictionaryBackend, SpacyBackend, load_backend)
from .batch import collect_documents, render_conllu, run_batch
from .config import REQUIRED_LAYERS, AdapterConfig, check_capabilities

__all__ = [
    "AnnotationError", "AnnSentence", "AnnToken",
    "DictionaryBackend", "SpacyBackend", "load_backend",
    "collect_documents", "render_conllu", "run_batch",
    "REQUIRED_LAYERS", "AdapterConfig", "check_capabilities",
]
