"""Metric evaluation: normalized feature vectors, match traces, CSV output.

Every metric value is a mean over the document's total token count N;
token-predicate values are matching-token counts / N, sentence-span values
sum the token counts of matching sentences, ratio values are distinct-type
counts / N.
"""

from __future__ import annotations

import csv
import io
import urllib.parse
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .conllu import Document, token_count
from .morpho import Lexicons
from .registry import (
    DECLARED_GROUP_SIZES, AnnSent, MetricRegistry, MetricSpec,
    SCOPE_RATIO, SCOPE_SENTENCE, SCOPE_TOKEN, is_content, is_function,
)


@dataclass(frozen=True)
class MatchTrace:
    metric_id: str
    doc_id: str
    matched: tuple[tuple[str, int, str], ...]  # (sent_id, token index, form)

    def __len__(self) -> int:
        return len(self.matched)


class AnnDoc:
    """Document plus the derived-morphology layer for every sentence."""

    def __init__(self, doc: Document, lexicons: Lexicons):
        self.doc = doc
        self.sents = [AnnSent(s, lexicons) for s in doc.sentences]
        self.n_tokens = token_count(doc)
        if self.n_tokens < 1:
            raise ValueError(f"document {doc.doc_id!r} has no tokens")


def _ratio_matches(ann: AnnDoc, metric_id: str) -> list[tuple[str, int, str]]:
    """First token of each counted type; list length is the numerator."""
    if metric_id == "L_TYPE_TOKEN_RATIO_LEMMAS":
        member = None
    elif metric_id == "L_CONT_T":
        member = is_content
    elif metric_id == "L_FUNC_T":
        member = is_function
    else:
        raise ValueError(f"not a ratio metric: {metric_id}")
    seen: set[str] = set()
    matched = []
    for s in ann.sents:
        for i in range(1, len(s) + 1):
            if member is not None and not member(s, i):
                continue
            lemma = s.tok(i).lemma
            if lemma not in seen:
                seen.add(lemma)
                matched.append((s.sent.sent_id, i, s.tok(i).form))
    return matched


def evaluate_metric(ann: AnnDoc, spec: MetricSpec) -> tuple[float, MatchTrace]:
    matched: list[tuple[str, int, str]] = []
    if spec.scope == SCOPE_TOKEN:
        for s in ann.sents:
            for i in range(1, len(s) + 1):
                if spec.token_pred(s, i):
                    matched.append((s.sent.sent_id, i, s.tok(i).form))
    elif spec.scope == SCOPE_SENTENCE:
        for s in ann.sents:
            if spec.sent_pred(s):
                matched.extend((s.sent.sent_id, i, s.tok(i).form)
                               for i in range(1, len(s) + 1))
    elif spec.scope == SCOPE_RATIO:
        matched = _ratio_matches(ann, spec.id)
    else:
        raise ValueError(f"unknown scope {spec.scope!r}")
    value = len(matched) / ann.n_tokens
    return value, MatchTrace(spec.id, ann.doc.doc_id, tuple(matched))


def explain_matches(doc: Document | AnnDoc, registry: MetricRegistry,
                    metric_id: str, lexicons: Lexicons | None = None) -> MatchTrace:
    spec = registry.resolve(metric_id)
    if not isinstance(doc, AnnDoc):
        if lexicons is None:
            lexicons = Lexicons()
        doc = AnnDoc(doc, lexicons)
    _, trace = evaluate_metric(doc, spec)
    return trace


@dataclass
class FeatureMatrix:
    doc_ids: list[str]
    metric_ids: list[str]
    values: np.ndarray  # shape (docs, metrics), float64

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape != (len(self.doc_ids), len(self.metric_ids)):
            raise ValueError("matrix shape does not match id lists")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("non-finite value in feature matrix")

    def row(self, doc_id: str) -> np.ndarray:
        return self.values[self.doc_ids.index(doc_id)]

    def column(self, metric_id: str) -> np.ndarray:
        return self.values[:, self.metric_ids.index(metric_id)]


def compute_matrix(corpus: Sequence[Document], registry: MetricRegistry,
                   lexicons: Lexicons | None = None) -> FeatureMatrix:
    """One row per document in input order, one column per registry metric."""
    if not corpus:
        raise ValueError("empty corpus")
    if lexicons is None:
        lexicons = Lexicons()
    rows = []
    for doc in corpus:
        try:
            ann = AnnDoc(doc, lexicons)
            rows.append([evaluate_metric(ann, spec)[0] for spec in registry])
        except Exception as exc:
            raise RuntimeError(f"document {doc.doc_id!r}: {exc}") from exc
    return FeatureMatrix([d.doc_id for d in corpus], registry.ids(),
                         np.array(rows, dtype=np.float64))


# ------------------------------------------------------------- serialization

_SAFE_ID = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-"


def encode_doc_id(doc_id: str) -> str:
    return urllib.parse.quote(doc_id, safe=_SAFE_ID)


def decode_doc_id(encoded: str) -> str:
    return urllib.parse.unquote(encoded)


def _fmt(value: float) -> str:
    return "%.17g" % value


def matrix_to_csv(matrix: FeatureMatrix) -> str:
    out = io.StringIO()
    out.write(",".join(["doc_id"] + matrix.metric_ids) + "\n")
    for doc_id, row in zip(matrix.doc_ids, matrix.values):
        out.write(",".join([encode_doc_id(doc_id)] + [_fmt(v) for v in row]) + "\n")
    return out.getvalue()


def write_matrix_csv(matrix: FeatureMatrix, path: str | Path) -> None:
    Path(path).write_text(matrix_to_csv(matrix), encoding="utf-8", newline="")


def read_matrix_csv(path: str | Path) -> FeatureMatrix:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if not header or header[0] != "doc_id":
            raise ValueError(f"{path}: expected 'doc_id' header column")
        metric_ids = header[1:]
        doc_ids, rows = [], []
        for rec in reader:
            if not rec:
                continue
            doc_ids.append(decode_doc_id(rec[0]))
            rows.append([float(v) for v in rec[1:]])
    return FeatureMatrix(doc_ids, metric_ids,
                         np.array(rows, dtype=np.float64).reshape(len(doc_ids), len(metric_ids)))


def catalog_tsv(registry: MetricRegistry) -> str:
    """Machine-readable metric catalog, with declared vs actual group sizes."""
    sizes = registry.group_sizes()
    lines = []
    for group, declared in DECLARED_GROUP_SIZES.items():
        lines.append(f"# group {group}: declared {declared}, actual {sizes.get(group, 0)}")
    lines.append("id\tgroup\tscope\tdescription")
    for spec in registry:
        lines.append(f"{spec.id}\t{spec.group}\t{spec.scope}\t{spec.description}")
    return "\n".join(lines) + "\n"


def trace_tsv(traces: Iterable[MatchTrace]) -> str:
    lines = ["metric_id\tdoc_id\tsent_id\ttoken_index\tform"]
    for trace in traces:
        for sent_id, idx, form in trace.matched:
            lines.append(f"{trace.metric_id}\t{encode_doc_id(trace.doc_id)}\t{sent_id}\t{idx}\t{form}")
    return "\n".join(lines) + "\n"
