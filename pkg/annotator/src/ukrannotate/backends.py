"""Annotation pipelines behind a common interface.

A backend turns one raw-text document into annotated sentences.  The
bundled dictionary backend is fully deterministic and dependency-free; the
spaCy backend wraps an installed UD model and is loaded lazily.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .config import check_capabilities

_WORD = re.compile(r"[\w'’ʼ-]+|[^\w\s]", re.UNICODE)
_SENT_END = frozenset(".!?…")


@dataclass(frozen=True)
class AnnToken:
    index: int
    form: str
    lemma: str
    upos: str
    feats: str          # raw FEATS column text, "_" when empty
    head: int
    deprel: str


@dataclass(frozen=True)
class AnnSentence:
    text: str
    tokens: tuple[AnnToken, ...]


class AnnotationError(RuntimeError):
    """One document could not be annotated; the batch run records and goes on."""


class DictionaryBackend:
    """Deterministic lexicon-driven tagger with a flat dependency parse.

    Intended for tests, demos, and offline golden runs: same input, same
    model id, byte-identical output, no external downloads.
    """

    capabilities = frozenset({"lemma", "upos", "feats", "head", "deprel"})

    def __init__(self, model: str):
        self.model = model
        self._lexicon: dict[str, tuple[str, str, str]] = {}
        path = Path(__file__).parent / "data" / "lexicon.tsv"
        for raw in path.read_text(encoding="utf-8").splitlines():
            if not raw or raw.startswith("#"):
                continue
            form, lemma, upos, feats = raw.split("\t")
            self._lexicon[form] = (lemma, upos, feats)

    def annotate(self, text: str) -> list[AnnSentence]:
        words = _WORD.findall(text)
        if not words:
            raise AnnotationError("document is empty after tokenization")
        sentences = []
        start = 0
        for i, w in enumerate(words):
            if w in _SENT_END or i == len(words) - 1:
                chunk = words[start:i + 1]
                if any(c not in _SENT_END for c in chunk):
                    sentences.append(self._parse(chunk))
                start = i + 1
        return sentences

    # -------------------------------------------------------------- tagging

    def _tag(self, index: int, form: str) -> tuple[str, str, str]:
        entry = self._lexicon.get(form.lower())
        if entry:
            return entry
        if not any(ch.isalnum() for ch in form):
            return form, "PUNCT", "_"
        if form.isdigit():
            return form, "NUM", "NumType=Card"
        return form.lower(), "X", "_"  # out-of-lexicon: annotate, don't guess

    def _parse(self, forms: list[str]) -> AnnSentence:
        tagged = [self._tag(i + 1, f) for i, f in enumerate(forms)]
        upos = [t[1] for t in tagged]
        root = next((i for i, u in enumerate(upos) if u == "VERB"),
                    next((i for i, u in enumerate(upos) if u == "AUX"),
                         next((i for i, u in enumerate(upos)
                               if u != "PUNCT"), 0)))
        tokens = []
        for i, form in enumerate(forms):
            lemma, pos, feats = tagged[i]
            if i == root:
                head, deprel = 0, "root"
            elif pos == "PUNCT":
                head, deprel = root + 1, "punct"
            elif pos == "ADP":
                target = next((j for j in range(i + 1, len(forms))
                               if upos[j] in ("NOUN", "PROPN", "PRON")), root)
                head, deprel = target + 1, "case"
            elif pos == "AUX":
                inf = next((j for j in range(len(forms))
                            if upos[j] == "VERB" and "VerbForm=Inf" in tagged[j][2]),
                           root)
                head, deprel = inf + 1, "aux"
            elif pos == "ADJ":
                noun = next((j for j in range(i + 1, len(forms))
                             if upos[j] in ("NOUN", "PROPN")), root)
                head, deprel = noun + 1, "amod"
            elif pos == "ADV":
                head, deprel = root + 1, "advmod"
            elif pos in ("NOUN", "PROPN", "PRON"):
                if any(upos[j] == "ADP" for j in range(i)) and i > root:
                    deprel = "obl"
                elif i < root:
                    deprel = "nsubj"
                else:
                    deprel = "obj"
                head = root + 1
            elif pos == "VERB":
                head, deprel = root + 1, "xcomp"
            elif pos in ("CCONJ", "SCONJ"):
                head, deprel = root + 1, "cc" if pos == "CCONJ" else "mark"
            elif pos == "PART":
                head, deprel = root + 1, "advmod"
            else:
                head, deprel = root + 1, "dep"
            tokens.append(AnnToken(index=i + 1, form=form, lemma=lemma,
                                   upos=pos, feats=feats, head=head,
                                   deprel=deprel))
        return AnnSentence(text=" ".join(forms), tokens=tuple(tokens))


class SpacyBackend:
    """Wraps an installed spaCy UD model; loaded only when requested."""

    capabilities = frozenset({"lemma", "upos", "feats", "head", "deprel"})

    def __init__(self, model: str):
        try:
            import spacy  # noqa: F401
        except ImportError as exc:
            raise RuntimeError(
                f"model {model!r} needs spaCy, which is not installed.\n"
                "Install it with:\n"
                "    pip install 'ukrannotate[spacy]'\n"
                f"    python -m spacy download {model}") from exc
        import spacy
        try:
            self._nlp = spacy.load(model)
        except OSError as exc:
            raise RuntimeError(
                f"spaCy model {model!r} is not downloaded.\n"
                f"Fetch it with:\n    python -m spacy download {model}") from exc
        self.model = model

    def annotate(self, text: str) -> list[AnnSentence]:
        doc = self._nlp(text)
        sentences = []
        for sent in doc.sents:
            tokens = []
            offset = sent.start
            for i, tok in enumerate(sent):
                if tok.is_space:
                    raise AnnotationError("whitespace token in model output")
                head = 0 if tok.head is tok else tok.head.i - offset + 1
                tokens.append(AnnToken(
                    index=i + 1, form=tok.text, lemma=tok.lemma_,
                    upos=tok.pos_, feats=str(tok.morph) or "_",
                    head=head, deprel="root" if head == 0 else tok.dep_))
            if tokens:
                sentences.append(AnnSentence(text=sent.text,
                                             tokens=tuple(tokens)))
        if not sentences:
            raise AnnotationError("document is empty after tokenization")
        return sentences


def load_backend(model: str):
    """Model id -> backend.  ``dict-*`` ids select the bundled lexicon."""
    backend = (DictionaryBackend(model) if model.startswith("dict-")
               else SpacyBackend(model))
    check_capabilities(model, backend.capabilities)
    return backend
