"""CoNLL-U parsing, validation and serialization.

Only syntactic-word lines are kept: multiword-token ranges (``1-2``) and
empty nodes (``1.1``) are skipped on read.  FEATS content is preserved
verbatim; all morphological corrections happen downstream.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

UD_TAGS = frozenset({
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
})

_RANGE_ID = re.compile(r"^\d+-\d+$")
_EMPTY_ID = re.compile(r"^\d+\.\d+$")


class ConlluError(ValueError):
    """Malformed CoNLL-U input, with the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class ValidationError(ValueError):
    """Structural problem (head range, cycles, roots) naming the sentence."""

    def __init__(self, sent_id: str, message: str):
        self.sent_id = sent_id
        super().__init__(f"sentence {sent_id!r}: {message}")


def parse_feats(raw: str) -> dict[str, str]:
    """Split a FEATS column into an ordered key/value map. ``_`` -> empty."""
    if raw == "_" or raw == "":
        return {}
    out: dict[str, str] = {}
    for item in raw.split("|"):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"bad FEATS item {item!r}")
        out[key] = value
    return out


def format_feats(feats: dict[str, str]) -> str:
    if not feats:
        return "_"
    return "|".join(f"{k}={v}" for k, v in sorted(feats.items(), key=lambda kv: kv[0].lower()))


@dataclass(frozen=True)
class Token:
    index: int                  # 1-based position within the sentence
    form: str
    lemma: str
    upos: str
    feats: dict[str, str]
    head: int                   # 0 = root
    deprel: str
    misc: dict[str, str] = field(default_factory=dict)

    def feat(self, key: str) -> str | None:
        return self.feats.get(key)


@dataclass(frozen=True)
class Sentence:
    sent_id: str
    text: str | None
    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def token(self, index: int) -> Token:
        """Token by its 1-based CoNLL-U index."""
        return self.tokens[index - 1]

    def children(self, index: int) -> list[Token]:
        return [t for t in self.tokens if t.head == index]

    def root(self) -> Token:
        for t in self.tokens:
            if t.head == 0:
                return t
        raise ValidationError(self.sent_id, "no root token")


@dataclass(frozen=True)
class Document:
    doc_id: str
    sentences: tuple[Sentence, ...]

    def tokens(self) -> Iterator[tuple[Sentence, Token]]:
        for sent in self.sentences:
            for tok in sent.tokens:
                yield sent, tok


def token_count(doc: Document) -> int:
    """Total number of syntactic-word tokens, punctuation included."""
    return sum(len(s) for s in doc.sentences)


def validate(sentence: Sentence) -> list[str]:
    """Structural diagnostics; an empty list means the sentence is well formed."""
    diags: list[str] = []
    n = len(sentence.tokens)
    for pos, tok in enumerate(sentence.tokens, start=1):
        if tok.index != pos:
            diags.append(f"non-contiguous index {tok.index} at position {pos}")
    roots = [t for t in sentence.tokens if t.head == 0]
    if len(roots) == 0:
        diags.append("no root token")
    elif len(roots) > 1:
        diags.append(f"multiple roots at indices {[t.index for t in roots]}")
    for tok in sentence.tokens:
        if not (0 <= tok.head <= n):
            diags.append(f"head {tok.head} of token {tok.index} out of range")
        elif tok.head == tok.index:
            diags.append(f"token {tok.index} is its own head")
    # cycle check over the in-range part of the head graph
    for tok in sentence.tokens:
        seen = set()
        cur = tok.index
        while cur != 0:
            if cur in seen:
                diags.append(f"head cycle involving token {tok.index}")
                break
            seen.add(cur)
            nxt = sentence.tokens[cur - 1].head if 1 <= cur <= n else 0
            if nxt == cur or not (0 <= nxt <= n):
                break
            cur = nxt
    # deduplicate cycle reports, keep order
    out: list[str] = []
    for d in diags:
        if d not in out:
            out.append(d)
    return out


def _finish_sentence(sent_id: str | None, text: str | None,
                     tokens: list[Token], auto_no: int) -> Sentence:
    sid = sent_id if sent_id is not None else f"s{auto_no}"
    return Sentence(sent_id=sid, text=text, tokens=tuple(tokens))


def parse_conllu(stream: Iterable[str] | str, default_doc_id: str = "doc") -> list[Document]:
    """Parse a CoNLL-U character stream into validated documents.

    One document per ``# newdoc id`` block; if the input has none, a single
    document named *default_doc_id* is produced.  Empty input yields an
    empty list.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)

    docs: list[Document] = []
    doc_id: str | None = None
    sentences: list[Sentence] = []
    sent_id: str | None = None
    text: str | None = None
    tokens: list[Token] = []
    auto_no = 0
    saw_any = False

    def close_sentence() -> None:
        nonlocal sent_id, text, tokens, auto_no
        if tokens:
            auto_no += 1
            sent = _finish_sentence(sent_id, text, tokens, auto_no)
            diags = validate(sent)
            if diags:
                raise ValidationError(sent.sent_id, "; ".join(diags))
            sentences.append(sent)
        sent_id, text, tokens = None, None, []

    def close_document() -> None:
        nonlocal sentences, doc_id
        close_sentence()
        if sentences:
            docs.append(Document(doc_id=doc_id or default_doc_id,
                                 sentences=tuple(sentences)))
        sentences = []

    for line_no, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if line == "":
            close_sentence()
            continue
        saw_any = True
        if line.startswith("#"):
            body = line[1:].strip()
            key, sep, value = body.partition("=")
            key = key.strip()
            if sep and key == "newdoc id":
                close_document()
                doc_id = value.strip()
            elif sep and key == "sent_id":
                sent_id = value.strip()
            elif sep and key == "text":
                text = value.strip()
            # other comments are opaque and ignored
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluError(f"expected 10 columns, got {len(cols)}", line_no)
        idx, form, lemma, upos, xpos, feats, head, deprel, deps, misc = cols
        if _RANGE_ID.match(idx) or _EMPTY_ID.match(idx):
            continue  # multiword range / empty node: not a syntactic word
        try:
            index = int(idx)
        except ValueError:
            raise ConlluError(f"bad token index {idx!r}", line_no) from None
        if upos not in UD_TAGS:
            raise ConlluError(f"unknown UPOS tag {upos!r}", line_no)
        try:
            head_i = int(head)
        except ValueError:
            raise ConlluError(f"bad HEAD {head!r}", line_no) from None
        try:
            feat_map = parse_feats(feats)
        except ValueError as exc:
            raise ConlluError(str(exc), line_no) from None
        misc_map = {}
        if misc != "_":
            for item in misc.split("|"):
                k, _, v = item.partition("=")
                misc_map[k] = v
        if xpos != "_":
            misc_map.setdefault("XPos", xpos)
        tokens.append(Token(index=index, form=form, lemma=lemma, upos=upos,
                            feats=feat_map, head=head_i, deprel=deprel,
                            misc=misc_map))
    close_document()
    if not saw_any:
        return []
    return docs


def parse_path(path: str | Path) -> list[Document]:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        return parse_conllu(fh, default_doc_id=path.name)


def serialize(docs: Iterable[Document]) -> str:
    """Render documents back to CoNLL-U (round-trips through parse_conllu)."""
    out: list[str] = []
    for doc in docs:
        out.append(f"# newdoc id = {doc.doc_id}")
        for sent in doc.sentences:
            out.append(f"# sent_id = {sent.sent_id}")
            if sent.text is not None:
                out.append(f"# text = {sent.text}")
            for tok in sent.tokens:
                xpos = tok.misc.get("XPos", "_")
                misc_items = [f"{k}={v}" for k, v in tok.misc.items() if k != "XPos"]
                out.append("\t".join([
                    str(tok.index), tok.form, tok.lemma, tok.upos, xpos,
                    format_feats(tok.feats), str(tok.head), tok.deprel, "_",
                    "|".join(misc_items) if misc_items else "_",
                ]))
            out.append("")
    return "\n".join(out) + ("\n" if out else "")
