"""Batch driver: read raw documents, write one CoNLL-U stream + error manifest."""

from __future__ import annotations

from pathlib import Path

from .backends import AnnotationError, AnnSentence, load_backend
from .config import AdapterConfig


def collect_documents(source: Path, encoding: str = "utf-8") -> list[tuple[str, str]]:
    """(doc_id, text) pairs from a directory of ``*.txt`` or a manifest file.

    A manifest holds one document per line; ids are ``<stem>-NNN`` by line.
    """
    if source.is_dir():
        return [(p.stem, p.read_text(encoding=encoding))
                for p in sorted(source.glob("*.txt"))]
    if source.is_file():
        lines = source.read_text(encoding=encoding).splitlines()
        return [(f"{source.stem}-{i:03d}", line)
                for i, line in enumerate(lines, start=1)]
    raise FileNotFoundError(f"input not found: {source}")


def render_conllu(doc_id: str, sentences: list[AnnSentence], model: str) -> str:
    lines = [f"# newdoc id = {doc_id}", f"# annotator = {model}"]
    for k, sent in enumerate(sentences, start=1):
        lines.append(f"# sent_id = {doc_id}-s{k}")
        lines.append(f"# text = {sent.text}")
        for t in sent.tokens:
            lines.append("\t".join([
                str(t.index), t.form, t.lemma, t.upos, "_",
                t.feats or "_", str(t.head), t.deprel, "_", "_"]))
        lines.append("")
    return "\n".join(lines)


def run_batch(source: Path, config: AdapterConfig) -> tuple[Path, Path, int]:
    """Annotate every document; failures go to errors.tsv, never vanish.

    Returns (conllu_path, errors_path, number_of_annotated_documents).
    """
    backend = load_backend(config.model)
    docs = collect_documents(source, config.encoding)
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    blocks: list[str] = []
    errors: list[tuple[str, str]] = []
    for start in range(0, len(docs), config.batch_size):
        for doc_id, text in docs[start:start + config.batch_size]:
            try:
                sentences = backend.annotate(text)
            except AnnotationError as exc:
                errors.append((doc_id, str(exc)))
                continue
            blocks.append(render_conllu(doc_id, sentences, config.model))
    conllu_path = out_dir / "annotated.conllu"
    conllu_path.write_text("\n".join(blocks), encoding="utf-8", newline="")
    errors_path = out_dir / "errors.tsv"
    errors_path.write_text(
        "doc_id\treason\n" + "".join(f"{d}\t{r}\n" for d, r in errors),
        encoding="utf-8", newline="")
    return conllu_path, errors_path, len(blocks)
