"""``ukr-annotate --in <dir|manifest> --out <dir> --model <id>``"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .batch import run_batch
from .config import AdapterConfig


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ukr-annotate",
        description="Annotate raw Ukrainian text into CoNLL-U for the "
                    "stylometric engine")
    parser.add_argument("--in", dest="source", required=True,
                        help="directory of *.txt files, or a manifest file "
                             "with one document per line")
    parser.add_argument("--out", dest="out", required=True,
                        help="output directory for annotated.conllu and "
                             "errors.tsv")
    parser.add_argument("--model", default="dict-uk-0.1",
                        help="pipeline id; dict-* selects the bundled "
                             "deterministic lexicon (default dict-uk-0.1)")
    parser.add_argument("--batch-size", type=int, default=32)
    parser.add_argument("--encoding", default="utf-8")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = AdapterConfig(model=args.model, batch_size=args.batch_size,
                           encoding=args.encoding, output_dir=Path(args.out))
    try:
        conllu_path, errors_path, n_done = run_batch(Path(args.source), config)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    n_failed = len(errors_path.read_text(encoding="utf-8").splitlines()) - 1
    print(f"annotated {n_done} document(s) -> {conllu_path}"
          + (f"; {n_failed} failed, see {errors_path}" if n_failed else ""))
    return 0


if __name__ == "__main__":
    sys.exit(main())
