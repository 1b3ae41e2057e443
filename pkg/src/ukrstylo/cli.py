"""Command-line front-end: extract, catalog, trace, classify, explain.

Flags can also be supplied through ``--config file`` holding ``key=value``
lines named after the long flags (without dashes); explicit flags win.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .conllu import Document, parse_path
from .engine import (FeatureMatrix, catalog_tsv, compute_matrix,
                     evaluate_metric, explain_matches, matrix_to_csv,
                     trace_tsv, AnnDoc)
from .morpho import Lexicons
from .registry import builtin_registry


def _read_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise SystemExit(f"{path}:{line_no}: expected key=value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


_INT_KEYS = {"jobs", "seed", "permutations"}
_LIST_KEYS = {"input"}


def _apply_config(args: argparse.Namespace, argv: list[str]) -> None:
    """Fill flags from the config file; flags given on the command line win."""
    if not getattr(args, "config", None):
        return
    explicit = set()
    for item in argv:
        if item.startswith("--"):
            explicit.add(item[2:].split("=", 1)[0].replace("-", "_"))
    for key, value in _read_config(args.config).items():
        if not hasattr(args, key):
            raise SystemExit(f"config key {key!r} does not match any flag "
                             f"of this subcommand")
        if key in explicit:
            continue
        if key in _INT_KEYS:
            setattr(args, key, int(value))
        elif key in _LIST_KEYS:
            setattr(args, key, value.split())
        else:
            setattr(args, key, value)


def _require(args: argparse.Namespace, *names: str) -> None:
    # flags may arrive via the command line or the config file; check here
    # because argparse's `required=` cannot see config-supplied values
    for name in names:
        if not getattr(args, name, None):
            raise SystemExit(f"missing required flag: --{name}")


def _collect_inputs(inputs: list[str]) -> list[Path]:
    paths: list[Path] = []
    for item in inputs:
        p = Path(item)
        if p.is_dir():
            paths.extend(sorted(p.glob("*.conllu")))
        elif p.exists():
            paths.append(p)
        else:
            raise SystemExit(f"input not found: {p}")
    if not paths:
        raise SystemExit("no .conllu input files found")
    return paths


def _load_documents(paths: list[Path], jobs: int) -> list[Document]:
    jobs = max(1, int(jobs))
    if jobs == 1:
        batches = [parse_path(p) for p in paths]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(parse_path, paths))  # preserves input order
    return [doc for batch in batches for doc in batch]


def _registry(args):
    lexicons = Lexicons(args.data_dir or None)
    registry = builtin_registry(lexicons)
    groups = getattr(args, "groups", None)
    if groups:
        registry = registry.select_groups(set(g.strip() for g in groups.split(",")))
    return lexicons, registry


def cmd_extract(args) -> int:
    _require(args, "input")
    lexicons, registry = _registry(args)
    paths = _collect_inputs(args.input)
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    docs = _load_documents(paths, args.jobs)
    matrix = _compute_parallel(docs, registry, lexicons, args.jobs)
    (out_dir / "features.csv").write_text(matrix_to_csv(matrix),
                                          encoding="utf-8", newline="")
    (out_dir / "catalog.tsv").write_text(catalog_tsv(registry),
                                         encoding="utf-8", newline="")
    for metric_id in (args.trace.split(",") if args.trace else []):
        metric_id = metric_id.strip()
        traces = [explain_matches(doc, registry, metric_id, lexicons)
                  for doc in docs]
        (out_dir / f"trace_{registry.resolve(metric_id).id}.tsv").write_text(
            trace_tsv(traces), encoding="utf-8", newline="")
    print(f"extracted {len(matrix.doc_ids)} documents x "
          f"{len(matrix.metric_ids)} metrics -> {out_dir / 'features.csv'}")
    return 0


def _compute_parallel(docs, registry, lexicons, jobs: int) -> FeatureMatrix:
    jobs = max(1, int(jobs))
    if jobs == 1 or len(docs) < 2:
        return compute_matrix(docs, registry, lexicons)

    def one(doc):
        ann = AnnDoc(doc, lexicons)
        return [evaluate_metric(ann, spec)[0] for spec in registry]

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        rows = list(pool.map(one, docs))   # single writer, input order
    return FeatureMatrix([d.doc_id for d in docs], registry.ids(),
                         np.array(rows, dtype=np.float64))


def cmd_catalog(args) -> int:
    _lexicons, registry = _registry(args)
    text = catalog_tsv(registry)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)
    return 0


def cmd_trace(args) -> int:
    _require(args, "input", "metric")
    lexicons, registry = _registry(args)
    docs = _load_documents(_collect_inputs(args.input), args.jobs)
    traces = [explain_matches(doc, registry, args.metric, lexicons)
              for doc in docs]
    text = trace_tsv(traces)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)
    return 0


def cmd_classify(args) -> int:
    from .mlkit import Hyperparams, load_dataset, run_experiment
    from .report import render_confusion
    _require(args, "features", "labels")
    dataset = load_dataset(args.features, args.labels)
    result = run_experiment(dataset, seed=args.seed,
                            hyperparams=Hyperparams(n_jobs=max(1, args.jobs)))
    report = Path(args.report)
    report.parent.mkdir(parents=True, exist_ok=True)
    lines = [
        "key\tvalue",
        f"macro_f1\t{result.macro_f1:.6f}",
        f"seed\t{args.seed}",
        f"classes\t{','.join(dataset.class_names)}",
        f"train_size\t{result.split_sizes['train']}",
        f"validation_size\t{result.split_sizes['validation']}",
        f"test_size\t{result.split_sizes['test']}",
    ]
    for gold_name, row in zip(dataset.class_names, result.confusion):
        lines.append("confusion[%s]\t%s" % (gold_name,
                                            ",".join(str(int(v)) for v in row)))
    report.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="")
    figure = report.with_suffix(".png")
    render_confusion(result.confusion, dataset.class_names, figure)
    print(f"macro_f1={result.macro_f1:.4f} -> {report} (+ {figure.name})")
    return 0


def cmd_explain(args) -> int:
    from .mlkit import Hyperparams, attribution_report, load_dataset, run_experiment
    from .report import render_attribution
    _require(args, "features", "labels")
    dataset = load_dataset(args.features, args.labels)
    result = run_experiment(dataset, seed=args.seed,
                            hyperparams=Hyperparams(n_jobs=max(1, args.jobs)))
    report = attribution_report(result.model, dataset,
                                n_permutations=args.permutations,
                                seed=args.seed)
    out = Path(args.report)
    out.parent.mkdir(parents=True, exist_ok=True)
    descriptions = {}
    try:
        _lexicons, registry = _registry(args)
        descriptions = {s.id: s.description for s in registry}
    except Exception:
        pass  # synthetic feature sets have no catalog entries
    out.write_text(report.to_tsv(descriptions), encoding="utf-8", newline="")
    figures = render_attribution(report, out.parent, stem=out.stem)
    print(f"attribution for {len(dataset.class_names)} classes -> {out} "
          f"(+ {len(figures)} figures)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ukrstylo",
        description="Stylometric metrics for dependency-annotated Ukrainian text")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="key=value file mirroring the long flags")
        p.add_argument("--data-dir", dest="data_dir", default="",
                       help="lexicon directory (default: bundled data, "
                            "or $UKRSTYLO_DATA_DIR)")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker threads (default 1)")

    p = sub.add_parser("extract", help="compute the feature matrix")
    common(p)
    p.add_argument("--input", nargs="+", default=None,
                   help=".conllu files or directories")
    p.add_argument("--output", default=".", help="output directory")
    p.add_argument("--groups", default="",
                   help="comma-separated metric groups (default: all)")
    p.add_argument("--trace", default="",
                   help="comma-separated metric ids to trace")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("catalog", help="emit the metric catalog")
    common(p)
    p.add_argument("--output", default="", help="file (default: stdout)")
    p.add_argument("--groups", default="")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("trace", help="list matched tokens for one metric")
    common(p)
    p.add_argument("--input", nargs="+", default=None)
    p.add_argument("--metric", default="")
    p.add_argument("--output", default="")
    p.add_argument("--groups", default="")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("classify", help="train and score the voting ensemble")
    common(p)
    p.add_argument("--features", default="")
    p.add_argument("--labels", default="")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", default="report.tsv")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("explain", help="Shapley attribution per class")
    common(p)
    p.add_argument("--features", default="")
    p.add_argument("--labels", default="")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--permutations", type=int, default=50)
    p.add_argument("--report", default="attribution.tsv")
    p.add_argument("--groups", default="")
    p.set_defaults(func=cmd_explain)
    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(argv)
    _apply_config(args, argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        # registry lookups raise KeyError for unknown metric ids
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
