"""Command-line front end: reproducible ingest/analyze/train/eval runs.

    modkit ingest  tree.json [...] --labels labels.json --out dataset.json
    modkit balance --dataset dataset.json --seed 7 --out balanced.json
    modkit analyze --dataset dataset.json --out charts/
    modkit train   --dataset dataset.json --out runs/ --model nb --seed 7
    modkit eval    --run runs/<hash> --dataset dataset.json
    modkit report  --inputs eval_report.json [...] --reference --out report

Exit codes: 0 success, 2 usage/configuration, 3 data errors, 4 numeric
errors. Training artifacts land in a run directory named by the hash of
the effective configuration, so re-running the same experiment
overwrites the same files with byte-identical content.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Sequence

from . import __version__, analytics, corpus, evaluate, models, textprep, vectorize
from .errors import ConfigError, ModkitError

DEFAULT_STEPS = (
    "lowercasing",
    "punctuation_removal",
    "stopword_removal",
    "lemmatization",
)


@dataclass
class RunConfig:
    seed: int = 0
    model: str = "nb"
    steps: tuple[str, ...] = DEFAULT_STEPS
    emoji_mode: str = "ml"
    alpha: float = 1.0
    learning_rate: float = 0.1
    epochs: int = 500
    l2: float = 1e-4
    ratios: tuple[float, float, float] = (0.8, 0.1, 0.1)
    n_cycles: int = 1
    dataset: str = ""
    stoplist: str = ""
    lexicon: str = ""
    vocab: str = ""
    out: str = "runs"
    threads: int = 1
    cap: int | None = None
    variant_name: str = ""

    def hash(self) -> str:
        payload = asdict(self)
        payload.pop("out")  # output location does not change the experiment
        payload.pop("threads")
        digest = hashlib.sha256(
            json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
        )
        return digest.hexdigest()[:12]


def _load_config_file(path: str) -> dict:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ConfigError(f"config {path} must be a JSON object")
    return obj


def _apply_set_overrides(config: dict, overrides: Sequence[str]) -> None:
    for item in overrides:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        try:
            parsed = json.loads(value)
        except json.JSONDecodeError:
            parsed = value
        target = config
        parts = key.split(".")
        for part in parts[:-1]:
            target = target.setdefault(part, {})
            if not isinstance(target, dict):
                raise ConfigError(f"cannot set {key!r}: {part!r} is not an object")
        target[parts[-1]] = parsed


def build_run_config(args: argparse.Namespace) -> RunConfig:
    config: dict = {}
    if getattr(args, "config", None):
        config.update(_load_config_file(args.config))
    _apply_set_overrides(config, getattr(args, "set", None) or [])
    # explicit flags win over config file and --set
    for name in (
        "seed",
        "model",
        "emoji_mode",
        "dataset",
        "stoplist",
        "lexicon",
        "vocab",
        "out",
        "threads",
        "cap",
        "n_cycles",
    ):
        value = getattr(args, name, None)
        if value is not None:
            config[name] = value
    known = set(RunConfig.__dataclass_fields__)
    unknown = set(config) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "steps" in config:
        config["steps"] = tuple(config["steps"])
    if "ratios" in config:
        config["ratios"] = tuple(config["ratios"])
    run_config = RunConfig(**config)
    if run_config.threads < 1:
        raise ConfigError("--threads must be >= 1")
    if run_config.model not in ("nb", "lr"):
        raise ConfigError(f"model must be 'nb' or 'lr', got {run_config.model!r}")
    if run_config.emoji_mode not in ("ml", "bert"):
        raise ConfigError(f"emoji-mode must be 'ml' or 'bert', got {run_config.emoji_mode!r}")
    return run_config


def _preprocess_config(config: RunConfig) -> textprep.PreprocessConfig:
    try:
        steps = frozenset(textprep.Step(name) for name in config.steps)
    except ValueError as exc:
        raise ConfigError(f"unknown preprocessing step: {exc}") from exc
    return textprep.PreprocessConfig(
        steps=steps, emoji_mode=textprep.EmojiMode(config.emoji_mode)
    )


def _cycle_config(config: RunConfig) -> models.CycleConfig:
    stoplist = None
    if config.stoplist:
        stoplist = textprep.load_stoplist(_require_file(config.stoplist, "stop-list file"))
    return models.CycleConfig(
        model=config.model,  # type: ignore[arg-type]
        preprocess=_preprocess_config(config),
        alpha=config.alpha,
        learning_rate=config.learning_rate,
        epochs=config.epochs,
        l2=config.l2,
        ratios=config.ratios,
        variant_name=config.variant_name,
        stoplist=stoplist,
    )


def _require_file(path: str | Path, what: str) -> Path:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"{what} not found: {path}")
    return path


def _read_text(path: str | Path, what: str) -> str:
    return _require_file(path, what).read_text(encoding="utf-8")


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _write_atomic(path: Path, content: str) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(content, encoding="utf-8")
    os.replace(tmp, path)


# ---------------------------------------------------------------------------
# Subcommands


def cmd_ingest(args: argparse.Namespace) -> int:
    all_comments: list[corpus.Comment] = []
    provenance: dict[str, str] = {}
    for tree_path in args.trees:
        data = _read_text(tree_path, "comment-tree file")
        tree = corpus.parse_comment_tree(data)
        for comment in corpus.flatten(tree):
            all_comments.append(comment)
            provenance[comment.id] = tree.post_id
    unique = corpus.dedupe(all_comments)
    labels = corpus.load_labels(_require_file(args.labels, "label file")) if args.labels else {}
    known = {c.id for c in unique}
    labels = {cid: lab for cid, lab in labels.items() if cid in known or args.strict_labels}
    dataset, unlabeled = corpus.apply_labels(unique, labels, provenance)
    corpus.save_dataset(dataset, args.out)
    print(
        f"{len(all_comments)} total, {len(unique)} unique, "
        f"{len(dataset)} labeled ({dataset.n_offensive} offensive / "
        f"{dataset.n_not_offensive} not offensive), {unlabeled} unlabeled excluded"
    )
    if args.lexicon:
        lexicon = corpus.load_lexicon(_require_file(args.lexicon, "lexicon file"))
        hits = corpus.lexicon_flag(unique, lexicon)
        hits_path = Path(args.out).with_name(Path(args.out).stem + "_lexicon_hits.json")
        hits_obj = {
            cid: [[term, category.value] for term, category in found]
            for cid, found in hits.items()
        }
        _write_atomic(hits_path, json.dumps(hits_obj, indent=2, ensure_ascii=False))
        print(f"{len(hits)} comments matched the lexicon -> {hits_path}")
    return 0


def cmd_balance(args: argparse.Namespace) -> int:
    dataset = corpus.load_dataset(_require_file(args.dataset, "dataset file"))
    balanced = corpus.balance(dataset, seed=args.seed)
    corpus.save_dataset(balanced, args.out)
    print(
        f"balanced {dataset.n_offensive}/{dataset.n_not_offensive} -> "
        f"{balanced.n_offensive}/{balanced.n_not_offensive} "
        f"({len(balanced)} total), seed={args.seed}"
    )
    return 0


_ANALYZE_BASE_STEPS = frozenset(
    {
        textprep.Step.LOWERCASING,
        textprep.Step.EMOJI_ENCODING,
        textprep.Step.PUNCTUATION_REMOVAL,
        textprep.Step.LEMMATIZATION,
    }
)

_NGRAM_NAMES = {1: "uni", 2: "bi", 3: "tri"}


def cmd_analyze(args: argparse.Namespace) -> int:
    dataset = corpus.load_dataset(_require_file(args.dataset, "dataset file"))
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    stoplist = (
        textprep.load_stoplist(_require_file(args.stoplist, "stop-list file"))
        if args.stoplist
        else None
    )
    offensive = [
        (cid, text) for cid, text, label in dataset.entries if label is corpus.Label.OFFENSIVE
    ]
    variants = {
        "before": textprep.PreprocessConfig(steps=_ANALYZE_BASE_STEPS),
        "after": textprep.PreprocessConfig(
            steps=_ANALYZE_BASE_STEPS | {textprep.Step.STOPWORD_REMOVAL}
        ),
    }
    for suffix, preprocess in variants.items():
        streams = [
            textprep.run_pipeline(text, preprocess, stoplist=stoplist, source_id=cid)
            for cid, text in offensive
        ]
        for n, name in _NGRAM_NAMES.items():
            table = analytics.ngram_counts(
                streams, n, args.top_k, stopwords_removed=(suffix == "after")
            )
            analytics.export_chart_data(table, out_dir / f"ngrams_{name}_{suffix}.csv")
    analytics.export_chart_data(
        analytics.length_histogram(dataset.texts(), args.bucket_width),
        out_dir / "length_overall.csv",
    )
    analytics.export_chart_data(
        analytics.length_histogram([t for _, t in offensive], args.bucket_width),
        out_dir / "length_offensive.csv",
    )
    # emoticons are converted to their emoji counterparts before the
    # emoji usage charts are aggregated
    normalized = corpus.LabeledDataset(
        entries=tuple(
            (cid, textprep.normalize_emoticons(text), label)
            for cid, text, label in dataset.entries
        ),
        provenance=dataset.provenance,
    )
    analytics.export_chart_data(
        analytics.emoji_stats(normalized, cap=args.cap), out_dir / "emoji_stats.csv"
    )
    print(f"wrote {6 + 2 + 1} chart files to {out_dir}")
    return 0


def cmd_train(args: argparse.Namespace) -> int:
    config = build_run_config(args)
    if not config.dataset:
        raise ConfigError("a dataset file is required (--dataset or config)")
    dataset = corpus.load_dataset(_require_file(config.dataset, "dataset file"))
    run_dir = Path(config.out) / config.hash()
    run_dir.mkdir(parents=True, exist_ok=True)
    started = time.perf_counter()
    trained = models.run_cycles(
        dataset, _cycle_config(config), n_cycles=config.n_cycles, base_seed=config.seed
    )
    train_seconds = time.perf_counter() - started
    report = trained.report
    for i, cycle in enumerate(report.cycles):
        marker = " *" if i == report.best_cycle_index else ""
        print(
            f"cycle {i}: seed={cycle.seed} val_f1={cycle.validation.f1:.4f} "
            f"val_acc={cycle.validation.accuracy:.4f}{marker}"
        )
    best = report.best
    print(
        f"best cycle {report.best_cycle_index}: test_f1={best.test.f1:.4f} "
        f"test_acc={best.test.accuracy:.4f}"
    )
    vectorize.save_tfidf(trained.tfidf, run_dir / "tfidf.json")
    models.save_model(trained.model, run_dir / "model.json")
    report_obj = {
        "variant_name": report.variant_name,
        "best_cycle_index": report.best_cycle_index,
        "cycles": [
            {
                "seed": c.seed,
                "validation": evaluate.report_to_dict(c.validation),
                "test": evaluate.report_to_dict(c.test),
            }
            for c in report.cycles
        ],
    }
    _write_atomic(run_dir / "train_report.json", json.dumps(report_obj, indent=2))
    artifact_names = ("tfidf.json", "model.json", "train_report.json")
    manifest = {
        "config": asdict(config),
        "version": __version__,
        "checksums": {name: _sha256(run_dir / name) for name in artifact_names},
        "timings": {"train_seconds": train_seconds},
    }
    _write_atomic(run_dir / "manifest.json", json.dumps(manifest, indent=2))
    print(f"artifacts -> {run_dir}")
    return 0


def _load_run(run_dir: Path) -> tuple[RunConfig, vectorize.TfidfModel, models.NBModel | models.LRModel, dict]:
    manifest_path = _require_file(run_dir / "manifest.json", "run manifest")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    config_dict = dict(manifest["config"])
    config_dict["steps"] = tuple(config_dict.get("steps", DEFAULT_STEPS))
    config_dict["ratios"] = tuple(config_dict.get("ratios", (0.8, 0.1, 0.1)))
    config = RunConfig(**config_dict)
    tfidf = vectorize.load_tfidf(_require_file(run_dir / "tfidf.json", "TF-IDF model"))
    model = models.load_model(_require_file(run_dir / "model.json", "model file"))
    return config, tfidf, model, manifest


def cmd_eval(args: argparse.Namespace) -> int:
    run_dir = Path(args.run)
    config, tfidf, model, _manifest = _load_run(run_dir)
    dataset = corpus.load_dataset(_require_file(args.dataset, "dataset file"))
    cycle_config = _cycle_config(config)
    if args.full:
        subset = dataset
        scope = "full dataset"
    else:
        train_report = json.loads(
            _require_file(run_dir / "train_report.json", "train report").read_text(
                encoding="utf-8"
            )
        )
        best_seed = train_report["cycles"][train_report["best_cycle_index"]]["seed"]
        _, _, subset = corpus.split(dataset, config.ratios, best_seed)
        scope = f"test fold of best cycle (seed={best_seed})"
    name = config.variant_name or models.default_variant_name(cycle_config)
    report = models.evaluate_on(tfidf, model, subset, cycle_config, variant_name=name)
    out_dir = Path(args.out) if args.out else run_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    _write_atomic(out_dir / "eval_report.json", evaluate.render_json([report]))
    _write_atomic(out_dir / "eval_report.txt", evaluate.render_text_table([report]))
    print(f"evaluated {len(subset)} comments ({scope})")
    print(evaluate.render_text_table([report]), end="")
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    variants: list[evaluate.MetricsReport] = []
    for input_path in args.inputs:
        variants.extend(
            evaluate.parse_report_json(_read_text(input_path, "report file"))
        )
    if args.reference:
        variants.extend(evaluate.load_reference_scores())
    if not variants:
        raise ConfigError("nothing to report: give --inputs and/or --reference")
    base = Path(args.out)
    base.parent.mkdir(parents=True, exist_ok=True)
    _write_atomic(base.with_suffix(".json"), evaluate.render_json(variants))
    _write_atomic(base.with_suffix(".txt"), evaluate.render_text_table(variants))
    print(evaluate.render_text_table(variants), end="")
    return 0


# ---------------------------------------------------------------------------
# Argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modkit",
        description="Corpus analytics and offensive-content classification toolkit.",
    )
    parser.add_argument("--version", action="version", version=f"modkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="parse comment trees into a labeled dataset")
    p_ingest.add_argument("trees", nargs="+", help="comment-tree JSON files")
    p_ingest.add_argument("--labels", default=None, help="JSON file: comment_id -> 0|1")
    p_ingest.add_argument("--lexicon", default=None, help="term lexicon TSV for flagging")
    p_ingest.add_argument("--out", required=True, help="dataset file to write")
    p_ingest.add_argument(
        "--strict-labels",
        action="store_true",
        help="fail if a label refers to an id missing from the trees",
    )
    p_ingest.set_defaults(func=cmd_ingest)

    p_balance = sub.add_parser("balance", help="undersample the majority class")
    p_balance.add_argument("--dataset", required=True)
    p_balance.add_argument("--seed", type=int, default=0)
    p_balance.add_argument("--out", required=True)
    p_balance.set_defaults(func=cmd_balance)

    p_analyze = sub.add_parser("analyze", help="write chart data files for a dataset")
    p_analyze.add_argument("--dataset", required=True)
    p_analyze.add_argument("--out", required=True, help="directory for CSV files")
    p_analyze.add_argument("--top-k", type=int, default=20)
    p_analyze.add_argument("--bucket-width", type=int, default=10)
    p_analyze.add_argument("--cap", type=int, default=None, help="per-comment emoji count cap")
    p_analyze.add_argument("--stoplist", default=None, help="stop-list file override")
    p_analyze.set_defaults(func=cmd_analyze)

    p_train = sub.add_parser("train", help="run training cycles and persist the best model")
    p_train.add_argument("--config", default=None, help="JSON config file")
    p_train.add_argument("--set", action="append", metavar="KEY=VALUE", help="config override")
    p_train.add_argument("--dataset", default=None)
    p_train.add_argument("--out", default=None, help="parent directory for run dirs")
    p_train.add_argument("--model", choices=("nb", "lr"), default=None)
    p_train.add_argument("--seed", type=int, default=None)
    p_train.add_argument("--cycles", dest="n_cycles", type=int, default=None)
    p_train.add_argument("--emoji-mode", dest="emoji_mode", choices=("ml", "bert"), default=None)
    p_train.add_argument("--stoplist", default=None)
    p_train.add_argument("--lexicon", default=None)
    p_train.add_argument("--vocab", default=None)
    p_train.add_argument("--threads", type=int, default=None, help="worker cap (stages run sequentially today)")
    p_train.add_argument("--cap", type=int, default=None)
    p_train.set_defaults(func=cmd_train)

    p_eval = sub.add_parser("eval", help="evaluate a trained run on a dataset")
    p_eval.add_argument("--run", required=True, help="run directory written by train")
    p_eval.add_argument("--dataset", required=True)
    p_eval.add_argument(
        "--full",
        action="store_true",
        help="evaluate the whole dataset instead of the best cycle's test fold",
    )
    p_eval.add_argument("--out", default=None, help="directory for report files (default: run dir)")
    p_eval.set_defaults(func=cmd_eval)

    p_report = sub.add_parser("report", help="merge evaluation reports into one table")
    p_report.add_argument("--inputs", nargs="*", default=[], help="eval/report JSON files")
    p_report.add_argument(
        "--reference",
        action="store_true",
        help="append the bundled reference score rows",
    )
    p_report.add_argument("--out", required=True, help="output base path (.json/.txt added)")
    p_report.set_defaults(func=cmd_report)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ModkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
