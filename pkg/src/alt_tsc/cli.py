"""Command line driver.

    alt-tsc list-presets
    alt-tsc transform --preset coffee --out feats/ [--cache-dir cache/]
    alt-tsc eval --features feats/ --out report.json
    alt-tsc run --preset gunpoint4 --seed 3 --out report.json

Errors are reported on stderr as one JSON object with a ``category`` field;
the exit status is 0 only when the requested output was written.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import pipeline
from .classify import FitError
from .dataset import ParseError, SplitError
from .linlaw import EigenError
from .pipeline import RunConfig
from .shapelet_bank import ConfigError

EXIT_CODES = {"config": 2, "data": 3, "compute": 4, "io": 5, "internal": 1}


class CliError(Exception):
    def __init__(self, category: str, message: str):
        super().__init__(message)
        self.category = category


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--preset", help="built-in dataset preset (see list-presets)")
    p.add_argument("--config", help="config file with a [run] section; flags override it")
    p.add_argument("--data-dir", help="root for relative dataset paths (default: $ALT_TSC_DATA or ./data)")
    p.add_argument("--train", help="training .ts/.csv file")
    p.add_argument("--test", help="test .ts/.csv file")
    p.add_argument("--seed", type=int)
    p.add_argument("--learn-ratio", type=float)
    p.add_argument("--triplets", help='e.g. "(3,2,1),(99,50,1)"')
    p.add_argument("--methods", help='comma separated, e.g. "mean-mean,p5-m4"')
    p.add_argument("--classifier", choices=("knn", "linear", "all"))
    p.add_argument("--folds", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--cache-dir")
    p.add_argument("--znorm", action="store_true", default=None)
    p.add_argument("--out")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alt-tsc", description="Law-based shapelet features for time series classification")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list-presets", help="list built-in dataset presets")
    p = sub.add_parser("transform", help="build shapelet banks and write feature CSVs")
    _add_common(p)
    p = sub.add_parser("run", help="transform, tune and test; write a JSON report")
    _add_common(p)
    p.add_argument("--list-presets", action="store_true", help="list presets and exit")
    p = sub.add_parser("eval", help="tune and test on feature CSVs written by transform")
    p.add_argument("--features", help="directory holding train_features.csv and test_features.csv")
    p.add_argument("--train-features")
    p.add_argument("--test-features")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--classifier", choices=("knn", "linear", "all"), default="all")
    p.add_argument("--folds", type=int, default=5)
    p.add_argument("--out")
    return parser


def resolve_config(args) -> RunConfig:
    base = Path(args.data_dir) if args.data_dir else pipeline.data_dir()
    if args.preset and args.config:
        raise CliError("config", "give either --preset or --config, not both")
    if args.preset:
        cfg, _ = pipeline.load_preset(args.preset, base)
    elif args.config:
        path = Path(args.config)
        if not path.exists():
            raise CliError("io", f"config file not found: {path}")
        cfg, _ = pipeline.config_from_ini(path.read_text(), base, name=path.stem)
    else:
        cfg = RunConfig(name="custom")
    if args.train:
        cfg.train = args.train
    if args.test:
        cfg.test = args.test
    if args.triplets:
        cfg.triplets = pipeline.parse_triplets(args.triplets)
    if args.methods:
        cfg.methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for attr in ("seed", "learn_ratio", "classifier", "folds", "jobs", "cache_dir", "out", "znorm"):
        val = getattr(args, attr)
        if val is not None:
            setattr(cfg, attr, val)
    if not cfg.train or not cfg.test:
        raise CliError("config", "no dataset given: use --preset, --config or --train/--test")
    return cfg


def _set_jobs(jobs: int) -> None:
    import numba

    numba.set_num_threads(max(1, min(jobs, numba.config.NUMBA_NUM_THREADS)))


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(text)


def cmd_list_presets() -> int:
    for name in pipeline.preset_names():
        cfg, extra = pipeline.load_preset(name)
        ds = extra.get("dataset", {})
        tag = "  [long-running]" if cfg.long_running else ""
        trips = " ".join(f"({r},{l},{k})" for r, l, k in cfg.triplets)
        print(f"{name:13s} {Path(cfg.train).parent.name:26s} m={ds.get('channels')} c={ds.get('classes')} "
              f"h={ds.get('length')} ratio={cfg.learn_ratio} methods={','.join(cfg.methods)} {trips}{tag}")
    return 0


def cmd_transform(cfg: RunConfig) -> int:
    out = Path(cfg.out or "features")
    _set_jobs(cfg.jobs)
    res = pipeline.transform(cfg)
    out.mkdir(parents=True, exist_ok=True)
    pipeline.write_features(out / "train_features.csv", res.names, res.train_X, res.train_y, res.classes)
    pipeline.write_features(out / "test_features.csv", res.names, res.test_X, res.test_y, res.classes)
    meta = {"dataset": cfg.name, "seed": cfg.seed, "classes": list(res.classes),
            "learn_indices": res.learn_indices, "bank_hashes": res.bank_hashes,
            "n_features": len(res.names), "cache_hits": res.cache_hits,
            "transform_time": res.transform_time, "run_config": cfg.to_dict()}
    (out / "transform_report.json").write_text(pipeline.dumps_report(meta))
    print(f"wrote {len(res.names)} features for {len(res.train_y)} train / {len(res.test_y)} test rows "
          f"to {out} in {res.transform_time:.2f}s", file=sys.stderr)
    return 0


def cmd_eval(args) -> int:
    if args.features:
        tr_path = Path(args.features) / "train_features.csv"
        te_path = Path(args.features) / "test_features.csv"
    elif args.train_features and args.test_features:
        tr_path, te_path = Path(args.train_features), Path(args.test_features)
    else:
        raise CliError("config", "give --features DIR or both --train-features and --test-features")
    for p in (tr_path, te_path):
        if not p.exists():
            raise CliError("io", f"feature file not found: {p}")
    names, Xtr, ltr = pipeline.read_features(tr_path)
    names_te, Xte, lte = pipeline.read_features(te_path)
    if names != names_te:
        raise CliError("data", "train and test feature tables have different columns")
    from .dataset import sort_labels

    classes = sort_labels(ltr + lte)
    lookup = {c: i for i, c in enumerate(classes)}
    cfg = RunConfig(name=tr_path.parent.name, seed=args.seed, classifier=args.classifier, folds=args.folds)
    result = pipeline.tune_and_test(Xtr, np.array([lookup[v] for v in ltr]), Xte,
                                    np.array([lookup[v] for v in lte]), len(classes), cfg)
    report = {"dataset": cfg.name, "seed": cfg.seed, "classes": classes, "n_features": len(names),
              "train_features": str(tr_path), "test_features": str(te_path), **result}
    _write(args.out, pipeline.dumps_report(report))
    return 0


def cmd_run(cfg: RunConfig) -> int:
    _set_jobs(cfg.jobs)
    report = pipeline.run(cfg)
    _write(cfg.out, pipeline.dumps_report(report))
    print(f"{cfg.name} seed={cfg.seed}: validation {report['validation_accuracy']:.3f}, "
          f"test {report['test_accuracy']:.3f} ({report['best_config']})", file=sys.stderr)
    return 0


def _categorize(err: Exception) -> str:
    if isinstance(err, CliError):
        return err.category
    if isinstance(err, (ConfigError, SplitError)):
        return "config"
    if isinstance(err, ParseError):
        return "data"
    if isinstance(err, (EigenError, FitError)):
        return "compute"
    if isinstance(err, (FileNotFoundError, PermissionError, IsADirectoryError)):
        return "io"
    if isinstance(err, ValueError):
        return "data"
    return "internal"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list-presets" or getattr(args, "list_presets", False):
            return cmd_list_presets()
        if args.command == "eval":
            return cmd_eval(args)
        cfg = resolve_config(args)
        if args.command == "transform":
            return cmd_transform(cfg)
        return cmd_run(cfg)
    except Exception as err:  # noqa: BLE001 - every failure maps to an exit category
        category = _categorize(err)
        print(json.dumps({"error": category, "type": type(err).__name__, "message": str(err)}), file=sys.stderr)
        return EXIT_CODES[category]


if __name__ == "__main__":
    sys.exit(main())
