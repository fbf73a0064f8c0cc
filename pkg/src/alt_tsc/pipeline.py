"""Run configuration, presets and end-to-end orchestration."""

from __future__ import annotations

import configparser
import csv
import io
import json
import os
import re
import time
from dataclasses import dataclass, field, asdict, replace
from importlib import resources
from pathlib import Path

import numpy as np

from .classify import cross_validate, default_grid, evaluate, fit_model, ClassifierConfig
from .dataset import SplitSpec, TimeSeriesDataset, load_ts, parse_csv, CsvSchema, export_schema, stratified_split
from .features import ExtractionMethod, feature_names, featurize_dataset
from .shapelet_bank import BankCache, ConfigError, build_bank, validate_config

TIMING_KEYS = ("transform_time", "tuning_time", "classification_time")
DEFAULT_DATA_DIR = Path(__file__).resolve().parents[2] / "data"


def data_dir() -> Path:
    return Path(os.environ.get("ALT_TSC_DATA", DEFAULT_DATA_DIR))


@dataclass
class RunConfig:
    name: str = ""
    train: str = ""
    test: str = ""
    learn_ratio: float = 0.25
    seed: int = 0
    triplets: list[tuple[int, int, int]] = field(default_factory=list)
    methods: list[str] = field(default_factory=lambda: ["mean-mean"])
    classifier: str = "all"
    folds: int = 5
    cache_dir: str | None = None
    out: str | None = None
    jobs: int = 1
    znorm: bool = False
    long_running: bool = False

    def to_dict(self) -> dict:
        d = asdict(self)
        d["triplets"] = [list(t) for t in self.triplets]
        return d

    def extraction_methods(self) -> list[ExtractionMethod]:
        return [ExtractionMethod.parse(m) for m in self.methods]

    def classifier_kinds(self) -> tuple[str, ...]:
        if self.classifier == "all":
            return ("knn", "linear")
        if self.classifier not in ("knn", "linear"):
            raise ConfigError(f"classifier must be knn, linear or all, got {self.classifier!r}")
        return (self.classifier,)


def parse_triplets(text: str) -> list[tuple[int, int, int]]:
    found = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)", text)
    if not found or re.sub(r"\(\s*\d+\s*,\s*\d+\s*,\s*\d+\s*\)|[\s,]", "", text):
        raise ConfigError(f"cannot read (r,l,k) triplets from {text!r}")
    return [tuple(int(v) for v in t) for t in found]


def _split_list(text: str) -> list[str]:
    return [p.strip() for p in text.split(",") if p.strip()]


def _resolve(path: str, base: Path) -> str:
    p = Path(path)
    return str(p if p.is_absolute() else base / p)


def config_from_ini(text: str, base: Path | None = None, name: str = "") -> tuple[RunConfig, dict]:
    """Read the ``[run]`` section of a config file; other sections are returned raw."""
    parser = configparser.ConfigParser()
    parser.read_string(text)
    if "run" not in parser:
        raise ConfigError("config file has no [run] section")
    sec = parser["run"]
    base = base if base is not None else data_dir()
    cfg = RunConfig(name=sec.get("name", name or sec.get("dataset", "")))
    known = {"name", "dataset", "train", "test", "learn_ratio", "seed", "triplets", "methods",
             "classifier", "folds", "cache_dir", "out", "jobs", "znorm", "long_running"}
    unknown = set(sec) - known
    if unknown:
        raise ConfigError(f"unknown keys in [run]: {sorted(unknown)}")
    if "train" in sec:
        cfg.train = _resolve(sec["train"], base)
    if "test" in sec:
        cfg.test = _resolve(sec["test"], base)
    try:
        if "learn_ratio" in sec:
            cfg.learn_ratio = sec.getfloat("learn_ratio")
        if "seed" in sec:
            cfg.seed = sec.getint("seed")
        if "folds" in sec:
            cfg.folds = sec.getint("folds")
        if "jobs" in sec:
            cfg.jobs = sec.getint("jobs")
        if "znorm" in sec:
            cfg.znorm = sec.getboolean("znorm")
        if "long_running" in sec:
            cfg.long_running = sec.getboolean("long_running")
    except ValueError as err:
        raise ConfigError(str(err))
    if "triplets" in sec:
        cfg.triplets = parse_triplets(sec["triplets"])
    if "methods" in sec:
        cfg.methods = _split_list(sec["methods"])
    for key in ("classifier", "cache_dir", "out"):
        if key in sec:
            setattr(cfg, key, sec[key])
    extra = {s: dict(parser[s]) for s in parser.sections() if s != "run"}
    return cfg, extra


def preset_names() -> list[str]:
    files = resources.files("alt_tsc").joinpath("presets").iterdir()
    return sorted(f.name[:-4] for f in files if f.name.endswith(".cfg"))


def preset_text(name: str) -> str:
    key = name.lower()
    if key not in preset_names():
        raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(preset_names())}")
    return resources.files("alt_tsc").joinpath("presets", f"{key}.cfg").read_text()


def load_preset(name: str, base: Path | None = None) -> tuple[RunConfig, dict]:
    cfg, extra = config_from_ini(preset_text(name), base, name=name.lower())
    cfg.name = name.lower()
    return cfg, extra


# --- orchestration -----------------------------------------------------------------

def load_dataset(path: str) -> TimeSeriesDataset:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(f"dataset file not found: {p}")
    if p.suffix.lower() == ".csv":
        text = p.read_text()
        if text.startswith("instance,channel,label,"):
            # our own export: channel count is the number of rows sharing instance 0
            rows = list(csv.reader(io.StringIO(text)))[1:]
            m = sum(1 for r in rows if r and r[0] == rows[0][0])
            return parse_csv(text, export_schema(m), name=p.stem)
        return parse_csv(text, CsvSchema(), name=p.stem)
    return load_ts(p)


@dataclass
class TransformResult:
    config: RunConfig
    classes: tuple[str, ...]
    names: list[str]
    train_X: np.ndarray
    train_y: np.ndarray
    test_X: np.ndarray
    test_y: np.ndarray
    learn_indices: list[int]
    bank_hashes: list[str]
    transform_time: float
    cache_hits: int = 0


def transform(cfg: RunConfig) -> TransformResult:
    """Split, build banks on the learning set, featurize training and test sets."""
    train = load_dataset(cfg.train)
    test = load_dataset(cfg.test)
    if test.h != train.h or test.m != train.m:
        raise ConfigError(f"train is {train.m}x{train.h}, test is {test.m}x{test.h}")
    if test.classes != train.classes:
        raise ConfigError("train and test declare different class labels")
    if not cfg.triplets:
        raise ConfigError("no (r,l,k) triplets configured")
    windows = [validate_config(r, l, k, train.h) for r, l, k in cfg.triplets]
    methods = cfg.extraction_methods()
    cfg.classifier_kinds()
    if cfg.znorm:
        train, test = train.znormalized(), test.znormalized()

    t0 = time.perf_counter()
    Lr, Tr, lr_idx, _ = stratified_split(train, SplitSpec(cfg.learn_ratio, cfg.seed))
    cache = BankCache(cfg.cache_dir) if cfg.cache_dir else None
    banks = []
    for win in windows:
        row = []
        for j in range(train.m):
            if cache is not None:
                row.append(cache.get_or_build(Lr, win, j, lr_idx))
            else:
                row.append(build_bank(Lr, win, j, lr_idx))
        banks.append(row)
    F_tr = featurize_dataset(Tr, banks, methods)
    F_te = featurize_dataset(test, banks, methods)
    elapsed = time.perf_counter() - t0
    return TransformResult(
        cfg, train.classes, feature_names(len(windows), train.m, train.c, methods),
        F_tr, np.array(Tr.y), F_te, np.array(test.y), lr_idx,
        [b.digest for row in banks for b in row], elapsed, cache.hits if cache else 0)


def write_features(path: str | Path, names, X, y, classes) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["label"] + list(names))
        for lab, row in zip(y, X):
            w.writerow([classes[lab]] + [repr(float(v)) for v in row])


def read_features(path: str | Path, classes=None):
    """Inverse of :func:`write_features`; returns ``(names, X, labels)``."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0][0] != "label":
        raise ValueError(f"{path}: not a feature table (first column must be 'label')")
    names = rows[0][1:]
    X = np.array([[float(v) for v in r[1:]] for r in rows[1:]], dtype=np.float64).reshape(-1, len(names))
    labels = [r[0] for r in rows[1:]]
    return names, X, labels


def tune_and_test(train_X, train_y, test_X, test_y, n_classes: int, cfg: RunConfig) -> dict:
    grid = default_grid(cfg.classifier_kinds())
    tune = cross_validate(train_X, train_y, grid, folds=cfg.folds, seed=cfg.seed, n_classes=n_classes)
    model = fit_model(tune.best_config, train_X, train_y, n_classes, seed=cfg.seed)
    ev = evaluate(model, test_X, test_y)
    return {
        "best_config": tune.best_config.to_dict(),
        "validation_accuracy": tune.validation_accuracy,
        "fold_accuracies": tune.fold_accuracies,
        "grid_scores": [{"config": c.to_dict(), "accuracy": a} for c, a in tune.scores],
        "test_accuracy": ev["test_accuracy"],
        "n_test": ev["n_test"],
        "n_correct": ev["n_correct"],
        "tuning_time": tune.tuning_time,
        "classification_time": ev["classification_time_seconds"],
    }


def run(cfg: RunConfig) -> dict:
    tr = transform(cfg)
    result = tune_and_test(tr.train_X, tr.train_y, tr.test_X, tr.test_y, len(tr.classes), cfg)
    report = {
        "dataset": cfg.name,
        "seed": cfg.seed,
        "configs": [list(t) for t in cfg.triplets],
        "methods": list(cfg.methods),
        "classes": list(tr.classes),
        "n_features": len(tr.names),
        "learn_indices": tr.learn_indices,
        "n_learn": len(tr.learn_indices),
        "n_train": int(len(tr.train_y)),
        "bank_hashes": tr.bank_hashes,
        "transform_time": tr.transform_time,
        **result,
        "run_config": cfg.to_dict(),
    }
    return report


def strip_timings(report: dict) -> dict:
    return {k: v for k, v in report.items() if k not in TIMING_KEYS}


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"
