#!/usr/bin/env python3
"""Run every preset over a few seeds and compare with the reported accuracies.

    python scripts/run_benchmark.py                     # desk-scale presets, seeds 0-4
    python scripts/run_benchmark.py --long              # also Epilepsy, Epilepsy2, FordA, FordB
    python scripts/run_benchmark.py --presets coffee gunpoint1 --seeds 0 1 --out results/

Presets whose data files are missing are listed and skipped. One JSON report
per (preset, seed) goes to --out, plus summary.tsv.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from alt_tsc import pipeline


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--presets", nargs="*", help="default: all presets")
    ap.add_argument("--seeds", nargs="*", type=int, default=[0, 1, 2, 3, 4])
    ap.add_argument("--long", action="store_true", help="include presets marked long-running")
    ap.add_argument("--data-dir", help="dataset root (default: $ALT_TSC_DATA or ./data)")
    ap.add_argument("--cache-dir", help="shapelet bank cache")
    ap.add_argument("--out", default="results")
    args = ap.parse_args(argv)

    base = Path(args.data_dir) if args.data_dir else pipeline.data_dir()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for name in args.presets or pipeline.preset_names():
        cfg, extra = pipeline.load_preset(name, base)
        if cfg.long_running and not args.long:
            print(f"{name:13s} skipped (long-running; pass --long)")
            continue
        missing = [p for p in (cfg.train, cfg.test) if not Path(p).exists()]
        if missing:
            print(f"{name:13s} skipped (missing {', '.join(missing)})")
            continue
        cfg.cache_dir = args.cache_dir
        reported = extra.get("reported", {})
        for seed in args.seeds:
            cfg.seed = seed
            t0 = time.perf_counter()
            rep = pipeline.run(cfg)
            wall = time.perf_counter() - t0
            (out / f"{name}_seed{seed}.json").write_text(pipeline.dumps_report(rep))
            rows.append((name, seed, rep["validation_accuracy"], rep["test_accuracy"],
                         float(reported.get("test_accuracy", "nan")) / 100, rep["best_config"]["kind"],
                         rep["transform_time"], wall))
            print(f"{name:13s} seed {seed}: val {rep['validation_accuracy']:.3f} test {rep['test_accuracy']:.3f} "
                  f"(reported {reported.get('test_accuracy', '?')}%) {wall:.1f}s", flush=True)

    with open(out / "summary.tsv", "w") as fh:
        fh.write("preset\tseed\tvalidation\ttest\treported_test\tclassifier\ttransform_s\twall_s\n")
        for r in rows:
            fh.write("\t".join(f"{v:.4f}" if isinstance(v, float) else str(v) for v in r) + "\n")
    best = {}
    for r in rows:
        best[r[0]] = max(best.get(r[0], 0.0), r[3])
    print(json.dumps({"best_test_accuracy": best}, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
