#!/usr/bin/env python3
"""Convert a legacy UCR text file (label first, whitespace or tab separated) to .ts.

    python scripts/ucr_txt_to_ts.py Coffee_TRAIN.txt data/Coffee/Coffee_TRAIN.ts --name Coffee

Labels that are whole numbers are written without a decimal point ("1.0" -> "1").
"""

import argparse
import sys

import numpy as np


def label_text(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else repr(float(v))


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("src")
    ap.add_argument("dst")
    ap.add_argument("--name", default="dataset")
    args = ap.parse_args(argv)

    raw = np.loadtxt(args.src, delimiter="," if args.src.endswith(".csv") else None)
    labels = [label_text(v) for v in raw[:, 0]]
    X = raw[:, 1:]
    classes = sorted(set(labels), key=lambda s: float(s))
    with open(args.dst, "w") as fh:
        fh.write(f"@problemName {args.name}\n@timeStamps false\n@missing false\n@univariate true\n"
                 f"@equalLength true\n@seriesLength {X.shape[1]}\n@classLabel true {' '.join(classes)}\n@data\n")
        for row, lab in zip(X, labels):
            fh.write(",".join(repr(float(v)) for v in row) + f":{lab}\n")
    print(f"wrote {len(labels)} series of length {X.shape[1]} to {args.dst}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
