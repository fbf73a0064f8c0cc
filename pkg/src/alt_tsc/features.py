"""Turning class responses into fixed-length feature vectors.

Each extraction method is a pair: a reduction of every row of a squared
class partition (mean or a percentile) followed by an aggregate of the
resulting column vector (mean, variance, third or fourth central moment,
excess kurtosis).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .transform import class_response

AGGREGATES = ("mean", "var", "m3", "m4", "kurt")

_AGG_ALIASES = {
    "mean": "mean",
    "var": "var", "variance": "var",
    "m3": "m3", "3rd moment": "m3", "third moment": "m3",
    "m4": "m4", "4th moment": "m4", "fourth moment": "m4",
    "kurt": "kurt", "excess kurtosis": "kurt", "kurtosis": "kurt",
}


@dataclass(frozen=True)
class ExtractionMethod:
    row_reduce: str = "mean"
    percentile: float | None = None
    aggregate: str = "mean"

    def __post_init__(self):
        if self.row_reduce not in ("mean", "percentile"):
            raise ValueError(f"unknown row reduction {self.row_reduce!r}")
        if self.row_reduce == "percentile":
            if self.percentile is None or not 0 < self.percentile < 100:
                raise ValueError(f"percentile must lie in (0, 100), got {self.percentile}")
        if self.aggregate not in AGGREGATES:
            raise ValueError(f"unknown aggregate {self.aggregate!r}")

    @property
    def name(self) -> str:
        rr = "mean" if self.row_reduce == "mean" else f"p{self.percentile:g}"
        return f"{rr}-{self.aggregate}"

    @classmethod
    def parse(cls, text: str) -> "ExtractionMethod":
        """Accepts compact names (``p5-m4``) and long ones (``5th percentile - 4th moment``)."""
        left, sep, right = text.strip().partition("-")
        if not sep:
            raise ValueError(f"method {text!r} must look like '<row>-<aggregate>'")
        left, right = left.strip().lower(), right.strip().lower()
        agg = _AGG_ALIASES.get(right)
        if agg is None:
            raise ValueError(f"unknown aggregate {right!r} in {text!r}")
        if left == "mean":
            return cls("mean", None, agg)
        m = re.fullmatch(r"p(\d+(?:\.\d+)?)|(\d+(?:\.\d+)?)(?:st|nd|rd|th)? percentile", left)
        if not m:
            raise ValueError(f"unknown row reduction {left!r} in {text!r}")
        return cls("percentile", float(m.group(1) or m.group(2)), agg)


def row_reduce(partition: np.ndarray, method: ExtractionMethod) -> np.ndarray:
    part = np.asarray(partition, dtype=np.float64)
    if part.ndim != 2 or part.shape[1] == 0 or part.shape[0] == 0:
        raise ValueError("empty partition")
    if method.row_reduce == "mean":
        return part.mean(axis=1)
    # closest-rank linear interpolation at position p/100 * (w - 1)
    return np.percentile(part, method.percentile, axis=1, method="linear")


def aggregate(values, stat: str) -> float:
    x = np.asarray(values, dtype=np.float64)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("need a non-empty vector")
    if stat == "mean":
        return float(x.mean())
    if stat not in AGGREGATES:
        raise ValueError(f"unknown aggregate {stat!r}")
    if x.size < 2:
        raise ValueError(f"{stat} needs at least two values, got {x.size}")
    d = x - x.mean()
    m2 = float(np.mean(d * d))
    if stat == "var":
        return m2
    if stat == "m3":
        return float(np.mean(d ** 3))
    m4 = float(np.mean(d ** 4))
    if stat == "m4":
        return m4
    if m2 == 0.0:
        return 0.0
    return m4 / (m2 * m2) - 3.0


def feature_names(n_configs: int, m: int, c: int, methods: Sequence[ExtractionMethod]) -> list[str]:
    return [f"g{g}_ch{j}_class{y}_{meth.name}"
            for g in range(n_configs) for j in range(m) for y in range(c) for meth in methods]


def featurize(instance: np.ndarray, banks, methods: Sequence[ExtractionMethod]) -> np.ndarray:
    """Feature vector of one instance (array of shape ``(m, h)``).

    ``banks[g][j]`` is the shapelet matrix for config ``g`` and channel ``j``.
    Layout: config outermost, then channel, class, method.
    """
    X = np.asarray(instance, dtype=np.float64)
    if X.ndim == 1:
        X = X[None, :]
    if not methods:
        raise ValueError("no extraction methods given")
    out = []
    for per_channel in banks:
        if len(per_channel) != X.shape[0]:
            raise ValueError(f"{len(per_channel)} banks for {X.shape[0]} channels")
        for j, bank in enumerate(per_channel):
            for part in class_response(X[j], bank):
                reduced = {}
                for meth in methods:
                    key = (meth.row_reduce, meth.percentile)
                    if key not in reduced:
                        reduced[key] = row_reduce(part, meth)
                    out.append(aggregate(reduced[key], meth.aggregate))
    return np.array(out)


def featurize_dataset(dataset, banks, methods) -> np.ndarray:
    if not len(dataset.X):
        return np.empty((0, len(feature_names(len(banks), dataset.m, dataset.c, methods))))
    return np.vstack([featurize(x, banks, methods) for x in dataset.X])
