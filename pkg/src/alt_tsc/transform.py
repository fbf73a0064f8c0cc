"""Projecting a whole instance channel onto a shapelet matrix."""

from __future__ import annotations

import numpy as np

from .shapelet_bank import ConfigError, WindowConfig


def embed_instance(series, config: WindowConfig) -> np.ndarray:
    """The ``o x l`` embedding matrix: ``A[w, t] = series[w*k + t*s]``.

    ``o = floor((h - s*l + 1) / k)`` is used as is, even though for ``s > 1``
    a few more rows would fit inside the series.
    """
    x = np.asarray(series, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("expected a single channel")
    h = x.shape[0]
    s, l, k = config.s, config.l, config.k
    o = (h - s * l + 1) // k
    if o < 1:
        raise ConfigError(f"h={h} < s*l={s * l}: instance too short for embedding (o={o})")
    idx = (np.arange(o) * k)[:, None] + (np.arange(l) * s)[None, :]
    return x[idx]


def apply_bank(A: np.ndarray, P: np.ndarray) -> np.ndarray:
    if A.ndim != 2 or P.ndim != 2 or A.shape[1] != P.shape[0]:
        raise ValueError(f"cannot multiply {A.shape} by {P.shape}")
    return A @ P


def square_partition(O: np.ndarray, class_offsets) -> list[np.ndarray]:
    offsets = list(class_offsets)
    if offsets[0] != 0 or offsets[-1] != O.shape[1] or any(b < a for a, b in zip(offsets, offsets[1:])):
        raise ValueError(f"offsets {offsets} do not partition {O.shape[1]} columns")
    sq = np.square(O)
    return [sq[:, a:b] for a, b in zip(offsets, offsets[1:])]


def class_response(series, bank) -> list[np.ndarray]:
    A = embed_instance(series, bank.config)
    return square_partition(apply_bank(A, bank.P), bank.class_offsets)
