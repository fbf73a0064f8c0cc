"""Window configurations and class-partitioned shapelet matrices."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, asdict
from pathlib import Path

import numpy as np

from .dataset import TimeSeriesDataset
from .linlaw import shapelet_vectors


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class WindowConfig:
    """A validated ``(r, l, k)`` triplet for series of length ``h``.

    ``r`` is the window length, ``l`` the embedding dimension and ``k`` the
    shift between consecutive windows. ``2l - 1`` points are taken from each
    window at stride ``s``.
    """

    r: int
    l: int
    k: int
    h: int

    @property
    def s(self) -> int:
        return (self.r - 1) // (2 * self.l - 2)

    @property
    def q(self) -> int:
        """Windows per series."""
        return (self.h - self.r + 1) // self.k

    @property
    def o(self) -> int:
        """Rows of the instance embedding matrix."""
        return (self.h - self.s * self.l + 1) // self.k

    @property
    def triplet(self) -> tuple[int, int, int]:
        return (self.r, self.l, self.k)

    def __str__(self):
        return f"({self.r},{self.l},{self.k})"


def validate_config(r: int, l: int, k: int, h: int) -> WindowConfig:
    for name, val in (("r", r), ("l", l), ("k", k), ("h", h)):
        if int(val) != val:
            raise ConfigError(f"{name} must be an integer, got {val!r}")
    r, l, k, h = int(r), int(l), int(k), int(h)
    if l < 2:
        raise ConfigError(f"l must be >= 2, got {l}")
    if k < 1:
        raise ConfigError(f"k must be >= 1, got {k}")
    if r > h:
        raise ConfigError(f"window length r={r} exceeds series length h={h}")
    if r < 2 * l - 1:
        raise ConfigError(f"r={r} is shorter than the 2l-1={2 * l - 1} points it must hold")
    if (r - 1) % (2 * l - 2):
        raise ConfigError(f"2l-2={2 * l - 2} does not divide r-1={r - 1}")
    cfg = WindowConfig(r, l, k, h)
    if cfg.q < 1:
        raise ConfigError(f"no complete window fits: floor((h-r+1)/k) = {cfg.q}")
    return cfg


def extract_sequences(series, config: WindowConfig) -> np.ndarray:
    """Subsampled windows of one channel, shape ``(q, 2l - 1)``.

    Row ``w`` is ``series[w*k + t*s]`` for ``t = 0 .. 2l-2``.
    """
    x = np.asarray(series, dtype=np.float64)
    if x.shape != (config.h,):
        raise ConfigError(f"series has shape {x.shape}, config expects length {config.h}")
    idx = (np.arange(config.q) * config.k)[:, None] + (np.arange(2 * config.l - 1) * config.s)[None, :]
    return x[idx]


@dataclass(frozen=True)
class ShapeletMatrix:
    """Shapelet vectors of one channel and config as the columns of ``P``.

    Columns are grouped by class (in ``classes`` order), then by learning
    instance, then by window; ``class_offsets[y]:class_offsets[y+1]`` is the
    block of class ``y``.
    """

    P: np.ndarray
    class_offsets: tuple[int, ...]
    channel: int
    config: WindowConfig
    eigenvalues: np.ndarray
    digest: str = ""

    @property
    def n_columns(self) -> int:
        return self.P.shape[1]

    def partition(self, y: int) -> np.ndarray:
        return self.P[:, self.class_offsets[y]:self.class_offsets[y + 1]]


def bank_key(Lr: TimeSeriesDataset, config: WindowConfig, channel: int, lr_indices=None) -> str:
    hsh = hashlib.sha256()
    hsh.update(Lr.content_hash().encode())
    hsh.update(json.dumps({"config": list(config.triplet) + [config.h], "channel": channel,
                           "lr_indices": list(map(int, lr_indices)) if lr_indices is not None else None}).encode())
    return hsh.hexdigest()


def build_bank(Lr: TimeSeriesDataset, config: WindowConfig, channel: int, lr_indices=None) -> ShapeletMatrix:
    if Lr.h != config.h:
        raise ConfigError(f"learning set has length {Lr.h}, config was validated for {config.h}")
    if not 0 <= channel < Lr.m:
        raise ConfigError(f"channel {channel} out of range for {Lr.m} channels")
    counts = Lr.class_counts()
    missing = [Lr.classes[y] for y in range(Lr.c) if counts[y] == 0]
    if missing:
        raise ConfigError(f"learning set has no instances of class(es) {missing}")

    order = np.argsort(Lr.y, kind="stable")
    seqs = np.concatenate([extract_sequences(Lr.X[i, channel], config) for i in order])
    vecs, lams = shapelet_vectors(seqs, config.l)
    offsets = tuple(int(v) for v in np.concatenate([[0], np.cumsum(counts * config.q)]))
    P = np.ascontiguousarray(vecs.T)
    P.setflags(write=False)
    return ShapeletMatrix(P, offsets, channel, config, lams, bank_key(Lr, config, channel, lr_indices))


class BankCache:
    """Shapelet matrices stored as ``<hash>.npy`` plus a JSON sidecar."""

    def __init__(self, directory: str | Path):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0

    def _paths(self, key):
        return self.dir / f"{key}.npy", self.dir / f"{key}.json"

    def load(self, key: str) -> ShapeletMatrix | None:
        npy, meta_path = self._paths(key)
        if not (npy.exists() and meta_path.exists()):
            return None
        meta = json.loads(meta_path.read_text())
        data = np.load(npy)
        P, lams = data[:-1], data[-1]
        P = np.ascontiguousarray(P)
        P.setflags(write=False)
        cfg = WindowConfig(**meta["config"])
        return ShapeletMatrix(P, tuple(meta["class_offsets"]), meta["channel"], cfg, lams, key)

    def store(self, bank: ShapeletMatrix) -> None:
        npy, meta_path = self._paths(bank.digest)
        np.save(npy, np.vstack([bank.P, bank.eigenvalues[None, :]]))
        meta = {"config": asdict(bank.config), "channel": bank.channel,
                "class_offsets": list(bank.class_offsets), "hash": bank.digest,
                "shape": list(bank.P.shape)}
        meta_path.write_text(json.dumps(meta, indent=1))

    def get_or_build(self, Lr, config, channel, lr_indices=None) -> ShapeletMatrix:
        key = bank_key(Lr, config, channel, lr_indices)
        bank = self.load(key)
        if bank is not None:
            self.hits += 1
            return bank
        self.misses += 1
        bank = build_bank(Lr, config, channel, lr_indices)
        self.store(bank)
        return bank
