"""Classifiers on transformed features: KNN and a linear hinge-loss model.

Hyperparameters are picked by exhaustive grid search with stratified
k-fold cross-validation. Features are z-standardised with statistics of
the rows a model is fitted on.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from numba import njit

from .rng import SplitMix64

METRICS = ("euclidean", "cityblock")
K_GRID = (1, 3, 5, 7, 11, 15, 21)
LAMBDA_GRID = tuple(float(v) for v in np.logspace(-4, 2, 7))
DEFAULT_EPOCHS = 50


class FitError(ValueError):
    pass


@dataclass
class Standardizer:
    mean: np.ndarray
    scale: np.ndarray

    @classmethod
    def fit(cls, X) -> "Standardizer":
        X = np.asarray(X, dtype=np.float64)
        sd = X.std(axis=0)
        sd[sd == 0] = 1.0
        return cls(X.mean(axis=0), sd)

    def transform(self, X) -> np.ndarray:
        return (np.asarray(X, dtype=np.float64) - self.mean) / self.scale


# --- KNN --------------------------------------------------------------------------

def pairwise_distances(A, B, metric: str) -> np.ndarray:
    A = np.asarray(A, dtype=np.float64)
    B = np.asarray(B, dtype=np.float64)
    if metric == "euclidean":
        return np.sqrt(np.square(A[:, None, :] - B[None, :, :]).sum(axis=2))
    if metric == "cityblock":
        return np.abs(A[:, None, :] - B[None, :, :]).sum(axis=2)
    raise ValueError(f"unknown metric {metric!r}")


def knn_predict(train_X, train_y, query_X, K: int, metric: str = "euclidean",
                n_classes: int | None = None) -> np.ndarray:
    """Majority vote of the K nearest training rows.

    Rows tied with the K-th nearest distance all vote. A tied vote goes to
    the class with the smaller summed neighbour distance, then to the lower
    class index.
    """
    train_y = np.asarray(train_y, dtype=np.int64)
    if len(train_y) == 0:
        raise FitError("empty training set")
    if not 1 <= K <= len(train_y):
        raise ValueError(f"K={K} must lie in [1, {len(train_y)}]")
    c = n_classes if n_classes is not None else int(train_y.max()) + 1
    D = pairwise_distances(query_X, train_X, metric)
    out = np.empty(D.shape[0], dtype=np.int64)
    for i, row in enumerate(D):
        kth = np.partition(row, K - 1)[K - 1]
        nb = row <= kth
        votes = np.bincount(train_y[nb], minlength=c)
        dist = np.bincount(train_y[nb], weights=row[nb], minlength=c)
        cands = np.flatnonzero(votes == votes.max())
        best = cands[np.argmin(dist[cands])]  # argmin returns the first, i.e. lowest class
        out[i] = best
    return out


# --- linear margin classifier --------------------------------------------------------

@njit(cache=True)
def _pegasos(X, Ys, lam, perms, avg_from):
    # One-vs-rest hinge SGD. Ys[i, y] is +1 for class y else -1.
    n, d = X.shape
    c = Ys.shape[1]
    W = np.zeros((c, d))
    b = np.zeros(c)
    Wa = np.zeros((c, d))
    ba = np.zeros(c)
    n_avg = 0
    radius = 1.0 / np.sqrt(lam)
    epochs = perms.shape[0]
    hist = np.empty(epochs)
    t = 0
    for e in range(epochs):
        We = np.zeros((c, d))
        be = np.zeros(c)
        for pos in range(n):
            i = perms[e, pos]
            t += 1
            eta = 1.0 / (lam * t)
            eta_b = 1.0 / np.sqrt(t)
            for y in range(c):
                score = b[y]
                for f in range(d):
                    score += W[y, f] * X[i, f]
                shrink = 1.0 - eta * lam
                for f in range(d):
                    W[y, f] *= shrink
                if Ys[i, y] * score < 1.0:
                    for f in range(d):
                        W[y, f] += eta * Ys[i, y] * X[i, f]
                    b[y] += eta_b * Ys[i, y]
                nrm = 0.0
                for f in range(d):
                    nrm += W[y, f] * W[y, f]
                nrm = np.sqrt(nrm)
                if nrm > radius:
                    for f in range(d):
                        W[y, f] *= radius / nrm
            We += W
            be += b
            if t > avg_from:
                Wa += W
                ba += b
                n_avg += 1
        We /= n
        be /= n
        obj = 0.0
        for y in range(c):
            reg = 0.0
            for f in range(d):
                reg += We[y, f] * We[y, f]
            loss = 0.0
            for i in range(n):
                s = be[y]
                for f in range(d):
                    s += We[y, f] * X[i, f]
                loss += max(0.0, 1.0 - Ys[i, y] * s)
            obj += 0.5 * lam * reg + loss / n
        hist[e] = obj / c
    return Wa / n_avg, ba / n_avg, hist


@dataclass
class LinearMarginModel:
    W: np.ndarray
    b: np.ndarray
    history: np.ndarray

    def decision_function(self, X) -> np.ndarray:
        return np.asarray(X, dtype=np.float64) @ self.W.T + self.b

    def predict(self, X) -> np.ndarray:
        return np.argmax(self.decision_function(X), axis=1)


def linear_margin_fit(X, y, lam: float, epochs: int = DEFAULT_EPOCHS, seed: int = 0,
                      n_classes: int | None = None) -> LinearMarginModel:
    """One-vs-rest linear SVM trained by projected stochastic subgradient steps.

    Step size ``1/(lam t)`` on the weights, ``1/sqrt(t)`` on the unregularised
    bias; the returned weights average the iterates of the second half of
    training. ``X`` should already be standardised.
    """
    X = np.ascontiguousarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if lam <= 0:
        raise ValueError("regularisation must be positive")
    if len(y) == 0:
        raise FitError("empty training set")
    c = n_classes if n_classes is not None else int(y.max()) + 1
    if len(np.unique(y)) < 2:
        raise FitError("training set contains a single class")
    Ys = np.where(y[:, None] == np.arange(c)[None, :], 1.0, -1.0)
    rng = SplitMix64(seed)
    perms = np.array([rng.permutation(len(y)) for _ in range(epochs)], dtype=np.int64)
    W, b, hist = _pegasos(X, Ys, float(lam), perms, (epochs * len(y)) // 2)
    return LinearMarginModel(W, b, hist)


# --- configs, fitting, tuning -------------------------------------------------------------

@dataclass(frozen=True)
class ClassifierConfig:
    kind: str
    K: int | None = None
    metric: str | None = None
    lam: float | None = None
    epochs: int = DEFAULT_EPOCHS

    def label(self) -> str:
        if self.kind == "knn":
            return f"knn(K={self.K},{self.metric})"
        return f"linear(lambda={self.lam:g})"

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.kind == "knn":
            d.update(K=self.K, metric=self.metric)
        else:
            d.update(lam=self.lam, epochs=self.epochs)
        return d


def default_grid(kinds: Sequence[str] = ("knn", "linear")) -> list[ClassifierConfig]:
    """Grid in tie-break order: KNN by increasing K, then linear by decreasing lambda."""
    grid = []
    if "knn" in kinds:
        grid += [ClassifierConfig("knn", K=K, metric=m) for K in K_GRID for m in METRICS]
    if "linear" in kinds:
        grid += [ClassifierConfig("linear", lam=lam) for lam in sorted(LAMBDA_GRID, reverse=True)]
    if not grid:
        raise ValueError(f"no classifier kinds in {kinds!r}")
    return grid


@dataclass
class FittedModel:
    config: ClassifierConfig
    scaler: Standardizer
    n_classes: int
    train_X: np.ndarray | None = None
    train_y: np.ndarray | None = None
    linear: LinearMarginModel | None = None

    @property
    def n_features(self) -> int:
        return self.scaler.mean.shape[0]

    def predict(self, X) -> np.ndarray:
        Z = self.scaler.transform(X)
        if self.config.kind == "knn":
            return knn_predict(self.train_X, self.train_y, Z, self.config.K, self.config.metric,
                               self.n_classes)
        return self.linear.predict(Z)


def fit_model(config: ClassifierConfig, X, y, n_classes: int, seed: int = 0) -> FittedModel:
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if len(y) == 0:
        raise FitError("empty training set")
    scaler = Standardizer.fit(X)
    Z = scaler.transform(X)
    if config.kind == "knn":
        if config.K > len(y):
            raise FitError(f"K={config.K} exceeds {len(y)} training rows")
        return FittedModel(config, scaler, n_classes, train_X=Z, train_y=y)
    if config.kind == "linear":
        return FittedModel(config, scaler, n_classes,
                           linear=linear_margin_fit(Z, y, config.lam, config.epochs, seed, n_classes))
    raise ValueError(f"unknown classifier kind {config.kind!r}")


def stratified_folds(y, folds: int, seed: int) -> list[np.ndarray]:
    """Validation index sets; class members are shuffled then dealt round-robin."""
    y = np.asarray(y, dtype=np.int64)
    if folds < 2:
        raise ValueError("need at least two folds")
    counts = np.bincount(y)
    small = [cls for cls, n in enumerate(counts) if 0 < n < folds]
    if small:
        raise FitError(f"class index {small[0]} has {counts[small[0]]} members, fewer than {folds} folds")
    rng = SplitMix64(seed)
    buckets: list[list[int]] = [[] for _ in range(folds)]
    slot = 0
    for cls in range(len(counts)):
        members = [int(i) for i in np.flatnonzero(y == cls)]
        rng.shuffle(members)
        for i in members:
            buckets[slot].append(i)
            slot = (slot + 1) % folds
    return [np.array(sorted(b), dtype=np.int64) for b in buckets]


@dataclass
class TuneResult:
    best_config: ClassifierConfig
    validation_accuracy: float
    fold_accuracies: list[float]
    tuning_time: float
    scores: list[tuple[ClassifierConfig, float]] = field(default_factory=list)


def cross_validate(X, y, grid: Sequence[ClassifierConfig] | None = None, folds: int = 5, seed: int = 0,
                   n_classes: int | None = None) -> TuneResult:
    """Grid search by stratified k-fold accuracy.

    The first grid point with the highest mean fold accuracy wins, so grid
    order encodes the preference for simpler models.
    """
    t0 = time.perf_counter()
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    c = n_classes if n_classes is not None else int(y.max()) + 1
    grid = list(grid) if grid is not None else default_grid()
    fold_idx = stratified_folds(y, folds, seed)
    # one model seed per fold, shared by every grid point, so a point scores the same alone or in a grid
    seeder = SplitMix64(seed).spawn()
    fold_seeds = [seeder.next_u64() for _ in fold_idx]
    min_train = len(y) - max(len(f) for f in fold_idx)
    usable = [g for g in grid if g.kind != "knn" or g.K <= min_train]
    if not usable:
        raise FitError("no grid point fits the fold sizes")

    best = None
    scores = []
    for cfg in usable:
        accs = []
        for val, fold_seed in zip(fold_idx, fold_seeds):
            mask = np.ones(len(y), dtype=bool)
            mask[val] = False
            model = fit_model(cfg, X[mask], y[mask], c, seed=fold_seed)
            accs.append(float(np.mean(model.predict(X[val]) == y[val])))
        mean_acc = float(np.mean(accs))
        scores.append((cfg, mean_acc))
        if best is None or mean_acc > best[1]:
            best = (cfg, mean_acc, accs)
    return TuneResult(best[0], best[1], best[2], time.perf_counter() - t0, scores)


def evaluate(model: FittedModel, X, y) -> dict:
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if len(y) == 0:
        raise ValueError("empty test set")
    if X.ndim != 2 or X.shape[1] != model.n_features:
        raise ValueError(f"test rows have {X.shape[-1]} features, model expects {model.n_features}")
    t0 = time.perf_counter()
    pred = model.predict(X)
    elapsed = time.perf_counter() - t0
    return {"test_accuracy": float(np.mean(pred == y)),
            "classification_time_seconds": elapsed,
            "n_test": int(len(y)),
            "n_correct": int(np.sum(pred == y)),
            "predictions": pred.tolist()}
