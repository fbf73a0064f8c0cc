"""Loading UCR/UEA style datasets and producing learning/training splits."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .rng import SplitMix64


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class SplitError(ValueError):
    pass


def _label_key(label: str):
    try:
        return (0, float(label), label)
    except ValueError:
        return (1, 0.0, label)


def sort_labels(labels) -> list[str]:
    """Deterministic class order: numeric labels by value, then the rest lexically."""
    return sorted(set(labels), key=_label_key)


@dataclass(frozen=True)
class TimeSeriesDataset:
    """Equal-length multivariate series with one label each.

    ``X`` has shape ``(n_instances, m, h)``; ``y`` holds class indices into
    ``classes``.
    """

    X: np.ndarray
    y: np.ndarray
    classes: tuple[str, ...]
    name: str = ""

    def __post_init__(self):
        X = np.ascontiguousarray(self.X, dtype=np.float64)
        y = np.asarray(self.y, dtype=np.int64)
        if X.ndim != 3:
            raise ValueError("X must have shape (instances, channels, length)")
        if len(y) != len(X):
            raise ValueError("X and y disagree on instance count")
        if len(self.classes) < 2:
            raise ValueError("at least two classes are required")
        if len(y) and (y.min() < 0 or y.max() >= len(self.classes)):
            raise ValueError("label index outside classes")
        if not np.all(np.isfinite(X)):
            raise ValueError("series contain non-finite values")
        X.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "classes", tuple(self.classes))

    @property
    def n_instances(self) -> int:
        return self.X.shape[0]

    @property
    def m(self) -> int:
        return self.X.shape[1]

    @property
    def h(self) -> int:
        return self.X.shape[2]

    @property
    def c(self) -> int:
        return len(self.classes)

    @property
    def labels(self) -> list[str]:
        return [self.classes[i] for i in self.y]

    def class_counts(self) -> np.ndarray:
        return np.bincount(self.y, minlength=self.c)

    def subset(self, indices: Sequence[int]) -> "TimeSeriesDataset":
        idx = np.asarray(indices, dtype=np.int64)
        return TimeSeriesDataset(self.X[idx], self.y[idx], self.classes, self.name)

    def znormalized(self) -> "TimeSeriesDataset":
        mu = self.X.mean(axis=2, keepdims=True)
        sd = self.X.std(axis=2, keepdims=True)
        sd[sd == 0] = 1.0
        return TimeSeriesDataset((self.X - mu) / sd, self.y, self.classes, self.name)

    def content_hash(self) -> str:
        import hashlib

        hsh = hashlib.sha256()
        hsh.update(np.ascontiguousarray(self.X).tobytes())
        hsh.update(np.ascontiguousarray(self.y).tobytes())
        hsh.update("\x00".join(self.classes).encode())
        return hsh.hexdigest()

    def __eq__(self, other):
        if not isinstance(other, TimeSeriesDataset):
            return NotImplemented
        return (
            self.classes == other.classes
            and self.X.shape == other.X.shape
            and np.array_equal(self.X, other.X)
            and np.array_equal(self.y, other.y)
        )

    __hash__ = None


# --- .ts archive format -----------------------------------------------------

_BOOL = {"true": True, "false": False}


def parse_ts(text: str, name: str = "") -> TimeSeriesDataset:
    """Parse the text of a ``.ts`` file into a dataset.

    Only equal-length, labelled problems without missing values are accepted.
    Instance order follows the file.
    """
    header: dict[str, str] = {}
    declared_labels: list[str] | None = None
    in_data = False
    rows: list[list[list[float]]] = []
    row_labels: list[str] = []
    m = h = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not in_data:
            if not line.startswith("@"):
                raise ParseError("data before @data directive", lineno)
            key, _, value = line[1:].partition(" ")
            key = key.lower()
            value = value.strip()
            if key == "data":
                if declared_labels is None:
                    raise ParseError("missing @classLabel directive", lineno)
                in_data = True
                continue
            if key == "classlabel":
                parts = value.split()
                if not parts or parts[0].lower() != "true":
                    raise ParseError("only labelled problems are supported", lineno)
                declared_labels = parts[1:]
                if len(declared_labels) < 2:
                    raise ParseError("@classLabel must list at least two labels", lineno)
                continue
            if key in ("missing", "timestamps", "equallength", "univariate"):
                if value.lower() not in _BOOL:
                    raise ParseError(f"@{key} expects true/false, got {value!r}", lineno)
                if key == "missing" and _BOOL[value.lower()]:
                    raise ParseError("missing values are not supported", lineno)
                if key == "timestamps" and _BOOL[value.lower()]:
                    raise ParseError("timestamped series are not supported", lineno)
                if key == "equallength" and not _BOOL[value.lower()]:
                    raise ParseError("variable-length series are not supported", lineno)
            elif key in ("dimensions", "serieslength"):
                try:
                    if int(value) < 1:
                        raise ValueError
                except ValueError:
                    raise ParseError(f"@{key} expects a positive integer, got {value!r}", lineno)
            header[key] = value
            continue

        parts = line.split(":")
        label = parts[-1].strip()
        if len(parts) < 2:
            raise ParseError("data line has no class label", lineno)
        if label not in declared_labels:
            raise ParseError(f"unknown class label {label!r}", lineno)
        channels = []
        for chunk in parts[:-1]:
            values = []
            for tok in chunk.split(","):
                tok = tok.strip()
                if tok == "?" or tok.lower() == "nan":
                    raise ParseError("missing value marker in data", lineno)
                try:
                    values.append(float(tok))
                except ValueError:
                    raise ParseError(f"not a number: {tok!r}", lineno)
            channels.append(values)
        if m is None:
            m = len(channels)
            h = len(channels[0])
        if len(channels) != m:
            raise ParseError(f"expected {m} channels, found {len(channels)}", lineno)
        for ch in channels:
            if len(ch) != h:
                raise ParseError(f"ragged series: expected length {h}, found {len(ch)}", lineno)
        rows.append(channels)
        row_labels.append(label)

    if not in_data:
        raise ParseError("missing @data directive")
    if not rows:
        raise ParseError("no data lines")
    if "dimensions" in header and int(header["dimensions"]) != m:
        raise ParseError(f"@dimensions says {header['dimensions']}, data has {m} channels")
    if "univariate" in header and _BOOL[header["univariate"].lower()] and m != 1:
        raise ParseError("@univariate true but data has several channels")
    if "serieslength" in header and int(header["serieslength"]) != h:
        raise ParseError(f"@seriesLength says {header['serieslength']}, data has length {h}")

    classes = sort_labels(declared_labels)
    lookup = {lab: i for i, lab in enumerate(classes)}
    y = np.array([lookup[lab] for lab in row_labels], dtype=np.int64)
    return TimeSeriesDataset(np.array(rows, dtype=np.float64), y, tuple(classes),
                             name or header.get("problemname", ""))


def load_ts(path: str | Path) -> TimeSeriesDataset:
    path = Path(path)
    return parse_ts(path.read_text(), name=path.stem.split("_")[0])


# --- CSV ----------------------------------------------------------------------

@dataclass(frozen=True)
class CsvSchema:
    """How rows of a CSV file map onto instances.

    Each row holds one channel of one instance; ``n_channels`` consecutive
    rows make an instance. ``label_column`` is a header name or a column
    index (negative indices allowed). ``ignore_columns`` are dropped before
    reading values.
    """

    label_column: int | str = -1
    n_channels: int = 1
    has_header: bool = False
    ignore_columns: tuple[str | int, ...] = ()


def _resolve_column(col, header, width):
    if isinstance(col, str):
        if header is None or col not in header:
            raise ParseError(f"column {col!r} not found in header", 1)
        return header.index(col)
    return col % width


def parse_csv(text: str, schema: CsvSchema = CsvSchema(), name: str = "") -> TimeSeriesDataset:
    reader = list(csv.reader(io.StringIO(text)))
    start = 1
    header = None
    if schema.has_header:
        if not reader:
            raise ParseError("empty file")
        header = [h.strip() for h in reader[0]]
        reader = reader[1:]
        start = 2
    numbered = [(i + start, r) for i, r in enumerate(reader) if any(c.strip() for c in r)]
    if not numbered:
        raise ParseError("no data rows")
    width = len(numbered[0][1])
    label_idx = _resolve_column(schema.label_column, header, width)
    drop = {label_idx} | {_resolve_column(c, header, width) for c in schema.ignore_columns}
    keep = [i for i in range(width) if i not in drop]

    m = schema.n_channels
    if m < 1:
        raise ParseError("n_channels must be positive")
    if len(numbered) % m:
        raise ParseError(f"{len(numbered)} rows is not a multiple of {m} channels")

    series, labels = [], []
    for lineno, row in numbered:
        if len(row) != width:
            raise ParseError(f"expected {width} columns, found {len(row)}", lineno)
        try:
            values = [float(row[i]) for i in keep]
        except ValueError as err:
            raise ParseError(str(err), lineno)
        if not all(math.isfinite(v) for v in values):
            raise ParseError("missing or non-finite value", lineno)
        series.append(values)
        labels.append(row[label_idx].strip())

    X, y_lab = [], []
    for i in range(0, len(series), m):
        group = labels[i:i + m]
        if len(set(group)) != 1:
            raise ParseError("channels of one instance carry different labels", numbered[i][0])
        X.append(series[i:i + m])
        y_lab.append(group[0])
    classes = sort_labels(y_lab)
    if len(classes) < 2:
        raise ParseError("at least two classes are required")
    lookup = {lab: i for i, lab in enumerate(classes)}
    return TimeSeriesDataset(np.array(X), np.array([lookup[v] for v in y_lab]), tuple(classes), name)


def export_csv(dataset: TimeSeriesDataset) -> str:
    """Write one row per (instance, channel); reread with :data:`EXPORT_SCHEMA`.

    Only classes that actually occur survive a round trip.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["instance", "channel", "label"] + [f"t{t}" for t in range(dataset.h)])
    for i in range(dataset.n_instances):
        lab = dataset.classes[dataset.y[i]]
        for j in range(dataset.m):
            writer.writerow([i, j, lab] + [repr(float(v)) for v in dataset.X[i, j]])
    return buf.getvalue()


def export_schema(m: int) -> CsvSchema:
    return CsvSchema(label_column="label", n_channels=m, has_header=True,
                     ignore_columns=("instance", "channel"))


# --- splitting ------------------------------------------------------------------

@dataclass(frozen=True)
class SplitSpec:
    learn_ratio: float
    seed: int = 0


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def learn_counts(class_counts: Sequence[int], ratio: float) -> list[int]:
    """Per-class number of learning instances.

    The total is ``round(ratio * n)``; it is apportioned over classes by
    largest remainder (ties go to the earlier class) and each share is
    clamped to ``[1, size - 1]`` so both subsets see every class.
    """
    if not 0.0 < ratio < 1.0:
        raise SplitError(f"learn_ratio must lie in (0, 1), got {ratio}")
    counts = [int(n) for n in class_counts]
    quotas = [ratio * n for n in counts]
    target = _round_half_up(ratio * sum(counts))
    base = [math.floor(q) for q in quotas]
    order = sorted(range(len(counts)), key=lambda i: (-(quotas[i] - base[i]), i))
    for i in order[:max(0, target - sum(base))]:
        base[i] += 1
    return [min(max(b, 1), n - 1) for b, n in zip(base, counts)]


def stratified_split(dataset: TimeSeriesDataset, spec: SplitSpec):
    """Split into (learning, training) subsets plus their index lists.

    Returns ``(Lr, Tr, lr_idx, tr_idx)`` with indices sorted ascending.
    """
    counts = dataset.class_counts()
    for y, n in enumerate(counts):
        if n < 2 or spec.learn_ratio * n < 1:
            raise SplitError(
                f"class {dataset.classes[y]!r} has {n} instances, too few to stratify "
                f"at learn_ratio {spec.learn_ratio}")
    n_learn = learn_counts(counts, spec.learn_ratio)
    rng = SplitMix64(spec.seed)
    lr_idx: list[int] = []
    for y in range(dataset.c):
        members = [int(i) for i in np.flatnonzero(dataset.y == y)]
        rng.shuffle(members)
        lr_idx.extend(members[:n_learn[y]])
    lr_idx.sort()
    chosen = set(lr_idx)
    tr_idx = [i for i in range(dataset.n_instances) if i not in chosen]
    return dataset.subset(lr_idx), dataset.subset(tr_idx), lr_idx, tr_idx
