"""Dataset loading and seeded hold-out splitting.

CSV layout: UTF-8, comma separated, header ``x1[,x2,...],y``, one row
per sample, LF or CRLF line endings, no quoting. The ten benchmark
datasets ship with the package; ``MVO_REGRESS_DATA_DIR`` points the
loader at an alternative directory.
"""
from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

__all__ = [
    "Dataset",
    "Split",
    "CsvFormatError",
    "load_csv",
    "load_bundled",
    "bundled_data_dir",
    "holdout_split",
]

DATA_DIR_ENV = "MVO_REGRESS_DATA_DIR"


class CsvFormatError(ValueError):
    """Raised for malformed dataset CSV content."""


@dataclass(frozen=True, eq=False)
class Dataset:
    """Immutable predictor matrix X (N x k) and response vector y (N)."""

    name: str
    X: np.ndarray
    y: np.ndarray

    @property
    def n_samples(self) -> int:
        return self.X.shape[0]

    @property
    def arity(self) -> int:
        return self.X.shape[1]


@dataclass(frozen=True, eq=False)
class Split:
    """Disjoint train/test index sets covering 0..N-1."""

    train_indices: np.ndarray
    test_indices: np.ndarray
    seed: int


_HEADER_RE = re.compile(r"^x1(,x\d+)*,y$")


def load_csv(path: str | Path, name: str | None = None) -> Dataset:
    """Parse a dataset CSV; errors carry the offending line number."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    lines = text.replace("\r\n", "\n").split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CsvFormatError(f"{path}: empty file")
    header = lines[0].strip()
    if not _HEADER_RE.match(header):
        raise CsvFormatError(
            f"{path}: line 1: header must be 'x1[,x2,...],y', got {header!r}")
    cols = header.split(",")
    for i, c in enumerate(cols[:-1]):
        if c != f"x{i + 1}":
            raise CsvFormatError(
                f"{path}: line 1: predictor columns must be x1..xk in order, got {header!r}")
    k = len(cols) - 1
    rows: list[list[float]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != k + 1:
            raise CsvFormatError(
                f"{path}: line {lineno}: expected {k + 1} fields, got {len(fields)}")
        values = []
        for field in fields:
            try:
                v = float(field)
            except ValueError:
                raise CsvFormatError(
                    f"{path}: line {lineno}: non-numeric field {field!r}") from None
            if not math.isfinite(v):
                raise CsvFormatError(
                    f"{path}: line {lineno}: non-finite field {field!r}")
            values.append(v)
        rows.append(values)
    if not rows:
        raise CsvFormatError(f"{path}: no data rows")
    arr = np.array(rows, dtype=float)
    X = arr[:, :k].copy()
    y = arr[:, k].copy()
    X.flags.writeable = False
    y.flags.writeable = False
    return Dataset(name=name or path.stem, X=X, y=y)


def bundled_data_dir() -> Path:
    """Directory holding the bundled CSVs, unless overridden by env var."""
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("mvo_regress.datasets")))


def load_bundled(name: str) -> Dataset:
    key = name.strip().lower()
    path = bundled_data_dir() / f"{key}.csv"
    if not path.exists():
        raise FileNotFoundError(f"no bundled dataset {name!r} at {path}")
    return load_csv(path, name=key)


def holdout_split(ds: Dataset, train_fraction: float, seed: int) -> Split:
    """Seeded random hold-out partition.

    The train size is round-half-up of train_fraction * N, clamped so
    both sides keep at least one sample. Identical (ds, fraction, seed)
    always yields an identical split.
    """
    n = ds.n_samples
    if n < 2:
        raise ValueError(f"cannot hold out from {n} sample(s); need at least 2")
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"train_fraction must be in (0, 1), got {train_fraction}")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    n_train = int(math.floor(train_fraction * n + 0.5))
    n_train = max(1, min(n - 1, n_train))
    train = perm[:n_train].copy()
    test = perm[n_train:].copy()
    train.flags.writeable = False
    test.flags.writeable = False
    return Split(train_indices=train, test_indices=test, seed=seed)
