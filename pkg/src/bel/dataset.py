"""Tabular data container and CSV input/output shared across the package."""
from __future__ import annotations

import csv
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

__all__ = [
    "Dataset",
    "DataFormatError",
    "center",
    "standardize",
    "read_dataset_csv",
    "write_dataset_csv",
]

# 17 significant digits round-trips any float64 exactly.
_FMT = ".17g"


class DataFormatError(ValueError):
    """Malformed input file: bad cell, ragged row, or missing header."""


@dataclass(frozen=True)
class Dataset:
    """An n-by-p design matrix with an optional length-n response.

    ``centered`` carries one flag per X column, ``y_centered`` one for the
    response, recording whether the fitting path has removed column means.
    """

    x: np.ndarray
    y: np.ndarray | None = None
    centered: np.ndarray | None = None
    y_centered: bool = False
    standardized: bool = False
    columns: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        x = np.atleast_2d(np.asarray(self.x, dtype=float))
        object.__setattr__(self, "x", x)
        n, p = x.shape
        if n < 2:
            raise ValueError("need at least 2 observations")
        if p < 1:
            raise ValueError("need at least 1 column")
        if not np.all(np.isfinite(x)):
            raise ValueError("X contains non-finite entries")
        if self.y is not None:
            y = np.asarray(self.y, dtype=float).ravel()
            if y.size != n:
                raise ValueError("response length does not match X")
            if not np.all(np.isfinite(y)):
                raise ValueError("y contains non-finite entries")
            object.__setattr__(self, "y", y)
        if self.centered is None:
            object.__setattr__(self, "centered", np.zeros(p, dtype=bool))
        else:
            flags = np.asarray(self.centered, dtype=bool).ravel()
            if flags.size != p:
                raise ValueError("centered flags must have one entry per column")
            object.__setattr__(self, "centered", flags)
        if self.columns is not None and len(self.columns) != p:
            raise ValueError("column names must have one entry per column")

    @property
    def n(self) -> int:
        return self.x.shape[0]

    @property
    def p(self) -> int:
        return self.x.shape[1]


def center(data: Dataset) -> Dataset:
    """Remove column means from X (and from y when present)."""
    x = data.x - data.x.mean(axis=0)
    y = None if data.y is None else data.y - data.y.mean()
    return replace(
        data,
        x=x,
        y=y,
        centered=np.ones(data.p, dtype=bool),
        y_centered=data.y is not None,
    )


def standardize(data: Dataset) -> Dataset:
    """Center X and scale each column to unit standard deviation; center y."""
    out = center(data)
    sds = out.x.std(axis=0)
    if np.any(sds <= 0):
        j = int(np.argmin(sds))
        raise ValueError(f"column {j + 1} is constant; cannot standardize")
    return replace(out, x=out.x / sds, standardized=True)


def write_dataset_csv(data: Dataset, path: str | Path) -> None:
    """Write the dataset with a header row at full float64 precision."""
    path = Path(path)
    names = list(data.columns) if data.columns else [f"x{j + 1}" for j in range(data.p)]
    if data.y is not None:
        names = names + ["y"]
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(names)
        for i in range(data.n):
            row = [format(v, _FMT) for v in data.x[i]]
            if data.y is not None:
                row.append(format(data.y[i], _FMT))
            writer.writerow(row)


def read_dataset_csv(path: str | Path) -> Dataset:
    """Read a dataset CSV; a trailing column named ``y`` becomes the response.

    Raises DataFormatError naming the offending row/column on bad cells.
    """
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataFormatError(f"{path}: empty file") from None
        header = [h.strip() for h in header]
        has_y = bool(header) and header[-1] == "y"
        width = len(header)
        rows: list[list[float]] = []
        for i, raw in enumerate(reader, start=2):
            if not raw:
                continue
            if len(raw) != width:
                raise DataFormatError(
                    f"{path}: row {i} has {len(raw)} cells, expected {width}"
                )
            vals = []
            for j, cell in enumerate(raw, start=1):
                try:
                    vals.append(float(cell))
                except ValueError:
                    raise DataFormatError(
                        f"{path}: non-numeric cell at row {i}, column {j}: {cell!r}"
                    ) from None
            rows.append(vals)
    if len(rows) < 2:
        raise DataFormatError(f"{path}: need at least 2 data rows")
    arr = np.asarray(rows, dtype=float)
    if has_y:
        x, y = arr[:, :-1], arr[:, -1]
        cols = tuple(header[:-1])
    else:
        x, y = arr, None
        cols = tuple(header)
    return Dataset(x=x, y=y, columns=cols)
