"""Dataset serialization for sweep results.

CSV files carry a single '#'-prefixed JSON metadata line, then a column
header, then the data rows.  The JSON format holds the same content in one
document.  Values are printed with %.17g so a run is reproducible byte for
byte regardless of how the points were scheduled.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigInvalid


@dataclass
class SpectrumDataset:
    """Tabular sweep output: metadata, column names, and numeric rows."""

    metadata: dict
    columns: list[str]
    rows: np.ndarray  # (n_points, n_columns)

    def __post_init__(self):
        self.rows = np.asarray(self.rows, dtype=float)
        if self.rows.ndim != 2 or self.rows.shape[1] != len(self.columns):
            raise ConfigInvalid("rows shape does not match column count")


def _format_row(row) -> str:
    return ",".join("%.17g" % v for v in row)


def write_csv(path, ds: SpectrumDataset) -> None:
    meta = dict(ds.metadata)
    meta["columns"] = ds.columns
    with open(path, "w") as fh:
        fh.write("# " + json.dumps(meta, sort_keys=True) + "\n")
        fh.write(",".join(ds.columns) + "\n")
        for row in ds.rows:
            fh.write(_format_row(row) + "\n")


def read_csv(path) -> SpectrumDataset:
    with open(path) as fh:
        first = fh.readline()
        if not first.startswith("#"):
            raise ConfigInvalid(f"{path}: missing JSON metadata header")
        meta = json.loads(first.lstrip("#").strip())
        header = fh.readline().strip()
        columns = header.split(",") if header else []
        rows = [[float(v) for v in line.strip().split(",")]
                for line in fh if line.strip()]
    meta.pop("columns", None)
    arr = np.array(rows, dtype=float) if rows else np.empty((0, len(columns)))
    return SpectrumDataset(metadata=meta, columns=columns, rows=arr)


def write_json(path, ds: SpectrumDataset) -> None:
    doc = {"metadata": ds.metadata, "columns": ds.columns,
           "rows": [[float(v) for v in row] for row in ds.rows]}
    with open(path, "w") as fh:
        json.dump(doc, fh, sort_keys=True)
        fh.write("\n")


def read_json(path) -> SpectrumDataset:
    with open(path) as fh:
        doc = json.load(fh)
    return SpectrumDataset(metadata=doc["metadata"], columns=doc["columns"],
                           rows=np.array(doc["rows"], dtype=float).reshape(
                               -1, len(doc["columns"])))


def write_dataset(path, ds: SpectrumDataset, fmt: str = "csv") -> None:
    if fmt == "csv":
        write_csv(path, ds)
    elif fmt == "json":
        write_json(path, ds)
    else:
        raise ConfigInvalid(f"unknown format {fmt!r}")


def read_dataset(path, fmt: str = "csv") -> SpectrumDataset:
    return read_csv(path) if fmt == "csv" else read_json(path)


def payload_fingerprint(path) -> str:
    """File content with the volatile 'created' metadata field removed.

    Lets tests assert byte-identical payloads across worker counts while the
    header still records when the file was written.
    """
    with open(path) as fh:
        first = fh.readline()
        rest = fh.read()
    meta = json.loads(first.lstrip("#").strip())
    meta.pop("created", None)
    return json.dumps(meta, sort_keys=True) + "\n" + rest
