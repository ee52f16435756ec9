"""Read sweep datasets written by the quasienergy CLI.

The format is CSV with one leading comment line: "# " followed by a JSON
object of metadata (including the column names), then a plain header row
and numeric rows. JSON datasets carry the same fields.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import MissingDataset, SchemaMismatch

REQUIRED_COLUMNS = ["eps0_over_hw", "A_over_hw", "value"]


@dataclass
class Dataset:
    metadata: dict
    columns: list[str]
    rows: np.ndarray

    @property
    def kind(self) -> str:
        return self.metadata.get("kind", "")


def load_dataset(path: str | Path) -> Dataset:
    path = Path(path)
    if not path.exists():
        raise MissingDataset(f"dataset not found: {path}")
    try:
        if path.suffix == ".json":
            ds = _load_json(path)
        else:
            ds = _load_csv(path)
    except (json.JSONDecodeError, ValueError) as err:
        raise SchemaMismatch(f"{path}: {err}") from err
    _check_schema(path, ds)
    return ds


def _load_csv(path: Path) -> Dataset:
    text = path.read_text().splitlines()
    if not text or not text[0].startswith("# "):
        raise SchemaMismatch(f"{path}: missing metadata header line")
    meta = json.loads(text[0][2:])
    columns = meta.get("columns", [])
    body = [line for line in text[2:] if line.strip()]
    rows = np.array([[float(v) for v in line.split(",")] for line in body])
    return Dataset(metadata=meta, columns=columns, rows=rows)


def _load_json(path: Path) -> Dataset:
    payload = json.loads(path.read_text())
    return Dataset(metadata=payload.get("metadata", {}),
                   columns=payload.get("columns", []),
                   rows=np.array(payload.get("rows", [])))


def _check_schema(path: Path, ds: Dataset) -> None:
    if ds.columns != REQUIRED_COLUMNS:
        raise SchemaMismatch(
            f"{path}: columns {ds.columns} != {REQUIRED_COLUMNS}")
    if ds.rows.size == 0:
        raise SchemaMismatch(f"{path}: dataset is empty")
    if ds.rows.ndim != 2 or ds.rows.shape[1] != 3:
        raise SchemaMismatch(f"{path}: expected rows of 3 numbers")


@dataclass
class GridData:
    """A dataset pivoted onto its rectangular (eps0, amp) grid."""
    eps0: np.ndarray
    amp: np.ndarray
    values: np.ndarray  # shape (len(eps0), len(amp))
    metadata: dict = field(default_factory=dict)


def to_grid(ds: Dataset) -> GridData:
    eps0 = np.unique(ds.rows[:, 0])
    amp = np.unique(ds.rows[:, 1])
    if len(eps0) * len(amp) != len(ds.rows):
        raise SchemaMismatch("rows do not form a rectangular grid")
    values = np.full((len(eps0), len(amp)), np.nan)
    ei = np.searchsorted(eps0, ds.rows[:, 0])
    ai = np.searchsorted(amp, ds.rows[:, 1])
    values[ei, ai] = ds.rows[:, 2]
    return GridData(eps0=eps0, amp=amp, values=values, metadata=ds.metadata)
