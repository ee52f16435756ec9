import json

import numpy as np
import pytest


def write_dataset(path, rows, metadata=None):
    meta = {"kind": "landscape",
            "columns": ["eps0_over_hw", "A_over_hw", "value"]}
    meta.update(metadata or {})
    lines = ["# " + json.dumps(meta, sort_keys=True),
             ",".join(meta["columns"])]
    lines += [",".join("%.17g" % v for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")
    return path


@pytest.fixture
def small_map(tmp_path):
    # 3x4 grid with one bright line along eps0 = 1
    rows = []
    for e in (0.0, 1.0, 2.0):
        for a in (0.0, 1.0, 2.0, 3.0):
            rows.append([e, a, 1.0 if e == 1.0 else 0.05])
    return write_dataset(tmp_path / "map.csv", np.array(rows))


@pytest.fixture
def small_line(tmp_path):
    rows = [[1.05, a, np.exp(-(a - 2.0) ** 2)] for a in np.linspace(0, 4, 21)]
    return write_dataset(tmp_path / "line.csv", np.array(rows),
                         {"kind": "absorption", "preset": "fig5"})
