"""Sweep configuration, dataset round trips, determinism, and the CLI."""
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from floquet_probe.cli import main
from floquet_probe.datasets import (SpectrumDataset, payload_fingerprint,
                                    read_csv, read_json, write_csv,
                                    write_json)
from floquet_probe.errors import ConfigInvalid
from floquet_probe.presets import PRESETS, oracle_companion, preset_config
from floquet_probe.sweep import AxisSpec, SweepConfig, grid_points, run_sweep
from floquet_probe.units import beta_from_physical


def _config(tmp_path, **overrides):
    base = dict(kind="landscape", delta=0.37,
                eps0=AxisSpec(0.0, 2.0, 4), amp=AxisSpec(0.0, 3.0, 4),
                out=str(tmp_path / "out.csv"), workers=1)
    base.update(overrides)
    return SweepConfig(**base)


def test_axis_parse():
    ax = AxisSpec.parse("0:3:7", "eps0")
    assert (ax.start, ax.stop, ax.count) == (0.0, 3.0, 7)
    single = AxisSpec.parse("1.05", "eps0")
    assert single.count == 1 and single.start == 1.05
    with pytest.raises(ConfigInvalid):
        AxisSpec.parse("0:3", "eps0")


def test_grid_row_major():
    cfg = SweepConfig(kind="landscape", delta=0.1,
                      eps0=AxisSpec(0.0, 1.0, 2), amp=AxisSpec(0.0, 2.0, 3))
    pts = grid_points(cfg)
    assert pts.tolist() == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2]]


@pytest.mark.parametrize("overrides,field", [
    (dict(kind="nonsense"), "kind"),
    (dict(eps0=AxisSpec(0.0, 0.0, 3)), "eps0"),
    (dict(eps0=AxisSpec(1.0, 1.0, 1), amp=AxisSpec(2.0, 2.0, 1)), "grid"),
    (dict(kind="absorption"), "beta"),
    (dict(kind="absorption", beta=2.24), "target-gamma"),
    (dict(beta=2.24, freq_ghz=7.0, temp_mk=150.0), "beta"),
    (dict(freq_ghz=7.0), "temp-mk"),
    (dict(fmt="xml"), "format"),
    (dict(workers=-1), "workers"),
])
def test_config_validation_names_field(tmp_path, overrides, field):
    with pytest.raises(ConfigInvalid, match=field):
        _config(tmp_path, **overrides).validate()


def test_physical_units_resolve_beta(tmp_path):
    cfg = _config(tmp_path, kind="absorption", target_gamma=0.045,
                  freq_ghz=7.0, temp_mk=150.0)
    assert cfg.resolved_beta() == pytest.approx(2.2397, abs=1e-4)
    cfg = _config(tmp_path, kind="absorption", target_gamma=0.17,
                  freq_ghz=4.15, temp_mk=70.0)
    assert cfg.resolved_beta() == pytest.approx(2.845, abs=1e-3)


def test_beta_decreases_with_temperature():
    hot = beta_from_physical(7.0, 1e6)
    assert hot < 1e-3
    assert beta_from_physical(7.0, 150.0) > beta_from_physical(7.0, 300.0)


def test_csv_round_trip(tmp_path):
    ds = SpectrumDataset(metadata={"kind": "landscape", "delta": 0.37},
                         columns=["eps0_over_hw", "A_over_hw", "value"],
                         rows=np.array([[0.0, 0.5, 0.25], [1.0, 0.5, 0.75]]))
    path = tmp_path / "ds.csv"
    write_csv(path, ds)
    first = path.read_text().splitlines()[0]
    assert first.startswith("# ")
    json.loads(first[2:])
    back = read_csv(path)
    assert back.metadata["delta"] == 0.37
    assert np.array_equal(back.rows, ds.rows)


def test_json_round_trip(tmp_path):
    ds = SpectrumDataset(metadata={"kind": "twomode"},
                         columns=["eps0_over_hw", "A_over_hw", "value"],
                         rows=np.array([[2.7, 5.6, 0.01]]))
    path = tmp_path / "ds.json"
    write_json(path, ds)
    back = read_json(path)
    assert back.metadata == ds.metadata
    assert np.array_equal(back.rows, ds.rows)


@given(st.lists(st.floats(-1e6, 1e6), min_size=3, max_size=3))
def test_csv_values_survive_round_trip(row):
    # %.17g preserves doubles exactly
    text = ",".join("%.17g" % v for v in row)
    back = [float(v) for v in text.split(",")]
    assert back == row


def test_run_sweep_deterministic_across_workers(tmp_path):
    out1 = tmp_path / "w1.csv"
    out2 = tmp_path / "w2.csv"
    run_sweep(_config(tmp_path, out=str(out1), workers=1))
    run_sweep(_config(tmp_path, out=str(out2), workers=4))
    assert payload_fingerprint(out1) == payload_fingerprint(out2)


def test_run_sweep_resumes_partial_output(tmp_path):
    out = tmp_path / "resume.csv"
    cfg = _config(tmp_path, out=str(out))
    run_sweep(cfg)
    full = payload_fingerprint(out)
    lines = out.read_text().splitlines(keepends=True)
    out.write_text("".join(lines[:8]))  # drop the tail of the grid
    run_sweep(cfg)
    assert payload_fingerprint(out) == full


def test_presets_cover_the_figure_set():
    expected = {"fig2", "fig5", "fig6", "fig7"}
    expected |= {f"fig3{p}" for p in "abcd"}
    expected |= {f"fig4{p}" for p in "abcd"}
    expected |= {f"fig8{p}" for p in "abc"}
    assert set(PRESETS) == expected
    for name in expected:
        preset_config(name).validate()


def test_preset_experiment_parameters():
    fig6 = preset_config("fig6")
    assert (fig6.freq_ghz, fig6.temp_mk) == (7.0, 150.0)
    assert fig6.target_gamma == 0.045
    fig7 = preset_config("fig7")
    assert fig7.delta == 0.84 and fig7.omega_p == 0.005
    assert fig7.target_gamma == 0.17


def test_line_cut_preset_has_oracle_companion(tmp_path):
    cfg = preset_config("fig5")
    companion = oracle_companion(cfg)
    assert companion is not None
    assert companion.kind == "spectrum"
    assert oracle_companion(preset_config("fig4b")) is None


def test_cli_landscape_writes_dataset(tmp_path):
    out = tmp_path / "cli.csv"
    code = main(["landscape", "--eps0", "0:2:3", "--amp", "0:2:3",
                 "--delta", "0.37", "--workers", "1", "--out", str(out)])
    assert code == 0
    ds = read_csv(out)
    assert ds.columns == ["eps0_over_hw", "A_over_hw", "value"]
    assert len(ds.rows) == 9
    assert np.all(np.isfinite(ds.rows[:, 2]))


def test_cli_config_error_exit_code(tmp_path):
    code = main(["absorption", "--eps0", "0:2:3", "--amp", "0:2:3",
                 "--out", str(tmp_path / "x.csv")])
    assert code == 2


def test_cli_reproduce_small_override(tmp_path):
    out = tmp_path / "fig3b.csv"
    code = main(["reproduce", "--preset", "fig3b", "--eps0", "0:2:3",
                 "--amp", "0:2:3", "--workers", "1", "--out", str(out)])
    assert code == 0
    ds = read_csv(out)
    assert ds.metadata["preset"] == "fig3b"
    assert ds.metadata["delta"] == 0.37


def test_cli_unknown_preset_rejected():
    with pytest.raises(SystemExit) as err:
        main(["reproduce", "--preset", "fig99"])
    assert err.value.code == 2
