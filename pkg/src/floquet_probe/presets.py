"""Named parameter sets for the reproduce subcommand.

Each preset pins the physics parameters and a desk-scale grid for one of the
standard plots: quasienergy landscapes at four tunnel amplitudes, the
matching absorption maps, the line cut with its independent Lindblad
cross-check, two experiment-parameter maps specified in laboratory units
(GHz, mK), and the two-mode anti-crossing scans.  Axis extents for the
experiment maps are emitted dimensionless; converting to device units (gate
charge, flux) is instrument-specific and left to the caller.
"""
from __future__ import annotations

from dataclasses import replace

from .errors import ConfigInvalid
from .sweep import AxisSpec, SweepConfig

# tunnel amplitudes of the four-panel landscape and absorption maps
PANEL_DELTAS = {"a": 0.10, "b": 0.37, "c": 0.84, "d": 1.50}

_LANDSCAPE_EPS0 = AxisSpec(0.0, 3.0, 61)
_LANDSCAPE_AMP = AxisSpec(0.0, 6.0, 121)

# line-cut parameters shared by the absorption maps
LINE_EPS0 = 1.05
LINE_OMEGA_P = 0.092
LINE_GAMMA = 0.016
LINE_BETA = 2.24


def _landscape(delta: float) -> SweepConfig:
    return SweepConfig(kind="landscape", delta=delta,
                       eps0=_LANDSCAPE_EPS0, amp=_LANDSCAPE_AMP)


def _absorption(delta: float, **overrides) -> SweepConfig:
    base = SweepConfig(kind="absorption", delta=delta,
                       eps0=_LANDSCAPE_EPS0, amp=_LANDSCAPE_AMP,
                       omega_p=LINE_OMEGA_P, target_gamma=LINE_GAMMA,
                       beta=LINE_BETA)
    return replace(base, **overrides)


def _build_presets() -> dict[str, SweepConfig]:
    p: dict[str, SweepConfig] = {}
    # quasienergy ladder illustration: folded gap against bias at fixed drive
    p["fig2"] = SweepConfig(kind="landscape", delta=0.37,
                            eps0=AxisSpec(0.0, 3.0, 301),
                            amp=AxisSpec(2.0, 2.0, 1))
    for panel, delta in PANEL_DELTAS.items():
        p[f"fig3{panel}"] = _landscape(delta)
        p[f"fig4{panel}"] = _absorption(delta)
    # vertical cut through the absorption map, cross-checked by the
    # independent Lindblad spectrum (written as a companion dataset)
    p["fig5"] = _absorption(0.37, eps0=AxisSpec(LINE_EPS0, LINE_EPS0, 1),
                            amp=AxisSpec(0.0, 6.0, 241))
    # charge-qubit experiment map, parameters in laboratory units
    p["fig6"] = _absorption(0.37, beta=None, freq_ghz=7.0, temp_mk=150.0,
                            target_gamma=0.045)
    # flux-qubit experiment map with a much slower probe
    p["fig7"] = _absorption(0.84, beta=None, freq_ghz=4.15, temp_mk=70.0,
                            target_gamma=0.17, omega_p=0.005)
    # two-mode quasienergy landscape and anti-crossing scans
    p["fig8a"] = SweepConfig(kind="twomode", delta=0.37,
                             eps0=AxisSpec(0.0, 3.0, 41),
                             amp=AxisSpec(0.0, 6.0, 41),
                             omega_p=0.10, amp_p=0.20)
    p["fig8b"] = SweepConfig(kind="twomode", delta=0.37,
                             eps0=AxisSpec(0.0, 3.0, 151),
                             amp=AxisSpec(5.6, 5.6, 1),
                             omega_p=0.10, amp_p=0.20)
    p["fig8c"] = SweepConfig(kind="twomode", delta=0.37,
                             eps0=AxisSpec(1.85, 1.97, 61),
                             amp=AxisSpec(5.6, 5.6, 1),
                             omega_p=0.10, amp_p=0.40)
    return p


PRESETS = _build_presets()


def preset_config(preset_id: str) -> SweepConfig:
    if preset_id not in PRESETS:
        known = ", ".join(sorted(PRESETS))
        raise ConfigInvalid(f"preset: unknown id {preset_id!r} (known: {known})")
    return replace(PRESETS[preset_id], preset=preset_id)


def oracle_companion(config: SweepConfig) -> SweepConfig | None:
    """The sparse Lindblad-spectrum sweep paired with the fig5 line cut."""
    if config.preset != "fig5":
        return None
    return replace(config, kind="spectrum", amp=AxisSpec(0.0, 6.0, 25),
                   out=_companion_path(config.out))


def _companion_path(path: str) -> str:
    root, dot, ext = path.rpartition(".")
    if not dot:
        return path + "_oracle"
    return f"{root}_oracle.{ext}"
