"""Parameter-sweep orchestration over the bias-amplitude plane.

A sweep evaluates one scalar (quasienergy gap, golden-rule absorption, probe
spectrum, or two-mode gap) on a rectangular grid.  Points are independent
pure calls into the library, so they are distributed over a process pool and
reassembled in fixed row-major order; the output payload does not depend on
the worker count.  Re-running against an existing partial output file
computes only the missing points.
"""
from __future__ import annotations

import datetime
import math
import multiprocessing
import os
from dataclasses import dataclass

import numpy as np

from .bath import BathParams, calibrate_kappa, rates_for_solution
from .datasets import SpectrumDataset, read_dataset, write_dataset
from .errors import ConfigInvalid, FloquetProbeError
from .floquet import TruncationSpec, quasienergy_gap, solve_qubit
from .hamiltonian import QubitParams, qubit_hamiltonian
from .oracles import lindblad_sigma_z_spectrum
from .probe import ProbeSpec, golden_rule_rate
from .twomode import TwoModeTruncation, qubit_probe_blocks, solve_two_mode
from .units import beta_from_physical

COLUMNS = ["eps0_over_hw", "A_over_hw", "value"]
KINDS = ("landscape", "absorption", "spectrum", "twomode")


@dataclass(frozen=True)
class AxisSpec:
    """Uniform grid on one swept axis."""

    start: float
    stop: float
    count: int

    def points(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)

    @classmethod
    def parse(cls, text: str, field: str) -> "AxisSpec":
        parts = text.split(":")
        if len(parts) == 1:
            return cls(float(parts[0]), float(parts[0]), 1)
        if len(parts) != 3:
            raise ConfigInvalid(f"{field}: expected min:max:count, got {text!r}")
        return cls(float(parts[0]), float(parts[1]), int(parts[2]))


@dataclass(frozen=True)
class SweepConfig:
    """Everything needed to evaluate one sweep and persist the result."""

    kind: str
    delta: float
    eps0: AxisSpec
    amp: AxisSpec
    omega_p: float = 0.092
    amp_p: float = 1.0
    target_gamma: float | None = None
    beta: float | None = None
    freq_ghz: float | None = None
    temp_mk: float | None = None
    trunc: int | None = None
    tol: float = 1e-10
    out: str = "sweep.csv"
    fmt: str = "csv"
    workers: int = 0
    preset: str | None = None

    def validate(self) -> "SweepConfig":
        if self.kind not in KINDS:
            raise ConfigInvalid(f"kind: {self.kind!r} not one of {KINDS}")
        if self.delta < 0:
            raise ConfigInvalid("delta: must be >= 0")
        for name, axis in (("eps0", self.eps0), ("amp", self.amp)):
            if axis.count < 1:
                raise ConfigInvalid(f"{name}: count must be >= 1")
            if axis.count > 1 and not axis.stop > axis.start:
                raise ConfigInvalid(f"{name}: swept axis needs stop > start")
            if not (math.isfinite(axis.start) and math.isfinite(axis.stop)):
                raise ConfigInvalid(f"{name}: range must be finite")
        if self.eps0.count < 2 and self.amp.count < 2:
            raise ConfigInvalid("grid: at least one axis needs count >= 2")
        physical = self.freq_ghz is not None or self.temp_mk is not None
        if physical and self.beta is not None:
            raise ConfigInvalid("beta: give either beta or freq-ghz/temp-mk")
        if physical and (self.freq_ghz is None or self.temp_mk is None):
            raise ConfigInvalid("temp-mk: freq-ghz and temp-mk go together")
        if self.kind in ("absorption", "spectrum"):
            if self.resolved_beta() is None:
                raise ConfigInvalid(f"beta: required for kind {self.kind!r}")
            if self.target_gamma is None or self.target_gamma <= 0:
                raise ConfigInvalid("target-gamma: required and > 0 for "
                                    f"kind {self.kind!r}")
            if self.omega_p <= 0:
                raise ConfigInvalid("omega-p: must be > 0")
        if self.kind == "twomode" and self.omega_p <= 0:
            raise ConfigInvalid("omega-p: must be > 0")
        if self.fmt not in ("csv", "json"):
            raise ConfigInvalid(f"format: {self.fmt!r} not csv or json")
        if self.workers < 0:
            raise ConfigInvalid("workers: must be >= 0 (0 = auto)")
        return self

    def resolved_beta(self) -> float | None:
        if self.beta is not None:
            return self.beta
        if self.freq_ghz is not None and self.temp_mk is not None:
            return beta_from_physical(self.freq_ghz, self.temp_mk)
        return None

    def metadata(self) -> dict:
        meta = {
            "kind": self.kind, "delta": self.delta,
            "eps0": [self.eps0.start, self.eps0.stop, self.eps0.count],
            "amp": [self.amp.start, self.amp.stop, self.amp.count],
            "omega_p": self.omega_p, "amp_p": self.amp_p,
            "target_gamma": self.target_gamma,
            "beta": self.resolved_beta(), "trunc": self.trunc,
            "tol": self.tol, "preset": self.preset,
        }
        if self.freq_ghz is not None:
            meta["freq_ghz"] = self.freq_ghz
            meta["temp_mk"] = self.temp_mk
        return meta


def grid_points(config: SweepConfig) -> np.ndarray:
    """Row-major (eps0, amp) grid: eps0 outer, amp inner."""
    e = config.eps0.points()
    a = config.amp.points()
    return np.array([(x, y) for x in e for y in a])


def _truncation(config: SweepConfig) -> TruncationSpec | None:
    if config.trunc is None:
        return None
    return TruncationSpec(photon_cutoff=config.trunc, adaptive=False,
                          convergence_tol=config.tol)


def _evaluate_point(args) -> tuple[int, float, str]:
    """Evaluate one grid point; returns (index, value, error message)."""
    idx, eps0, amp, config, kappa = args
    try:
        p = QubitParams(eps0=eps0, delta=config.delta, amp=amp)
        if config.kind == "landscape":
            value = quasienergy_gap(solve_qubit(p, trunc=_truncation(config)))
        elif config.kind == "absorption":
            sol = solve_qubit(p, trunc=_truncation(config))
            bath = BathParams(kappa=kappa, beta=config.resolved_beta())
            rates = rates_for_solution(sol, bath)
            probe = ProbeSpec(amp_p=config.amp_p, omega_p=config.omega_p)
            value = golden_rule_rate(sol, rates, probe)
        elif config.kind == "spectrum":
            gamma = config.target_gamma
            grid = np.array([config.omega_p])
            spec = lindblad_sigma_z_spectrum(
                p, omega_p_grid=grid, t1=2.0 / gamma, t2=1.0 / gamma,
                horizon=16.0 / gamma, amp_p=config.amp_p)
            value = float(spec.values[0])
        else:  # twomode
            sol = solve_two_mode(
                qubit_hamiltonian(p), 1.0, qubit_probe_blocks(config.amp_p),
                config.omega_p, TwoModeTruncation(
                    n1_cutoff=config.trunc or 16))
            value = float(abs(sol.quasienergies[1] - sol.quasienergies[0]))
        return idx, value, ""
    except FloquetProbeError as exc:
        return idx, float("nan"), f"({eps0:g}, {amp:g}): {exc}"


def _existing_values(config: SweepConfig, points: np.ndarray) -> np.ndarray:
    """Values already on disk for matching grid points, NaN elsewhere."""
    values = np.full(len(points), np.nan)
    if not os.path.exists(config.out):
        return values
    try:
        ds = read_dataset(config.out, config.fmt)
    except (FloquetProbeError, ValueError):
        return values
    if ds.columns != COLUMNS:
        return values
    n = min(len(ds.rows), len(points))
    if n == 0:
        return values
    match = np.all(np.abs(ds.rows[:n, :2] - points[:n]) < 1e-12, axis=1)
    values[:n][match] = ds.rows[:n, 2][match]
    return values


def run_sweep(config: SweepConfig) -> tuple[SpectrumDataset, list[str]]:
    """Evaluate the grid, reusing any resumable points, and write the output.

    Returns the dataset and the list of per-point failure messages; failed
    points are recorded as NaN rows.
    """
    config = config.validate()
    points = grid_points(config)
    values = _existing_values(config, points)
    todo = [i for i in range(len(points)) if not np.isfinite(values[i])]

    kappa = 0.0
    if config.kind == "absorption":
        kappa = calibrate_kappa(config.target_gamma, config.delta,
                                config.resolved_beta())

    tasks = [(i, points[i, 0], points[i, 1], config, kappa) for i in todo]
    failures = []
    workers = config.workers or os.cpu_count() or 1
    if workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(workers) as pool:
            results = pool.imap_unordered(_evaluate_point, tasks)
            for idx, value, err in results:
                values[idx] = value
                if err:
                    failures.append(err)
    else:
        for task in tasks:
            idx, value, err = _evaluate_point(task)
            values[idx] = value
            if err:
                failures.append(err)

    meta = config.metadata()
    meta["created"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    ds = SpectrumDataset(metadata=meta, columns=COLUMNS,
                         rows=np.column_stack([points, values]))
    write_dataset(config.out, ds, config.fmt)
    return ds, sorted(failures)
