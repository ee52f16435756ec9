"""Acceptance gate: every stated deliverable criterion at its tolerance.

Each test prints one pass/fail line with the measured number next to the
threshold, so a full run doubles as a short report.
"""
import time

import numpy as np
import pytest
from scipy.optimize import brentq

from floquet_probe.analytic import bessel_root, corrected_quasienergy_gap
from floquet_probe.bath import BathParams, calibrate_kappa, rates_for_solution
from floquet_probe.datasets import payload_fingerprint
from floquet_probe.floquet import quasienergy_gap, solve_qubit, zone_distance
from floquet_probe.hamiltonian import QubitParams, qubit_hamiltonian
from floquet_probe.oracles import monodromy_quasienergies
from floquet_probe.probe import ProbeSpec, golden_rule_rate
from floquet_probe.sweep import AxisSpec, SweepConfig, run_sweep
from floquet_probe.twomode import (TwoModeTruncation, measure_anticrossing,
                                   qubit_probe_blocks, solve_two_mode)
from floquet_probe import validation


def _report(name: str, passed: bool, detail: str, seconds: float) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] {name}: {detail} ({seconds:.1f} s)")
    assert passed, f"{name}: {detail}"


def test_oracle_equivalence():
    start = time.perf_counter()
    result = validation.check_monodromy(100)
    elapsed = time.perf_counter() - start
    _report("oracle-equivalence", result.passed and elapsed < 60.0,
            f"worst deviation {result.deviation:.2e} < 1e-7 over 100 draws",
            elapsed)


def test_rwa_agreement_small_tunneling():
    start = time.perf_counter()
    worst = 0.0
    for amp in np.linspace(0.0, 6.0, 61):
        p = QubitParams(1.0, 0.10, amp)
        worst = max(worst, abs(quasienergy_gap(solve_qubit(p))
                               - corrected_quasienergy_gap(p, 1)))
    elapsed = time.perf_counter() - start
    _report("rwa-agreement", worst < 0.01 and elapsed < 10.0,
            f"max |numeric - analytic| = {worst:.2e} < 0.01", elapsed)


def test_analytic_breakdown_large_tunneling():
    start = time.perf_counter()
    worst = 0.0
    for amp in np.linspace(0.0, 6.0, 61):
        p = QubitParams(1.0, 1.50, amp)
        worst = max(worst, abs(quasienergy_gap(solve_qubit(p))
                               - corrected_quasienergy_gap(p, 1)))
    elapsed = time.perf_counter() - start
    _report("analytic-breakdown", worst > 0.05 and elapsed < 10.0,
            f"max deviation {worst:.2f} exceeds 0.05", elapsed)


def test_tunneling_destruction_at_bessel_root():
    start = time.perf_counter()
    delta, omega_p = 0.10, 0.092
    bath = BathParams(kappa=calibrate_kappa(0.016, delta, 2.24), beta=2.24)
    probe = ProbeSpec(amp_p=1.0, omega_p=omega_p)

    def rate_on_contour(amp):
        def gap_excess(eps0):
            return quasienergy_gap(solve_qubit(QubitParams(eps0, delta, amp))) \
                - omega_p
        eps0 = brentq(gap_excess, 1.0, 1.3, xtol=1e-10)
        sol = solve_qubit(QubitParams(eps0, delta, amp))
        return golden_rule_rate(sol, rates_for_solution(sol, bath), probe)

    amps = np.arange(3.2, 4.4, 0.02)
    rates = np.array([rate_on_contour(a) for a in amps])
    minima = [amps[i] for i in range(1, len(amps) - 1)
              if rates[i] < rates[i - 1] and rates[i] < rates[i + 1]]
    root = bessel_root(1)
    nearest = min(minima, key=lambda a: abs(a - root))
    elapsed = time.perf_counter() - start
    _report("tunneling-destruction",
            abs(nearest - root) < 0.05 and elapsed < 30.0,
            f"rate minimum at A = {nearest:.3f}, root at {root:.3f}", elapsed)


def test_spectrum_crosscheck_line_cut():
    start = time.perf_counter()
    c = validation.CROSSCHECK
    main = validation.crosscheck_peak((3.1, 3.45))
    second = validation.crosscheck_peak((4.25, 4.6))

    def gap_at(a):
        return quasienergy_gap(solve_qubit(
            QubitParams(c["eps0"], c["delta"], a)))

    half_gamma = 0.5 * c["gamma"]
    shift_main = abs(gap_at(main.gold_location) - gap_at(main.oracle_location))
    shift_second = abs(gap_at(second.gold_location)
                       - gap_at(second.oracle_location))
    gold_ratio = second.gold_height / main.gold_height
    oracle_ratio = second.oracle_height / main.oracle_height
    height_dev = abs(oracle_ratio - gold_ratio) / gold_ratio
    elapsed = time.perf_counter() - start
    ok = (shift_main < half_gamma and shift_second < half_gamma
          and height_dev < 0.20)
    _report("spectrum-crosscheck", ok,
            f"peak shifts {shift_main:.4f}, {shift_second:.4f} < {half_gamma}"
            f"; normalized height deviation {height_dev:.1%} < 20%", elapsed)


def test_thermal_limit_populations():
    start = time.perf_counter()
    p = QubitParams(0.3, 0.4, 0.0)
    sol = solve_qubit(p)
    gap = quasienergy_gap(sol)
    worst = 0.0
    for beta in (0.5, 2.24, 10.0):
        rates = rates_for_solution(sol, BathParams(kappa=1e-3, beta=beta))
        expected = np.exp(-beta * gap)
        worst = max(worst,
                    abs(rates.p_plus / rates.p_minus - expected) / expected)
    elapsed = time.perf_counter() - start
    _report("thermal-limit", worst < 1e-6 and elapsed < 5.0,
            f"worst relative Boltzmann error {worst:.2e} < 1e-6", elapsed)


def test_kappa_calibration_round_trip():
    start = time.perf_counter()
    result = validation.check_kappa_roundtrip()
    elapsed = time.perf_counter() - start
    _report("kappa-roundtrip", result.passed and elapsed < 5.0,
            f"worst relative error {result.deviation:.2e} < 1e-8", elapsed)


def test_two_mode_reduction_and_gap():
    start = time.perf_counter()
    delta, amp, omega_p = 0.37, 5.6, 0.23
    trunc = TwoModeTruncation(n1_cutoff=16, n2_cutoff=4)

    p = QubitParams(1.2, delta, amp)
    single = np.sort(solve_qubit(p).quasienergies)
    two = solve_two_mode(qubit_hamiltonian(p), 1.0, qubit_probe_blocks(0.0),
                         omega_p, trunc)
    reduction = float(np.max(np.abs(np.sort(two.quasienergies) - single)))

    # folded gap meets the probe energy near eps0 = 2.786
    center, energy = 2.786044, 0.615
    interval = (center - 0.06, center + 0.06)

    def gap_for(amp_p):
        _, gap = measure_anticrossing(
            interval, lambda e: qubit_hamiltonian(QubitParams(e, delta, amp)),
            1.0, qubit_probe_blocks(amp_p), omega_p, lambda e: energy, trunc)
        return gap

    gaps = {a: gap_for(a) for a in (0.0, 0.01, 0.02, 0.1, 0.2, 0.4)}
    monotone = (gaps[0.0] < gaps[0.1] < gaps[0.2] < gaps[0.4])
    linear_dev = abs(gaps[0.02] / gaps[0.01] - 2.0) / 2.0
    elapsed = time.perf_counter() - start
    ok = (reduction < 1e-10 and monotone and linear_dev < 0.05
          and elapsed < 120.0)
    _report("two-mode-gap", ok,
            f"reduction {reduction:.1e} < 1e-10; gaps "
            + ", ".join(f"{gaps[a]:.2e}" for a in (0.0, 0.1, 0.2, 0.4))
            + f" monotone; linearity deviation {linear_dev:.1%} < 5%", elapsed)


def test_symmetry_suite():
    start = time.perf_counter()
    result = validation.check_symmetry(10)
    elapsed = time.perf_counter() - start
    _report("symmetry-suite", result.passed and elapsed < 30.0,
            f"worst relative asymmetry {result.deviation:.2e} < 1e-6", elapsed)


def test_kramers_kronig_identities():
    start = time.perf_counter()
    result = validation.check_kramers_kronig()
    elapsed = time.perf_counter() - start
    _report("kramers-kronig", result.passed and elapsed < 5.0,
            f"worst RMS error {result.deviation:.2%} < 2%", elapsed)


def test_landscape_determinism(tmp_path):
    outs = {}
    slowest = 0.0
    for workers in (1, 4):
        out = tmp_path / f"w{workers}.csv"
        cfg = SweepConfig(kind="landscape", delta=0.37,
                          eps0=AxisSpec(0.0, 3.0, 50),
                          amp=AxisSpec(0.0, 6.0, 50),
                          out=str(out), workers=workers)
        start = time.perf_counter()
        run_sweep(cfg)
        slowest = max(slowest, time.perf_counter() - start)
        outs[workers] = payload_fingerprint(out)
    identical = outs[1] == outs[4]
    _report("sweep-determinism", identical and slowest < 60.0,
            "50x50 payload byte-identical across worker counts {1, 4}; "
            f"slowest run {slowest:.1f} s < 60 s", slowest)
