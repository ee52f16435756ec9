"""Self-contained correctness checks behind the verify subcommand.

Each check computes a measured deviation against an independent reference
(closed forms, the integration oracles, or exact invariants) and reports it
next to its tolerance.  The quick level runs in seconds; the full level adds
the spectrum cross-check and the large fuzz set and takes minutes.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from multiprocessing import Pool

import numpy as np
from scipy.optimize import minimize_scalar

from . import analytic
from .bath import BathParams, calibrate_kappa, rates_for_solution, reference_gamma
from .floquet import quasienergy_gap, solve_qubit, zone_distance
from .hamiltonian import QubitParams, qubit_hamiltonian
from .oracles import lindblad_sigma_z_spectrum, monodromy_quasienergies
from .probe import ProbeSpec, golden_rule_rate, kramers_kronig
from .units import beta_from_physical

FUZZ_DELTAS = (0.10, 0.37, 0.84, 1.50)

# line-cut reference point for the spectrum cross-check
CROSSCHECK = dict(eps0=1.05, delta=0.37, omega_p=0.092, gamma=0.016, beta=2.24)


@dataclass(frozen=True)
class CheckResult:
    """One verify check: measured deviation against its tolerance."""

    name: str
    tolerance: float
    deviation: float
    seconds: float

    @property
    def passed(self) -> bool:
        return self.deviation < self.tolerance

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (f"{status}  {self.name:28s} deviation {self.deviation:.3e}"
                f"  < tol {self.tolerance:.0e}  ({self.seconds:.1f} s)")


def _timed(name: str, tolerance: float, fn) -> CheckResult:
    start = time.perf_counter()
    deviation = float(fn())
    return CheckResult(name=name, tolerance=tolerance, deviation=deviation,
                       seconds=time.perf_counter() - start)


def fuzz_draws(n_draws: int, seed: int = 20260824) -> list[QubitParams]:
    rng = np.random.default_rng(seed)
    return [QubitParams(eps0=float(rng.uniform(0.0, 6.0)),
                        delta=float(rng.choice(FUZZ_DELTAS)),
                        amp=float(rng.uniform(0.0, 6.0)))
            for _ in range(n_draws)]


def check_monodromy(n_draws: int = 20, seed: int = 20260824) -> CheckResult:
    """Folded quasienergies vs eigenphases of the one-period propagator."""

    def run():
        worst = 0.0
        for p in fuzz_draws(n_draws, seed):
            eps = solve_qubit(p).quasienergies
            ref = monodromy_quasienergies(qubit_hamiltonian(p))
            dev = max(zone_distance(e, ref).min() for e in eps)
            worst = max(worst, dev)
        return worst

    return _timed(f"monodromy-fuzz-{n_draws}", 1e-7, run)


def _bessel_series(n: int, x: float) -> float:
    total, m = 0.0, 0
    while m < 80:
        term = (-1.0) ** m / (math.factorial(m) * math.factorial(m + n)) \
            * (0.5 * x) ** (2 * m + n)
        total += term
        if abs(term) < 1e-18 and m > n:
            break
        m += 1
    return total


def check_bessel() -> CheckResult:
    """bessel_j against a direct power-series evaluation."""

    def run():
        points = [(0, 0.5), (1, 3.8317059702075125), (2, 1.7), (3, 4.2),
                  (5, 2.9)]
        return max(abs(analytic.bessel_j(n, x) - _bessel_series(n, x))
                   for n, x in points)

    return _timed("bessel-series", 1e-10, run)


def check_detailed_balance() -> CheckResult:
    """Undriven populations against the Boltzmann factor, machine exact."""

    def run():
        p = QubitParams(eps0=0.3, delta=0.4, amp=0.0)
        bath = BathParams(kappa=1e-3, beta=2.24)
        rates = rates_for_solution(solve_qubit(p), bath)
        ratio = rates.p_plus / rates.p_minus
        return abs(ratio - math.exp(-2.24 * p.omega0))

    return _timed("detailed-balance", 1e-12, run)


def check_thermal_limit(betas=(0.5, 2.24, 10.0)) -> CheckResult:
    """Undriven populations follow exp(-beta * splitting) for several beta."""

    def run():
        p = QubitParams(eps0=0.3, delta=0.4, amp=0.0)
        sol = solve_qubit(p)
        worst = 0.0
        for beta in betas:
            rates = rates_for_solution(sol, BathParams(kappa=1e-3, beta=beta))
            expected = math.exp(-beta * p.omega0)
            worst = max(worst, abs(rates.p_plus / rates.p_minus - expected)
                        / expected)
        return worst

    return _timed("thermal-limit", 1e-6, run)


def check_kappa_roundtrip() -> CheckResult:
    """calibrate_kappa then the reference evaluation returns the target."""

    def run():
        cases = [(0.016, 0.37, 2.24), (0.045, 0.37, beta_from_physical(7.0, 150.0)),
                 (0.17, 0.84, beta_from_physical(4.15, 70.0))]
        worst = 0.0
        for target, delta, beta in cases:
            kappa = calibrate_kappa(target, delta, beta)
            worst = max(worst, abs(reference_gamma(delta, beta, kappa) - target)
                        / target)
        return worst

    return _timed("kappa-roundtrip", 1e-8, run)


def check_symmetry(n: int = 10, delta: float = 0.37,
                   with_absorption: bool = True) -> CheckResult:
    """Gap (and absorption) invariance under bias and amplitude sign flips."""

    def run():
        eps_grid = np.linspace(0.15, 2.85, n)
        amp_grid = np.linspace(0.2, 5.8, n)
        bath = BathParams(kappa=calibrate_kappa(0.016, delta, 2.24), beta=2.24)
        probe = ProbeSpec(amp_p=1.0, omega_p=0.092)
        worst = 0.0
        for e in eps_grid:
            for a in amp_grid:
                ref_sol = solve_qubit(QubitParams(e, delta, a))
                ref = quasienergy_gap(ref_sol)
                vals = [ref]
                sols = [ref_sol]
                for e2, a2 in ((-e, a), (e, -a)):
                    s = solve_qubit(QubitParams(e2, delta, a2))
                    sols.append(s)
                    vals.append(quasienergy_gap(s))
                scale = max(abs(ref), 1e-9)
                worst = max(worst, max(abs(v - ref) for v in vals) / scale)
                if with_absorption:
                    rs = [golden_rule_rate(s, rates_for_solution(s, bath), probe)
                          for s in sols]
                    worst = max(worst, max(abs(r - rs[0]) for r in rs)
                                / max(abs(rs[0]), 1e-9))
        return worst

    return _timed(f"symmetry-{n}x{n}", 1e-6, run)


def check_kramers_kronig() -> CheckResult:
    """Lorentzian pair analytic dispersion and the double-transform identity.

    The test absorption is odd in frequency, as a physical absorption
    spectrum is; its dispersion then decays fast enough for the windowed
    transform to represent both directions accurately.
    """

    def run():
        w = np.linspace(-200.0, 200.0, 8192)
        gamma = 1.0

        def lorentz(center):
            return (0.5 * gamma) / ((w - center) ** 2 + 0.25 * gamma ** 2)

        def disp(center):
            return (center - w) / ((w - center) ** 2 + 0.25 * gamma ** 2)

        absorption = lorentz(3.0) - lorentz(-3.0)
        expected = disp(3.0) - disp(-3.0)
        got = kramers_kronig(absorption)
        scale = np.sqrt(np.mean(expected ** 2))
        rms1 = np.sqrt(np.mean((got - expected) ** 2)) / scale
        twice = kramers_kronig(got)
        rms2 = np.sqrt(np.mean((twice + absorption) ** 2)) / np.sqrt(
            np.mean(absorption ** 2))
        return max(rms1, rms2)

    return _timed("kramers-kronig", 0.02, run)


def _crosscheck_gold(a: float) -> float:
    c = CROSSCHECK
    bath = BathParams(kappa=calibrate_kappa(c["gamma"], c["delta"], c["beta"]),
                      beta=c["beta"])
    sol = solve_qubit(QubitParams(c["eps0"], c["delta"], a))
    return golden_rule_rate(sol, rates_for_solution(sol, bath),
                            ProbeSpec(amp_p=1.0, omega_p=c["omega_p"]))


def _crosscheck_oracle(a: float) -> float:
    c = CROSSCHECK
    spec = lindblad_sigma_z_spectrum(
        QubitParams(c["eps0"], c["delta"], a),
        omega_p_grid=np.array([c["omega_p"]]),
        t1=2.0 / c["gamma"], t2=1.0 / c["gamma"], horizon=16.0 / c["gamma"])
    return float(spec.values[0])


def _parabolic_peak(xs: np.ndarray, ys: np.ndarray) -> tuple[float, float]:
    """Vertex of the parabola through the best sample and its neighbors."""
    i = int(np.argmax(ys))
    i = min(max(i, 1), len(xs) - 2)
    x0, x1, x2 = xs[i - 1:i + 2]
    y0, y1, y2 = ys[i - 1:i + 2]
    denom = (y0 - 2.0 * y1 + y2)
    if denom == 0.0:
        return float(x1), float(y1)
    shift = 0.5 * (y0 - y2) / denom
    h = y1 - 0.25 * (y0 - y2) * shift
    return float(x1 + shift * (x1 - x0)), float(h)


@dataclass(frozen=True)
class PeakComparison:
    """Refined peak of each method on one amplitude window."""

    gold_location: float
    gold_height: float
    oracle_location: float
    oracle_height: float


def crosscheck_peak(window: tuple[float, float], n_oracle: int = 13,
                    workers: int = 8) -> PeakComparison:
    """Refine the absorption peak inside the window with both methods."""
    lo, hi = window
    res = minimize_scalar(lambda a: -_crosscheck_gold(a), bounds=(lo, hi),
                          method="bounded", options={"xatol": 1e-5})
    xs = np.linspace(lo, hi, n_oracle)
    with Pool(min(workers, n_oracle)) as pool:
        ys = np.array(pool.map(_crosscheck_oracle, xs))
    loc, height = _parabolic_peak(xs, ys)
    return PeakComparison(gold_location=float(res.x), gold_height=float(-res.fun),
                          oracle_location=loc, oracle_height=height)


def check_spectrum_crosscheck(workers: int = 8) -> CheckResult:
    """Golden-rule line cut against the independent Lindblad spectrum.

    Peak positions are compared through the quasienergy-gap map (the gap is
    what the probe measures), tolerance gamma/2; normalized heights of the
    secondary peak must agree within 20%.  Reports the worst margin fraction.
    """
    c = CROSSCHECK

    def run():
        main = crosscheck_peak((3.1, 3.45), workers=workers)
        second = crosscheck_peak((4.25, 4.6), workers=workers)

        def gap_at(a):
            return quasienergy_gap(solve_qubit(
                QubitParams(c["eps0"], c["delta"], a)))

        half_gamma = 0.5 * c["gamma"]
        fractions = []
        for peak in (main, second):
            shift = abs(gap_at(peak.gold_location) - gap_at(peak.oracle_location))
            fractions.append(shift / half_gamma)
        gold_ratio = second.gold_height / main.gold_height
        oracle_ratio = second.oracle_height / main.oracle_height
        fractions.append(abs(oracle_ratio - gold_ratio) / gold_ratio / 0.20)
        return max(fractions)

    return _timed("spectrum-crosscheck", 1.0, run)


def run_checks(level: str, workers: int = 8) -> list[CheckResult]:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown verify level {level!r}")
    results = [
        check_bessel(),
        check_detailed_balance(),
        check_kappa_roundtrip(),
        check_kramers_kronig(),
    ]
    if level == "quick":
        results.insert(0, check_monodromy(20))
        results.append(check_symmetry(3, with_absorption=False))
    else:
        results.insert(0, check_monodromy(100))
        results.append(check_thermal_limit())
        results.append(check_symmetry(10))
        results.append(check_spectrum_crosscheck(workers=workers))
    return results
