"""Weak-probe physics on top of a quasienergy solution.

Probe matrix elements between zone-shifted quasienergy states, the golden
rule absorption rate with Lorentzian line shapes, the probe resonance
condition, and Kramers-Kronig dispersion.  Probe frequencies are in units of
the drive frequency, energies in units of hbar*omega.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.signal import hilbert

from .bath import RateSet
from .errors import GridTooCoarse, TailNotConverged, TailsNotDecayed
from .floquet import QuasienergySolution, labeled_states
from .hamiltonian import SIGMA_Z

_TAIL_TOL = 1e-10


def _default_blocks() -> dict[int, np.ndarray]:
    return {0: SIGMA_Z.copy()}


@dataclass(frozen=True)
class ProbeSpec:
    """Weak probe: amplitude, frequency, and the tau-periodic operator blocks.

    amp_p is the amplitude A_P of the probe term (A_P/2) cos(w_P t) F_S in the
    Hamiltonian; the golden-rule prefactor is therefore (A_P/4)^2, matching
    the A_P^2/16 correlator convention.
    """

    amp_p: float = 1.0
    omega_p: float = 0.092
    f_s_blocks: dict[int, np.ndarray] = field(default_factory=_default_blocks)

    def __post_init__(self):
        if self.omega_p <= 0:
            raise ValueError("omega_p must be > 0")


@dataclass(frozen=True)
class ProbeElements:
    """Table F[p, q, s + span] = <u_p,0| F_S |u_q,s> with shift s in -span..span."""

    values: np.ndarray
    zone_span: int
    eps: np.ndarray  # folded (eps_minus, eps_plus)

    @property
    def shifts(self) -> np.ndarray:
        return np.arange(-self.zone_span, self.zone_span + 1)


def probe_matrix_elements(sol: QuasienergySolution, probe: ProbeSpec,
                          zone_span: int = 8) -> ProbeElements:
    """Probe operator matrix elements between zone-shifted quasienergy states."""
    if zone_span < 1:
        raise ValueError("zone_span must be >= 1")
    minus, plus = labeled_states(sol)
    big_n = sol.photon_cutoff
    c = sol.coefficients[[minus, plus]]  # (2, 2N+1, d)
    n_k = 2 * big_n + 1
    vals = np.zeros((2, 2, 2 * zone_span + 1), dtype=complex)
    for si, s in enumerate(range(-zone_span, zone_span + 1)):
        for m, fm in probe.f_s_blocks.items():
            off = s - m
            lo, hi = max(0, -off), min(n_k, n_k - off)
            if lo >= hi:
                continue
            fc = np.einsum("st,bkt->bks", np.asarray(fm, dtype=complex),
                           c[:, lo + off:hi + off])
            vals[:, :, si] += np.einsum("aks,bks->ab", c[:, lo:hi].conj(), fc)
    edge = max(np.max(np.abs(vals[:, :, 0])), np.max(np.abs(vals[:, :, -1])))
    if edge > _TAIL_TOL:
        raise TailNotConverged(
            f"probe-element edge magnitude {edge:.2e} above {_TAIL_TOL}")
    eps = np.array([sol.quasienergies[minus], sol.quasienergies[plus]])
    return ProbeElements(values=vals, zone_span=zone_span, eps=eps)


def converged_probe_elements(sol: QuasienergySolution, probe: ProbeSpec,
                             start_span: int = 8) -> ProbeElements:
    """Grow the zone span until the element table tails fall below threshold."""
    span = start_span
    while True:
        try:
            return probe_matrix_elements(sol, probe, span)
        except TailNotConverged:
            if span >= sol.photon_cutoff:
                raise
            span = min(span + 4, sol.photon_cutoff)


def golden_rule_rate(sol: QuasienergySolution, rates: RateSet, probe: ProbeSpec,
                     zone_span: int = 8,
                     elements: ProbeElements | None = None) -> float:
    """Golden-rule transition rate at the probe frequency.

    Sums Lorentzians of width gamma over all state pairs (f central, i
    zone-shifted), centered at w_fi = eps_f - eps_i + s.  Pairs with
    nonpositive w_fi contribute only Lorentzian tails at a positive probe
    frequency (quasielastic and emission background).
    """
    return float(golden_rule_spectrum(sol, rates, probe,
                                      np.array([probe.omega_p]),
                                      zone_span, elements)[0])


def golden_rule_spectrum(sol: QuasienergySolution, rates: RateSet,
                         probe: ProbeSpec, omega_p_grid,
                         zone_span: int = 8,
                         elements: ProbeElements | None = None) -> np.ndarray:
    """golden_rule_rate evaluated on a probe-frequency grid, elements reused."""
    if elements is None:
        elements = converged_probe_elements(sol, probe, zone_span)
    omega_p_grid = np.atleast_1d(np.asarray(omega_p_grid, dtype=float))
    gamma = rates.gamma
    pops = np.array([rates.p_minus, rates.p_plus])
    prefactor = (probe.amp_p / 4.0) ** 2
    out = np.zeros_like(omega_p_grid)
    for p in range(2):
        for q in range(2):
            for si, s in enumerate(elements.shifts):
                w_fi = elements.eps[p] - elements.eps[q] + s
                f2 = abs(elements.values[p, q, si]) ** 2
                if f2 == 0.0:
                    continue
                out += pops[q] * gamma * f2 / (
                    (w_fi - omega_p_grid) ** 2 + 0.25 * gamma ** 2)
    return prefactor * out


@dataclass(frozen=True)
class ResonanceBranches:
    """Probe resonance condition: gap targets for the two branches at index k."""

    k: int
    branch_up: float      # hbar*omega_p - k hbar*omega
    branch_down: float    # (k+1) hbar*omega - hbar*omega_p
    matched: str | None   # "up", "down", "both" or None
    residual_up: float
    residual_down: float


def resonance_condition(gap: float, drive_frequency: float, omega_p: float,
                        tol: float = 1e-6) -> ResonanceBranches:
    """Which probe resonance branch (if either) the quasienergy gap satisfies."""
    if drive_frequency <= 0 or omega_p <= 0:
        raise ValueError("frequencies must be positive")
    k = int(np.floor(omega_p / drive_frequency))
    up = omega_p - k * drive_frequency
    down = (k + 1) * drive_frequency - omega_p
    r_up = abs(gap - up)
    r_down = abs(gap - down)
    if r_up <= tol and r_down <= tol:
        matched = "both"
    elif r_up <= tol:
        matched = "up"
    elif r_down <= tol:
        matched = "down"
    else:
        matched = None
    return ResonanceBranches(k=k, branch_up=up, branch_down=down,
                             matched=matched, residual_up=r_up,
                             residual_down=r_down)


def kramers_kronig(absorption) -> np.ndarray:
    """Dispersion from absorption sampled on a uniform grid.

    Principal-value Hilbert transform via FFT with zero padding to four times
    the input length.  Applying the transform twice returns the negated input.
    """
    a = np.asarray(absorption, dtype=float)
    n = a.size
    if n < 128:
        raise GridTooCoarse(f"need >= 128 points, got {n}")
    peak = np.max(np.abs(a))
    if peak > 0 and max(abs(a[0]), abs(a[-1])) > 0.01 * peak:
        raise TailsNotDecayed("absorption has not decayed below 1% of peak at the ends")
    pad = (4 * n - n) // 2
    padded = np.concatenate([np.zeros(pad), a, np.zeros(4 * n - n - pad)])
    dispersion = -np.imag(hilbert(padded))[pad:pad + n]
    return dispersion
