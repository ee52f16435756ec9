"""Floquet-Born-Markov steady-state quantities for an Ohmic bath.

The qubit couples to the bath through sigma_z, so everything is built from
the table X_{a b n} = sum_k <c_a^(k)| sigma_z |c_b^(k+n)> of quasienergy-state
matrix elements.  Energy arguments of the bath weight functions are
(eps_a - eps_b + n hbar omega); all in units of hbar*omega, rates in units
of omega.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TailNotConverged, ZeroDenominator, ZeroReferenceGamma
from .floquet import QuasienergySolution, labeled_states
from .hamiltonian import SIGMA_Z

_TAIL_TOL = 1e-10


@dataclass(frozen=True)
class BathParams:
    """Ohmic coupling strength kappa and dimensionless inverse temperature."""

    kappa: float
    beta: float  # hbar*omega / kT

    def __post_init__(self):
        if self.kappa < 0:
            raise ValueError("kappa must be >= 0")
        if self.beta <= 0:
            raise ValueError("beta must be > 0")


@dataclass(frozen=True)
class XTable:
    """sigma_z matrix elements between zone-shifted quasienergy states.

    values[a, b, n + n_range] with a, b in (0 = minus, 1 = plus).
    """

    values: np.ndarray
    n_range: int
    eps_minus: float
    eps_plus: float

    def element(self, a: int, b: int, n: int) -> complex:
        return self.values[a, b, n + self.n_range]

    @property
    def offsets(self) -> np.ndarray:
        return np.arange(-self.n_range, self.n_range + 1)


@dataclass(frozen=True)
class RateSet:
    """Dephasing rate, steady-state populations and the X table behind them."""

    gamma: float
    p_minus: float
    p_plus: float
    x_table: XTable


def x_elements(sol: QuasienergySolution, n_range: int) -> XTable:
    """Build the X table from the Fourier coefficients of a two-level solution."""
    minus, plus = labeled_states(sol)
    big_n = sol.photon_cutoff
    c = sol.coefficients[[minus, plus]]  # (2, 2N+1, 2)
    szc = np.einsum("st,bnt->bns", SIGMA_Z, c)
    vals = np.zeros((2, 2, 2 * n_range + 1), dtype=complex)
    for ni, n in enumerate(range(-n_range, n_range + 1)):
        lo, hi = max(0, -n), min(2 * big_n + 1, 2 * big_n + 1 - n)
        if lo >= hi:
            continue
        # sum_k c_a^(k)* sigma_z c_b^(k+n)
        vals[:, :, ni] = np.einsum(
            "aks,bks->ab", c[:, lo:hi].conj(), szc[:, lo + n:hi + n])
    edge = max(np.max(np.abs(vals[:, :, 0])), np.max(np.abs(vals[:, :, -1])))
    if edge > _TAIL_TOL:
        raise TailNotConverged(
            f"X-table edge magnitude {edge:.2e} above {_TAIL_TOL}")
    return XTable(values=vals, n_range=n_range,
                  eps_minus=float(sol.quasienergies[minus]),
                  eps_plus=float(sol.quasienergies[plus]))


def bath_weights(energy_arg, bath: BathParams):
    """(G, N) at the given energy argument (units of hbar*omega).

    G(x) = kappa * x is the Ohmic spectral density; N(x) = kappa x / (e^(beta x) - 1)
    is the thermal weight, with its finite limit kappa/beta at x = 0.
    """
    x = np.asarray(energy_arg, dtype=float)
    g = bath.kappa * x
    with np.errstate(over="ignore"):
        expm1 = np.expm1(bath.beta * x)
    n = np.where(np.abs(x) < 1e-12,
                 bath.kappa / bath.beta,
                 np.divide(g, expm1, out=np.zeros_like(g), where=expm1 != 0))
    if np.isscalar(energy_arg) or np.ndim(energy_arg) == 0:
        return float(g), float(n)
    return g, n


def gamma_and_populations(x_table: XTable, bath: BathParams) -> RateSet:
    """Steady-state dephasing rate and populations from the printed closed forms.

    gamma = pi sum_n [(2N + G)(eps_- - eps_+ + n) |X_-+n|^2 + 4 N(n) |X_--n|^2]
    p_-   = sum_n N |X_-+n|^2 / sum_n (2N + G) |X_-+n|^2
    """
    n_off = x_table.offsets.astype(float)
    x_mp = np.abs(x_table.values[0, 1]) ** 2
    x_mm = np.abs(x_table.values[0, 0]) ** 2
    arg_mp = x_table.eps_minus - x_table.eps_plus + n_off
    g_mp, n_mp = bath_weights(arg_mp, bath)
    _, n_mm = bath_weights(n_off, bath)
    flip_weight = (2.0 * n_mp + g_mp) * x_mp
    gamma = math.pi * float(np.sum(flip_weight + 4.0 * n_mm * x_mm))
    denom = float(np.sum(flip_weight))
    if denom <= 0.0:
        raise ZeroDenominator(
            "population denominator vanishes (kappa = 0 or no sigma_z flips)")
    p_minus = float(np.sum(n_mp * x_mp)) / denom
    return RateSet(gamma=gamma, p_minus=p_minus, p_plus=1.0 - p_minus,
                   x_table=x_table)


def rates_for_solution(sol: QuasienergySolution, bath: BathParams) -> RateSet:
    """X table at the solution's full Fourier range, then the closed-form rates."""
    return gamma_and_populations(x_elements(sol, sol.photon_cutoff), bath)


def reference_gamma(delta: float, beta: float, kappa: float) -> float:
    """Dephasing rate at zero driving and zero detuning (hw0 = hbar*omega).

    Evaluated from the static eigenbasis in closed form: at A = 0 the
    quasienergy states are the eigenstates of H0, with a single flip element
    |X_-+| = delta/hw0 at argument -hw0 and diagonal elements +-eps0/hw0.
    This avoids the degenerate zone folding at exact resonance.
    """
    if not 0.0 <= delta < 1.0:
        raise ValueError("reference point needs 0 <= delta < hbar*omega")
    hw0 = 1.0
    eps0 = math.sqrt(hw0 ** 2 - delta ** 2)
    bathp = BathParams(kappa=kappa, beta=beta)
    g, n = bath_weights(-hw0, bathp)
    _, n0 = bath_weights(0.0, bathp)
    flip = (2.0 * n + g) * (delta / hw0) ** 2
    dephase = 4.0 * n0 * (eps0 / hw0) ** 2
    return math.pi * (flip + dephase)


def calibrate_kappa(target_gamma: float, delta: float, beta: float) -> float:
    """kappa such that the undriven, undetuned reference gives the target rate.

    gamma is linear in kappa, so one evaluation at kappa = 1 suffices.
    """
    if target_gamma <= 0:
        raise ValueError("target_gamma must be > 0")
    unit = reference_gamma(delta, beta, kappa=1.0)
    if unit <= 0.0:
        raise ZeroReferenceGamma("reference evaluation at kappa = 1 gave zero")
    return target_gamma / unit
