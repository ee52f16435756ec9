"""Closed-form approximations for the strongly driven qubit.

Rotating-wave quasienergy gaps with Bessel-function couplings, second-order
resonance shifts in the diabatic and adiabatic bases, the Landau-Zener basis
heuristic, and the RWA probe transition amplitude.  All energies in units of
hbar*omega.
"""
from __future__ import annotations

import enum
import math

import numpy as np
from scipy import special

from .errors import DegenerateDiabatic, DegenerateGap, NearPole
from .hamiltonian import QubitParams

__all__ = [
    "Basis", "INAPPLICABLE", "bessel_j", "rwa_quasienergy_gap",
    "delta_shift_diabatic", "corrected_quasienergy_gap", "adiabatic_params",
    "adiabatic_quasienergy_gap", "lz_probability", "choose_basis",
    "rwa_transition_amplitude", "bessel_root",
]

_POLE_TOL = 1e-6
_SERIES_REL_TOL = 1e-12
_SERIES_MAX_K = 512


def bessel_j(n: int, x: float) -> float:
    """Bessel function J_n; indirection point so tests can fault-inject."""
    return float(special.jv(n, x))


def bessel_root(n: int, which: int = 1) -> float:
    """The `which`-th positive root of J_n, located by independent bracketing."""
    from scipy.optimize import brentq
    found = []
    x, step = 0.5, 0.05
    prev = bessel_j(n, x)
    while len(found) < which and x < 200.0:
        x2 = x + step
        cur = bessel_j(n, x2)
        if prev == 0.0:
            found.append(x)
        elif prev * cur < 0:
            found.append(brentq(lambda t: bessel_j(n, t), x, x2, xtol=1e-13))
        prev, x = cur, x2
    return found[which - 1]


class Basis(enum.Enum):
    DIABATIC = "diabatic"
    ADIABATIC = "adiabatic"


class _Inapplicable:
    """Marker for regimes where a formula carries no prediction."""

    def __repr__(self):
        return "Inapplicable"

    def __bool__(self):
        return False


INAPPLICABLE = _Inapplicable()


def rwa_quasienergy_gap(p: QubitParams, n: int) -> float:
    """sqrt((eps0 - n hw)^2 + Delta^2 J_n(A)^2): the one-pair RWA splitting."""
    coupling = p.delta * bessel_j(n, p.amp)
    return math.hypot(p.eps0 - n, coupling)


def _delta_shift(diag_energy: float, couplings, n: int) -> float:
    """Second-order shift 2 sum_{k != n} couplings(k)^2 / (diag - k hw).

    The series is truncated once a full +-k ring contributes less than
    1e-12 of the running sum (Bessel decay makes this fast).
    """
    total = 0.0

    def term(k: int) -> float:
        den = diag_energy - k
        if abs(den) < _POLE_TOL:
            raise NearPole(
                f"denominator |diag - {k} hw| = {abs(den):.2e} below {_POLE_TOL}")
        c = couplings(k)
        return 2.0 * c * c / den

    if 0 != n:
        total += term(0)
    k = 1
    while k <= _SERIES_MAX_K:
        ring = 0.0
        if k != n:
            ring += term(k)
        if -k != n:
            ring += term(-k)
        total += ring
        if abs(ring) < _SERIES_REL_TOL * max(abs(total), 1e-300):
            break
        k += 1
    return total


def delta_shift_diabatic(p: QubitParams, n: int) -> float:
    """Diabatic second-order resonance shift delta_d for the n-photon resonance."""
    return _delta_shift(p.eps0, lambda k: 0.5 * p.delta * bessel_j(k, p.amp), n)


def corrected_quasienergy_gap(p: QubitParams, n: int) -> float:
    """RWA gap with the diabatic second-order shift folded into the detuning."""
    shift = delta_shift_diabatic(p, n)
    coupling = p.delta * bessel_j(n, p.amp)
    return math.hypot(p.eps0 + shift - n, coupling)


def adiabatic_params(p: QubitParams, n: int) -> tuple[float, float]:
    """Adiabatic-basis substitution: (diagonal energy hw0, coupling strength).

    The diagonal energy eps0 is replaced by hw0 = sqrt(eps0^2 + delta^2) and
    the coupling (delta/2) J_n(A) by (n hw delta / 2 eps0) J_n(A eps0 / hw0).
    """
    if p.eps0 == 0.0:
        raise DegenerateDiabatic("adiabatic coupling undefined at eps0 = 0")
    hw0 = p.omega0
    coupling = (n * p.delta / (2.0 * p.eps0)) * bessel_j(n, p.amp * p.eps0 / hw0)
    return hw0, coupling


def adiabatic_quasienergy_gap(p: QubitParams, n: int, corrected: bool = True) -> float:
    """Quasienergy gap from the adiabatic-basis RWA, optionally shift-corrected."""
    hw0, coupling = adiabatic_params(p, n)
    detuning = hw0 - n
    if corrected:
        def coupling_k(k: int) -> float:
            if p.eps0 == 0.0:
                return 0.0
            return (k * p.delta / (2.0 * p.eps0)) * bessel_j(k, p.amp * p.eps0 / hw0)
        detuning += _delta_shift(hw0, coupling_k, n)
    return math.hypot(detuning, 2.0 * coupling)


def lz_probability(p: QubitParams, drive_frequency: float = 1.0):
    """Landau-Zener tunneling probability, or INAPPLICABLE when A <= |eps0|."""
    if p.amp <= abs(p.eps0):
        return INAPPLICABLE
    hw = drive_frequency
    exponent = 2.0 * math.pi * p.delta ** 2 / (
        4.0 * hw * math.sqrt(p.amp ** 2 - p.eps0 ** 2))
    return math.exp(-exponent)


def choose_basis(p: QubitParams) -> Basis:
    """Adiabatic basis when A < |eps0|, diabatic otherwise (boundary diabatic)."""
    return Basis.ADIABATIC if p.amp < abs(p.eps0) else Basis.DIABATIC


def rwa_transition_amplitude(p: QubitParams, n: int) -> float:
    """|F_fi|^2 = Delta^2 J_n(A)^2 / (RWA gap)^2, in [0, 1]."""
    gap = rwa_quasienergy_gap(p, n)
    if gap == 0.0:
        raise DegenerateGap("RWA gap vanishes; transition amplitude undefined")
    coupling = p.delta * bessel_j(n, p.amp)
    return (coupling / gap) ** 2
