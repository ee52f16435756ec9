"""Physical-unit conversion to the dimensionless internal system.

Internally every energy is measured in units of hbar*omega and every rate in
units of omega.  Laboratory parameters enter as a drive frequency omega/2pi
in GHz and a temperature in mK; the only derived quantity the library needs
is the dimensionless inverse temperature beta = hbar*omega / kT.
"""
from __future__ import annotations

from .errors import NonPositiveFrequency

KB_OVER_H_GHZ_PER_K = 20.8366  # Boltzmann constant over Planck constant


def beta_from_physical(freq_ghz: float, temp_mk: float) -> float:
    """hbar*omega / kT from the drive frequency (GHz) and temperature (mK)."""
    if freq_ghz <= 0:
        raise NonPositiveFrequency(f"freq_ghz = {freq_ghz}")
    if temp_mk <= 0:
        raise ValueError("temp_mk must be > 0")
    return freq_ghz / (KB_OVER_H_GHZ_PER_K * temp_mk * 1e-3)
