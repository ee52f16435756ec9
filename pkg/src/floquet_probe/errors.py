"""Exception types shared across the package."""


class FloquetProbeError(Exception):
    """Base class for all package errors."""


class TruncationTooSmall(FloquetProbeError):
    """Photon cutoff below the largest harmonic present in the Hamiltonian."""


class NoConvergence(FloquetProbeError):
    """Adaptive refinement hit its cutoff ceiling without meeting tolerance."""


class DimensionMismatch(FloquetProbeError):
    """Operation requires a different atomic dimension than supplied."""


class NearPole(FloquetProbeError):
    """Perturbative series evaluated too close to a vanishing denominator."""


class DegenerateDiabatic(FloquetProbeError):
    """Adiabatic substitution undefined at zero static splitting."""


class DegenerateGap(FloquetProbeError):
    """Transition amplitude undefined at zero quasienergy gap."""


class TailNotConverged(FloquetProbeError):
    """Matrix-element table does not decay below threshold at the edges."""


class ZeroDenominator(FloquetProbeError):
    """Steady-state population undefined (no bath coupling)."""


class ZeroReferenceGamma(FloquetProbeError):
    """Calibration reference point produced a vanishing dephasing rate."""


class GridTooCoarse(FloquetProbeError):
    """Kramers-Kronig input grid has too few points."""


class TailsNotDecayed(FloquetProbeError):
    """Kramers-Kronig input has not decayed at the grid endpoints."""


class MemoryCeiling(FloquetProbeError):
    """Two-mode matrix rank exceeds the configured ceiling."""


class NoBracket(FloquetProbeError):
    """Anti-crossing search interval does not bracket a separation minimum."""


class IntegratorFailure(FloquetProbeError):
    """Time integration of the propagator failed."""


class SteadyStateNotReached(FloquetProbeError):
    """Periodic steady state residual above tolerance."""


class HorizonTooShort(FloquetProbeError):
    """Correlator horizon gives spectral resolution coarser than the linewidth."""


class ConfigInvalid(FloquetProbeError):
    """Sweep configuration failed validation."""


class NonPositiveFrequency(FloquetProbeError):
    """Physical-unit conversion requires a positive drive frequency."""


class PointFailure(FloquetProbeError):
    """A sweep grid point failed to evaluate."""


class VerificationFailure(FloquetProbeError):
    """One or more verify checks did not pass."""
