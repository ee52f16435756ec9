"""Atomic Hamiltonians in Fourier-block form.

All energies are dimensionless, measured in units of the drive quantum
(hbar * omega = 1 by default).  A periodically driven system is specified by
its Fourier blocks h^(n), so that H(t) = sum_n h^(n) exp(i n omega t).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

_HERMITICITY_TOL = 1e-12


@dataclass(frozen=True)
class AtomicHamiltonian:
    """Finite-dimensional driven system as a map harmonic index -> d x d block."""

    dimension: int
    fourier_blocks: dict[int, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        if self.dimension < 2:
            raise DimensionMismatch("need at least two atomic levels")
        blocks = {}
        for n, block in self.fourier_blocks.items():
            b = np.asarray(block, dtype=complex)
            if b.shape != (self.dimension, self.dimension):
                raise DimensionMismatch(
                    f"block {n} has shape {b.shape}, expected "
                    f"({self.dimension}, {self.dimension})"
                )
            blocks[int(n)] = b
        object.__setattr__(self, "fourier_blocks", blocks)
        for n, b in blocks.items():
            partner = blocks.get(-n)
            if partner is None:
                if np.max(np.abs(b)) > _HERMITICITY_TOL:
                    raise ValueError(f"missing conjugate block for harmonic {n}")
                continue
            if np.max(np.abs(partner - b.conj().T)) > _HERMITICITY_TOL:
                raise ValueError(f"blocks {n}/{-n} violate Hermiticity of H(t)")

    @property
    def max_harmonic(self) -> int:
        nonzero = [abs(n) for n, b in self.fourier_blocks.items()
                   if np.max(np.abs(b)) > 0]
        return max(nonzero, default=0)

    def block(self, n: int) -> np.ndarray:
        b = self.fourier_blocks.get(n)
        if b is None:
            return np.zeros((self.dimension, self.dimension), dtype=complex)
        return b

    def time_domain(self, phase: float) -> np.ndarray:
        """H at drive phase s = omega * t (periodic with period 2 pi)."""
        h = np.zeros((self.dimension, self.dimension), dtype=complex)
        for n, b in self.fourier_blocks.items():
            h = h + b * np.exp(1j * n * phase)
        return h


@dataclass(frozen=True)
class QubitParams:
    """Driven two-level system: static splitting, tunneling, drive amplitude.

    All three in units of hbar*omega.  eps0 and amp may carry either sign
    (flips map to unitarily equivalent Hamiltonians); delta is nonnegative.
    """

    eps0: float
    delta: float
    amp: float

    def __post_init__(self):
        if self.delta < 0:
            raise ValueError("delta must be >= 0")

    @property
    def omega0(self) -> float:
        """Static level splitting sqrt(eps0^2 + delta^2)."""
        return math.hypot(self.eps0, self.delta)


def qubit_hamiltonian(params: QubitParams | None = None, *,
                      eps0: float | None = None, delta: float | None = None,
                      amp: float | None = None) -> AtomicHamiltonian:
    """Fourier blocks of the driven qubit (eps0/2) sz + (delta/2) sx + (A/2) cos(wt) sz."""
    if params is not None:
        eps0, delta, amp = params.eps0, params.delta, params.amp
    blocks = {0: 0.5 * (eps0 * SIGMA_Z + delta * SIGMA_X)}
    if amp != 0.0:
        blocks[1] = 0.25 * amp * SIGMA_Z
        blocks[-1] = 0.25 * amp * SIGMA_Z
    return AtomicHamiltonian(dimension=2, fourier_blocks=blocks)


def default_photon_cutoff(params: QubitParams) -> int:
    # Bessel weights J_n(A) die out beyond n ~ A; delta widens the band a bit.
    return 8 + math.ceil(abs(params.amp)) + math.ceil(abs(params.delta))
