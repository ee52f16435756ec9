"""Truncated Floquet matrix in the Sambe space and its quasienergy spectrum."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NoConvergence, TruncationTooSmall
from .hamiltonian import AtomicHamiltonian, QubitParams, default_photon_cutoff, qubit_hamiltonian

N_CEILING_DEFAULT = 2048


@dataclass(frozen=True)
class TruncationSpec:
    """Photon cutoff and convergence policy for the Sambe-space truncation."""

    photon_cutoff: int = 16
    convergence_tol: float = 1e-10
    adaptive: bool = True
    ceiling: int = N_CEILING_DEFAULT

    def __post_init__(self):
        if self.photon_cutoff < 1:
            raise ValueError("photon_cutoff must be >= 1")
        if self.convergence_tol <= 0:
            raise ValueError("convergence_tol must be > 0")


@dataclass(frozen=True)
class QuasienergySolution:
    """Folded quasienergies and Fourier coefficients of the zone states.

    quasienergies: shape (d,), each in [0, hbar*omega), ascending.
    coefficients: shape (d, 2N+1, d); coefficients[r, n + N, sigma] is
    c^(n)_sigma of state r.
    """

    quasienergies: np.ndarray
    coefficients: np.ndarray
    drive_frequency: float
    photon_cutoff: int
    error_estimate: float

    @property
    def dimension(self) -> int:
        return self.coefficients.shape[0]

    def coefficient(self, state: int, n: int) -> np.ndarray:
        return self.coefficients[state, n + self.photon_cutoff, :]


def fold_to_zone(raw_quasienergy: float | np.ndarray, drive_frequency: float = 1.0):
    """Map a quasienergy into the zone [0, hbar*omega)."""
    hw = drive_frequency
    x = np.asarray(raw_quasienergy)
    folded = x - hw * np.floor(x / hw)
    # tiny negative inputs round up to exactly hw; keep the interval half open
    return np.where(folded >= hw, 0.0, folded)


def zone_distance(a, b, drive_frequency: float = 1.0):
    """Distance between folded quasienergies on the circle of circumference hbar*omega."""
    d = np.abs(fold_to_zone(np.asarray(a) - np.asarray(b), drive_frequency))
    return np.minimum(d, drive_frequency - d)


def build_floquet_matrix(h: AtomicHamiltonian, drive_frequency: float = 1.0,
                         trunc: TruncationSpec = TruncationSpec()) -> np.ndarray:
    """Sambe-space matrix with blocks (n, m) = m*hbar*omega*delta_nm + h^(m-n).

    Layout: row index (n + N) * d + sigma, n = -N..N.
    """
    big_n = trunc.photon_cutoff
    if big_n < h.max_harmonic:
        raise TruncationTooSmall(
            f"photon_cutoff {big_n} < largest harmonic {h.max_harmonic}")
    d = h.dimension
    size = d * (2 * big_n + 1)
    hf = np.zeros((size, size), dtype=complex)
    eye = np.eye(d)
    for ni, n in enumerate(range(-big_n, big_n + 1)):
        for mi, m in enumerate(range(-big_n, big_n + 1)):
            blk = h.block(m - n)
            if n == m:
                blk = blk + m * drive_frequency * eye
            if np.any(blk):
                hf[ni * d:(ni + 1) * d, mi * d:(mi + 1) * d] = blk
    return hf


def _solve_once(h: AtomicHamiltonian, drive_frequency: float,
                trunc: TruncationSpec) -> tuple[np.ndarray, np.ndarray]:
    hf = build_floquet_matrix(h, drive_frequency, trunc)
    vals, vecs = np.linalg.eigh(hf)
    d = h.dimension
    big_n = trunc.photon_cutoff
    # Middle d eigenpairs by count: one representative per quasienergy ladder,
    # farthest from the truncation edges.
    start = d * big_n
    sel = slice(start, start + d)
    raw = vals[sel]
    folded = fold_to_zone(raw, drive_frequency)
    coeffs = vecs[:, sel].T.reshape(d, 2 * big_n + 1, d)
    # Folding shifts the quasienergy by an integer number of drive quanta;
    # the Fourier coefficients must be shifted by the same integer to stay
    # consistent: c'^(k) = c^(k - m) for eps -> eps + m hbar*omega.
    for r in range(d):
        m = int(round((folded[r] - raw[r]) / drive_frequency))
        if m:
            shifted = np.zeros_like(coeffs[r])
            if m > 0:
                shifted[m:] = coeffs[r, :-m]
            else:
                shifted[:m] = coeffs[r, -m:]
            coeffs[r] = shifted / np.linalg.norm(shifted)
    order = np.argsort(folded)
    return folded[order], coeffs[order]


def solve_quasienergies(h: AtomicHamiltonian, drive_frequency: float = 1.0,
                        trunc: TruncationSpec = TruncationSpec()) -> QuasienergySolution:
    """Solve the truncated Hermitian eigenproblem and fold into one zone.

    With trunc.adaptive, the cutoff is doubled until the folded quasienergies
    move by less than convergence_tol between refinements.
    """
    big_n = max(trunc.photon_cutoff, h.max_harmonic)
    folded, coeffs = _solve_once(h, drive_frequency, trunc=TruncationSpec(
        big_n, trunc.convergence_tol, False, trunc.ceiling))
    err = np.inf
    if trunc.adaptive:
        while True:
            next_n = 2 * big_n
            if next_n > trunc.ceiling:
                raise NoConvergence(
                    f"cutoff ceiling {trunc.ceiling} reached; last move {err:.3e}")
            f2, c2 = _solve_once(h, drive_frequency, trunc=TruncationSpec(
                next_n, trunc.convergence_tol, False, trunc.ceiling))
            err = float(max(
                zone_distance(f, f2, drive_frequency).min() for f in folded))
            folded, coeffs, big_n = f2, c2, next_n
            if err < trunc.convergence_tol:
                break
    else:
        err = float("nan")
    return QuasienergySolution(
        quasienergies=folded,
        coefficients=coeffs,
        drive_frequency=drive_frequency,
        photon_cutoff=big_n,
        error_estimate=err,
    )


def solve_qubit(params: QubitParams, drive_frequency: float = 1.0,
                trunc: TruncationSpec | None = None) -> QuasienergySolution:
    """Convenience wrapper: driven qubit with an amplitude-scaled starting cutoff."""
    if trunc is None:
        trunc = TruncationSpec(photon_cutoff=default_photon_cutoff(params))
    return solve_quasienergies(qubit_hamiltonian(params), drive_frequency, trunc)


def labeled_states(sol: QuasienergySolution) -> tuple[int, int]:
    """Return (index of u_minus, index of u_plus).

    u_plus is the zone state with the larger overlap on the sigma_z = +1,
    n = 0 Sambe basis vector; ties go to the larger quasienergy.
    """
    if sol.dimension != 2:
        raise DimensionMismatch("state labeling defined for two-level systems only")
    w = np.abs(sol.coefficients[:, sol.photon_cutoff, 0]) ** 2
    if abs(w[0] - w[1]) < 1e-12:
        plus = int(np.argmax(sol.quasienergies))
    else:
        plus = int(np.argmax(w))
    return 1 - plus, plus


def quasienergy_gap(sol: QuasienergySolution) -> float:
    """Quasienergy splitting |eps_plus - eps_minus| of the zone representatives."""
    minus, plus = labeled_states(sol)
    return float(abs(sol.quasienergies[plus] - sol.quasienergies[minus]))
