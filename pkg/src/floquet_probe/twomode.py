"""Bichromatic (drive + probe) Floquet matrix and anti-crossing measurement.

The two-mode Floquet matrix is block-tridiagonal in the probe photon index:
diagonal blocks are the single-mode Floquet matrix shifted by k*hbar*omega_p,
off-diagonal blocks repeat the probe coupling block on the diagonal.  The
quasienergies are quasiperiodic, eps + n1*hbar*omega + n2*hbar*omega_p; we
fold into [0, hbar*omega) for comparability with the single-mode solver.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import MemoryCeiling, NoBracket, TruncationTooSmall
from .floquet import TruncationSpec, build_floquet_matrix, fold_to_zone
from .hamiltonian import AtomicHamiltonian

RANK_CEILING_DEFAULT = 20000


@dataclass(frozen=True)
class TwoModeTruncation:
    """Cutoffs for drive (n1) and probe (n2) harmonics."""

    n1_cutoff: int = 16
    n2_cutoff: int = 4
    convergence_tol: float = 1e-10
    rank_ceiling: int = RANK_CEILING_DEFAULT

    def __post_init__(self):
        if self.n1_cutoff < 1 or self.n2_cutoff < 1:
            raise ValueError("cutoffs must be >= 1")


@dataclass(frozen=True)
class TwoModeSolution:
    """Folded representative quasienergies plus the full eigenvalue set."""

    quasienergies: np.ndarray          # d folded representatives
    all_eigenvalues: np.ndarray        # full truncated spectrum, sorted
    drive_frequency: float
    probe_frequency: float
    n1_cutoff: int
    n2_cutoff: int


def build_two_mode_matrix(h: AtomicHamiltonian, drive_frequency: float,
                          probe_blocks: dict[int, np.ndarray],
                          probe_frequency: float,
                          trunc: TwoModeTruncation = TwoModeTruncation()) -> np.ndarray:
    """Assemble the doubly indexed Floquet matrix for drive plus probe.

    Layout: outer probe index k = -N2..N2, inner the single-mode Sambe layout.
    """
    d = h.dimension
    n1, n2 = trunc.n1_cutoff, trunc.n2_cutoff
    if n1 < h.max_harmonic:
        raise TruncationTooSmall("n1_cutoff below drive harmonic content")
    max_probe_harmonic = max((abs(m) for m, b in probe_blocks.items()
                              if np.max(np.abs(b)) > 0), default=0)
    if max_probe_harmonic > 1:
        raise TruncationTooSmall("probe blocks beyond first harmonic unsupported")
    inner = d * (2 * n1 + 1)
    size = inner * (2 * n2 + 1)
    if size > trunc.rank_ceiling:
        raise MemoryCeiling(f"two-mode rank {size} exceeds ceiling {trunc.rank_ceiling}")
    hf = build_floquet_matrix(h, drive_frequency, TruncationSpec(n1, adaptive=False))
    out = np.zeros((size, size), dtype=complex)
    eye_inner = np.eye(inner)
    b_plus = probe_blocks.get(1)
    b_minus = probe_blocks.get(-1)
    for ki, k in enumerate(range(-n2, n2 + 1)):
        sl = slice(ki * inner, (ki + 1) * inner)
        out[sl, sl] = hf + k * probe_frequency * eye_inner
        if ki + 1 <= 2 * n2:
            sl2 = slice((ki + 1) * inner, (ki + 2) * inner)
            if b_plus is not None:
                out[sl, sl2] = np.kron(np.eye(2 * n1 + 1), b_plus)
            if b_minus is not None:
                out[sl2, sl] = np.kron(np.eye(2 * n1 + 1), b_minus)
    return out


def qubit_probe_blocks(amp_p: float) -> dict[int, np.ndarray]:
    """Coupling blocks of the probe term (A_P/2) cos(w_P t) sigma_z."""
    from .hamiltonian import SIGMA_Z
    return {1: 0.25 * amp_p * SIGMA_Z, -1: 0.25 * amp_p * SIGMA_Z}


def solve_two_mode(h: AtomicHamiltonian, drive_frequency: float,
                   probe_blocks: dict[int, np.ndarray], probe_frequency: float,
                   trunc: TwoModeTruncation = TwoModeTruncation()) -> TwoModeSolution:
    """Eigen-solve the two-mode matrix and pick d central representatives.

    Representatives are the eigenvectors with maximal overlap on the
    (sigma, n1=0, n2=0) basis vectors; at zero probe amplitude they coincide
    with the single-mode zone states.
    """
    m = build_two_mode_matrix(h, drive_frequency, probe_blocks,
                              probe_frequency, trunc)
    vals, vecs = np.linalg.eigh(m)
    d = h.dimension
    n1, n2 = trunc.n1_cutoff, trunc.n2_cutoff
    inner = d * (2 * n1 + 1)
    base = n2 * inner + n1 * d  # start of the (n1=0, n2=0) block
    reps = []
    for sigma in range(d):
        weights = np.abs(vecs[base + sigma, :]) ** 2
        for idx in np.argsort(weights)[::-1]:
            if idx not in reps:
                reps.append(int(idx))
                break
    folded = fold_to_zone(vals[reps], drive_frequency)
    return TwoModeSolution(quasienergies=np.sort(folded),
                           all_eigenvalues=vals,
                           drive_frequency=drive_frequency,
                           probe_frequency=probe_frequency,
                           n1_cutoff=n1, n2_cutoff=n2)


def measure_anticrossing(scan_interval: tuple[float, float],
                         make_hamiltonian, drive_frequency: float,
                         probe_blocks: dict[int, np.ndarray],
                         probe_frequency: float,
                         crossing_energy, trunc: TwoModeTruncation,
                         location_tol: float = 1e-6) -> tuple[float, float]:
    """Locate an avoided crossing and measure its gap.

    make_hamiltonian(eps0) builds the system at the scanned parameter;
    crossing_energy(eps0) predicts the degeneracy energy (e.g. from the
    single-mode levels).  The crossing pair is tracked by overlap with the
    two zero-probe eigenvectors that become degenerate, which keeps narrow
    multi-photon anti-crossings inside the main gap from being mistaken for
    it; the pair separation is minimized by golden-section search.

    Returns (location, gap).
    """
    lo, hi = scan_interval
    mid = 0.5 * (lo + hi)

    # reference 2D subspace at zero probe amplitude, at the interval midpoint
    m0 = build_two_mode_matrix(make_hamiltonian(mid), drive_frequency,
                               {k: np.zeros_like(b) for k, b in probe_blocks.items()},
                               probe_frequency, trunc)
    vals0, vecs0 = np.linalg.eigh(m0)
    e_target = crossing_energy(mid)
    pair0 = np.argsort(np.abs(vals0 - e_target))[:2]
    ref = vecs0[:, pair0]  # (size, 2)

    def separation(eps0: float) -> float:
        m = build_two_mode_matrix(make_hamiltonian(eps0), drive_frequency,
                                  probe_blocks, probe_frequency, trunc)
        vals, vecs = np.linalg.eigh(m)
        # restrict to a window around the predicted energy before projecting
        e = crossing_energy(eps0)
        window = np.argsort(np.abs(vals - e))[:12]
        scores = np.sum(np.abs(ref.conj().T @ vecs[:, window]) ** 2, axis=0)
        top = window[np.argsort(scores)[::-1][:2]]
        return float(abs(vals[top[0]] - vals[top[1]]))

    s_lo, s_mid, s_hi = separation(lo), separation(mid), separation(hi)
    if not (s_mid < s_lo and s_mid < s_hi):
        raise NoBracket(
            f"separation not bracketed: {s_lo:.3e}, {s_mid:.3e}, {s_hi:.3e}")
    res = minimize_scalar(separation, bracket=(lo, mid, hi),
                          method="golden", options={"xtol": location_tol})
    return float(res.x), float(res.fun)
